#include "gb/instances/instance_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gb/core/errors.hpp"
#include "gb/problems/bpp.hpp"
#include "gb/problems/cvrp.hpp"
#include "gb/problems/nqp.hpp"
#include "gb/problems/tsp.hpp"
#include "gb/problems/vrpb.hpp"
#include "gb/richvrp/acvrp.hpp"
#include "gb/richvrp/matspspd.hpp"

namespace gb::io {

using nlohmann::json;

namespace {

json matrix_to_json(const std::vector<std::vector<double>>& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

std::vector<std::vector<double>> matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw ParseError(what + ": matrix must be a non-empty array");
    std::vector<std::vector<double>> m;
    for (const auto& row : j) {
        m.push_back(row.get<std::vector<double>>());
        if (m.back().size() != j.size()) throw ParseError(what + ": matrix is not square");
    }
    return m;
}

// Customer-indexed arrays are stored without the depot slot.
template <typename T>
json tail_to_json(const std::vector<T>& v) {
    return json(std::vector<T>(v.begin() + 1, v.end()));
}

std::vector<double> tail_from_json(const json& j, int n, const std::string& what) {
    auto v = j.get<std::vector<double>>();
    if (static_cast<int>(v.size()) != n) throw ParseError(what + ": expected " + std::to_string(n) + " entries");
    v.insert(v.begin(), 0.0);
    return v;
}

json clusters_to_json(const std::vector<int>& cluster_of, int n, int k) {
    std::vector<std::vector<int>> groups(k);
    for (int i = 1; i <= n; ++i) groups[cluster_of[i] - 1].push_back(i);
    return json(groups);
}

std::vector<int> clusters_from_json(const json& j, int n) {
    std::vector<int> cluster_of(n + 1, 0);
    int k = 0;
    for (const auto& group : j) {
        ++k;
        for (int id : group.get<std::vector<int>>()) {
            if (id < 1 || id > n || cluster_of[id] != 0) {
                throw ParseError("clusters must partition the customers 1..n");
            }
            cluster_of[id] = k;
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (cluster_of[i] == 0) throw ParseError("customer " + std::to_string(i) + " belongs to no cluster");
    }
    return cluster_of;
}

}  // namespace

std::string serialize_instance(const Problem& problem) {
    json j;
    j["schema_version"] = kInstanceSchemaVersion;
    j["name"] = problem.name();

    if (const auto* tsp = dynamic_cast<const problems::TspInstance*>(&problem)) {
        j["kind"] = tsp->symmetric() ? "tsp" : "atsp";
        if (!tsp->coords().empty()) {
            json coords = json::array();
            for (const auto& c : tsp->coords()) coords.push_back({c[0], c[1]});
            j["coords"] = coords;
        } else {
            j["matrix"] = matrix_to_json(tsp->matrix());
        }
    } else if (const auto* vrpb = dynamic_cast<const problems::VrpbInstance*>(&problem)) {
        j["kind"] = "vrpb";
        j["matrix"] = matrix_to_json(vrpb->matrix());
        j["demands"] = tail_to_json(vrpb->demands());
        j["capacity"] = vrpb->capacity();
        std::vector<std::string> classes;
        for (int c = 1; c <= vrpb->size(); ++c) {
            classes.push_back(vrpb->node_class(c) == problems::NodeClass::Linehaul ? "L" : "B");
        }
        j["node_classes"] = classes;
    } else if (const auto* cvrp = dynamic_cast<const problems::CvrpInstance*>(&problem)) {
        j["kind"] = "cvrp";
        j["matrix"] = matrix_to_json(cvrp->matrix());
        j["demands"] = tail_to_json(cvrp->demands());
        j["capacity"] = cvrp->capacity();
    } else if (const auto* nqp = dynamic_cast<const problems::NqpInstance*>(&problem)) {
        j["kind"] = "nqp";
        j["n"] = nqp->size();
    } else if (const auto* bpp = dynamic_cast<const problems::BppInstance*>(&problem)) {
        j["kind"] = "bpp";
        j["item_sizes"] = tail_to_json(bpp->item_sizes());
        j["capacity"] = bpp->capacity();
    } else if (const auto* ma = dynamic_cast<const richvrp::MaTspSpdInstance*>(&problem)) {
        j["kind"] = "matspspd";
        j["matrix"] = matrix_to_json(ma->matrix());
        j["vehicles"] = ma->vehicles();
        j["max_route_length"] = ma->max_route_len();
        std::vector<std::string> types;
        for (int c = 1; c <= ma->size(); ++c) {
            types.push_back(ma->node_type(c) == richvrp::NodeType::Delivery ? "D" : "P");
        }
        j["node_types"] = types;
    } else if (const auto* ac = dynamic_cast<const richvrp::AcVrpInstance*>(&problem)) {
        j["kind"] = "acvrp";
        j["valley_matrix"] = matrix_to_json(ac->valley_matrix());
        j["peak_matrix"] = matrix_to_json(ac->peak_matrix());
        j["deliveries"] = tail_to_json(ac->deliveries());
        j["pickups"] = tail_to_json(ac->pickups());
        j["capacity"] = ac->capacity();
        j["clusters"] = clusters_to_json(ac->clusters(), ac->size(), ac->cluster_count());
        json arcs = json::array();
        for (auto [a, b] : ac->forbidden_arcs()) arcs.push_back({a, b});
        j["forbidden_arcs"] = arcs;
        j["enforce_workday"] = ac->enforce_workday();
        j["generator_seed"] = ac->generator_seed();
        if (!ac->orig_ids().empty()) j["orig_ids"] = ac->orig_ids();
    } else {
        throw ValidationError("unsupported instance type for serialization");
    }
    return j.dump(2);
}

std::shared_ptr<Problem> parse_instance(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (j.value("schema_version", -1) != kInstanceSchemaVersion) {
            throw ParseError("unsupported schema_version (expected " +
                             std::to_string(kInstanceSchemaVersion) + ")");
        }
        const std::string kind = j.at("kind");
        const std::string name = j.value("name", "unnamed");

        if (kind == "tsp" || kind == "atsp") {
            if (j.contains("coords")) {
                std::vector<std::array<double, 2>> coords;
                for (const auto& c : j.at("coords")) coords.push_back({c.at(0), c.at(1)});
                return std::make_shared<problems::TspInstance>(
                    problems::TspInstance::from_coords(name, std::move(coords)));
            }
            auto matrix = matrix_from_json(j.at("matrix"), name);
            return std::make_shared<problems::TspInstance>(
                problems::TspInstance::from_matrix(name, std::move(matrix), kind == "tsp"));
        }
        if (kind == "cvrp" || kind == "vrpb") {
            auto matrix = matrix_from_json(j.at("matrix"), name);
            const int n = static_cast<int>(matrix.size()) - 1;
            auto demands = tail_from_json(j.at("demands"), n, name);
            const double capacity = j.at("capacity");
            if (kind == "cvrp") {
                return std::make_shared<problems::CvrpInstance>(name, std::move(matrix),
                                                                std::move(demands), capacity);
            }
            auto class_names = j.at("node_classes").get<std::vector<std::string>>();
            if (static_cast<int>(class_names.size()) != n) {
                throw ParseError(name + ": node_classes must list every customer");
            }
            std::vector<problems::NodeClass> classes(n + 1, problems::NodeClass::Linehaul);
            for (int c = 1; c <= n; ++c) {
                if (class_names[c - 1] == "L") classes[c] = problems::NodeClass::Linehaul;
                else if (class_names[c - 1] == "B") classes[c] = problems::NodeClass::Backhaul;
                else throw ParseError(name + ": node class must be 'L' or 'B'");
            }
            return std::make_shared<problems::VrpbInstance>(name, std::move(matrix),
                                                            std::move(demands), capacity,
                                                            std::move(classes));
        }
        if (kind == "nqp") {
            return std::make_shared<problems::NqpInstance>(j.at("n").get<int>());
        }
        if (kind == "bpp") {
            return std::make_shared<problems::BppInstance>(
                name, j.at("item_sizes").get<std::vector<double>>(), j.at("capacity").get<double>());
        }
        if (kind == "matspspd") {
            auto matrix = matrix_from_json(j.at("matrix"), name);
            const int n = static_cast<int>(matrix.size()) - 1;
            auto type_names = j.at("node_types").get<std::vector<std::string>>();
            if (static_cast<int>(type_names.size()) != n) {
                throw ParseError(name + ": node_types must list every customer");
            }
            std::vector<richvrp::NodeType> types(n + 1, richvrp::NodeType::Delivery);
            for (int c = 1; c <= n; ++c) {
                if (type_names[c - 1] == "D") types[c] = richvrp::NodeType::Delivery;
                else if (type_names[c - 1] == "P") types[c] = richvrp::NodeType::Pickup;
                else throw ParseError(name + ": node type must be 'D' or 'P'");
            }
            return std::make_shared<richvrp::MaTspSpdInstance>(
                name, std::move(matrix), j.at("vehicles").get<int>(),
                j.at("max_route_length").get<int>(), std::move(types));
        }
        if (kind == "acvrp") {
            auto valley = matrix_from_json(j.at("valley_matrix"), name);
            auto peak = matrix_from_json(j.at("peak_matrix"), name);
            const int n = static_cast<int>(valley.size()) - 1;
            auto deliveries = tail_from_json(j.at("deliveries"), n, name);
            auto pickups = tail_from_json(j.at("pickups"), n, name);
            auto clusters = clusters_from_json(j.at("clusters"), n);
            std::set<std::pair<int, int>> forbidden;
            for (const auto& arc : j.value("forbidden_arcs", json::array())) {
                forbidden.insert({arc.at(0).get<int>(), arc.at(1).get<int>()});
            }
            std::vector<int> orig_ids = j.value("orig_ids", std::vector<int>{});
            return std::make_shared<richvrp::AcVrpInstance>(
                name, std::move(valley), std::move(peak), std::move(deliveries),
                std::move(pickups), j.at("capacity").get<double>(), std::move(clusters),
                std::move(forbidden), j.value("enforce_workday", true), std::move(orig_ids),
                j.value("generator_seed", std::uint64_t{0}));
        }
        throw ParseError("unknown instance kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("schema violation: ") + e.what());
    } catch (const ValidationError& e) {
        throw ParseError(std::string("invariant violation on load: ") + e.what());
    }
}

std::shared_ptr<Problem> load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void save_instance_file(const Problem& problem, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << serialize_instance(problem) << "\n";
}

}  // namespace gb::io
