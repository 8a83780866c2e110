#include "gb/instances/load.hpp"

#include "gb/core/errors.hpp"
#include "gb/instances/instance_json.hpp"
#include "gb/instances/tsplib.hpp"
#include "gb/problems/cvrp.hpp"
#include "gb/problems/nqp.hpp"
#include "gb/problems/vrpb.hpp"
#include "gb/richvrp/matspspd.hpp"

namespace gb::io {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::shared_ptr<Problem> load_problem(const std::string& ref) {
    if (ref.rfind("nqp:", 0) == 0) {
        return std::make_shared<problems::NqpInstance>(std::stoi(ref.substr(4)));
    }
    if (ref.rfind("vrpb:", 0) == 0) {
        auto base = load_instance_file(ref.substr(5));
        const auto* cvrp = dynamic_cast<const problems::CvrpInstance*>(base.get());
        if (cvrp == nullptr) throw ValidationError(ref + ": vrpb derivation needs a cvrp instance");
        return std::make_shared<problems::VrpbInstance>(problems::derive_vrpb(*cvrp));
    }
    if (ref.rfind("matspspd:", 0) == 0) {
        const auto atsp = load_tsplib_file(ref.substr(9));
        return std::make_shared<richvrp::MaTspSpdInstance>(richvrp::generate_matspspd(atsp));
    }
    if (ends_with(ref, ".tsp") || ends_with(ref, ".atsp")) {
        return std::make_shared<problems::TspInstance>(load_tsplib_file(ref));
    }
    if (ends_with(ref, ".json")) {
        return load_instance_file(ref);
    }
    throw ValidationError("cannot resolve instance reference '" + ref + "'");
}

}  // namespace gb::io
