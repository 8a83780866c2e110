#include "gb/instances/tsplib.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gb/core/errors.hpp"

namespace gb::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct Header {
    std::string name = "unnamed";
    std::string type;
    int dimension = -1;
    std::string weight_type;
    std::string weight_format;
};

}  // namespace

problems::TspInstance parse_tsplib(const std::string& text) {
    std::istringstream in(text);
    Header h;
    std::string line;
    std::string section;

    auto header_value = [&](const std::string& l) {
        const auto colon = l.find(':');
        return trim(colon == std::string::npos ? "" : l.substr(colon + 1));
    };

    std::vector<std::array<double, 2>> coords;
    std::vector<double> weights;

    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "EOF") break;
        if (t.rfind("NAME", 0) == 0) {
            h.name = header_value(t);
        } else if (t.rfind("TYPE", 0) == 0) {
            h.type = header_value(t);
        } else if (t.rfind("DIMENSION", 0) == 0) {
            h.dimension = std::stoi(header_value(t));
        } else if (t.rfind("EDGE_WEIGHT_TYPE", 0) == 0) {
            h.weight_type = header_value(t);
        } else if (t.rfind("EDGE_WEIGHT_FORMAT", 0) == 0) {
            h.weight_format = header_value(t);
        } else if (t.rfind("COMMENT", 0) == 0 || t.rfind("DISPLAY_DATA_TYPE", 0) == 0 ||
                   t.rfind("NODE_COORD_TYPE", 0) == 0) {
            // informational only
        } else if (t == "NODE_COORD_SECTION" || t == "EDGE_WEIGHT_SECTION") {
            section = t;
        } else if (section == "NODE_COORD_SECTION") {
            std::istringstream row(t);
            int id;
            double x, y;
            if (!(row >> id >> x >> y)) throw ParseError("bad node coordinate line: " + t);
            coords.push_back({x, y});
        } else if (section == "EDGE_WEIGHT_SECTION") {
            std::istringstream row(t);
            double w;
            while (row >> w) weights.push_back(w);
        } else {
            throw ParseError("unrecognized TSPLIB line: " + t);
        }
    }

    if (h.dimension <= 0) throw ParseError(h.name + ": missing or invalid DIMENSION");
    if (h.type != "TSP" && h.type != "ATSP") {
        throw ParseError(h.name + ": unsupported TYPE '" + h.type + "' (expected TSP or ATSP)");
    }

    if (h.weight_type == "EUC_2D") {
        if (static_cast<int>(coords.size()) != h.dimension) {
            throw ParseError(h.name + ": DIMENSION " + std::to_string(h.dimension) + " but " +
                             std::to_string(coords.size()) + " coordinates");
        }
        return problems::TspInstance::from_coords(h.name, std::move(coords));
    }

    if (h.weight_type == "EXPLICIT") {
        const int n = h.dimension;
        std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
        if (h.weight_format == "FULL_MATRIX") {
            if (static_cast<int>(weights.size()) != n * n) {
                throw ParseError(h.name + ": FULL_MATRIX needs " + std::to_string(n * n) +
                                 " entries, got " + std::to_string(weights.size()));
            }
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) matrix[i][j] = weights[i * n + j];
            }
            return problems::TspInstance::from_matrix(h.name, std::move(matrix),
                                                      h.type == "TSP");
        }
        if (h.weight_format == "UPPER_ROW") {
            const int expected = n * (n - 1) / 2;
            if (static_cast<int>(weights.size()) != expected) {
                throw ParseError(h.name + ": UPPER_ROW needs " + std::to_string(expected) +
                                 " entries, got " + std::to_string(weights.size()));
            }
            std::size_t k = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    matrix[i][j] = weights[k];
                    matrix[j][i] = weights[k];
                    ++k;
                }
            }
            return problems::TspInstance::from_matrix(h.name, std::move(matrix), true);
        }
        throw ParseError(h.name + ": unsupported EDGE_WEIGHT_FORMAT '" + h.weight_format + "'");
    }

    throw ParseError(h.name + ": unsupported EDGE_WEIGHT_TYPE '" + h.weight_type + "'");
}

problems::TspInstance load_tsplib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tsplib(buf.str());
}

std::vector<int> parse_tour(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool in_section = false;
    std::vector<int> tour;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "TOUR_SECTION") {
            in_section = true;
            continue;
        }
        if (!in_section) continue;
        std::istringstream row(t);
        int id;
        while (row >> id) {
            if (id == -1) return tour;
            if (id < 1) throw ParseError("tour ids must be positive (1-based)");
            tour.push_back(id - 1);
        }
    }
    if (tour.empty()) throw ParseError("no TOUR_SECTION found");
    return tour;
}

std::vector<int> load_tour_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tour(buf.str());
}

}  // namespace gb::io
