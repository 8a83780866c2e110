#include "gb/core/genotype.hpp"

namespace gb {

std::vector<std::pair<int, int>> route_spans(const Genotype& g) {
    std::vector<std::pair<int, int>> spans;
    if (!g.uses_separators) {
        if (!g.elems.empty()) spans.emplace_back(0, g.size());
        return spans;
    }
    int begin = 0;
    for (int i = 0; i <= g.size(); ++i) {
        if (i == g.size() || g.elems[i] == 0) {
            if (i > begin) spans.emplace_back(begin, i);
            begin = i + 1;
        }
    }
    return spans;
}

std::vector<std::vector<int>> routes_of(const Genotype& g) {
    std::vector<std::vector<int>> routes;
    for (auto [b, e] : route_spans(g)) {
        routes.emplace_back(g.elems.begin() + b, g.elems.begin() + e);
    }
    return routes;
}

Genotype canonical_routed(const Genotype& g) {
    if (!g.uses_separators) return g;
    return from_routes(routes_of(g));
}

Genotype from_routes(const std::vector<std::vector<int>>& routes) {
    std::vector<int> elems;
    for (std::size_t r = 0; r < routes.size(); ++r) {
        if (r > 0) elems.push_back(0);
        elems.insert(elems.end(), routes[r].begin(), routes[r].end());
    }
    return Genotype::routed(std::move(elems));
}

int route_index_of(const Genotype& g, int pos) {
    if (g.is_separator(pos)) return -1;
    auto spans = route_spans(g);
    for (std::size_t r = 0; r < spans.size(); ++r) {
        if (pos >= spans[r].first && pos < spans[r].second) return static_cast<int>(r);
    }
    return -1;
}

}  // namespace gb
