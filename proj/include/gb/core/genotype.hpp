#pragma once

#include <span>
#include <utility>
#include <vector>

namespace gb {

// One candidate solution: a sequence of non-negative integer labels.
//
// Two encodings share this type:
//  - pure permutations (TSP tours, NQP rows, BPP item orders), where every
//    label is a real element and 0 may be an ordinary label;
//  - routed sequences, where label 0 is reserved as the route separator and
//    the non-separator labels form a permutation of the customer ids 1..n.
struct Genotype {
    std::vector<int> elems;
    bool uses_separators = false;

    Genotype() = default;

    static Genotype permutation(std::vector<int> labels) {
        return Genotype{std::move(labels), false};
    }

    static Genotype routed(std::vector<int> labels) {
        return Genotype{std::move(labels), true};
    }

    Genotype(std::vector<int> labels, bool separators)
        : elems(std::move(labels)), uses_separators(separators) {}

    int size() const { return static_cast<int>(elems.size()); }
    bool is_separator(int pos) const { return uses_separators && elems[pos] == 0; }

    int separator_count() const {
        if (!uses_separators) return 0;
        int c = 0;
        for (int v : elems) c += (v == 0);
        return c;
    }

    bool operator==(const Genotype&) const = default;
};

// Half-open [begin, end) index ranges of the customer runs between separators.
// Empty runs (consecutive or leading/trailing separators) are skipped.
std::vector<std::pair<int, int>> route_spans(const Genotype& g);

// Routes as label sequences, in genotype order.
std::vector<std::vector<int>> routes_of(const Genotype& g);

// Collapses empty routes: consecutive, leading and trailing separators removed.
Genotype canonical_routed(const Genotype& g);

// Rebuilds a routed genotype from route label lists (single separators between routes).
Genotype from_routes(const std::vector<std::vector<int>>& routes);

// Index of the route containing position `pos`, or -1 for separators.
int route_index_of(const Genotype& g, int pos);

}  // namespace gb
