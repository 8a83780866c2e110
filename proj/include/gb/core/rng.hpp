#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace gb {

// Deterministic random stream: same seed, same draw sequence, on every
// platform. The generator is a mt19937_64 seeded through splitmix64; all
// bounded draws use rejection sampling instead of std::uniform_int_distribution,
// whose output is implementation-defined.
//
// Sub-streams derived with derive(label) are independent per label: the child
// seed is a hash of (parent seed, label), so drawing from one stream never
// perturbs another.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    // Uniform in [0, n). n must be > 0.
    std::size_t index(std::size_t n);

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);

    // Uniform real in [0, 1).
    double uniform01();

    bool bernoulli(double p);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    RngStream derive(std::string_view label) const;

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

std::uint64_t splitmix64(std::uint64_t x);

// FNV-1a over raw bytes; used for stable trial seeding from text ids.
std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 14695981039346656037ull);

}  // namespace gb
