#include "gb/core/rng.hpp"

#include <cassert>

namespace gb {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t h) {
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

std::uint64_t RngStream::next_u64() {
    return gen_();
}

std::size_t RngStream::index(std::size_t n) {
    assert(n > 0);
    // Rejection sampling keeps the draw unbiased and platform-stable.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
}

int RngStream::uniform_int(int lo, int hi) {
    assert(lo <= hi);
    return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo) + 1));
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) {
    return uniform01() < p;
}

RngStream RngStream::derive(std::string_view label) const {
    return RngStream(splitmix64(seed_ ^ fnv1a(label)));
}

}  // namespace gb
