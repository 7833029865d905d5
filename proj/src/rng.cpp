#include "metadapt/rng.hpp"

#include <cmath>
#include <sstream>

namespace metadapt {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::mt19937 make_rng(uint64_t master_seed, std::string_view stream) {
    uint64_t state = master_seed ^ fnv1a64(stream);
    uint32_t a = static_cast<uint32_t>(splitmix64(state));
    uint32_t b = static_cast<uint32_t>(splitmix64(state));
    std::seed_seq seq{a, b, static_cast<uint32_t>(splitmix64(state))};
    return std::mt19937(seq);
}

float uniform_float(std::mt19937& g, float lo, float hi) {
    // 24-bit mantissa resolution is enough for float outputs.
    uint32_t r = g() >> 8;
    float u = static_cast<float>(r) * (1.0f / 16777216.0f);
    return lo + (hi - lo) * u;
}

int uniform_int(std::mt19937& g, int lo, int hi) {
    uint32_t span = static_cast<uint32_t>(hi - lo) + 1u;
    if (span == 0) return lo;  // full range
    // rejection sampling to stay unbiased
    uint32_t limit = UINT32_MAX - UINT32_MAX % span;
    uint32_t r;
    do {
        r = g();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
}

float gaussian(std::mt19937& g) {
    // Box-Muller, fresh draw each call (second value discarded) so the
    // engine state is the only state.
    float u1 = 0.0f;
    do {
        u1 = uniform_float(g, 0.0f, 1.0f);
    } while (u1 <= 1e-12f);
    float u2 = uniform_float(g, 0.0f, 1.0f);
    return std::sqrt(-2.0f * std::log(u1)) * std::cos(6.28318530717958647692f * u2);
}

float gumbel_noise(std::mt19937& g) {
    float u = 0.0f;
    do {
        u = uniform_float(g, 0.0f, 1.0f);
    } while (u <= 1e-12f || u >= 1.0f - 1e-7f);
    return -std::log(-std::log(u));
}

std::string encode_rng(const std::mt19937& g) {
    std::ostringstream os;
    os << g;
    return os.str();
}

std::mt19937 decode_rng(const std::string& blob) {
    std::istringstream is(blob);
    std::mt19937 g;
    is >> g;
    return g;
}

}  // namespace metadapt
