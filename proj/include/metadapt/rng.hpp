#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace metadapt {

// All randomness in the engine flows through named substreams of a master
// seed, so any component can be re-derived bit-identically. Distribution
// sampling is hand-rolled on top of mt19937 so the only serializable state
// is the engine itself.

uint64_t splitmix64(uint64_t& state);
uint64_t fnv1a64(std::string_view s);

// Deterministic substream: same (master_seed, stream) -> same engine state.
std::mt19937 make_rng(uint64_t master_seed, std::string_view stream);

float uniform_float(std::mt19937& g, float lo, float hi);
// Inclusive range [lo, hi].
int uniform_int(std::mt19937& g, int lo, int hi);
// Standard normal via Box-Muller; no cached state between calls.
float gaussian(std::mt19937& g);
// Standard Gumbel: -log(-log(U)), U in (0,1).
float gumbel_noise(std::mt19937& g);

// In-place Fisher-Yates; stable across standard libraries (std::shuffle is
// not specified bit-exactly).
template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937& g) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
        int j = uniform_int(g, 0, i);
        std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
    }
}

std::string encode_rng(const std::mt19937& g);
std::mt19937 decode_rng(const std::string& blob);

}  // namespace metadapt
