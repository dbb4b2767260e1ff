#pragma once

// Seeded generation of random nondegenerate diagonal ternary forms with
// entries in {±1,…,±7}, the sampling population for all property suites.

#include "altcliff/quadratic_form.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace altcliff {

inline QuadraticForm random_diagonal_ternary(std::mt19937_64& rng, int max_mag = 7) {
    std::uniform_int_distribution<int> mag(1, max_mag);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Rat> a(3);
    for (auto& x : a) x = Rat((sign(rng) ? 1 : -1) * mag(rng));
    return QuadraticForm::diagonal(a);
}

inline std::vector<QuadraticForm> random_corpus(int count, std::uint64_t seed, int max_mag = 7) {
    std::mt19937_64 rng(seed);
    std::vector<QuadraticForm> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(random_diagonal_ternary(rng, max_mag));
    return out;
}

}  // namespace altcliff
