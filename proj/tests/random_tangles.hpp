#pragma once

#include <random>
#include <vector>

#include "hbk/tangle.hpp"

// Generators shared by the property tests and the acceptance suite.
namespace hbk::testgen {

inline ModZClass random_valid_class(std::mt19937& rng, int max_den = 99) {
    std::uniform_int_distribution<int> den_pick(1, max_den / 2);
    while (true) {
        const int q = 2 * den_pick(rng) + 1;  // odd, >= 3
        std::uniform_int_distribution<int> num_pick(1, q - 1);
        const int p = num_pick(rng);
        if (boost::multiprecision::gcd(Int(p), Int(q)) == 1) {
            return modz_normalize(Fraction(p, q));
        }
    }
}

inline VertexLabel random_vertex(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    return static_cast<VertexLabel>(pick(rng));
}

inline KnotLabel random_knot(std::mt19937& rng) {
    static const KnotLabel pool[] = {
        {"trefoil", Handedness::Positive}, {"trefoil", Handedness::Negative},
        {"cinqfoil", Handedness::Positive}, {"cinqfoil", Handedness::Negative},
        {"fig8", Handedness::Amphichiral},
    };
    std::uniform_int_distribution<int> pick(0, 4);
    return pool[pick(rng)];
}

inline TauTangle random_tangle(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 0) {
        return RationalTau(random_vertex(rng), random_valid_class(rng));
    }
    std::uniform_int_distribution<int> vertex_pick(0, 3);
    std::optional<VertexLabel> vertex;
    if (const int v = vertex_pick(rng); v < 3) {
        vertex = static_cast<VertexLabel>(v);
    }
    std::uniform_int_distribution<int> knot_count(0, 2);
    std::vector<KnotLabel> knots;
    for (int i = knot_count(rng); i > 0; --i) {
        knots.push_back(random_knot(rng));
    }
    static const char* ids[] = {"alpha", "beta", "gamma", "delta"};
    std::uniform_int_distribution<int> id_pick(0, 3);
    Descriptor d{ids[id_pick(rng)], coin(rng) == 1, coin(rng) == 1};
    return CompositeTau(vertex, std::move(knots), /*atoroidal=*/true, std::move(d));
}

}  // namespace hbk::testgen
