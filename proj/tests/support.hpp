#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dpk/poly.hpp"

namespace dpk::testing {

using Rng = std::mt19937_64;

inline Elem random_elem(const Field& f, Rng& rng, bool nonzero = false) {
    std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, f.order() - 1);
    return static_cast<Elem>(d(rng));
}

// Homogeneous of degree d; each monomial kept with probability `density`.
inline MultiPoly random_form(const RingPtr& ring, unsigned d, Rng& rng, double density = 1.0) {
    std::bernoulli_distribution keep(density);
    for (;;) {
        std::vector<Term> terms;
        for (const auto& m : monomials_of_degree(ring->nvars(), d))
            if (keep(rng)) terms.push_back({m, random_elem(ring->field(), rng)});
        MultiPoly p = MultiPoly::from_terms(ring, std::move(terms));
        if (!p.is_zero()) return p;
    }
}

// Arbitrary polynomial of degree at most d.
inline MultiPoly random_poly(const RingPtr& ring, unsigned d, Rng& rng, double density = 0.5) {
    MultiPoly p(ring);
    for (unsigned e = 0; e <= d; ++e) {
        std::bernoulli_distribution keep(density);
        std::vector<Term> terms;
        for (const auto& m : monomials_of_degree(ring->nvars(), e))
            if (keep(rng)) terms.push_back({m, random_elem(ring->field(), rng)});
        p += MultiPoly::from_terms(ring, std::move(terms));
    }
    return p;
}

}  // namespace dpk::testing
