#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dpk/groebner.hpp"

namespace dpk {

/// First syzygies of a homogeneous tuple, complete up to `degree_bound`.
struct SyzygyModule {
    std::vector<MultiPoly> generators;
    /// Minimal syzygies, by increasing degree; each has one entry per generator.
    std::vector<std::vector<MultiPoly>> syzygies;
    std::vector<unsigned> degrees;
    unsigned degree_bound = 0;
};

/// Default bound: largest generator degree + 3.
SyzygyModule syzygies(const std::vector<MultiPoly>& gens, std::optional<unsigned> degree_bound = {});

struct HomOptions {
    /// Starting syzygy bound (default: largest generator degree + 3).
    std::optional<unsigned> bound;
    /// The result must be unchanged between consecutive bounds; the bound is
    /// raised up to this value before a ResourceError is thrown.
    unsigned max_bound = 12;
};

struct HomResult {
    std::size_t dim = 0;
    unsigned bound = 0;
};

/// Degree-zero homomorphisms I -> R/I where R = S/(ambient). I is given by
/// homogeneous generators in S and must contain the ambient relations.
HomResult hom_dim_degree_zero(const Ideal& I, const std::vector<MultiPoly>& ambient = {},
                              const HomOptions& opts = {});

}  // namespace dpk
