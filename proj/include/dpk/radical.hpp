#pragma once

#include <cstddef>

#include "dpk/groebner.hpp"
#include "dpk/linalg.hpp"

namespace dpk {

/// True when R/I is a finite-dimensional vector space (affine sense).
bool is_zero_dimensional(const Ideal& I);

/// dim_k R/I for zero-dimensional I; throws ArgumentError otherwise.
std::size_t quotient_dimension(const Ideal& I);

/// Matrix of multiplication by g on R/I (zero-dimensional I) in the basis
/// of standard monomials; column j holds the coordinates of g * b_j.
Matrix multiplication_matrix(const Ideal& I, const MultiPoly& g);

/// Monic minimal polynomial of the variable `var` acting on R/I.
MultiPoly minimal_polynomial(const Ideal& I, std::size_t var);

/// Radical of a zero-dimensional affine ideal (Seidenberg): adjoins the
/// squarefree parts of the minimal polynomials of all variables.
Ideal zero_dim_radical(const Ideal& I);

/// Number of geometric points of the finite projective scheme V(I),
/// counted stratum by stratum {x_0 = .. = x_{i-1} = 0, x_i = 1}.
std::size_t projective_point_count(const Ideal& I);

/// Radical of a homogeneous ideal with finite projective zero set: chart
/// radicals on the standard affine cover, rehomogenized and intersected.
Ideal projective_radical(const Ideal& I);

}  // namespace dpk
