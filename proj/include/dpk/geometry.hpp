#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dpk/groebner.hpp"

namespace dpk {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant by cofactor expansion with memoized minors.
MultiPoly determinant(const PolyMatrix& m);

/// All k x k minors of `m`.
std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t k);

/// Jacobian matrix (rows: polynomials, columns: variables).
PolyMatrix jacobian(const std::vector<MultiPoly>& polys);

/// I plus the codim x codim minors of the Jacobian of a minimal generating set.
Ideal singular_locus_ideal(const Ideal& I, std::size_t codim);

/// Smoothness of the projective scheme V(I) of the given codimension.
bool is_smooth(const Ideal& I, std::size_t codim);

struct SingularityCensus {
    /// Projective dimension of the ambient space.
    std::size_t ambient_dim = 0;
    /// False when the singular locus is positive-dimensional; the degrees
    /// are then meaningless and `error` says why.
    bool finite = true;
    long long scheme_degree = 0;
    long long radical_degree = 0;
    std::string error;

    bool smooth() const noexcept { return finite && scheme_degree == 0; }
};

SingularityCensus singularity_census(const Ideal& I, std::size_t codim);

struct CurveInvariants {
    long long degree = 0;
    long long genus = 0;
};

/// Degree and arithmetic genus from the Hilbert polynomial dn + 1 - g.
CurveInvariants curve_invariants(const Ideal& C);

/// Nonzero homogeneous polynomial in a three-variable ring.
class PlaneCurve {
public:
    explicit PlaneCurve(MultiPoly f);
    const MultiPoly& equation() const noexcept { return f_; }
    unsigned degree() const noexcept { return degree_; }
    Ideal ideal() const { return Ideal(f_.ring(), {f_}); }

private:
    MultiPoly f_;
    unsigned degree_;
};

/// Squarefree part of a nonzero polynomial (product of its distinct
/// irreducible factors, up to a unit), using gcds obtained from ideal
/// intersections. Intended for small plane curves.
MultiPoly squarefree_polynomial(const MultiPoly& f);

/// Projective dual, as a curve in the same three-variable ring read as
/// dual coordinates.
PlaneCurve dual_curve(const PlaneCurve& C);

using Mat3 = std::array<std::array<Elem, 3>, 3>;

/// det(a M1 + b M2 + c M3) in the ring's three variables; throws
/// DegeneracyError when it vanishes identically.
MultiPoly determinant_curve(const std::array<Mat3, 3>& m, const RingPtr& abc);

/// The cubics det[M1 v | M2 v | M3 v] (in v) and det of the rows u^T M_k
/// (in u), each in the given three-variable ring.
MultiPoly column_contraction_curve(const std::array<Mat3, 3>& m, const RingPtr& ring);
MultiPoly row_contraction_curve(const std::array<Mat3, 3>& m, const RingPtr& ring);

/// Checks det6(a Q1 + b Q2 + c Q3) = c0 * det3(a M1 + b M2 + c M3)^2 for a
/// nonzero constant c0. The quadrics live in six variables; odd
/// characteristic is required.
bool quadric_net_square_identity(const std::array<MultiPoly, 3>& quadrics, const RingPtr& abc);

/// Symmetric matrix S with Q = x^T S x (odd characteristic).
std::vector<std::vector<Elem>> quadric_matrix(const MultiPoly& q);

}  // namespace dpk
