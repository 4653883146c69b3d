#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dpk/errors.hpp"

namespace dpk {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows);
IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& m);

/// Symmetric integer Gram matrix.
class GramLattice {
public:
    explicit GramLattice(IntMatrix gram);

    const IntMatrix& gram() const noexcept { return gram_; }
    std::size_t rank() const noexcept { return gram_.size(); }
    Int determinant() const { return dpk::determinant(gram_); }
    bool nondegenerate() const { return determinant() != 0; }
    bool is_even() const;
    Int product(const IntVector& x, const IntVector& y) const;
    /// gcd of x.e over a basis e (0 for the zero vector).
    Int divisibility(const IntVector& x) const;

private:
    IntMatrix gram_;
};

GramLattice direct_sum(const std::vector<GramLattice>& parts);
GramLattice lattice_a2();
GramLattice lattice_u();
GramLattice lattice_e8();

GramLattice gram_K(long long a, long long b);
long long delta(long long a, long long b);
/// Moves a into {-1, 0, 1} (same class mod 3) and adjusts b; delta is unchanged.
std::pair<long long, long long> normalize_sigma(long long a, long long b);
/// Evenness of the orthogonal complement of the first basis vector in K_{a,b}.
bool evenness_check(long long a, long long b);

struct AdmissibleDelta {
    long long delta;
    long long a;
    long long b;
};

struct DeltaEnumeration {
    std::vector<AdmissibleDelta> values;
    /// Always set: which small discriminants fail to define divisors is not
    /// decided here.
    bool small_delta_warning = false;
    std::string warning;
};

/// Positive discriminants up to `max` realized by a normalized (a, b) with
/// a = b mod 2, each with its unique witness. Throws ArgumentError for max < 9.
DeltaEnumeration admissible_discriminants(long long max);

struct SmithForm {
    IntVector diagonal;  // length min(rows, cols), divisibility chain, non-negative
    IntMatrix U;         // rows x rows, unimodular
    IntMatrix V;         // cols x cols, unimodular
};

/// U * M * V = diag.
SmithForm smith_normal_form(const IntMatrix& m);
bool verify_smith(const IntMatrix& m, const SmithForm& s);

/// Basis (as columns of the returned list of vectors) of {x in Z^n : A x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t ncols);

/// Invariant factors greater than one; throws LatticeError when degenerate.
IntVector discriminant_group(const GramLattice& l);

/// Gram matrix of {x : x.v = 0 for all v}; `basis` receives the kernel basis.
GramLattice orthogonal_complement(const GramLattice& l, const std::vector<IntVector>& vectors,
                                  std::vector<IntVector>* basis = nullptr);

long long surface_self_intersection(long long h2, long long hK, long long K2, long long chi);

struct FibrationNumerology {
    long long d_I = 0, d_II = 0;
    long long b_I = 0, b_II = 0, b_III = 0, b_IV = 0;
};

/// Strata Euler numbers for a smooth B_I and a cuspidal B_II of the given
/// degrees meeting transversally, with b_IV cusps.
FibrationNumerology strata_p2(long long d_I, long long d_II, long long b_IV);
long long euler_general(long long chi_P, const FibrationNumerology& n);
long long euler_p2(long long d_I, long long d_II, long long b_IV);

struct DiscriminantWitness {
    GramLattice ambient;  // A2 + U + U + E8 + E8
    IntVector vector;     // square 6, divisibility 1
    GramLattice complement;
    IntVector group;
};

/// Searches coefficients |c| <= 3 on the A2 + U + U part (in a fixed order)
/// for a vector of square 6 and divisibility 1 and returns the discriminant
/// group of its orthogonal complement.
DiscriminantWitness square_six_complement_witness();

}  // namespace dpk
