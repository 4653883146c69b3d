#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpk/geometry.hpp"
#include "dpk/graded.hpp"

namespace dpk {

/// Ring F[x0..x5] in grevlex.
RingPtr coordinate_ring(const Field& field);
/// Base plane ring F[a,b,c] in grevlex.
RingPtr base_ring(const Field& field);

/// (x0,x1,x2) for which == 1, (x3,x4,x5) for which == 2.
Ideal plane_ideal(const RingPtr& ring, int which);

using Mat6 = std::array<std::array<Elem, 6>, 6>;

/// Coordinates y = [A1; A2] x in which the planes {A1 x = 0} and {A2 x = 0}
/// (each A_i a 3 x 6 matrix of full rank) become {y0=y1=y2=0} and
/// {y3=y4=y5=0}. Returns the inverse matrix B, so that a form g(x) becomes
/// g(B y); throws DegeneracyError when the planes meet.
Mat6 standardizing_transform(const Field& field, const std::array<std::array<Elem, 6>, 3>& A1,
                             const std::array<std::array<Elem, 6>, 3>& A2);
/// g(B y), with y read in g's ring.
MultiPoly linear_substitution(const MultiPoly& g, const Mat6& B);

/// Three independent quadrics in the span of x_i x_j (i <= 2 < j).
/// Entry M_k[i][j] is the coefficient of x_i x_{j+3} in Q_k.
struct NetOfQuadrics {
    RingPtr ring;
    std::array<MultiPoly, 3> Q;
    std::array<Mat3, 3> M;

    /// Throws ArgumentError when a quadric leaves the 9-dimensional span or
    /// the three are dependent.
    static NetOfQuadrics from_quadrics(const std::array<MultiPoly, 3>& q);
    static NetOfQuadrics from_matrices(const Field& field, const std::array<Mat3, 3>& m);

    Ideal ideal() const { return Ideal(ring, {Q[0], Q[1], Q[2]}); }
    /// sum_k w_k Q_k.
    MultiPoly combination(const std::array<Elem, 3>& w) const;
};

/// Deterministic in (p, seed); dependent draws are rejected, up to 64 times.
NetOfQuadrics random_net(std::uint32_t p, std::uint64_t seed);

enum class CheckStatus { pass, fail, skipped };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string details;
    double seconds = 0;
};

const char* to_string(CheckStatus s);
bool all_passed(const std::vector<Check>& checks);

struct SurfaceT {
    Ideal ideal;
    HilbertData hilbert;
    std::vector<MultiPoly> generators;  // minimal, ascending degree
    std::array<long long, 3> h0{};      // dim (I_T)_d for d = 1, 2, 3
    std::vector<MultiPoly> cubics;      // basis of (I_T)_3
    /// E_i = T cap Pi_i as plane cubics in the base ring (variables read as
    /// x3,x4,x5 for E_1 and x0,x1,x2 for E_2).
    std::array<std::optional<MultiPoly>, 2> boundary;
    std::array<CurveInvariants, 2> boundary_invariants{};
    std::vector<Check> checks;

    bool generic() const { return all_passed(checks); }
};

/// Saturates the net by both planes and validates the result; failures are
/// recorded in `checks` rather than thrown.
SurfaceT build_T(const NetOfQuadrics& net);

struct CubicFourfold {
    MultiPoly f;
    bool smooth = false;
};

/// Checks containment (ArgumentError otherwise) and smoothness.
CubicFourfold make_cubic(const SurfaceT& T, const MultiPoly& f);

/// Seeded random element of (I_T)_3, redrawn until it is smooth and contains
/// neither plane; DegeneracyError after `budget` rejected draws.
CubicFourfold random_cubic_through_T(const SurfaceT& T, std::uint64_t seed, int budget = 16);

/// dim H^0(N_{T/X}); ArgumentError when f is not in I_T.
std::size_t deformation_dim(const SurfaceT& T, const CubicFourfold& X);

/// A point of the base plane over some F_q, scaled so that its first
/// nonzero coordinate is 1.
struct BasePoint {
    Field field;
    std::array<Elem, 3> coords{};

    BasePoint(Field f, std::array<Elem, 3> c);
    std::string to_string() const;
    auto operator<=>(const BasePoint& o) const { return coords <=> o.coords; }
    bool operator==(const BasePoint& o) const { return coords == o.coords; }
};

/// All q^2 + q + 1 points of P^2(F_q), in increasing coordinate order.
std::vector<BasePoint> projective_plane_points(const Field& field);

enum class FiberType { smooth, I, II, III, IV, a1_singular, unresolved };
const char* to_string(FiberType t);

struct DiscriminantCurves {
    PlaneCurve B_I;
    PlaneCurve B_II;
};

/// Where a base point sits relative to the discriminant curves.
struct CurveMembership {
    bool on_B_I = false;
    bool on_B_II = false;
    bool cusp_of_B_II = false;
};

CurveMembership membership(const DiscriminantCurves& curves, const BasePoint& pt);
/// Fiber type predicted by curve membership.
FiberType expected_type(const CurveMembership& m);

struct FiberReport {
    BasePoint point;
    std::optional<Ideal> fiber;
    int dim = -1;
    long long degree = 0;
    SingularityCensus census;
    FiberType type = FiberType::unresolved;
    std::optional<CurveMembership> curves;
    std::string note;
};

/// The net, T and X with their ideals prepared for fiber computations.
struct Fibration {
    NetOfQuadrics net;
    SurfaceT T;
    CubicFourfold X;
};

/// Residual fiber (f, 2x2 minors of [Q; a b c]) : I_T, checked to be a
/// surface of degree 6 not supported on the planes (DegeneracyError
/// otherwise), with its singularity census. When curves are given, A1
/// fibers are split into types I and II by membership.
FiberReport fiber_at(const Fibration& fib, const BasePoint& pt, const DiscriminantCurves* curves = nullptr);

struct ScanReport {
    unsigned extension_degree = 1;
    std::vector<FiberReport> fibers;  // sorted by point
    std::map<std::string, std::size_t> counts;
    /// Set when curves were supplied.
    std::optional<bool> consistent;
    std::vector<std::string> mismatches;
};

/// Worker count from DPK_THREADS, else the hardware concurrency.
unsigned default_threads();

/// Classifies every point of P^2(F_{p^k}), k <= 3. Degenerate fibers are
/// recorded as unresolved.
ScanReport fiber_scan(const Fibration& fib, unsigned k, const DiscriminantCurves* curves = nullptr,
                      unsigned threads = 0);

enum class DiscriminantStrategy { lines, elimination };

struct DiscriminantOptions {
    DiscriminantStrategy strategy = DiscriminantStrategy::lines;
    std::uint64_t seed = 1;
    std::size_t min_lines = 7;
    std::size_t max_lines = 40;
    /// Pair budget for the elimination strategy.
    std::size_t elimination_pairs = 200'000;
};

struct DiscriminantResult {
    DiscriminantCurves curves;
    PlaneCurve E3;
    /// Strategy that produced B_I (elimination falls back to lines).
    DiscriminantStrategy used = DiscriminantStrategy::lines;
    std::string fallback_reason;
    std::size_t lines_used = 0;
    std::vector<Check> checks;
};

/// det(a M1 + b M2 + c M3) in the base ring.
PlaneCurve e3_curve(const NetOfQuadrics& net);

/// B_II = dual(E_3). B_I by restriction to lines: on each line the critical
/// values of the fiber map, minus those on B_II, give B_I on that line up to
/// a scalar; enough lines determine the sextic. Validations land in
/// `checks`. Throws DegeneracyError when no consistent sextic is found.
DiscriminantResult discriminant_curves(const Fibration& fib, const DiscriminantOptions& opts = {});

/// Checks of a pair of discriminant curves: B_I smooth, B_II with census
/// (18, 9), B_I cap B_II reduced of degree 36.
std::vector<Check> discriminant_checks(const DiscriminantCurves& c);

struct TrisectionReport {
    CurveInvariants D;
    std::array<long long, 2> plane_degrees{};
};

/// D = T cap S for a smooth fiber S; ArgumentError on a singular fiber.
TrisectionReport trisection_check(const Fibration& fib, const FiberReport& fiber);

struct TrialReport {
    std::uint32_t p = 0;
    std::uint64_t seed = 0;
    /// Every structural check passed (T, X, deformations, E3, discriminants).
    bool structural = false;
    /// Structural and the scan agrees with the trial's own curves.
    bool generic = false;
    std::vector<Check> checks;
    std::string failure;
    double seconds = 0;
};

/// One genericity trial: random net and cubic, the structural checks, and a
/// scan over F_p against the trial's own discriminant curves. Engine errors
/// are reported as non-generic outcomes.
TrialReport run_trial(std::uint32_t p, std::uint64_t seed, unsigned threads = 0);

struct VerifyOptions {
    bool skip_elimination = false;
    std::size_t elimination_pairs = 200'000;
    unsigned threads = 0;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool passed() const { return all_passed(checks); }
};

/// The embedded example: T, X, deformations, scan over F_5, discriminant
/// curves against the printed ones, trisection and Euler consistency.
VerifyReport verify_example(const VerifyOptions& opts = {});

/// Text of the embedded example files.
std::string_view embedded_example_data();
std::string_view embedded_example_curves();

}  // namespace dpk
