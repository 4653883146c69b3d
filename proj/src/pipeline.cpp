#include "dpk/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

#include "dpk/ideal_ops.hpp"
#include "dpk/lattice.hpp"
#include "dpk/linalg.hpp"
#include "dpk/parse.hpp"
#include "dpk/radical.hpp"
#include "dpk/syzygy.hpp"
#include "dpk/univariate.hpp"

namespace dpk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Check make_check(std::string name, bool ok, std::string details, double secs = 0) {
    return Check{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details), secs};
}

template <class Fn>
Check timed_check(std::string name, Fn&& fn) {
    const auto t0 = Clock::now();
    std::string details;
    bool ok = false;
    try {
        ok = fn(details);
    } catch (const Error& e) {
        details = std::string("error: ") + e.what();
        ok = false;
    }
    return make_check(std::move(name), ok, std::move(details), seconds_since(t0));
}

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::string census_string(const SingularityCensus& c) {
    if (!c.finite) return c.error;
    return join({c.scheme_degree, c.radical_degree});
}

std::vector<Elem> row_of(const MultiPoly& q, const std::vector<Monomial>& basis) {
    std::vector<Elem> v;
    for (const auto& m : basis) v.push_back(q.coeff(m));
    return v;
}

std::vector<Monomial> net_monomials() {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) out.push_back(Monomial::variable(i) * Monomial::variable(j));
    return out;
}

bool independent(const Field& field, const std::array<MultiPoly, 3>& q) {
    const auto basis = net_monomials();
    Matrix m(field, 3, basis.size());
    for (std::size_t k = 0; k < 3; ++k) {
        const auto r = row_of(q[k], basis);
        for (std::size_t c = 0; c < r.size(); ++c) m.at(k, c) = r[c];
    }
    return m.rank() == 3;
}

MultiPoly mapped(const MultiPoly& f, const RingPtr& ring) { return f.ring() == ring ? f : f.in_ring(ring); }

Ideal mapped(const Ideal& I, const RingPtr& ring) {
    if (I.ring() == ring) return I;
    std::vector<MultiPoly> g;
    for (const auto& x : I.generators()) g.push_back(x.in_ring(ring));
    return Ideal(ring, std::move(g));
}

// ---- univariate helpers on lines of the base plane ----

UniPoly uni_add(UniPoly a, const UniPoly& b) {
    const Field& f = a.field;
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), 0);
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] = f.add(a.c[i], b.c[i]);
    a.normalize();
    return a;
}

// Restriction of a form in three variables to t u + v.
UniPoly restrict_to_line(const MultiPoly& F, const std::array<Elem, 3>& u, const std::array<Elem, 3>& v) {
    const Field& field = F.field();
    const int deg = std::max(F.degree(), 0);
    std::array<std::vector<UniPoly>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i) {
        UniPoly lin{field, {v[i], u[i]}};
        lin.normalize();
        pw[i].push_back(UniPoly{field, {1}});
        for (int e = 1; e <= deg; ++e) pw[i].push_back(uni_mul(pw[i].back(), lin));
    }
    UniPoly acc{field, {}};
    for (const auto& t : F.terms()) {
        UniPoly prod{field, {t.coeff}};
        for (std::size_t i = 0; i < 3; ++i) prod = uni_mul(prod, pw[i][t.mono[i]]);
        acc = uni_add(acc, prod);
    }
    return acc;
}

std::array<Elem, 3> random_vector(std::mt19937_64& rng, const Field& field) {
    std::array<Elem, 3> v{};
    for (auto& x : v) x = static_cast<Elem>(rng() % field.order());
    return v;
}

bool is_zero_vec(const std::array<Elem, 3>& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Base-plane points u, v spanning the line lam . x = 0 and functionals mu1,
// mu2 with mu1(u) = 1, mu1(v) = 0, mu2(u) = 0, mu2(v) = 1.
struct LineFrame {
    std::array<Elem, 3> lam, u, v, mu1, mu2;
};

// A random line with two frame points accepted by `good`.
template <class Good>
std::optional<LineFrame> random_line(std::mt19937_64& rng, const Field& field, Good&& good) {
    LineFrame fr{};
    fr.lam = random_vector(rng, field);
    if (is_zero_vec(fr.lam)) return std::nullopt;
    Matrix l(field, 1, 3);
    for (std::size_t i = 0; i < 3; ++i) l.at(0, i) = fr.lam[i];
    const auto ker = l.kernel();
    std::vector<std::array<Elem, 2>> params{{1, 0}};
    for (Elem t = 0; t < field.order(); ++t) params.push_back({t, 1});
    std::shuffle(params.begin(), params.end(), rng);
    std::vector<std::array<Elem, 3>> chosen;
    for (const auto& [s0, s1] : params) {
        std::array<Elem, 3> x{};
        for (std::size_t i = 0; i < 3; ++i) x[i] = field.add(field.mul(s0, ker[0][i]), field.mul(s1, ker[1][i]));
        if (good(x)) chosen.push_back(x);
        if (chosen.size() == 2) break;
    }
    if (chosen.size() < 2) return std::nullopt;
    fr.u = chosen[0];
    fr.v = chosen[1];
    std::size_t k = 0;
    while (fr.lam[k] == 0) ++k;
    Matrix P(field, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        P.at(i, 0) = fr.u[i];
        P.at(i, 1) = fr.v[i];
        P.at(i, 2) = i == k ? 1 : 0;
    }
    const auto inv = inverse(P);
    if (!inv) return std::nullopt;
    for (std::size_t i = 0; i < 3; ++i) {
        fr.mu1[i] = inv->at(0, i);
        fr.mu2[i] = inv->at(1, i);
    }
    return fr;
}

// Critical values t = m1/m2 of the fiber map over the line, as the
// characteristic polynomial of m1/m2 on the critical scheme, with the roots
// on B_II removed. Empty when the frame is unsuitable.
std::optional<UniPoly> B_I_on_line(const Fibration& fib, const LineFrame& fr, const MultiPoly& B_II,
                                   std::mt19937_64& rng, std::string& why) {
    const NetOfQuadrics& net = fib.net;
    const RingPtr& R = net.ring;
    const Field& field = R->field();
    const MultiPoly m1 = net.combination(fr.mu1), m2 = net.combination(fr.mu2), ql = net.combination(fr.lam);
    const MultiPoly& f = fib.X.f;
    PolyMatrix jac(3);
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        jac[0].push_back(f.derivative(i));
        jac[1].push_back(ql.derivative(i));
        jac[2].push_back(m2 * m1.derivative(i) - m1 * m2.derivative(i));
    }
    std::vector<MultiPoly> gens{ql, f};
    for (auto& m : minors(jac, 3)) gens.push_back(std::move(m));
    const Ideal crit = saturate(Ideal(R, std::move(gens)), m1);
    const HilbertData h = hilbert(crit);
    if (h.dim != 0) {
        why = "critical scheme of dimension " + std::to_string(h.dim);
        return std::nullopt;
    }
    std::optional<Ideal> chart;
    for (int attempt = 0; attempt < 8 && !chart; ++attempt) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < R->nvars(); ++i)
            terms.push_back({Monomial::variable(i), static_cast<Elem>(rng() % field.order())});
        terms.push_back({Monomial{}, field.neg(1)});
        Ideal c = crit.with_generator(MultiPoly::from_terms(R, std::move(terms)));
        if (static_cast<long long>(quotient_dimension(c)) == h.degree) chart = std::move(c);
    }
    if (!chart) {
        why = "no affine chart covers the critical scheme";
        return std::nullopt;
    }
    const auto M2inv = inverse(multiplication_matrix(*chart, m2));
    if (!M2inv) {
        why = "critical point over the first frame point";
        return std::nullopt;
    }
    UniPoly P = characteristic_polynomial(*M2inv * multiplication_matrix(*chart, m1));
    const UniPoly g = restrict_to_line(B_II, fr.u, fr.v);
    if (g.is_zero()) {
        why = "line contained in B_II";
        return std::nullopt;
    }
    // Each point of B_II on the line carries one critical point; a point of
    // B_I cap B_II carries one more, which belongs to B_I.
    // Only the root sets are reliable: a point of B_II may carry any number
    // of critical points, including none.
    P = uni_squarefree(P);
    P = uni_divmod(P, uni_gcd(P, g)).first;
    if (P.degree() != 6) {
        why = "critical values off B_II have degree " + std::to_string(P.degree());
        return std::nullopt;
    }
    return uni_monic(P);
}

// Kernel of the system F(t u + v) = kappa_l P_l(t) in the 28 coefficients of
// the sextic F and one scalar per line.
std::vector<std::vector<Elem>> line_system_kernel(const RingPtr& base,
                                                  const std::vector<std::pair<LineFrame, UniPoly>>& data) {
    const Field& field = base->field();
    const auto monos = monomials_of_degree(3, 6);
    const std::size_t nm = monos.size(), nl = data.size();
    Matrix A(field, 7 * nl, nm + nl);
    for (std::size_t l = 0; l < nl; ++l) {
        const auto& [fr, P] = data[l];
        for (std::size_t j = 0; j < nm; ++j) {
            const UniPoly r = restrict_to_line(MultiPoly::monomial(base, monos[j]), fr.u, fr.v);
            for (std::size_t e = 0; e < r.c.size(); ++e) A.at(7 * l + e, j) = r.c[e];
        }
        for (std::size_t e = 0; e < P.c.size(); ++e) A.at(7 * l + e, nm + l) = field.neg(P.c[e]);
    }
    return A.kernel();
}

MultiPoly sextic_from_kernel(const RingPtr& base, const std::vector<Elem>& k) {
    const auto monos = monomials_of_degree(3, 6);
    return combine(base, monos, std::span<const Elem>(k.data(), monos.size())).monic();
}

// Eliminates the fiber coordinates from the singular-point incidence.
MultiPoly B_I_by_elimination(const Fibration& fib, const MultiPoly& B_II, std::size_t pairs) {
    const NetOfQuadrics& net = fib.net;
    const Field& field = net.ring->field();
    const RingPtr R9 = Ring::make(field, {"x0", "x1", "x2", "x3", "x4", "x5", "a", "b", "c"});
    const std::vector<int> embed{0, 1, 2, 3, 4, 5};
    std::array<MultiPoly, 3> Q{map_variables(net.Q[0], R9, embed), map_variables(net.Q[1], R9, embed),
                               map_variables(net.Q[2], R9, embed)};
    const MultiPoly f = map_variables(fib.X.f, R9, embed);
    const MultiPoly a = MultiPoly::variable(R9, 6), b = MultiPoly::variable(R9, 7), c = MultiPoly::variable(R9, 8);
    const MultiPoly L1 = b * Q[0] - a * Q[1], L2 = c * Q[0] - a * Q[2], L3 = c * Q[1] - b * Q[2];
    PolyMatrix jac(3);
    for (std::size_t i = 0; i < 6; ++i) {
        jac[0].push_back(f.derivative(i));
        jac[1].push_back(L1.derivative(i));
        jac[2].push_back(L2.derivative(i));
    }
    std::vector<MultiPoly> gens{f, L1, L2, L3};
    for (auto& m : minors(jac, 3)) gens.push_back(std::move(m));
    Ideal inc(R9, std::move(gens));
    inc.options.max_pairs = pairs;
    Ideal q(R9, {Q[0], Q[1], Q[2]});
    q.options.max_pairs = pairs;
    inc = saturate(inc, q);
    inc.options.max_pairs = pairs;
    const Ideal e = eliminate(inc, {0, 1, 2, 3, 4, 5});
    const RingPtr base = B_II.ring();
    std::vector<MultiPoly> in_base;
    for (const auto& g : e.groebner())
        in_base.push_back(map_variables(g, base, {-1, -1, -1, -1, -1, -1, 0, 1, 2}));
    if (in_base.size() != 1) throw GeometryError("eliminant is not principal");
    MultiPoly G = squarefree_polynomial(in_base.front());
    const Ideal bii(base, {B_II});
    if (bii.contains(G)) G = exact_divide(G, B_II);
    if (G.degree() != 6) throw GeometryError("eliminant residual has degree " + std::to_string(G.degree()));
    return G.monic();
}

FiberType census_type(const SingularityCensus& c) {
    if (!c.finite) return FiberType::unresolved;
    if (c.scheme_degree == 0) return FiberType::smooth;
    if (c.scheme_degree == 1 && c.radical_degree == 1) return FiberType::a1_singular;
    if (c.scheme_degree == 2 && c.radical_degree == 2) return FiberType::III;
    if (c.scheme_degree == 2 && c.radical_degree == 1) return FiberType::IV;
    return FiberType::unresolved;
}

}  // namespace

// ---------------------------------------------------------------------------

RingPtr coordinate_ring(const Field& field) {
    return Ring::make(field, {"x0", "x1", "x2", "x3", "x4", "x5"});
}

RingPtr base_ring(const Field& field) { return Ring::make(field, {"a", "b", "c"}); }

Ideal plane_ideal(const RingPtr& ring, int which) {
    if (ring->nvars() != 6 || (which != 1 && which != 2)) throw ArgumentError("planes live in six variables");
    return which == 1 ? variable_ideal(ring, {0, 1, 2}) : variable_ideal(ring, {3, 4, 5});
}

Mat6 standardizing_transform(const Field& field, const std::array<std::array<Elem, 6>, 3>& A1,
                             const std::array<std::array<Elem, 6>, 3>& A2) {
    Matrix m(field, 6, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            m.at(i, j) = A1[i][j];
            m.at(i + 3, j) = A2[i][j];
        }
    const auto inv = inverse(m);
    if (!inv) throw DegeneracyError("the planes are not disjoint");
    Mat6 B{};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) B[i][j] = inv->at(i, j);
    return B;
}

MultiPoly linear_substitution(const MultiPoly& g, const Mat6& B) {
    const RingPtr& ring = g.ring();
    if (ring->nvars() != 6) throw ArgumentError("expected six variables");
    std::array<MultiPoly, 6> image{MultiPoly(ring), MultiPoly(ring), MultiPoly(ring),
                                   MultiPoly(ring), MultiPoly(ring), MultiPoly(ring)};
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<Term> t;
        for (std::size_t j = 0; j < 6; ++j)
            if (B[i][j] != 0) t.push_back({Monomial::variable(j), B[i][j]});
        image[i] = MultiPoly::from_terms(ring, std::move(t));
    }
    MultiPoly out(ring);
    for (const auto& term : g.terms()) {
        MultiPoly p = MultiPoly::constant(ring, term.coeff);
        for (std::size_t i = 0; i < 6; ++i)
            if (term.mono[i]) p *= image[i].pow(term.mono[i]);
        out += p;
    }
    return out;
}

NetOfQuadrics NetOfQuadrics::from_quadrics(const std::array<MultiPoly, 3>& q) {
    const RingPtr& ring = q[0].ring();
    if (ring->nvars() != 6) throw ArgumentError("a net lives in six variables");
    NetOfQuadrics net{ring, q, {}};
    for (std::size_t k = 0; k < 3; ++k) {
        if (!(*q[k].ring() == *ring)) throw ArgumentError("quadrics from different rings");
        for (const auto& t : q[k].terms()) {
            const auto& m = t.mono;
            const bool ok = m.degree() == 2 && m[0] + m[1] + m[2] == 1 && m[3] + m[4] + m[5] == 1;
            if (!ok) throw ArgumentError("quadric " + std::to_string(k + 1) + " does not contain both planes");
        }
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                net.M[k][i][j] = q[k].coeff(Monomial::variable(i) * Monomial::variable(j + 3));
    }
    if (!independent(ring->field(), q)) throw ArgumentError("the quadrics are linearly dependent");
    return net;
}

NetOfQuadrics NetOfQuadrics::from_matrices(const Field& field, const std::array<Mat3, 3>& m) {
    const RingPtr ring = coordinate_ring(field);
    std::array<MultiPoly, 3> q{MultiPoly(ring), MultiPoly(ring), MultiPoly(ring)};
    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Term> t;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (m[k][i][j] != 0) t.push_back({Monomial::variable(i) * Monomial::variable(j + 3), m[k][i][j]});
        q[k] = MultiPoly::from_terms(ring, std::move(t));
    }
    return from_quadrics(q);
}

MultiPoly NetOfQuadrics::combination(const std::array<Elem, 3>& w) const {
    MultiPoly out(ring);
    for (std::size_t k = 0; k < 3; ++k)
        if (w[k] != 0) out += Q[k].scaled(w[k]);
    return out;
}

NetOfQuadrics random_net(std::uint32_t p, std::uint64_t seed) {
    if (!is_prime(p)) throw ArgumentError("p must be prime");
    const Field field = Field::prime(p);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::array<Mat3, 3> m{};
        for (auto& mk : m)
            for (auto& row : mk)
                for (auto& x : row) x = static_cast<Elem>(rng() % p);
        try {
            return NetOfQuadrics::from_matrices(field, m);
        } catch (const ArgumentError&) {
        }
    }
    throw DegeneracyError("no independent net found within the rejection budget");
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool all_passed(const std::vector<Check>& checks) {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

SurfaceT build_T(const NetOfQuadrics& net) {
    const RingPtr& R = net.ring;
    const Ideal P1 = plane_ideal(R, 1), P2 = plane_ideal(R, 2);
    const Ideal I = net.ideal();
    SurfaceT T{saturate(saturate(I, P1), P2), {}, {}, {}, {}, {}, {}, {}};
    T.hilbert = hilbert(T.ideal);
    T.generators = minimal_generators(T.ideal);
    std::vector<long long> degs;
    for (const auto& g : T.generators) degs.push_back(g.degree());
    for (unsigned d = 1; d <= 3; ++d) T.h0[d - 1] = graded_piece_dim(T.ideal, d);
    T.cubics = graded_piece_basis(T.ideal, 3);

    T.checks.push_back(make_check("T dimension and degree", T.hilbert.dim == 2 && T.hilbert.degree == 6,
                                  "dim " + std::to_string(T.hilbert.dim) + ", degree " + std::to_string(T.hilbert.degree)));
    T.checks.push_back(make_check("T minimal generator degrees", degs == std::vector<long long>{2, 2, 2, 3, 3}, join(degs)));
    T.checks.push_back(make_check("T h0 of twists 1..3", T.h0 == std::array<long long, 3>{0, 3, 20},
                                  join({T.h0[0], T.h0[1], T.h0[2]})));
    T.checks.push_back(timed_check("net splits as plane, T, plane", [&](std::string& d) {
        const Ideal inter = intersect(intersect(P1, T.ideal), P2);
        const bool ok = inter == I;
        d = ok ? "(Q1,Q2,Q3) = I_P1 cap I_T cap I_P2" : "intersection differs from the net ideal";
        return ok;
    }));
    const RingPtr base = base_ring(R->field());
    for (int side = 0; side < 2; ++side) {
        const std::string name = "E" + std::to_string(side + 1) + " smooth plane cubic of genus 1";
        T.checks.push_back(timed_check(name, [&](std::string& d) {
            const Ideal E = T.ideal + (side == 0 ? P1 : P2);
            const std::size_t off = side == 0 ? 3 : 0;
            std::vector<MultiPoly> rest;
            for (const auto& g : E.groebner())
                if (g.degree() > 1) rest.push_back(g);
            if (rest.size() != 1) {
                d = "boundary curve is not a plane curve";
                return false;
            }
            std::vector<int> img(6, -1);
            for (std::size_t i = 0; i < 3; ++i) img[off + i] = static_cast<int>(i);
            const MultiPoly g = map_variables(rest.front(), base, img);
            T.boundary[side] = g;
            const CurveInvariants ci = curve_invariants(E);
            T.boundary_invariants[side] = ci;
            const bool smooth = is_smooth(Ideal(base, {g}), 1);
            d = "(degree, genus) = " + join({ci.degree, ci.genus}) + (smooth ? ", smooth" : ", singular");
            return smooth && ci.degree == 3 && ci.genus == 1 && g.degree() == 3;
        }));
    }
    return T;
}

CubicFourfold make_cubic(const SurfaceT& T, const MultiPoly& f) {
    if (!T.ideal.contains(f)) throw ArgumentError("the cubic does not contain T");
    if (f.degree() != 3 || !f.is_homogeneous()) throw ArgumentError("not a cubic form");
    return {f, is_smooth(Ideal(f.ring(), {f}), 1)};
}

CubicFourfold random_cubic_through_T(const SurfaceT& T, std::uint64_t seed, int budget) {
    if (T.cubics.empty()) throw ArgumentError("T has no cubics");
    const RingPtr& R = T.ideal.ring();
    const Field& field = R->field();
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    for (int attempt = 0; attempt < budget; ++attempt) {
        MultiPoly f(R);
        for (const auto& c : T.cubics) f += c.scaled(static_cast<Elem>(rng() % field.order()));
        if (f.is_zero() || plane_ideal(R, 1).contains(f) || plane_ideal(R, 2).contains(f)) continue;
        CubicFourfold X = make_cubic(T, f);
        if (X.smooth) return X;
    }
    throw DegeneracyError("no smooth cubic through T within the retry budget");
}

std::size_t deformation_dim(const SurfaceT& T, const CubicFourfold& X) {
    if (!T.ideal.contains(X.f)) throw ArgumentError("T is not contained in X");
    return hom_dim_degree_zero(Ideal(T.ideal.ring(), T.generators), {X.f}).dim;
}

BasePoint::BasePoint(Field f, std::array<Elem, 3> c) : field(std::move(f)) {
    std::size_t k = 0;
    while (k < 3 && c[k] == 0) ++k;
    if (k == 3) throw ArgumentError("the zero vector is not a point");
    const Elem inv = field.inv(c[k]);
    for (std::size_t i = 0; i < 3; ++i) coords[i] = field.mul(c[i], inv);
}

std::string BasePoint::to_string() const {
    std::ostringstream os;
    os << '(' << coords[0] << ':' << coords[1] << ':' << coords[2] << ')';
    return os.str();
}

std::vector<BasePoint> projective_plane_points(const Field& field) {
    const Elem q = static_cast<Elem>(field.order());
    std::vector<BasePoint> pts;
    for (Elem b = 0; b < q; ++b)
        for (Elem c = 0; c < q; ++c) pts.emplace_back(field, std::array<Elem, 3>{1, b, c});
    for (Elem c = 0; c < q; ++c) pts.emplace_back(field, std::array<Elem, 3>{0, 1, c});
    pts.emplace_back(field, std::array<Elem, 3>{0, 0, 1});
    std::sort(pts.begin(), pts.end());
    return pts;
}

const char* to_string(FiberType t) {
    switch (t) {
        case FiberType::smooth: return "smooth";
        case FiberType::I: return "I";
        case FiberType::II: return "II";
        case FiberType::III: return "III";
        case FiberType::IV: return "IV";
        case FiberType::a1_singular: return "A1-singular";
        case FiberType::unresolved: return "unresolved";
    }
    return "?";
}

CurveMembership membership(const DiscriminantCurves& curves, const BasePoint& pt) {
    CurveMembership m;
    const std::span<const Elem> x(pt.coords);
    m.on_B_I = curves.B_I.equation().evaluate(x, pt.field) == 0;
    m.on_B_II = curves.B_II.equation().evaluate(x, pt.field) == 0;
    if (m.on_B_II) {
        m.cusp_of_B_II = true;
        for (std::size_t v = 0; v < 3; ++v)
            if (curves.B_II.equation().derivative(v).evaluate(x, pt.field) != 0) m.cusp_of_B_II = false;
    }
    return m;
}

FiberType expected_type(const CurveMembership& m) {
    if (m.on_B_I && m.on_B_II) return FiberType::III;
    if (m.on_B_I) return FiberType::I;
    if (m.cusp_of_B_II) return FiberType::IV;
    if (m.on_B_II) return FiberType::II;
    return FiberType::smooth;
}

FiberReport fiber_at(const Fibration& fib, const BasePoint& pt, const DiscriminantCurves* curves) {
    const Field& base_field = fib.net.ring->field();
    if (pt.field.characteristic() != base_field.characteristic())
        throw ArgumentError("base point over a field of another characteristic");
    const RingPtr R = pt.field == base_field ? fib.net.ring : fib.net.ring->with_field(pt.field);
    const auto [a, b, c] = pt.coords;
    const MultiPoly Q1 = mapped(fib.net.Q[0], R), Q2 = mapped(fib.net.Q[1], R), Q3 = mapped(fib.net.Q[2], R);
    std::vector<MultiPoly> gens{mapped(fib.X.f, R)};
    for (MultiPoly m : {Q1.scaled(b) - Q2.scaled(a), Q1.scaled(c) - Q3.scaled(a), Q2.scaled(c) - Q3.scaled(b)})
        if (!m.is_zero()) gens.push_back(std::move(m));
    const Ideal S = quotient(Ideal(R, std::move(gens)), mapped(fib.T.ideal, R)).reduced();

    FiberReport rep{pt, S, -1, 0, {}, FiberType::unresolved, std::nullopt, {}};
    const HilbertData h = hilbert(S);
    rep.dim = h.dim;
    rep.degree = h.degree;
    if (h.dim != 2 || h.degree != 6)
        throw DegeneracyError("fiber over " + pt.to_string() + " has dimension " + std::to_string(h.dim) +
                              " and degree " + std::to_string(h.degree));
    // The residual ideal is unmixed, so a plane component shows up as a
    // two-dimensional intersection with that plane.
    for (int side = 1; side <= 2; ++side)
        if (hilbert(S + plane_ideal(R, side)).dim >= 2)
            throw DegeneracyError("fiber over " + pt.to_string() + " contains a plane");
    rep.census = singularity_census(Ideal(R, minimal_generators(S)), 3);
    rep.type = census_type(rep.census);
    if (!rep.census.finite) rep.note = rep.census.error;
    if (curves) {
        rep.curves = membership(*curves, pt);
        if (rep.type == FiberType::a1_singular) {
            if (rep.curves->on_B_I && !rep.curves->on_B_II) rep.type = FiberType::I;
            else if (rep.curves->on_B_II && !rep.curves->on_B_I) rep.type = FiberType::II;
        }
    }
    return rep;
}

unsigned default_threads() {
    if (const char* env = std::getenv("DPK_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ScanReport fiber_scan(const Fibration& fib, unsigned k, const DiscriminantCurves* curves, unsigned threads) {
    if (k < 1 || k > 3) throw ArgumentError("extension degree must be 1, 2 or 3");
    const std::uint32_t p = fib.net.ring->field().characteristic();
    const Field field = k == 1 ? fib.net.ring->field() : Field::extension(p, k);
    const auto pts = projective_plane_points(field);
    std::vector<std::optional<FiberReport>> out(pts.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::size_t i = next++; i < pts.size(); i = next++) {
            try {
                out[i] = fiber_at(fib, pts[i], curves);
            } catch (const Error& e) {
                FiberReport r{pts[i], std::nullopt, -1, 0, {}, FiberType::unresolved, std::nullopt, e.what()};
                if (curves) r.curves = membership(*curves, pts[i]);
                out[i] = std::move(r);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads ? threads : default_threads(),
                                                       static_cast<unsigned>(pts.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    ScanReport rep;
    rep.extension_degree = k;
    for (auto& r : out) {
        ++rep.counts[to_string(r->type)];
        rep.fibers.push_back(std::move(*r));
    }
    if (curves) {
        for (const auto& r : rep.fibers) {
            const FiberType want = expected_type(*r.curves);
            if (r.type != want)
                rep.mismatches.push_back(r.point.to_string() + ": census " + census_string(r.census) + " gives " +
                                         to_string(r.type) + ", curves predict " + to_string(want));
        }
        rep.consistent = rep.mismatches.empty();
    }
    return rep;
}

PlaneCurve e3_curve(const NetOfQuadrics& net) {
    return PlaneCurve(determinant_curve(net.M, base_ring(net.ring->field())));
}

std::vector<Check> discriminant_checks(const DiscriminantCurves& c) {
    std::vector<Check> out;
    out.push_back(timed_check("B_I smooth sextic", [&](std::string& d) {
        const auto cs = singularity_census(c.B_I.ideal(), 1);
        d = "degree " + std::to_string(c.B_I.degree()) + ", census " + census_string(cs);
        return c.B_I.degree() == 6 && cs.smooth();
    }));
    out.push_back(timed_check("B_II sextic with nine cusps", [&](std::string& d) {
        const auto cs = singularity_census(c.B_II.ideal(), 1);
        d = "degree " + std::to_string(c.B_II.degree()) + ", census " + census_string(cs);
        return c.B_II.degree() == 6 && cs.finite && cs.scheme_degree == 18 && cs.radical_degree == 9;
    }));
    out.push_back(timed_check("B_I cap B_II reduced of degree 36", [&](std::string& d) {
        const Ideal J(c.B_I.equation().ring(), {c.B_I.equation(), c.B_II.equation()});
        const HilbertData h = hilbert(J);
        if (h.dim != 0) {
            d = "intersection of dimension " + std::to_string(h.dim);
            return false;
        }
        const auto pts = static_cast<long long>(projective_point_count(J));
        d = "degree " + std::to_string(h.degree) + ", points " + std::to_string(pts);
        return h.degree == 36 && pts == 36;
    }));
    return out;
}

DiscriminantResult discriminant_curves(const Fibration& fib, const DiscriminantOptions& opts) {
    const Field& field = fib.net.ring->field();
    const RingPtr base = base_ring(field);
    const PlaneCurve E3 = e3_curve(fib.net);
    const PlaneCurve B_II = dual_curve(E3);
    const MultiPoly B_II_eq = B_II.equation().monic();

    std::optional<MultiPoly> B_I;
    DiscriminantStrategy used = DiscriminantStrategy::lines;
    std::string fallback;
    if (opts.strategy == DiscriminantStrategy::elimination) {
        try {
            B_I = B_I_by_elimination(fib, B_II_eq, opts.elimination_pairs);
            used = DiscriminantStrategy::elimination;
        } catch (const ResourceError& e) {
            fallback = std::string("elimination over budget: ") + e.what();
        } catch (const GeometryError& e) {
            fallback = std::string("elimination failed: ") + e.what();
        }
    }
    std::size_t lines_used = 0;
    if (!B_I) {
        std::mt19937_64 rng(opts.seed);
        std::map<std::array<Elem, 3>, bool> smooth_cache;
        auto smooth_over = [&](const std::array<Elem, 3>& x) {
            const BasePoint pt(field, x);
            if (const auto it = smooth_cache.find(pt.coords); it != smooth_cache.end()) return it->second;
            bool ok = B_II_eq.evaluate(std::span<const Elem>(pt.coords)) != 0;
            if (ok) {
                try {
                    ok = fiber_at(fib, pt).census.smooth();
                } catch (const Error&) {
                    ok = false;
                }
            }
            return smooth_cache[pt.coords] = ok;
        };
        std::vector<std::pair<LineFrame, UniPoly>> data;
        std::string why;
        for (std::size_t tries = 0; tries < 4 * opts.max_lines && data.size() < opts.max_lines; ++tries) {
            const auto fr = random_line(rng, field, smooth_over);
            if (!fr) continue;
            auto P = B_I_on_line(fib, *fr, B_II_eq, rng, why);
            if (!P) continue;
            data.emplace_back(*fr, std::move(*P));
            if (data.size() < opts.min_lines) continue;
            const auto ker = line_system_kernel(base, data);
            if (ker.size() == 1) {
                B_I = sextic_from_kernel(base, ker.front());
                break;
            }
            // The newest line contradicts the others.
            if (ker.empty()) data.pop_back();
        }
        lines_used = data.size();
        if (!B_I) throw DegeneracyError("no sextic fits the critical values on the sampled lines" +
                                        (why.empty() ? std::string() : " (last: " + why + ")"));
    }
    DiscriminantResult res{{PlaneCurve(*B_I), PlaneCurve(B_II_eq)}, E3, used, fallback, lines_used, {}};
    res.checks = discriminant_checks(res.curves);
    return res;
}

TrisectionReport trisection_check(const Fibration& fib, const FiberReport& fiber) {
    if (!fiber.fiber || !fiber.census.smooth()) throw ArgumentError("trisection check needs a smooth fiber");
    const RingPtr& R = fiber.fiber->ring();
    const Ideal D = mapped(fib.T.ideal, R) + *fiber.fiber;
    TrisectionReport rep;
    rep.D = curve_invariants(D);
    for (int side = 1; side <= 2; ++side) {
        const HilbertData h = hilbert(D + plane_ideal(R, side));
        if (h.dim != 0) throw GeometryError("D meets a plane in dimension " + std::to_string(h.dim));
        rep.plane_degrees[side - 1] = h.degree;
    }
    return rep;
}

namespace {

Check trisection_on_scan(const Fibration& fib, const ScanReport& scan) {
    return timed_check("trisection D on a smooth fiber", [&](std::string& d) {
        for (const auto& r : scan.fibers) {
            if (r.type != FiberType::smooth) continue;
            const TrisectionReport t = trisection_check(fib, r);
            d = "over " + r.point.to_string() + ": (degree, genus) = " + join({t.D.degree, t.D.genus}) +
                ", plane degrees " + join({t.plane_degrees[0], t.plane_degrees[1]});
            return t.D.degree == 12 && t.D.genus == 7 && t.plane_degrees == std::array<long long, 2>{3, 3};
        }
        d = "no smooth fiber";
        return false;
    });
}

Check scan_check(std::string name, const ScanReport& scan) {
    std::ostringstream os;
    os << scan.fibers.size() << " points;";
    for (const auto& [k, v] : scan.counts) os << ' ' << k << '=' << v;
    for (std::size_t i = 0; i < scan.mismatches.size() && i < 5; ++i) os << "; " << scan.mismatches[i];
    return make_check(std::move(name), scan.consistent.value_or(false), os.str());
}

}  // namespace

TrialReport run_trial(std::uint32_t p, std::uint64_t seed, unsigned threads) {
    TrialReport rep;
    rep.p = p;
    rep.seed = seed;
    const auto t0 = Clock::now();
    auto finish = [&](std::string why) {
        rep.failure = std::move(why);
        rep.generic = rep.failure.empty() && all_passed(rep.checks);
        rep.seconds = seconds_since(t0);
        return rep;
    };
    try {
        const NetOfQuadrics net = random_net(p, seed);
        SurfaceT T = build_T(net);
        rep.checks.insert(rep.checks.end(), T.checks.begin(), T.checks.end());
        if (!T.generic()) return finish("T fails a structural check");
        const CubicFourfold X = random_cubic_through_T(T, seed);
        rep.checks.push_back(make_check("X smooth", X.smooth, ""));
        const Fibration fib{net, std::move(T), X};
        rep.checks.push_back(timed_check("deformation dimension 1", [&](std::string& d) {
            const auto n = deformation_dim(fib.T, fib.X);
            d = std::to_string(n);
            return n == 1;
        }));
        rep.checks.push_back(timed_check("E3 smooth cubic", [&](std::string& d) {
            const PlaneCurve E3 = e3_curve(net);
            d = "degree " + std::to_string(E3.degree());
            return E3.degree() == 3 && is_smooth(E3.ideal(), 1);
        }));
        if (!all_passed(rep.checks)) return finish("structural check failed");
        DiscriminantOptions dopts;
        dopts.seed = seed;
        const DiscriminantResult disc = discriminant_curves(fib, dopts);
        rep.checks.insert(rep.checks.end(), disc.checks.begin(), disc.checks.end());
        if (!all_passed(rep.checks)) return finish("discriminant check failed");
        rep.structural = true;
        const ScanReport scan = fiber_scan(fib, 1, &disc.curves, threads);
        rep.checks.push_back(scan_check("scan agrees with own discriminant curves", scan));
        rep.checks.push_back(trisection_on_scan(fib, scan));
        return finish(all_passed(rep.checks) ? "" : "scan or trisection check failed");
    } catch (const Error& e) {
        return finish(std::string("non-generic: ") + e.what());
    }
}

VerifyReport verify_example(const VerifyOptions& opts) {
    VerifyReport rep;
    auto& checks = rep.checks;
    const PolyData data = parse_poly_data(embedded_example_data());
    const PolyData printed = parse_poly_data(embedded_example_curves());
    const RingPtr& R = data.ring;
    const RingPtr base = base_ring(R->field());
    const std::vector<int> positional{0, 1, 2};
    const DiscriminantCurves printed_curves{PlaneCurve(map_variables(printed.get("BI"), base, positional)),
                                            PlaneCurve(map_variables(printed.get("BII"), base, positional))};

    std::optional<NetOfQuadrics> net;
    checks.push_back(timed_check("net contains both planes", [&](std::string& d) {
        net = NetOfQuadrics::from_quadrics({data.get("Q1"), data.get("Q2"), data.get("Q3")});
        d = "three independent quadrics in the span of x_i x_j, i < 3 <= j";
        return true;
    }));
    if (!net) return rep;

    const auto tT = Clock::now();
    SurfaceT T = build_T(*net);
    const double tT_secs = seconds_since(tT);
    for (auto c : T.checks) {
        if (c.seconds == 0) c.seconds = tT_secs;
        checks.push_back(std::move(c));
    }
    checks.push_back(timed_check("T generated by the net and the listed cubics", [&](std::string& d) {
        const Ideal listed(R, {data.get("Q1"), data.get("Q2"), data.get("Q3"), data.get("C1"), data.get("C2")});
        const bool ok = listed == T.ideal;
        d = ok ? "equal ideals" : "ideals differ";
        return ok;
    }));

    std::optional<CubicFourfold> X;
    checks.push_back(timed_check("X smooth and contains T", [&](std::string& d) {
        X = make_cubic(T, data.get("f"));
        d = X->smooth ? "smooth" : "singular";
        return X->smooth;
    }));
    if (!X) return rep;
    const Fibration fib{*net, std::move(T), *X};

    checks.push_back(timed_check("deformation dimension 1", [&](std::string& d) {
        const auto n = deformation_dim(fib.T, fib.X);
        d = std::to_string(n);
        return n == 1;
    }));
    checks.push_back(timed_check("det6 of the net is a square of det3", [&](std::string& d) {
        const bool ok = quadric_net_square_identity(net->Q, base);
        d = ok ? "holds" : "fails";
        return ok;
    }));
    checks.push_back(timed_check("E3 smooth cubic of genus 1", [&](std::string& d) {
        const PlaneCurve E3 = e3_curve(*net);
        const CurveInvariants ci = curve_invariants(E3.ideal());
        const bool smooth = is_smooth(E3.ideal(), 1);
        d = "(degree, genus) = " + join({ci.degree, ci.genus}) + (smooth ? ", smooth" : ", singular");
        return smooth && ci.degree == 3 && ci.genus == 1;
    }));
    for (auto c : discriminant_checks(printed_curves)) {
        c.name = "listed " + c.name;
        checks.push_back(std::move(c));
    }

    std::optional<DiscriminantResult> disc;
    checks.push_back(timed_check("discriminant curves computed", [&](std::string& d) {
        disc = discriminant_curves(fib);
        d = std::to_string(disc->lines_used) + " lines";
        return true;
    }));
    if (disc) {
        for (auto c : disc->checks) {
            c.name = "computed " + c.name;
            checks.push_back(std::move(c));
        }
        checks.push_back(make_check("dual of E3 has nine cusps", [&] {
            const auto cs = singularity_census(disc->curves.B_II.ideal(), 1);
            return cs.finite && cs.scheme_degree == 18 && cs.radical_degree == 9;
        }(), "census of dual(E3)"));
        const bool ii = disc->curves.B_II.equation().monic() == printed_curves.B_II.equation().monic();
        const bool i = disc->curves.B_I.equation().monic() == printed_curves.B_I.equation().monic();
        checks.push_back(make_check("computed B_II equals the listed sextic", ii,
                                    ii ? "equal up to a scalar" : "coefficients differ"));
        checks.push_back(make_check("computed B_I equals the listed sextic", i,
                                    i ? "equal up to a scalar" : "coefficients differ"));
    }

    const auto tS = Clock::now();
    const ScanReport scan = fiber_scan(fib, 1, &printed_curves, opts.threads);
    Check sc = scan_check("scan over F_5 agrees with the listed curves", scan);
    sc.seconds = seconds_since(tS);
    checks.push_back(std::move(sc));
    checks.push_back(make_check("scan covers every point of P2(F_5)", scan.fibers.size() == 31,
                                std::to_string(scan.fibers.size()) + " points"));
    if (disc) {
        std::size_t bad = 0;
        for (const auto& r : scan.fibers) {
            const FiberType want = expected_type(membership(disc->curves, r.point));
            if (want != r.type) ++bad;
        }
        checks.push_back(make_check("scan agrees with the computed curves", bad == 0,
                                    std::to_string(bad) + " mismatches"));
    }
    checks.push_back(trisection_on_scan(fib, scan));
    checks.push_back(make_check("Euler characteristic 27", euler_p2(6, 6, 9) == 27,
                                "euler_p2(6, 6, 9) = " + std::to_string(euler_p2(6, 6, 9))));

    if (opts.skip_elimination) {
        checks.push_back(Check{"B_I by full elimination", CheckStatus::skipped, "skipped on request", 0});
    } else {
        const auto tE = Clock::now();
        Check c{"B_I by full elimination", CheckStatus::skipped, "", 0};
        try {
            const MultiPoly B_I = B_I_by_elimination(fib, printed_curves.B_II.equation().monic(), opts.elimination_pairs);
            const bool ok = B_I == printed_curves.B_I.equation().monic();
            c.status = ok ? CheckStatus::pass : CheckStatus::fail;
            c.details = ok ? "eliminant residual equals the listed B_I" : "eliminant residual differs";
        } catch (const ResourceError& e) {
            c.details = std::string("over the pair budget: ") + e.what();
        } catch (const Error& e) {
            c.status = CheckStatus::fail;
            c.details = e.what();
        }
        c.seconds = seconds_since(tE);
        checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace dpk
