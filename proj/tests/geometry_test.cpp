#include <gtest/gtest.h>

#include "dpk/errors.hpp"
#include "dpk/geometry.hpp"
#include "dpk/graded.hpp"
#include "dpk/linalg.hpp"
#include "dpk/parse.hpp"
#include "support.hpp"

using namespace dpk;
using dpk::testing::random_elem;
using dpk::testing::random_form;
using dpk::testing::Rng;

namespace {

// f(A x) for a square matrix A given row by row.
MultiPoly transform(const MultiPoly& f, const std::vector<std::vector<Elem>>& A) {
    const RingPtr& r = f.ring();
    std::vector<MultiPoly> lin;
    for (const auto& row : A) {
        std::vector<Term> t;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) t.push_back({Monomial::variable(j), row[j]});
        lin.push_back(MultiPoly::from_terms(r, std::move(t)));
    }
    MultiPoly out(r);
    for (const auto& term : f.terms()) {
        MultiPoly m = MultiPoly::constant(r, term.coeff);
        for (std::size_t i = 0; i < r->nvars(); ++i)
            if (term.mono[i]) m *= lin[i].pow(term.mono[i]);
        out += m;
    }
    return out;
}

std::vector<std::vector<Elem>> random_invertible(const Field& f, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m(f, n, n);
        std::vector<std::vector<Elem>> a(n, std::vector<Elem>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a[i][j] = random_elem(f, rng);
        if (m.rank() == n) return a;
    }
}

RingPtr plane(std::uint32_t p) { return Ring::make(Field::prime(p), {"x", "y", "z"}); }

}  // namespace

TEST(Geometry, SmoothnessInvariantUnderCoordinateChange) {
    Rng rng(31);
    const Field f = Field::prime(5);
    const RingPtr r = Ring::make(f, {"x0", "x1", "x2", "x3", "x4", "x5"});
    const std::vector<MultiPoly> quadrics{
        parse_poly("x0*x1 + x2*x3 + x4*x5", r),        // smooth
        parse_poly("x0*x1 + x2*x3 + x4^2", r),         // cone over a point
        parse_poly("x0^2 + x1^2 + x2*x3 - x4*x5", r),  // smooth
    };
    for (const auto& q : quadrics) {
        const bool base = is_smooth(Ideal(r, {q}), 1);
        for (int i = 0; i < 5; ++i) {
            const MultiPoly g = transform(q, random_invertible(f, 6, rng));
            EXPECT_EQ(is_smooth(Ideal(r, {g}), 1), base) << q.to_string();
        }
    }
    EXPECT_TRUE(is_smooth(Ideal(r, {quadrics[0]}), 1));
    EXPECT_FALSE(is_smooth(Ideal(r, {quadrics[1]}), 1));
}

TEST(Geometry, CensusOfPlaneCubics) {
    const RingPtr r = plane(7);
    const auto smooth = singularity_census(Ideal(r, {parse_poly("x^3 + y^3 + z^3", r)}), 1);
    EXPECT_TRUE(smooth.smooth());
    const auto nodal = singularity_census(Ideal(r, {parse_poly("y^2*z - x^3 - x^2*z", r)}), 1);
    EXPECT_EQ(nodal.scheme_degree, 1);
    EXPECT_EQ(nodal.radical_degree, 1);
    const auto cusp = singularity_census(Ideal(r, {parse_poly("y^2*z - x^3", r)}), 1);
    EXPECT_EQ(cusp.scheme_degree, 2);
    EXPECT_EQ(cusp.radical_degree, 1);
    const auto lines = singularity_census(Ideal(r, {parse_poly("x*y*z", r)}), 1);
    EXPECT_EQ(lines.scheme_degree, 3);
    EXPECT_EQ(lines.radical_degree, 3);
    const auto doubled = singularity_census(Ideal(r, {parse_poly("x^2*y", r)}), 1);
    EXPECT_FALSE(doubled.finite);
}

TEST(Geometry, SmoothCurveGenus) {
    Rng rng(32);
    const RingPtr r = plane(7);
    for (unsigned d = 1; d <= 6; ++d) {
        int seen = 0;
        for (int tries = 0; seen < 2 && tries < 40; ++tries) {
            const MultiPoly f = random_form(r, d, rng);
            const Ideal C(r, {f});
            if (!is_smooth(C, 1)) continue;
            ++seen;
            const CurveInvariants inv = curve_invariants(C);
            EXPECT_EQ(inv.degree, static_cast<long long>(d));
            EXPECT_EQ(inv.genus, static_cast<long long>((d - 1) * (d - 2) / 2));
            EXPECT_TRUE(singularity_census(C, 1).smooth());
        }
        EXPECT_EQ(seen, 2) << "no smooth curve of degree " << d;
    }
}

TEST(Geometry, DualCurveDegrees) {
    Rng rng(33);
    const RingPtr r = plane(7);
    for (unsigned d : {2u, 3u}) {
        for (int found = 0, tries = 0; found < 2 && tries < 40; ++tries) {
            const MultiPoly f = random_form(r, d, rng);
            if (!is_smooth(Ideal(r, {f}), 1)) continue;
            ++found;
            EXPECT_EQ(dual_curve(PlaneCurve(f)).degree(), d * (d - 1));
        }
    }
    // The dual of a smooth cubic has nine cusps and no other singularities.
    const PlaneCurve fermat(parse_poly("x^3 + y^3 + z^3 + 3*x*y*z", r));
    const auto c = singularity_census(dual_curve(fermat).ideal(), 1);
    EXPECT_EQ(c.scheme_degree, 18);
    EXPECT_EQ(c.radical_degree, 9);
}

TEST(Geometry, DualOfDualIsTheCurve) {
    const RingPtr r = plane(5);
    for (const char* eq : {"x*z - y^2", "x^3 + y^3 + z^3 + x*y*z"}) {
        const MultiPoly f = parse_poly(eq, r);
        EXPECT_EQ(dual_curve(dual_curve(PlaneCurve(f))).equation(), f.monic()) << eq;
    }
}

TEST(Geometry, SquarefreePart) {
    const RingPtr r = plane(5);
    const MultiPoly g = parse_poly("x^2 + y*z", r);
    const MultiPoly h = parse_poly("x - 2*y", r);
    EXPECT_EQ(squarefree_polynomial(g * g * h), (g * h).monic());
    EXPECT_EQ(squarefree_polynomial(h.pow(5) * g), (g * h).monic());
}

TEST(Geometry, DeterminantCurveChangeOfBasis) {
    Rng rng(34);
    const Field f = Field::prime(7);
    const RingPtr abc = plane(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::array<Mat3, 3> m{};
        for (auto& mk : m)
            for (auto& row : mk)
                for (auto& e : row) e = random_elem(f, rng);
        const auto G = random_invertible(f, 3, rng);
        std::array<Mat3, 3> m2{};
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 3; ++l)
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        m2[k][i][j] = f.add(m2[k][i][j], f.mul(G[k][l], m[l][i][j]));
        // sum_k w_k M'_k = sum_l (G^T w)_l M_l.
        std::vector<std::vector<Elem>> Gt(3, std::vector<Elem>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) Gt[i][j] = G[j][i];
        MultiPoly d1(abc), d2(abc);
        try {
            d1 = determinant_curve(m, abc);
        } catch (const DegeneracyError&) {
            continue;
        }
        d2 = determinant_curve(m2, abc);
        EXPECT_EQ(d2, transform(d1, Gt));
    }
}

TEST(Geometry, SquareIdentityForNetThroughPlanes) {
    const RingPtr r = Ring::make(Field::prime(5), {"x0", "x1", "x2", "x3", "x4", "x5"});
    const RingPtr abc = plane(5);
    Rng rng(35);
    for (int trial = 0; trial < 5; ++trial) {
        std::array<MultiPoly, 3> q{MultiPoly(r), MultiPoly(r), MultiPoly(r)};
        for (auto& qk : q)
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 3; j < 6; ++j)
                    qk += MultiPoly::monomial(r, Monomial::variable(i) * Monomial::variable(j),
                                              random_elem(r->field(), rng));
        EXPECT_TRUE(quadric_net_square_identity(q, abc));
    }
}

TEST(Geometry, MinorsAndJacobian) {
    const RingPtr r = plane(7);
    const PolyMatrix m{{parse_poly("x", r), parse_poly("y", r), parse_poly("z", r)},
                       {parse_poly("y", r), parse_poly("z", r), parse_poly("x", r)}};
    EXPECT_EQ(minors(m, 2).size(), 3u);
    EXPECT_EQ(determinant({{parse_poly("x", r), parse_poly("y", r)}, {parse_poly("z", r), parse_poly("x", r)}}),
              parse_poly("x^2 - y*z", r));
    const PolyMatrix j = jacobian({parse_poly("x^2*y + z^3", r)});
    EXPECT_EQ(j[0][0], parse_poly("2*x*y", r));
    EXPECT_EQ(j[0][2], parse_poly("3*z^2", r));
}
