#include <gtest/gtest.h>

#include <random>

#include "dpk/errors.hpp"
#include "dpk/field.hpp"
#include "dpk/linalg.hpp"
#include "dpk/parse.hpp"
#include "dpk/poly.hpp"
#include "dpk/univariate.hpp"
#include "support.hpp"

using namespace dpk;
using dpk::testing::random_elem;
using dpk::testing::random_poly;
using dpk::testing::Rng;

namespace {

std::vector<Field> sample_fields() { return {Field::prime(5), Field::prime(7), Field::extension(5, 2)}; }

RingPtr xyz(const Field& f) { return Ring::make(f, {"x", "y", "z"}); }

}  // namespace

TEST(Field, AxiomsOnRandomTriples) {
    Rng rng(1);
    for (const Field& f : sample_fields()) {
        for (int i = 0; i < 2000; ++i) {
            const Elem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
            ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_EQ(f.add(a, f.neg(a)), 0u);
            ASSERT_EQ(f.mul(a, b), f.mul(b, a));
            if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
        }
    }
}

TEST(Field, ExtensionStructure) {
    const Field f = Field::extension(5, 2);
    EXPECT_EQ(f.order(), 25u);
    EXPECT_TRUE(is_irreducible_mod_p(f.modulus(), 5));
    // Prime-subfield elements keep their codes.
    for (Elem a = 0; a < 5; ++a)
        for (Elem b = 0; b < 5; ++b) EXPECT_EQ(f.mul(a, b), Field::prime(5).mul(a, b));
    // The multiplicative group is cyclic of order 24: a^24 = 1, and some element has order 24.
    bool primitive = false;
    for (Elem a = 1; a < 25; ++a) {
        EXPECT_EQ(f.pow(a, 24), 1u);
        bool full = true;
        for (unsigned d : {2u, 3u}) full = full && f.pow(a, 24 / d) != 1;
        primitive = primitive || full;
        EXPECT_EQ(f.pow(f.frobenius_root(a), 5), a);
    }
    EXPECT_TRUE(primitive);
}

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(Field::prime(4), ArgumentError);
    EXPECT_THROW(Field::extension(5, 5), ArgumentError);
    EXPECT_THROW(Field::prime(5).inv(0), DomainError);
}

TEST(Poly, RingLaws) {
    Rng rng(2);
    for (const Field& f : sample_fields()) {
        const RingPtr r = xyz(f);
        for (int i = 0; i < 60; ++i) {
            const MultiPoly a = random_poly(r, 3, rng), b = random_poly(r, 3, rng), c = random_poly(r, 2, rng);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_TRUE((a - a).is_zero());
            if (!a.is_zero() && !b.is_zero()) ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
        }
    }
}

TEST(Poly, CanonicalTerms) {
    Rng rng(3);
    const RingPtr r = xyz(Field::prime(7));
    for (int i = 0; i < 100; ++i) {
        const MultiPoly p = random_poly(r, 4, rng) * random_poly(r, 2, rng);
        for (std::size_t k = 0; k < p.terms().size(); ++k) {
            ASSERT_NE(p.terms()[k].coeff, 0u);
            if (k > 0) ASSERT_GT(r->compare(p.terms()[k - 1].mono, p.terms()[k].mono), 0);
        }
    }
    EXPECT_TRUE(MultiPoly(r).terms().empty());
}

TEST(Poly, FrobeniusIsAdditive) {
    Rng rng(4);
    for (const std::uint32_t p : {5u, 7u}) {
        const RingPtr r = xyz(Field::prime(p));
        for (int i = 0; i < 30; ++i) {
            const MultiPoly a = random_poly(r, 2, rng), b = random_poly(r, 2, rng);
            ASSERT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
        }
    }
}

TEST(Poly, DerivativeLeibniz) {
    Rng rng(5);
    const RingPtr r = xyz(Field::extension(5, 2));
    for (int i = 0; i < 40; ++i) {
        const MultiPoly a = random_poly(r, 3, rng), b = random_poly(r, 3, rng);
        for (std::size_t v = 0; v < 3; ++v)
            ASSERT_EQ((a * b).derivative(v), a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST(Parse, RoundTrip) {
    Rng rng(6);
    for (const Field& f : sample_fields()) {
        const RingPtr r = xyz(f);
        for (int i = 0; i < 100; ++i) {
            const MultiPoly p = random_poly(r, 4, rng);
            const std::string s = p.to_string();
            const MultiPoly q = parse_poly(s, r);
            ASSERT_EQ(p, q) << s;
            ASSERT_EQ(q.to_string(), s);
        }
    }
}

TEST(Parse, ArithmeticAndReduction) {
    const RingPtr r = xyz(Field::prime(5));
    EXPECT_EQ(parse_poly("(x+y)^2 - x^2 - y^2", r), parse_poly("2*x*y", r));
    EXPECT_EQ(parse_poly("7*x - -3*y", r), parse_poly("2*x + 3*y", r));
    EXPECT_TRUE(parse_poly("5*x*y*z", r).is_zero());
    const RingPtr r25 = xyz(Field::extension(5, 2));
    const MultiPoly t = parse_poly("t", r25);
    EXPECT_TRUE(t.is_constant());
    const auto& mod = r25->field().modulus();
    // t satisfies its modulus.
    const MultiPoly rel = parse_poly("t^2", r25) + t.scaled(mod[1]) + MultiPoly::constant(r25, mod[0]);
    EXPECT_TRUE(rel.is_zero());
}

TEST(Parse, ErrorsCarryPositions) {
    const RingPtr r = xyz(Field::prime(5));
    try {
        parse_poly("x + q", r);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_poly("(x + y", r), ParseError);
    EXPECT_THROW(parse_poly("x^", r), ParseError);
    EXPECT_THROW(parse_poly_data("Q = x\n"), ParseError);
    EXPECT_THROW(parse_poly_data("p=6 vars=x\nf = x\n"), ArgumentError);
}

TEST(Parse, DataFileRoundTrip) {
    const PolyData d = parse_poly_data("# comment\np=7 vars=a,b\n\nf = a^2 + 3*b\ng = a*b - 1\n");
    ASSERT_EQ(d.entries.size(), 2u);
    EXPECT_TRUE(d.has("g"));
    EXPECT_THROW(d.get("h"), ArgumentError);
    const PolyData e = parse_poly_data(format_poly_data(d));
    EXPECT_EQ(e.get("f"), d.get("f").in_ring(e.ring));
    EXPECT_EQ(e.get("g"), d.get("g").in_ring(e.ring));
}

TEST(Univariate, GcdAndSquarefree) {
    const Field f = Field::prime(7);
    const UniPoly a{f, {1, 1}};      // 1 + t
    const UniPoly b{f, {6, 0, 1}};   // t^2 - 1
    const UniPoly g = uni_gcd(a, b);
    EXPECT_EQ(g.c, (std::vector<Elem>{1, 1}));
    const UniPoly sq = uni_mul(uni_mul(a, a), b);
    const UniPoly s = uni_squarefree(sq);
    EXPECT_EQ(s.degree(), 2);
    EXPECT_TRUE(uni_divmod(b, s).second.is_zero());
}

TEST(Linalg, InverseAndCharacteristicPolynomial) {
    Rng rng(7);
    for (const Field& f : sample_fields()) {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + trial % 6;
            Matrix m(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_elem(f, rng);
            const auto inv = inverse(m);
            ASSERT_EQ(inv.has_value(), m.rank() == n);
            if (inv) {
                const Matrix id = m * *inv;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(id.at(i, j), i == j ? 1u : 0u);
            }
            // Cayley-Hamilton.
            const UniPoly chi = characteristic_polynomial(m);
            ASSERT_EQ(chi.degree(), static_cast<int>(n));
            ASSERT_EQ(chi.c.back(), 1u);
            Matrix acc(f, n, n), power(f, n, n);
            for (std::size_t i = 0; i < n; ++i) power.at(i, i) = 1;
            for (std::size_t k = 0; k < chi.c.size(); ++k) {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        acc.at(i, j) = f.add(acc.at(i, j), f.mul(chi.c[k], power.at(i, j)));
                power = power * m;
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(acc.at(i, j), 0u);
        }
    }
}

TEST(Linalg, KernelIsAnnihilated) {
    Rng rng(8);
    const Field f = Field::prime(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 7;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_elem(f, rng);
        const auto ker = m.kernel();
        ASSERT_EQ(ker.size() + m.rank(), c);
        for (const auto& v : ker)
            for (std::size_t i = 0; i < r; ++i) {
                Elem s = 0;
                for (std::size_t j = 0; j < c; ++j) s = f.add(s, f.mul(m.at(i, j), v[j]));
                ASSERT_EQ(s, 0u);
            }
    }
}
