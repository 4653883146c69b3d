#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dpk/graded.hpp"
#include "dpk/groebner.hpp"
#include "dpk/ideal_ops.hpp"
#include "dpk/lattice.hpp"
#include "dpk/linalg.hpp"
#include "support.hpp"

namespace dpk::props {

namespace {

using testing::random_elem;
using testing::random_form;
using testing::random_poly;
using testing::Rng;

RingPtr ring_over(const Field& f, std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w", "u", "v"};
    return Ring::make(f, std::vector<std::string>(names, names + n));
}

Field pick_field(Rng& rng) {
    switch (rng() % 3) {
        case 0: return Field::prime(5);
        case 1: return Field::prime(7);
        default: return Field::extension(5, 2);
    }
}

std::string describe(const std::vector<MultiPoly>& gens) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].to_string();
    os << ")";
    return os.str();
}

// A small random ideal: homogeneous in four variables or arbitrary in three.
std::vector<MultiPoly> random_generators(const RingPtr& ring, Rng& rng, bool homogeneous) {
    const std::size_t k = 2 + rng() % 3;
    std::vector<MultiPoly> g;
    for (std::size_t i = 0; i < k; ++i) {
        const unsigned d = 1 + static_cast<unsigned>(rng() % 3);
        g.push_back(homogeneous ? random_form(ring, d, rng, 0.6) : random_poly(ring, d, rng, 0.4));
    }
    return g;
}

}  // namespace

Outcome gb_permutation_uniqueness(std::size_t trials, std::uint64_t seed) {
    Outcome o{"reduced basis independent of generator order and scaling"};
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const bool hom = t % 2 == 0;
        const Field f = pick_field(rng);
        const RingPtr ring = ring_over(f, hom ? 4 : 3);
        auto gens = random_generators(ring, rng, hom);
        const Ideal I(ring, gens);
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& g : shuffled) g = g.scaled(random_elem(f, rng, true));
        const Ideal J(ring, shuffled);
        ++o.cases;
        if (I.groebner() != J.groebner()) {
            o.failure = "different reduced bases for " + describe(gens);
            return o;
        }
    }
    return o;
}

Outcome saturation_idempotence(std::size_t trials, std::uint64_t seed) {
    Outcome o{"saturation is idempotent"};
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const Field f = pick_field(rng);
        const RingPtr ring = ring_over(f, 4);
        // Embed a component along J so that saturating does something.
        const Ideal base(ring, {random_form(ring, 2, rng, 0.5), random_form(ring, 2, rng, 0.5)});
        const Ideal J(ring, {random_form(ring, 1, rng), random_form(ring, 1, rng)});
        const Ideal I = intersect(base, J * J);
        const Ideal S = saturate(I, J);
        const Ideal SS = saturate(S, J);
        ++o.cases;
        if (S.groebner() != SS.groebner()) {
            o.failure = "saturating twice by an ideal changed " + describe(I.generators());
            return o;
        }
        const MultiPoly h = random_form(ring, 1, rng);
        const Ideal P = quotient(base * Ideal(ring, {h * h}), h);
        const Ideal Sp = saturate(P, h);
        ++o.cases;
        if (Sp.groebner() != saturate(Sp, h).groebner()) {
            o.failure = "saturating twice by a polynomial changed " + describe(P.generators());
            return o;
        }
    }
    return o;
}

Outcome membership_two_orders(std::size_t trials, std::uint64_t seed) {
    Outcome o{"membership agrees between grevlex and lex"};
    Rng rng(seed);
    const MonomialOrder lex = MonomialOrder::lex();
    for (std::size_t t = 0; t < trials; ++t) {
        const Field f = pick_field(rng);
        const RingPtr ring = ring_over(f, 3);
        const bool hom = rng() % 2 == 0;
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(hom ? random_form(ring, 2, rng, 0.6) : random_poly(ring, 2, rng, 0.5));
        const Ideal I(ring, gens);
        MultiPoly member(ring);
        for (const auto& g : gens) member += random_poly(ring, 2, rng, 0.5) * g;
        const MultiPoly other = member + random_poly(ring, 3, rng, 0.3);
        for (const auto& p : {member, other}) {
            ++o.cases;
            const bool a = I.normal_form(p).is_zero();
            const bool b = I.normal_form(p, lex).is_zero();
            if (a != b) {
                o.failure = "orders disagree on " + p.to_string() + " in " + describe(gens);
                return o;
            }
        }
        if (!I.contains(member)) {
            o.failure = "explicit combination not recognized as a member of " + describe(gens);
            return o;
        }
    }
    return o;
}

Outcome complete_intersection_degree(std::size_t trials, std::uint64_t seed) {
    Outcome o{"complete intersection degree is the product of degrees"};
    Rng rng(seed);
    const RingPtr ring = ring_over(Field::prime(5), 6);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t c = 1 + t % 3;
        std::vector<MultiPoly> gens;
        long long expected = 1;
        for (std::size_t i = 0; i < c; ++i) {
            const unsigned d = 1 + static_cast<unsigned>(rng() % 3);
            gens.push_back(random_form(ring, d, rng));
            expected *= d;
        }
        const HilbertData h = hilbert(Ideal(ring, gens));
        ++o.cases;
        if (h.dim != static_cast<int>(5 - c) || h.degree != expected) {
            o.failure = "dim " + std::to_string(h.dim) + ", degree " + std::to_string(h.degree) + " for " +
                        describe(gens);
            return o;
        }
    }
    return o;
}

Outcome hilbert_function_complement(std::size_t trials, std::uint64_t seed) {
    Outcome o{"graded piece plus Hilbert function fills R_d"};
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const Field f = pick_field(rng);
        const std::size_t n = 3 + t % 3;
        const RingPtr ring = ring_over(f, n);
        const Ideal I(ring, random_generators(ring, rng, true));
        const HilbertData h = hilbert(I);
        for (unsigned d = 0; d <= 6; ++d) {
            ++o.cases;
            const long long total = binomial(static_cast<long long>(n) - 1 + d, d);
            if (graded_piece_dim(I, d) + h.hilbert_function(d) != total) {
                o.failure = "degree " + std::to_string(d) + " of " + describe(I.generators());
                return o;
            }
        }
    }
    return o;
}

Outcome brute_force_membership(std::size_t trials, std::uint64_t seed) {
    Outcome o{"Groebner membership matches linear algebra in degrees <= 6"};
    Rng rng(seed);
    const Field f = Field::prime(5);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 1 + t % 3;
        const RingPtr ring = ring_over(f, n);
        std::vector<MultiPoly> gens;
        const std::size_t k = 1 + rng() % 3;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(random_form(ring, static_cast<unsigned>(1 + rng() % 2), rng, 0.7));
        const Ideal I(ring, gens);
        const HilbertData h = hilbert(I);
        for (unsigned d = 0; d <= 6; ++d) {
            const MonomialBasis basis(n, d);
            IncrementalEchelon span(f, basis.size());
            for (const auto& g : gens) {
                if (static_cast<unsigned>(g.degree()) > d) continue;
                for (const auto& m : monomials_of_degree(n, d - static_cast<unsigned>(g.degree()))) span.add(basis.coords(g.times_term(m, 1)));
            }
            ++o.cases;
            const long long in_degree = static_cast<long long>(span.rank());
            if (graded_piece_dim(I, d) != in_degree ||
                h.hilbert_function(d) != static_cast<long long>(basis.size()) - in_degree) {
                o.failure = "dimension of degree " + std::to_string(d) + " piece of " + describe(gens);
                return o;
            }
            for (int s = 0; s < 4; ++s) {
                MultiPoly p = random_form(ring, d, rng, 0.5);
                if (s % 2 == 0) {
                    p = MultiPoly(ring);
                    for (const auto& g : gens)
                        if (static_cast<unsigned>(g.degree()) <= d) p += random_form(ring, d - static_cast<unsigned>(g.degree()), rng) * g;
                    if (p.is_zero()) continue;
                }
                auto v = basis.coords(p);
                span.reduce(v);
                const bool by_linear_algebra = std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
                ++o.cases;
                if (by_linear_algebra != I.contains(p)) {
                    o.failure = "membership of " + p.to_string() + " in " + describe(gens);
                    return o;
                }
            }
        }
    }
    return o;
}

std::vector<Outcome> engine_suite() {
    return {gb_permutation_uniqueness(100, 11), saturation_idempotence(20, 12), membership_two_orders(60, 13),
            complete_intersection_degree(30, 14), hilbert_function_complement(30, 15),
            brute_force_membership(60, 16)};
}

Outcome gram_delta_exhaustive(long long bound) {
    Outcome o{"det gram_K(a, b) equals delta(a, b)"};
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b) {
            ++o.cases;
            if (determinant(gram_K(a, b).gram()) != delta(a, b)) {
                o.failure = "(a, b) = (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                return o;
            }
        }
    return o;
}

Outcome normalize_exhaustive(long long bound) {
    Outcome o{"normalization keeps delta and parity"};
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b) {
            ++o.cases;
            const auto [a2, b2] = normalize_sigma(a, b);
            const bool ok = a2 >= -1 && a2 <= 1 && (a - a2) % 3 == 0 && delta(a2, b2) == delta(a, b) &&
                            ((a - b) - (a2 - b2)) % 2 == 0;
            if (!ok) {
                o.failure = "(a, b) = (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                return o;
            }
        }
    return o;
}

Outcome enumeration_up_to(long long max) {
    Outcome o{"admissible discriminants are 9 mod 12 with unique witnesses"};
    const DeltaEnumeration e = admissible_discriminants(max);
    std::vector<long long> expected;
    for (long long d = 9; d <= max; d += 12) expected.push_back(d);
    std::vector<long long> got;
    for (const auto& v : e.values) got.push_back(v.delta);
    if (got != expected) {
        o.failure = "enumeration lists " + std::to_string(got.size()) + " values, expected " +
                    std::to_string(expected.size());
        return o;
    }
    if (!e.small_delta_warning) {
        o.failure = "small discriminant warning missing";
        return o;
    }
    for (const auto& v : e.values) {
        ++o.cases;
        // Independent count of normalized witnesses.
        std::size_t witnesses = 0;
        for (long long a = -1; a <= 1; ++a)
            for (long long b = -2 * max; b <= 2 * max; ++b)
                if ((a - b) % 2 == 0 && delta(a, b) == v.delta) ++witnesses;
        if (witnesses != 1 || delta(v.a, v.b) != v.delta || (v.a - v.b) % 2 != 0 || v.a < -1 || v.a > 1) {
            o.failure = "witness of " + std::to_string(v.delta);
            return o;
        }
    }
    return o;
}

Outcome smith_certificates(std::size_t trials, std::uint64_t seed) {
    Outcome o{"Smith normal form certificates"};
    Rng rng(seed);
    std::uniform_int_distribution<int> size(1, 8), entry(-9, 9);
    for (std::size_t t = 0; t < trials; ++t) {
        const int r = size(rng), c = size(rng);
        std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng);
        const IntMatrix m = int_matrix(rows);
        const SmithForm s = smith_normal_form(m);
        ++o.cases;
        bool ok = verify_smith(m, s) && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1 &&
                  s.diagonal.size() == static_cast<std::size_t>(std::min(r, c));
        for (std::size_t i = 0; ok && i < s.diagonal.size(); ++i) {
            ok = s.diagonal[i] >= 0;
            if (ok && i + 1 < s.diagonal.size() && s.diagonal[i] != 0)
                ok = s.diagonal[i + 1] % s.diagonal[i] == 0;
            if (ok && i + 1 < s.diagonal.size() && s.diagonal[i] == 0) ok = s.diagonal[i + 1] == 0;
        }
        if (ok && r == c) {
            Int prod = 1;
            for (const auto& d : s.diagonal) prod *= d;
            ok = prod == abs(determinant(m));
        }
        if (!ok) {
            o.failure = "trial " + std::to_string(t) + " (" + std::to_string(r) + "x" + std::to_string(c) + ")";
            return o;
        }
    }
    return o;
}

Outcome square_six_discriminant_group() {
    Outcome o{"complement of a square-6 vector has group Z/3 + Z/6"};
    const DiscriminantWitness w = square_six_complement_witness();
    o.cases = 1;
    Int order = 1;
    for (const auto& d : w.group) order *= d;
    const bool ok = w.ambient.product(w.vector, w.vector) == 6 && w.ambient.divisibility(w.vector) == 1 &&
                    w.complement.rank() == 21 && w.complement.is_even() && w.group == IntVector{3, 6} &&
                    order == abs(w.complement.determinant()) && discriminant_group(w.complement) == w.group;
    if (!ok) o.failure = "witness group or invariants differ";
    return o;
}

std::vector<Outcome> lattice_suite() {
    return {gram_delta_exhaustive(20), normalize_exhaustive(20), enumeration_up_to(200),
            smith_certificates(1000, 21), square_six_discriminant_group()};
}

Outcome euler_agreement(long long max_degree) {
    Outcome o{"Euler characteristic over P2 agrees with the strata sum"};
    for (long long dI = 1; dI <= max_degree; ++dI)
        for (long long dII = 1; dII <= max_degree; ++dII)
            for (long long bIV = 0; bIV <= (dII - 1) * (dII - 2) / 2; ++bIV) {
                ++o.cases;
                const FibrationNumerology n = strata_p2(dI, dII, bIV);
                // Strata by hand: chi of a smooth curve, of a cuspidal curve via its
                // normalization, transverse intersection points, and the cusps.
                const long long chi_BI = 2 - (dI - 1) * (dI - 2);
                const long long g_norm = (dII - 1) * (dII - 2) / 2 - bIV;
                const long long chi_BII = 2 - 2 * g_norm;
                const long long b3 = dI * dII;
                const long long manual = 6 * (3 - chi_BI - chi_BII + b3) + 5 * (chi_BI - b3) +
                                         5 * (chi_BII - b3 - bIV) + 4 * b3 + 4 * bIV;
                if (n.b_III != b3 || euler_general(3, n) != euler_p2(dI, dII, bIV) ||
                    euler_p2(dI, dII, bIV) != manual) {
                    o.failure = "(d_I, d_II, b_IV) = (" + std::to_string(dI) + ", " + std::to_string(dII) + ", " +
                                std::to_string(bIV) + ")";
                    return o;
                }
            }
    return o;
}

}  // namespace dpk::props
