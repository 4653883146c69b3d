#include "dpk/syzygy.hpp"

#include <algorithm>
#include <unordered_map>

#include "dpk/graded.hpp"
#include "dpk/linalg.hpp"

namespace dpk {

namespace {

// Column layout of the degree-D map (h_i) -> sum h_i g_i.
struct Columns {
    std::vector<std::pair<std::size_t, Monomial>> cols;  // (generator, multiplier)
    std::unordered_map<std::size_t, std::unordered_map<Monomial, std::size_t, MonomialHash>> where;

    Columns(const std::vector<MultiPoly>& gens, std::size_t nvars, unsigned D) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const int d = gens[i].degree();
            if (d > static_cast<int>(D)) continue;
            for (const auto& m : monomials_of_degree(nvars, D - static_cast<unsigned>(d))) {
                where[i][m] = cols.size();
                cols.emplace_back(i, m);
            }
        }
    }
    std::vector<Elem> vector_of(const std::vector<MultiPoly>& syz, const Monomial& shift) const {
        std::vector<Elem> v(cols.size(), 0);
        for (std::size_t i = 0; i < syz.size(); ++i)
            for (const auto& t : syz[i].terms()) v[where.at(i).at(t.mono * shift)] = t.coeff;
        return v;
    }
};

}  // namespace

SyzygyModule syzygies(const std::vector<MultiPoly>& gens, std::optional<unsigned> degree_bound) {
    SyzygyModule out;
    out.generators = gens;
    if (gens.empty()) return out;
    const RingPtr ring = gens.front().ring();
    const std::size_t n = ring->nvars();
    int maxdeg = 0, mindeg = 1 << 20;
    for (const auto& g : gens) {
        if (!g.is_homogeneous() || g.is_zero()) throw ArgumentError("syzygies need nonzero homogeneous generators");
        if (!(*g.ring() == *ring)) throw ArgumentError("generators live in different rings");
        maxdeg = std::max(maxdeg, g.degree());
        mindeg = std::min(mindeg, g.degree());
    }
    const unsigned bound = degree_bound ? *degree_bound : static_cast<unsigned>(maxdeg) + 3;
    out.degree_bound = bound;
    const Field& field = ring->field();
    for (unsigned D = static_cast<unsigned>(mindeg) + 1; D <= bound; ++D) {
        const Columns cols(gens, n, D);
        const MonomialBasis rows(n, D);
        Matrix M(field, rows.size(), cols.cols.size());
        for (std::size_t c = 0; c < cols.cols.size(); ++c) {
            const auto& [i, m] = cols.cols[c];
            for (const auto& t : gens[i].terms()) M.at(static_cast<std::size_t>(rows.index(t.mono * m)), c) = t.coeff;
        }
        const auto kernel = M.kernel();
        if (kernel.empty()) continue;
        IncrementalEchelon ech(field, cols.cols.size());
        for (std::size_t k = 0; k < out.syzygies.size(); ++k)
            for (const auto& m : monomials_of_degree(n, D - out.degrees[k])) ech.add(cols.vector_of(out.syzygies[k], m));
        for (const auto& v : kernel) {
            if (!ech.add(v)) continue;
            std::vector<std::vector<Term>> parts(gens.size());
            for (std::size_t c = 0; c < v.size(); ++c)
                if (v[c] != 0) parts[cols.cols[c].first].push_back({cols.cols[c].second, v[c]});
            std::vector<MultiPoly> syz;
            for (auto& p : parts) syz.push_back(MultiPoly::from_terms(ring, std::move(p)));
            out.syzygies.push_back(std::move(syz));
            out.degrees.push_back(D);
        }
    }
    return out;
}

HomResult hom_dim_degree_zero(const Ideal& I, const std::vector<MultiPoly>& ambient, const HomOptions& opts) {
    const RingPtr& ring = I.ring();
    const std::size_t n = ring->nvars();
    for (const auto& f : ambient)
        if (!I.contains(f)) throw ArgumentError("ideal does not contain the ambient relations");
    std::vector<MultiPoly> gens = minimal_generators(I);
    const std::size_t free_count = gens.size();
    for (const auto& f : ambient) gens.push_back(f.in_ring(ring));
    int maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    unsigned bound = opts.bound ? *opts.bound : static_cast<unsigned>(maxdeg) + 3;
    if (bound + 1 > opts.max_bound) throw ResourceError("syzygy bound exceeds the configured maximum");

    // Unknowns: coefficients of h_i over standard monomials of (R/I)_{d_i}.
    std::vector<std::vector<Monomial>> std_monos(free_count);
    std::vector<std::size_t> offset(free_count + 1, 0);
    for (std::size_t i = 0; i < free_count; ++i) {
        std_monos[i] = standard_monomials(I, static_cast<unsigned>(gens[i].degree()));
        offset[i + 1] = offset[i] + std_monos[i].size();
    }
    const std::size_t unknowns = offset[free_count];
    const Field& field = ring->field();
    const auto& gb = I.groebner();

    std::unordered_map<Monomial, MultiPoly, MonomialHash> nf_cache;
    auto nf_of = [&](const Monomial& m) -> const MultiPoly& {
        auto it = nf_cache.find(m);
        if (it == nf_cache.end()) it = nf_cache.emplace(m, reduce(MultiPoly::monomial(ring, m), gb)).first;
        return it->second;
    };

    IncrementalEchelon conditions(field, unknowns);
    auto add_conditions = [&](const std::vector<MultiPoly>& s, unsigned D) {
        const auto std_d = standard_monomials(I, D);
        const MonomialBasis target(std_d);
        // One row per target standard monomial.
        std::vector<std::vector<Elem>> rows(target.size(), std::vector<Elem>(unknowns, 0));
        for (std::size_t i = 0; i < free_count; ++i) {
            if (s[i].is_zero()) continue;
            for (std::size_t u = 0; u < std_monos[i].size(); ++u) {
                const std::size_t col = offset[i] + u;
                for (const auto& t : s[i].terms()) {
                    const MultiPoly& r = nf_of(t.mono * std_monos[i][u]);
                    for (const auto& rt : r.terms()) {
                        const auto row = static_cast<std::size_t>(target.index(rt.mono));
                        rows[row][col] = field.add(rows[row][col], field.mul(t.coeff, rt.coeff));
                    }
                }
            }
        }
        for (auto& r : rows) conditions.add(std::move(r));
    };

    SyzygyModule syz = syzygies(gens, bound + 1);
    std::size_t used = 0;
    auto dim_up_to = [&](unsigned B) {
        while (used < syz.syzygies.size() && syz.degrees[used] <= B) {
            add_conditions(syz.syzygies[used], syz.degrees[used]);
            ++used;
        }
        return unknowns - conditions.rank();
    };
    std::size_t prev = dim_up_to(bound);
    for (;;) {
        const std::size_t next = dim_up_to(bound + 1);
        if (next == prev) return {next, bound};
        prev = next;
        ++bound;
        if (bound + 1 > opts.max_bound) throw ResourceError("homomorphism count did not stabilize within the syzygy bound");
        syz = syzygies(gens, bound + 1);
        // Conditions already added stay valid; continue after them.
    }
}

}  // namespace dpk
