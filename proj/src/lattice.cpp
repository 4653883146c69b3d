#include "dpk/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace dpk {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int gcd_int(const Int& a, const Int& b) {
    Int x = abs_int(a), y = abs_int(b);
    while (y != 0) {
        Int r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

// Floor division rounding toward negative infinity.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

// row_i -= q * row_j
void sub_row(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] -= q * m[j][c];
}

void sub_col(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
    for (auto& row : m) row[i] -= q * row[j];
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (auto& x : m[i]) x = -x;
}

}  // namespace

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        IntVector v;
        v.reserve(r.size());
        for (auto x : r) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = a.front().size();
    if (b.size() != inner) throw ArgumentError("matrix dimensions do not match");
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    IntMatrix r(a.size(), IntVector(cols, Int(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a.front().size(), IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Int determinant(const IntMatrix& m0) {
    const std::size_t n = m0.size();
    for (const auto& r : m0)
        if (r.size() != n) throw ArgumentError("determinant of a non-square matrix");
    if (n == 0) return 1;
    IntMatrix m = m0;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
    const std::size_t n = gram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw ArgumentError("Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i]) throw ArgumentError("Gram matrix is not symmetric");
    }
}

bool GramLattice::is_even() const {
    for (std::size_t i = 0; i < gram_.size(); ++i)
        if (gram_[i][i] % 2 != 0) return false;
    return true;
}

Int GramLattice::product(const IntVector& x, const IntVector& y) const {
    if (x.size() != rank() || y.size() != rank()) throw ArgumentError("vector length does not match lattice rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_[i][j] * y[j];
    }
    return s;
}

Int GramLattice::divisibility(const IntVector& x) const {
    if (x.size() != rank()) throw ArgumentError("vector length does not match lattice rank");
    Int g = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < rank(); ++i) s += x[i] * gram_[i][j];
        g = gcd_int(g, s);
    }
    return g;
}

GramLattice direct_sum(const std::vector<GramLattice>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.rank();
    IntMatrix g(n, IntVector(n, Int(0)));
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rank(); ++i)
            for (std::size_t j = 0; j < p.rank(); ++j) g[off + i][off + j] = p.gram()[i][j];
        off += p.rank();
    }
    return GramLattice(std::move(g));
}

GramLattice lattice_a2() { return GramLattice(int_matrix({{2, 1}, {1, 2}})); }

GramLattice lattice_u() { return GramLattice(int_matrix({{0, 1}, {1, 0}})); }

GramLattice lattice_e8() {
    // Cartan matrix, Bourbaki labelling.
    std::vector<std::vector<long long>> c(8, std::vector<long long>(8, 0));
    for (int i = 0; i < 8; ++i) c[i][i] = 2;
    const std::array<std::pair<int, int>, 7> edges{{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}};
    for (auto [i, j] : edges) c[i][j] = c[j][i] = -1;
    return GramLattice(int_matrix(c));
}

GramLattice gram_K(long long a, long long b) {
    return GramLattice(int_matrix({{3, 6, a}, {6, 18, 1}, {a, 1, b}}));
}

long long delta(long long a, long long b) { return -3 + 12 * a - 18 * a * a + 18 * b; }

std::pair<long long, long long> normalize_sigma(long long a, long long b) {
    // Sigma -> Sigma + m (3h^2 - S) keeps S.Sigma and shifts a by 3m.
    long long r = ((a % 3) + 3) % 3;
    if (r == 2) r = -1;
    const long long m = (r - a) / 3;
    return {r, b + 2 * m * (3 * a - 1) + 9 * m * m};
}

bool evenness_check(long long a, long long b) {
    const GramLattice K = gram_K(a, b);
    const auto basis = integer_kernel(int_matrix({{3, 6, a}}), 3);
    IntMatrix B(3, IntVector(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < 3; ++r) B[r][c] = basis[c][r];
    const GramLattice c(multiply(transpose(B), multiply(K.gram(), B)));
    if (c.rank() != 2 || !c.nondegenerate()) throw LatticeError("degenerate complement");
    return c.is_even();
}

DeltaEnumeration admissible_discriminants(long long max) {
    if (max < 9) throw ArgumentError("discriminant bound must be at least 9");
    std::map<long long, std::vector<std::pair<long long, long long>>> found;
    for (long long a = -1; a <= 1; ++a) {
        // delta(a, b) > 0 needs 18 b > 3 - 12 a + 18 a^2; delta grows with b.
        for (long long b = (3 - 12 * a + 18 * a * a) / 18 - 1;; ++b) {
            const long long d = delta(a, b);
            if (d > max) break;
            if (d > 0 && (a - b) % 2 == 0) found[d].emplace_back(a, b);
        }
    }
    DeltaEnumeration out;
    for (const auto& [d, ws] : found) {
        if (ws.size() != 1) throw LatticeError("discriminant " + std::to_string(d) + " has several witnesses");
        out.values.push_back({d, ws.front().first, ws.front().second});
    }
    out.small_delta_warning = true;
    out.warning = "finitely many small discriminants may fail to define divisors; they are not excluded here";
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    for (const auto& r : m)
        if (r.size() != cols) throw ArgumentError("ragged matrix");
    SmithForm s;
    IntMatrix a = m;
    s.U = identity_matrix(rows);
    s.V = identity_matrix(cols);
    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot: nonzero entry of least absolute value in the lower-right block.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs_int(a[i][j]) < abs_int(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            swap_rows(a, t, pi);
            swap_rows(s.U, t, pi);
            swap_cols(a, t, pj);
            swap_cols(s.V, t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const Int q = floor_div(a[i][t], a[t][t]);
                sub_row(a, i, t, q);
                sub_row(s.U, i, t, q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const Int q = floor_div(a[t][j], a[t][t]);
                sub_col(a, j, t, q);
                sub_col(s.V, j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold any entry not divisible by the pivot into row t.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            sub_row(a, t, bad, Int(-1));
            sub_row(s.U, t, bad, Int(-1));
        }
        if (a[t][t] < 0) {
            negate_row(a, t);
            negate_row(s.U, t);
        }
    }
    s.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.diagonal[i] = a[i][i];
    return s;
}

bool verify_smith(const IntMatrix& m, const SmithForm& s) {
    const IntMatrix d = multiply(multiply(s.U, m), s.V);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j) {
            const Int expect = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : Int(0);
            if (d[i][j] != expect) return false;
        }
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        if (s.diagonal[i] < 0) return false;
        if (s.diagonal[i] == 0) {
            if (s.diagonal[i + 1] != 0) return false;
        } else if (s.diagonal[i + 1] % s.diagonal[i] != 0) {
            return false;
        }
    }
    return abs_int(determinant(s.U)) == 1 && abs_int(determinant(s.V)) == 1;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t ncols) {
    if (a.empty()) {
        std::vector<IntVector> out;
        for (std::size_t j = 0; j < ncols; ++j) {
            IntVector e(ncols, Int(0));
            e[j] = 1;
            out.push_back(std::move(e));
        }
        return out;
    }
    const SmithForm s = smith_normal_form(a);
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (j < s.diagonal.size() && s.diagonal[j] != 0) continue;
        IntVector v(ncols);
        for (std::size_t r = 0; r < ncols; ++r) v[r] = s.V[r][j];
        out.push_back(std::move(v));
    }
    return out;
}

IntVector discriminant_group(const GramLattice& l) {
    if (!l.nondegenerate()) throw LatticeError("degenerate lattice has no finite discriminant group");
    const SmithForm s = smith_normal_form(l.gram());
    IntVector out;
    for (const auto& d : s.diagonal)
        if (d > 1) out.push_back(d);
    return out;
}

GramLattice orthogonal_complement(const GramLattice& l, const std::vector<IntVector>& vectors,
                                  std::vector<IntVector>* basis) {
    IntMatrix rows;
    for (const auto& v : vectors) {
        if (v.size() != l.rank()) throw ArgumentError("vector length does not match lattice rank");
        IntVector r(l.rank(), Int(0));
        for (std::size_t j = 0; j < l.rank(); ++j)
            for (std::size_t i = 0; i < l.rank(); ++i) r[j] += v[i] * l.gram()[i][j];
        rows.push_back(std::move(r));
    }
    const auto ker = integer_kernel(rows, l.rank());
    IntMatrix B(l.rank(), IntVector(ker.size()));
    for (std::size_t c = 0; c < ker.size(); ++c)
        for (std::size_t r = 0; r < l.rank(); ++r) B[r][c] = ker[c][r];
    GramLattice out(multiply(transpose(B), multiply(l.gram(), B)));
    if (basis) *basis = ker;
    return out;
}

long long surface_self_intersection(long long h2, long long hK, long long K2, long long chi) {
    return 6 * h2 + 3 * hK + K2 - chi;
}

FibrationNumerology strata_p2(long long d_I, long long d_II, long long b_IV) {
    if (d_I < 1 || d_II < 1 || b_IV < 0) throw ArgumentError("invalid discriminant data");
    auto chi_smooth = [](long long d) { return 2 - (d - 1) * (d - 2); };
    FibrationNumerology n;
    n.d_I = d_I;
    n.d_II = d_II;
    n.b_III = d_I * d_II;
    n.b_IV = b_IV;
    n.b_I = chi_smooth(d_I) - n.b_III;
    // Each cusp lowers the geometric genus by one; cusps are unibranch.
    n.b_II = chi_smooth(d_II) + 2 * b_IV - n.b_III - b_IV;
    return n;
}

long long euler_general(long long chi_P, const FibrationNumerology& n) {
    return 6 * chi_P - n.b_I - n.b_II - 2 * n.b_III - 2 * n.b_IV;
}

long long euler_p2(long long d_I, long long d_II, long long b_IV) {
    return 14 + (d_I - 1) * (d_I - 2) + (d_II - 1) * (d_II - 2) - 3 * b_IV;
}

DiscriminantWitness square_six_complement_witness() {
    const GramLattice L0 =
        direct_sum({lattice_a2(), lattice_u(), lattice_u(), lattice_e8(), lattice_e8()});
    const std::size_t head = 6;
    std::array<int, 6> c{};
    c.fill(-3);
    for (;;) {
        IntVector v(L0.rank(), Int(0));
        for (std::size_t i = 0; i < head; ++i) v[i] = c[i];
        if (L0.product(v, v) == 6 && L0.divisibility(v) == 1) {
            DiscriminantWitness w{L0, v, orthogonal_complement(L0, {v}), {}};
            w.group = discriminant_group(w.complement);
            return w;
        }
        std::size_t k = 0;
        while (k < head && c[k] == 3) c[k++] = -3;
        if (k == head) break;
        ++c[k];
    }
    throw LatticeError("no vector of square 6 and divisibility 1 in the search range");
}

}  // namespace dpk
