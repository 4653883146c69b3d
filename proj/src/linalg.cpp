#include "dpk/linalg.hpp"

#include "dpk/errors.hpp"

namespace dpk {

std::vector<std::size_t> Matrix::rref() {
    const Field& f = field_;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && at(p, c) == 0) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(at(p, k), at(r, k));
        const Elem inv = f.inv(at(r, c));
        for (std::size_t k = c; k < cols_; ++k) at(r, k) = f.mul(at(r, k), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            const Elem m = f.neg(at(i, c));
            for (std::size_t k = c; k < cols_; ++k)
                if (at(r, k) != 0) at(i, k) = f.add(at(i, k), f.mul(m, at(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<Elem>> Matrix::kernel() const {
    Matrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("matrix shapes do not match");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
        }
    return c;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw ArgumentError("inverse of a non-square matrix");
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

UniPoly characteristic_polynomial(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw ArgumentError("characteristic polynomial of a non-square matrix");
    const Field& f = m.field();
    Matrix h = m;
    // Similarity transform to upper Hessenberg form.
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t p = c + 1;
        while (p < n && h.at(p, c) == 0) ++p;
        if (p == n) continue;
        if (p != c + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h.at(p, k), h.at(c + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(h.at(k, p), h.at(k, c + 1));
        }
        const Elem inv = f.inv(h.at(c + 1, c));
        for (std::size_t i = c + 2; i < n; ++i) {
            const Elem u = f.mul(h.at(i, c), inv);
            if (u == 0) continue;
            for (std::size_t k = 0; k < n; ++k) h.at(i, k) = f.sub(h.at(i, k), f.mul(u, h.at(c + 1, k)));
            for (std::size_t k = 0; k < n; ++k) h.at(k, c + 1) = f.add(h.at(k, c + 1), f.mul(u, h.at(k, i)));
        }
    }
    // p_k = charpoly of the leading k x k block.
    std::vector<UniPoly> poly(n + 1, UniPoly{f, {}});
    poly[0].c = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t j = k - 1;
        UniPoly next{f, std::vector<Elem>(k + 1, 0)};
        for (std::size_t e = 0; e < poly[j].c.size(); ++e) {
            next.c[e + 1] = f.add(next.c[e + 1], poly[j].c[e]);
            next.c[e] = f.sub(next.c[e], f.mul(h.at(j, j), poly[j].c[e]));
        }
        Elem sub = 1;
        for (std::size_t i = j; i-- > 0;) {
            sub = f.mul(sub, h.at(i + 1, i));
            if (sub == 0) break;
            const Elem coef = f.mul(sub, h.at(i, j));
            for (std::size_t e = 0; e < poly[i].c.size(); ++e)
                next.c[e] = f.sub(next.c[e], f.mul(coef, poly[i].c[e]));
        }
        next.normalize();
        poly[k] = std::move(next);
    }
    return poly[n];
}

void IncrementalEchelon::reduce(std::vector<Elem>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Elem c = v[pivots_[i]];
        if (c == 0) continue;
        const Elem m = field_.neg(c);
        const auto& row = rows_[i];
        for (std::size_t k = pivots_[i]; k < cols_; ++k)
            if (row[k] != 0) v[k] = field_.add(v[k], field_.mul(m, row[k]));
    }
}

bool IncrementalEchelon::add(std::vector<Elem> v) {
    if (v.size() != cols_) throw ArgumentError("vector length mismatch");
    reduce(v);
    std::size_t p = 0;
    while (p < cols_ && v[p] == 0) ++p;
    if (p == cols_) return false;
    const Elem inv = field_.inv(v[p]);
    for (std::size_t k = p; k < cols_; ++k) v[k] = field_.mul(v[k], inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree)
    : MonomialBasis(monomials_of_degree(nvars, degree)) {}

MonomialBasis::MonomialBasis(std::vector<Monomial> monos) : monos_(std::move(monos)) {
    index_.reserve(monos_.size());
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
}

long MonomialBasis::index(const Monomial& m) const {
    const auto it = index_.find(m);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<Elem> MonomialBasis::coords(const MultiPoly& f) const {
    std::vector<Elem> v(monos_.size(), 0);
    for (const auto& t : f.terms()) {
        const long i = index(t.mono);
        if (i < 0) throw ArgumentError("term outside the monomial basis");
        v[static_cast<std::size_t>(i)] = t.coeff;
    }
    return v;
}

}  // namespace dpk
