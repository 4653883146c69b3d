#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dpk/poly.hpp"
#include "dpk/univariate.hpp"

namespace dpk {

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    /// Basis of {v : M v = 0}.
    std::vector<std::vector<Elem>> kernel() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// Gauss-Jordan inverse; empty when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// det(t I - M), monic, via reduction to Hessenberg form.
UniPoly characteristic_polynomial(const Matrix& m);

/// Row space built one vector at a time; reports whether each new vector
/// was independent of the previous ones.
class IncrementalEchelon {
public:
    IncrementalEchelon(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

    /// Reduces v in place against the stored rows.
    void reduce(std::vector<Elem>& v) const;
    bool add(std::vector<Elem> v);
    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

private:
    Field field_;
    std::size_t cols_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Coordinates of homogeneous polynomials of one degree with respect to
/// the monomial basis in decreasing grevlex order.
class MonomialBasis {
public:
    MonomialBasis(std::size_t nvars, unsigned degree);
    explicit MonomialBasis(std::vector<Monomial> monos);

    std::size_t size() const noexcept { return monos_.size(); }
    const std::vector<Monomial>& monomials() const noexcept { return monos_; }
    /// -1 when absent.
    long index(const Monomial& m) const;
    /// Throws ArgumentError on a term outside the basis.
    std::vector<Elem> coords(const MultiPoly& f) const;

private:
    std::vector<Monomial> monos_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace dpk
