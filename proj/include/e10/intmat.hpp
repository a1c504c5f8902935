#pragma once

#include "e10/arith.hpp"

#include <vector>

namespace e10::lin {

using arith::Int;
using arith::Rational;

/// Dense integer matrix, row major.
class MatZ {
public:
    MatZ() : rows_(0), cols_(0) {}
    MatZ(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {}
    static MatZ identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    MatZ operator*(const MatZ& o) const;
    MatZ operator-() const;
    MatZ transpose() const;
    bool operator==(const MatZ& o) const = default;

    bool is_symmetric() const;
    bool is_zero() const;
    MatZ submatrix_cols(const std::vector<int>& cols) const;

    /// Exact determinant (fraction-free Bareiss elimination).
    Int det() const;
};

/// Dense rational matrix.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rational(0)) {}
    explicit MatQ(const MatZ& m);
    static MatQ identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    MatQ operator*(const MatQ& o) const;
    MatQ operator*(const Rational& c) const;
    MatQ transpose() const;
    bool operator==(const MatQ& o) const = default;

    bool is_integral() const;
    MatZ to_integer() const; // throws if not integral

    /// Exact inverse by Gauss-Jordan; throws degenerate_lattice if singular.
    MatQ inverse() const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Smith normal form u * a * v = d with unimodular u, v.
struct SNFResult {
    MatZ d;          // rows(a) x cols(a), diagonal, nonnegative, d1 | d2 | ...
    MatZ u, uinv;    // rows x rows
    MatZ v, vinv;    // cols x cols
    std::vector<Int> invariant_factors() const; // nonzero diagonal entries
    int rank() const;
};

SNFResult smith_normal_form(const MatZ& a);

/// Basis of the lattice generated by the columns of a (columns of the
/// result, full column rank, deterministic).
MatZ column_lattice_basis(const MatZ& a);

/// Basis of the integer kernel {x : a x = 0} (columns; always a saturated
/// sublattice of Z^cols).
MatZ kernel_basis(const MatZ& a);

} // namespace e10::lin
