#pragma once

#include <optional>

#include "embmon/ints.hpp"

namespace embmon {

/// Dense integer matrix with arbitrary-precision entries.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Int(0)) {}

    static IntMat identity(int n);
    static IntMat fromRows(const std::vector<VecInt> &rows);
    static IntMat fromColumns(const std::vector<VecInt> &cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int &at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int &at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    VecInt row(int i) const;
    VecInt column(int j) const;
    std::vector<VecInt> columns() const;

    IntMat transposed() const;
    IntMat mul(const IntMat &other) const;
    VecInt apply(const VecInt &x) const; // matrix * column vector

    void swapRows(int i, int j);
    void swapCols(int i, int j);
    void addRowMultiple(int dst, int src, const Int &factor);
    void addColMultiple(int dst, int src, const Int &factor);
    void negateRow(int i);
    void negateCol(int j);

    bool operator==(const IntMat &other) const { return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    VecInt a_;
};

struct SmithForm {
    IntMat U; // rows x rows, unimodular
    IntMat D; // rows x cols, diagonal with d_i | d_{i+1}
    IntMat V; // cols x cols, unimodular
};

/// Smith normal form U*M*V = D via elementary operations, pivoting on the
/// entry of smallest nonzero absolute value.
SmithForm smithNormalForm(const IntMat &M);

/// Basis of {x : M x = 0} as matrix columns.
IntMat kernelBasis(const IntMat &M);

/// One integral solution of M z = b, if any.
std::optional<VecInt> solveIntegral(const IntMat &M, const VecInt &b);

/// Canonical column-style Hermite basis of the lattice spanned by the columns
/// of G: pivots positive, entries left of each pivot reduced into [0, pivot).
IntMat hermiteColumnBasis(const IntMat &G);

bool sameColumnLattice(const IntMat &A, const IntMat &B);

int rationalRank(const IntMat &M);

/// Solves A x = b over the rationals (A integer, b rational); empty if inconsistent.
std::optional<VecRat> solveRational(const IntMat &A, const VecRat &b);

} // namespace embmon
