#include "embmon/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace embmon {

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::fromRows(const std::vector<VecInt> &rows)
{
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        assert(static_cast<int>(rows[i].size()) == c);
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::fromColumns(const std::vector<VecInt> &cols)
{
    int c = static_cast<int>(cols.size());
    int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
    IntMat m(r, c);
    for (int j = 0; j < c; ++j) {
        assert(static_cast<int>(cols[j].size()) == r);
        for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

VecInt IntMat::row(int i) const
{
    VecInt r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

VecInt IntMat::column(int j) const
{
    VecInt c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<VecInt> IntMat::columns() const
{
    std::vector<VecInt> cs;
    cs.reserve(cols_);
    for (int j = 0; j < cols_; ++j) cs.push_back(column(j));
    return cs;
}

IntMat IntMat::transposed() const
{
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::mul(const IntMat &other) const
{
    assert(cols_ == other.rows_);
    IntMat r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int &aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) r.at(i, j) += aik * other.at(k, j);
        }
    return r;
}

VecInt IntMat::apply(const VecInt &x) const
{
    assert(static_cast<int>(x.size()) == cols_);
    VecInt r(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
    return r;
}

void IntMat::swapRows(int i, int j)
{
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swapCols(int i, int j)
{
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::addRowMultiple(int dst, int src, const Int &factor)
{
    if (factor == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMat::addColMultiple(int dst, int src, const Int &factor)
{
    if (factor == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMat::negateRow(int i)
{
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negateCol(int j)
{
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

namespace {

// Position of the entry with smallest nonzero |value| in the submatrix
// starting at (s, s); false when that submatrix is zero.
bool findPivot(const IntMat &D, int s, int &pi, int &pj)
{
    bool found = false;
    Int best = 0;
    for (int i = s; i < D.rows(); ++i)
        for (int j = s; j < D.cols(); ++j) {
            const Int &x = D.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                best = ax;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

} // namespace

SmithForm smithNormalForm(const IntMat &M)
{
    const int m = M.rows();
    const int n = M.cols();
    SmithForm out{IntMat::identity(m), M, IntMat::identity(n)};
    IntMat &U = out.U;
    IntMat &D = out.D;
    IntMat &V = out.V;

    const int nmin = std::min(m, n);
    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            int pi = s, pj = s;
            if (!findPivot(D, s, pi, pj)) break;
            D.swapRows(s, pi);
            U.swapRows(s, pi);
            D.swapCols(s, pj);
            V.swapCols(s, pj);

            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                if (D.at(i, s) == 0) continue;
                Int q = tdivQ(D.at(i, s), D.at(s, s));
                D.addRowMultiple(i, s, -q);
                U.addRowMultiple(i, s, -q);
                if (D.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                if (D.at(s, j) == 0) continue;
                Int q = tdivQ(D.at(s, j), D.at(s, s));
                D.addColMultiple(j, s, -q);
                V.addColMultiple(j, s, -q);
                if (D.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot divides every remaining entry, or fold an offending row in.
            bool divides = true;
            for (int i = s + 1; i < m && divides; ++i)
                for (int j = s + 1; j < n; ++j) {
                    if (D.at(i, j) % D.at(s, s) != 0) {
                        D.addRowMultiple(s, i, Int(1));
                        U.addRowMultiple(s, i, Int(1));
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (D.at(s, s) < 0) {
            D.negateRow(s);
            U.negateRow(s);
        }
    }
    return out;
}

IntMat kernelBasis(const IntMat &M)
{
    SmithForm snf = smithNormalForm(M);
    const int n = M.cols();
    const int nmin = std::min(M.rows(), n);
    std::vector<VecInt> basis;
    for (int j = 0; j < n; ++j) {
        if (j < nmin && snf.D.at(j, j) != 0) continue;
        basis.push_back(snf.V.column(j));
    }
    IntMat out(n, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < n; ++i) out.at(i, static_cast<int>(j)) = basis[j][i];
    return out;
}

std::optional<VecInt> solveIntegral(const IntMat &M, const VecInt &b)
{
    assert(static_cast<int>(b.size()) == M.rows());
    SmithForm snf = smithNormalForm(M);
    VecInt w = snf.U.apply(b);
    const int n = M.cols();
    const int nmin = std::min(M.rows(), n);
    VecInt y(n, Int(0));
    for (int i = 0; i < M.rows(); ++i) {
        Int d = (i < nmin) ? snf.D.at(i, i) : Int(0);
        if (d == 0) {
            if (w[i] != 0) return std::nullopt;
        } else {
            if (w[i] % d != 0) return std::nullopt;
            y[i] = w[i] / d;
        }
    }
    return snf.V.apply(y);
}

IntMat hermiteColumnBasis(const IntMat &G)
{
    IntMat H = G;
    const int rows = H.rows();
    const int cols = H.cols();
    int c = 0;
    for (int r = 0; r < rows && c < cols; ++r) {
        // Reduce row r across columns >= c to a single nonzero pivot at c.
        for (;;) {
            int best = -1;
            for (int j = c; j < cols; ++j) {
                if (H.at(r, j) == 0) continue;
                if (best < 0 || abs(H.at(r, j)) < abs(H.at(r, best))) best = j;
            }
            if (best < 0) break;
            H.swapCols(c, best);
            bool clean = true;
            for (int j = c + 1; j < cols; ++j) {
                if (H.at(r, j) == 0) continue;
                Int q = tdivQ(H.at(r, j), H.at(r, c));
                H.addColMultiple(j, c, -q);
                if (H.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H.at(r, c) == 0) continue;
        if (H.at(r, c) < 0) H.negateCol(c);
        // Canonical reduction of earlier columns in the pivot row.
        for (int j = 0; j < c; ++j) {
            Int q = fdivQ(H.at(r, j), H.at(r, c));
            H.addColMultiple(j, c, -q);
        }
        ++c;
    }
    // First c columns form the basis.
    IntMat out(rows, c);
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < rows; ++i) out.at(i, j) = H.at(i, j);
    return out;
}

bool sameColumnLattice(const IntMat &A, const IntMat &B)
{
    return hermiteColumnBasis(A) == hermiteColumnBasis(B);
}

int rationalRank(const IntMat &M)
{
    IntMat A = M;
    const int rows = A.rows();
    const int cols = A.cols();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (A.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        A.swapRows(rank, p);
        for (int i = rank + 1; i < rows; ++i) {
            if (A.at(i, c) == 0) continue;
            Int pj = A.at(rank, c);
            Int f = A.at(i, c);
            for (int j = c; j < cols; ++j) A.at(i, j) = A.at(i, j) * pj - A.at(rank, j) * f;
        }
        ++rank;
    }
    return rank;
}

std::optional<VecRat> solveRational(const IntMat &A, const VecRat &b)
{
    const int rows = A.rows();
    const int cols = A.cols();
    assert(static_cast<int>(b.size()) == rows);

    std::vector<VecRat> T(rows, VecRat(cols + 1, Rat(0)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) T[i][j] = Rat(A.at(i, j));
        T[i][cols] = b[i];
    }

    std::vector<int> pivotCol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (T[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(T[r], T[p]);
        Rat inv = Rat(1) / T[r][c];
        for (int j = c; j <= cols; ++j) T[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || T[i][c] == 0) continue;
            Rat f = T[i][c];
            for (int j = c; j <= cols; ++j) T[i][j] -= f * T[r][j];
        }
        pivotCol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (T[i][cols] != 0) return std::nullopt;

    VecRat x(cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivotCol[i]] = T[i][cols];
    return x;
}

} // namespace embmon
