/**
 * Exact integer linear algebra over Z: vectors, matrices, determinants,
 * Hermite and Smith normal forms, cokernels and integer linear systems.
 *
 * All entries are arbitrary-precision integers (`toric::Int`).  Every
 * function here is pure; values are safe to share across threads.
 */

#ifndef TORIC_ZLATTICE_HPP
#define TORIC_ZLATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Euclidean gcd, always nonnegative; gcd(0, 0) = 0.
inline Int gcd(Int a, Int b)
{
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Floor division (C++ integer division truncates toward zero).
inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

struct ExtendedGcd {
    Int g;  // >= 0
    Int s;
    Int t;  // s*a + t*b == g
};

inline ExtendedGcd extended_gcd(const Int& a, const Int& b)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

/**
 * A vector in Z^n.  The length is fixed at construction; entries may be
 * assigned but the vector never grows or shrinks.
 */
class IntVector
{
public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : entries_(n) {}
    IntVector(std::initializer_list<long long> values)
    {
        entries_.reserve(values.size());
        for (long long v : values)
            entries_.emplace_back(v);
    }
    explicit IntVector(std::vector<Int> values) : entries_(std::move(values)) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const Int& operator[](std::size_t i) const { return entries_[i]; }
    Int& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    const std::vector<Int>& entries() const { return entries_; }

    bool is_zero() const
    {
        return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
    }

    friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const IntVector& a, const IntVector& b) { return !(a == b); }
    friend bool operator<(const IntVector& a, const IntVector& b) { return a.entries_ < b.entries_; }

    friend IntVector operator+(const IntVector& a, const IntVector& b)
    {
        check_same_length(a, b);
        IntVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = a[i] + b[i];
        return r;
    }
    friend IntVector operator-(const IntVector& a, const IntVector& b)
    {
        check_same_length(a, b);
        IntVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = a[i] - b[i];
        return r;
    }
    friend IntVector operator-(const IntVector& a)
    {
        IntVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = -a[i];
        return r;
    }
    friend IntVector operator*(const Int& c, const IntVector& a)
    {
        IntVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = c * a[i];
        return r;
    }
    IntVector& operator+=(const IntVector& b)
    {
        check_same_length(*this, b);
        for (std::size_t i = 0; i < size(); ++i)
            entries_[i] += b[i];
        return *this;
    }

    friend Int dot(const IntVector& a, const IntVector& b)
    {
        check_same_length(a, b);
        Int s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += a[i] * b[i];
        return s;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < size(); ++i)
            os << (i ? "," : "") << entries_[i];
        os << ')';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntVector& v) { return os << v.str(); }

private:
    static void check_same_length(const IntVector& a, const IntVector& b)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("IntVector: length mismatch");
    }

    std::vector<Int> entries_;
};

inline IntVector unit_vector(std::size_t n, std::size_t i)
{
    IntVector e(n);
    e[i] = 1;
    return e;
}

/// Dense row-major integer matrix.  Zero-row and zero-column shapes are allowed.
class IntMatrix
{
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long long v : r)
                data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows)
    {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw std::invalid_argument("IntMatrix::from_columns: length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols)
    {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("IntMatrix::from_rows: length mismatch");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const
    {
        IntVector r(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            r[j] = (*this)(i, j);
        return r;
    }
    IntVector column(std::size_t j) const
    {
        IntVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    IntMatrix transpose() const
    {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Rows [begin, end) as a new matrix.
    IntMatrix row_block(std::size_t begin, std::size_t end) const
    {
        IntMatrix m(end - begin, cols_);
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i - begin, j) = (*this)(i, j);
        return m;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c)
    {
        if (c == 0)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != 0)
                (*this)(dst, j) += c * (*this)(src, j);
    }
    /// col[dst] += c * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c)
    {
        if (c == 0)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != 0)
                (*this)(i, dst) += c * (*this)(i, src);
    }
    void negate_row(std::size_t i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = -(*this)(i, j);
    }
    void negate_col(std::size_t j)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = -(*this)(i, j);
    }
    /// (row a, row b) <- (s*a + t*b, u*a + v*b)
    void combine_rows(std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u, const Int& v)
    {
        for (std::size_t j = 0; j < cols_; ++j) {
            Int x = (*this)(a, j), y = (*this)(b, j);
            if (x == 0 && y == 0)
                continue;
            (*this)(a, j) = s * x + t * y;
            (*this)(b, j) = u * x + v * y;
        }
    }
    void combine_cols(std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u, const Int& v)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            Int x = (*this)(i, a), y = (*this)(i, b);
            if (x == 0 && y == 0)
                continue;
            (*this)(i, a) = s * x + t * y;
            (*this)(i, b) = u * x + v * y;
        }
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
    friend bool operator<(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.rows_ != b.rows_)
            return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_)
            return a.cols_ < b.cols_;
        return a.data_ < b.data_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntMatrix: product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& x = a(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        c(i, j) += x * b(k, j);
            }
        return c;
    }
    friend IntVector operator*(const IntMatrix& a, const IntVector& v)
    {
        if (a.cols_ != v.size())
            throw std::invalid_argument("IntMatrix: matrix-vector shape mismatch");
        IntVector r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a(i, j) != 0 && v[j] != 0)
                    r[i] += a(i, j) * v[j];
        return r;
    }

    /// Row-major entries.
    const std::vector<Int>& entries() const { return data_; }

    std::string str() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "," : "") << '[';
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? "," : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.str(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

inline IntMatrix diagonal_matrix(const std::vector<Int>& d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Adjugate matrix: adj(A) * A == det(A) * I.
inline IntMatrix adjugate(const IntMatrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("adjugate: matrix is not square");
    const std::size_t n = a.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i)
                    continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j)
                        continue;
                    minor(mr, mc++) = a(r, c);
                }
                ++mr;
            }
            Int cof = determinant(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
        }
    return adj;
}

/// True iff A is square with determinant +1 or -1.
inline bool is_unimodular(const IntMatrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("is_unimodular: matrix is not square");
    Int d = determinant(a);
    return d == 1 || d == -1;
}

/// Exact inverse of a unimodular matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& a)
{
    Int d = determinant(a);
    if (d != 1 && d != -1)
        throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    IntMatrix adj = adjugate(a);
    if (d == -1)
        for (std::size_t i = 0; i < adj.rows(); ++i)
            adj.negate_row(i);
    return adj;
}

inline Int content(const IntVector& v)
{
    Int g = 0;
    for (const Int& x : v)
        g = gcd(g, x);
    return g;
}

/// gcd of entries equals 1.  The zero vector is not primitive.
inline bool is_primitive(const IntVector& v) { return content(v) == 1; }

struct HermiteDecomposition {
    IntMatrix H;  // row-style Hermite normal form
    IntMatrix U;  // unimodular, U * A == H
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/**
 * Row-style Hermite normal form U*A = H.
 *
 * H is in row echelon form; the first nonzero entry (pivot) of each nonzero
 * row is positive and every entry above a pivot lies in [0, pivot).  Zero
 * rows are at the bottom.  The form is unique for the row lattice of A.
 */
inline HermiteDecomposition hermite_normal_form(const IntMatrix& a)
{
    HermiteDecomposition out;
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // gather the gcd of column c (rows r..) into row r
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h(i, c) == 0)
                continue;
            if (h(r, c) == 0) {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            const Int x = h(r, c), y = h(i, c);
            if (y % x == 0) {
                Int q = y / x;
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                continue;
            }
            ExtendedGcd eg = extended_gcd(x, y);
            Int xg = x / eg.g, yg = y / eg.g;
            h.combine_rows(r, i, eg.s, eg.t, -yg, xg);
            u.combine_rows(r, i, eg.s, eg.t, -yg, xg);
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            if (q != 0) {
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = r;
    out.H = std::move(h);
    out.U = std::move(u);
    return out;
}

struct SmithDecomposition {
    IntMatrix D;  // diagonal, d_1 | d_2 | ..., nonnegative
    IntMatrix U;  // unimodular rows transform
    IntMatrix V;  // unimodular column transform, U * A * V == D
    std::size_t rank = 0;

    std::vector<Int> diagonal() const
    {
        std::vector<Int> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            d.push_back(D(i, i));
        return d;
    }
};

/// Smith normal form with transforms, U*A*V = D.
inline SmithDecomposition smith_normal_form(const IntMatrix& a)
{
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // smallest nonzero entry in the trailing block becomes the pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d(i, j) != 0 && (!found || abs(d(i, j)) < best)) {
                    found = true;
                    best = abs(d(i, j));
                    pi = i;
                    pj = j;
                }
        if (!found)
            break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                const Int x = d(t, t), y = d(i, t);
                if (y % x == 0) {
                    Int q = y / x;
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                } else {
                    ExtendedGcd eg = extended_gcd(x, y);
                    Int xg = x / eg.g, yg = y / eg.g;
                    d.combine_rows(t, i, eg.s, eg.t, -yg, xg);
                    u.combine_rows(t, i, eg.s, eg.t, -yg, xg);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                const Int x = d(t, t), y = d(t, j);
                if (y % x == 0) {
                    Int q = y / x;
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                } else {
                    ExtendedGcd eg = extended_gcd(x, y);
                    Int xg = x / eg.g, yg = y / eg.g;
                    d.combine_cols(t, j, eg.s, eg.t, -yg, xg);
                    v.combine_cols(t, j, eg.s, eg.t, -yg, xg);
                    dirty = true;
                }
            }
            if (dirty)
                continue;
            // pivot must divide the whole trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed)
                break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition out;
    out.rank = t;
    out.D = std::move(d);
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

struct CokernelStructure {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // elementary divisors > 1, ascending
};

/// Structure of Z^rows / (column span of A).
inline CokernelStructure cokernel_structure(const IntMatrix& a)
{
    SmithDecomposition s = smith_normal_form(a);
    CokernelStructure c;
    c.free_rank = a.rows() - s.rank;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.D(i, i) > 1)
            c.torsion.push_back(s.D(i, i));
    return c;
}

/// Rank over Q.
inline std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).rank; }

/// An integer solution x of A x = b, if one exists.
inline std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_integer: shape mismatch");
    SmithDecomposition s = smith_normal_form(a);
    IntVector ub = s.U * b;
    IntVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.D(i, i) != 0)
                return std::nullopt;
            y[i] = ub[i] / s.D(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

/// A basis (as matrix columns) of the integer kernel {x : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& a)
{
    // rows of U with zero image in H^T-style: use the HNF of A^T.
    HermiteDecomposition h = hermite_normal_form(a.transpose());
    IntMatrix k(a.cols(), a.cols() - h.rank);
    for (std::size_t i = h.rank; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            k(j, i - h.rank) = h.U(i, j);
    return k;
}

}  // namespace toric

#endif
