#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Int = std::int64_t;

// All lattice arithmetic runs on machine integers with explicit overflow
// detection. Coefficients in the fans handled here are tiny, so an overflow
// is a usage error and must surface, never wrap.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int abs_int(Int a) { return a < 0 ? checked_neg(a) : a; }

inline Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

struct NSpace {};  // the lattice N of one-parameter subgroups
struct MSpace {};  // the dual lattice M of characters

// Integer coordinate tuple tagged by the lattice it lives in, so that a
// character can never be fed where a ray is expected.
template <typename Space>
class Vec {
public:
    Vec() = default;
    explicit Vec(std::vector<Int> coords) : c_(std::move(coords)) {}
    Vec(std::initializer_list<Int> coords) : c_(coords) {}

    std::size_t dim() const { return c_.size(); }
    Int operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Int>& coords() const { return c_; }

    bool is_zero() const {
        for (Int x : c_)
            if (x != 0) return false;
        return true;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        require_same_dim(a, b);
        std::vector<Int> r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_add(a[i], b[i]);
        return Vec(std::move(r));
    }

    friend Vec operator-(const Vec& a, const Vec& b) {
        require_same_dim(a, b);
        std::vector<Int> r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_sub(a[i], b[i]);
        return Vec(std::move(r));
    }

    friend Vec operator*(Int s, const Vec& a) {
        std::vector<Int> r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_mul(s, a[i]);
        return Vec(std::move(r));
    }

    Vec operator-() const { return Int(-1) * *this; }

    bool operator==(const Vec&) const = default;
    auto operator<=>(const Vec&) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    static void require_same_dim(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw DimensionError("vector dimensions differ");
    }

    std::vector<Int> c_;
};

using LatticeVector = Vec<NSpace>;
using DualVector = Vec<MSpace>;

/// Pairing <m, v> between a character and a lattice vector.
inline Int pair(const DualVector& m, const LatticeVector& v) {
    if (m.dim() != v.dim()) throw DimensionError("pairing requires equal dimensions");
    Int s = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) s = checked_add(s, checked_mul(m[i], v[i]));
    return s;
}

/// v divided by the gcd of its coordinates. The zero vector has no
/// primitive representative.
inline LatticeVector primitive(const LatticeVector& v) {
    if (v.is_zero()) throw ZeroVectorError("the zero vector has no primitive form");
    Int g = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) g = gcd_int(g, v[i]);
    std::vector<Int> r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] / g;
    return LatticeVector(std::move(r));
}

inline bool is_primitive(const LatticeVector& v) {
    if (v.is_zero()) return false;
    Int g = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) g = gcd_int(g, v[i]);
    return g == 1;
}

// Small dense integer matrix stored by rows. Everything is exact; the
// determinant uses fraction-free elimination so intermediate divisions
// stay in the integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;

    explicit IntegerMatrix(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
        for (const auto& r : rows_)
            if (r.size() != rows_.front().size()) throw ShapeError("ragged matrix rows");
    }

    template <typename Space>
    static IntegerMatrix from_rows(const std::vector<Vec<Space>>& rows) {
        std::vector<std::vector<Int>> data;
        data.reserve(rows.size());
        for (const auto& r : rows) data.push_back(r.coords());
        return IntegerMatrix(std::move(data));
    }

    static IntegerMatrix identity(std::size_t n) {
        std::vector<std::vector<Int>> data(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) data[i][i] = 1;
        return IntegerMatrix(std::move(data));
    }

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return rows_.empty() ? 0 : rows_.front().size(); }
    Int at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    IntegerMatrix transposed() const {
        std::vector<std::vector<Int>> t(col_count(), std::vector<Int>(row_count()));
        for (std::size_t i = 0; i < row_count(); ++i)
            for (std::size_t j = 0; j < col_count(); ++j) t[j][i] = rows_[i][j];
        return IntegerMatrix(std::move(t));
    }

    IntegerMatrix with_column(std::size_t col, const std::vector<Int>& b) const {
        auto data = rows_;
        for (std::size_t i = 0; i < data.size(); ++i) data[i][col] = b[i];
        return IntegerMatrix(std::move(data));
    }

    /// Exact determinant by Bareiss elimination.
    Int det() const {
        const std::size_t n = row_count();
        if (n != col_count()) throw ShapeError("determinant requires a square matrix");
        if (n == 0) return 1;
        auto a = rows_;
        Int sign = 1;
        Int prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::size_t p = k;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            if (p != k) {
                std::swap(a[p], a[k]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    Int num = checked_sub(checked_mul(a[i][j], a[k][k]),
                                          checked_mul(a[i][k], a[k][j]));
                    a[i][j] = num / prev;  // exact by the Bareiss identity
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        return checked_mul(sign, a[n - 1][n - 1]);
    }

    /// Solves A x = b for the unique integer solution, valid only when
    /// det(A) = ±1. Uses Cramer's rule; every quotient is by ±1.
    std::vector<Int> solve_unimodular(const std::vector<Int>& b) const {
        const std::size_t n = row_count();
        if (n != col_count()) throw ShapeError("solve requires a square matrix");
        if (b.size() != n) throw ShapeError("right-hand side has wrong length");
        const Int d = det();
        if (d != 1 && d != -1) throw NotUnimodularError("matrix determinant is not ±1");
        std::vector<Int> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = checked_mul(with_column(j, b).det(), d);
        return x;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (x.size() != col_count()) throw ShapeError("vector length does not match columns");
        std::vector<Int> r(row_count(), 0);
        for (std::size_t i = 0; i < row_count(); ++i)
            for (std::size_t j = 0; j < col_count(); ++j)
                r[i] = checked_add(r[i], checked_mul(rows_[i][j], x[j]));
        return r;
    }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::vector<std::vector<Int>> rows_;
};

/// Coordinates of v in the Z-basis given by `basis` (so sum c_j basis_j = v).
/// The basis must be unimodular.
inline std::vector<Int> basis_coordinates(const std::vector<LatticeVector>& basis,
                                          const LatticeVector& v) {
    return IntegerMatrix::from_rows(basis).transposed().solve_unimodular(v.coords());
}

}  // namespace toric
