#ifndef CUBEFAM_SNF_HPP
#define CUBEFAM_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubefam {

// Pivoting can blow up intermediate entries exponentially even on +-1
// inputs, so everything here runs on arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix with exact entries.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool is_zero() const noexcept {
        for (const BigInt& v : a_)
            if (v != 0) return false;
        return true;
    }

    IntegerMatrix operator*(const IntegerMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("matrix product: shape mismatch");
        IntegerMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const BigInt& v = (*this)(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += v * rhs(k, j);
            }
        return out;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, i), (*this)(r, j));
    }

    /// row dst += q * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& q) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
    }

    /// col dst += q * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& q) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> a_;
};

/// Invariant factors d1 | d2 | ... | dr of an integer matrix, all positive.
struct SnfResult {
    std::vector<BigInt> invariant_factors;

    std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Smith normal form by repeated pivoting. The pivot is the entry of
/// smallest non-zero absolute value in the trailing submatrix (ties: lowest
/// row, then lowest column), rows/columns are reduced against it, and a
/// divisibility fix-up folds any non-multiple of the pivot back into its row
/// until the chain d1 | d2 | ... holds. A zero matrix yields no factors.
inline SnfResult smith_normal_form(IntegerMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t bound = std::min(rows, cols);
    std::vector<BigInt> factors;

    auto find_pivot = [&](std::size_t s, std::size_t& pr, std::size_t& pc) {
        bool found = false;
        BigInt best;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j) {
                const BigInt& v = m(i, j);
                if (v == 0) continue;
                BigInt a = abs(v);
                if (!found || a < best) {
                    found = true;
                    best = std::move(a);
                    pr = i;
                    pc = j;
                }
            }
        return found;
    };

    for (std::size_t s = 0; s < bound; ++s) {
        std::size_t pr = s, pc = s;
        if (!find_pivot(s, pr, pc)) break;  // trailing block is zero
        for (;;) {
            m.swap_rows(s, pr);
            m.swap_cols(s, pc);
            bool residue = false;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (m(i, s) == 0) continue;
                const BigInt q = m(i, s) / m(s, s);
                if (q != 0) m.add_row_multiple(i, s, -q);
                if (m(i, s) != 0) residue = true;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (m(s, j) == 0) continue;
                const BigInt q = m(s, j) / m(s, s);
                if (q != 0) m.add_col_multiple(j, s, -q);
                if (m(s, j) != 0) residue = true;
            }
            if (residue) {
                // leftover remainders are smaller than the pivot was
                find_pivot(s, pr, pc);
                continue;
            }
            bool divides_all = true;
            for (std::size_t i = s + 1; i < rows && divides_all; ++i)
                for (std::size_t j = s + 1; j < cols && divides_all; ++j)
                    if (m(i, j) % m(s, s) != 0) {
                        m.add_row_multiple(s, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
            pr = s;
            pc = s;  // re-enter: reducing row s will shrink the pivot
        }
        if (m(s, s) < 0) m.negate_row(s);
        factors.push_back(m(s, s));
    }
    return SnfResult{std::move(factors)};
}

}  // namespace cubefam

#endif  // CUBEFAM_SNF_HPP
