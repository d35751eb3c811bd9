#ifndef BRAUER_INT_MATRIX_HPP
#define BRAUER_INT_MATRIX_HPP

#include <vector>

#include "brauer/int_polynomial.hpp"
#include "brauer/numeric.hpp"

namespace brauer {

/// Rectangular matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
  public:
    IntMatrix(long rows, long cols);
    IntMatrix(long rows, long cols, std::vector<Int> entries);

    static IntMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Int& at(long i, long j) { return entries_[i * cols_ + j]; }
    const Int& at(long i, long j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix pow(unsigned long e) const;

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);
    /// row_i += c * row_j
    void add_row(long i, long j, const Int& c);
    /// col_i += c * col_j
    void add_col(long i, long j, const Int& c);
    void negate_row(long i);
    void negate_col(long i);

    /// Bareiss fraction-free determinant; square matrices only.
    Int determinant() const;

    /// det(x*I - M) by the Faddeev-LeVerrier recursion (exact integer
    /// divisions); square matrices only.
    IntPolynomial char_polynomial() const;

  private:
    long rows_, cols_;
    std::vector<Int> entries_;
};

struct SmithResult {
    /// d_1 | d_2 | ... ; positive for the first `rank` entries, then zeros.
    /// Length = min(rows, cols).
    std::vector<Int> invariant_factors;
    long rank = 0;
    /// Unimodular transforms with U * M * V = diag(invariant_factors).
    IntMatrix u;
    IntMatrix v;
};

/// Smith normal form by row/column reduction with a minimum-|pivot| rule.
SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace brauer

#endif
