#include "brauer/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace brauer {

IntMatrix::IntMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    entries_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(long rows, long cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (sign(a) == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix power of a non-square matrix");
    IntMatrix r = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

void IntMatrix::swap_rows(long i, long j) {
    if (i == j) return;
    for (long k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(long i, long j) {
    if (i == j) return;
    for (long k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(long i, long j, const Int& c) {
    for (long k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(long i, long j, const Int& c) {
    for (long k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(long i) {
    for (long k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(long i) {
    for (long k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    const long n = rows_;
    IntMatrix a = *this;
    Int denom = 1;
    int sgn = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (sign(a.at(k, k)) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (sign(a.at(i, k)) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sgn = -sgn;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / denom;  // exact (Bareiss)
            }
        denom = a.at(k, k);
    }
    return sgn > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntPolynomial IntMatrix::char_polynomial() const {
    if (rows_ != cols_) throw std::invalid_argument("char polynomial of a non-square matrix");
    const long n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A(M_k + c_k I)
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;  // coefficient of x^n
    IntMatrix mk = *this;
    for (long k = 1; k <= n; ++k) {
        Int tr = 0;
        for (long i = 0; i < n; ++i) tr += mk.at(i, i);
        if (tr % k != 0) throw std::logic_error("Faddeev-LeVerrier trace not divisible");
        Int ck = -tr / k;
        c[n - k] = ck;
        if (k < n) {
            IntMatrix next = mk;
            for (long i = 0; i < n; ++i) next.at(i, i) += ck;
            mk = *this * next;
        }
    }
    return IntPolynomial(std::move(c));
}

namespace {

// position of the entry of minimal nonzero absolute value in the
// lower-right block starting at (t, t); {-1,-1} if the block is zero
std::pair<long, long> min_pivot(const IntMatrix& a, long t) {
    std::pair<long, long> best{-1, -1};
    Int best_abs = 0;
    for (long i = t; i < a.rows(); ++i)
        for (long j = t; j < a.cols(); ++j) {
            const Int& x = a.at(i, j);
            if (sign(x) == 0) continue;
            Int ax = abs(x);
            if (best.first < 0 || ax < best_abs) {
                best = {i, j};
                best_abs = ax;
            }
        }
    return best;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const long dim = std::min(m.rows(), m.cols());

    long t = 0;
    while (t < dim) {
        auto [pi, pj] = min_pivot(a, t);
        if (pi < 0) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t
            for (long i = t + 1; i < a.rows(); ++i) {
                if (sign(a.at(i, t)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (sign(a.at(i, t)) != 0) {
                    // remainder smaller than the pivot: promote it
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // clear row t
            for (long j = t + 1; j < a.cols(); ++j) {
                if (sign(a.at(t, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (sign(a.at(t, j)) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
        }

        // divisibility: the pivot must divide every remaining entry
        bool restart = false;
        for (long i = t + 1; i < a.rows() && !restart; ++i)
            for (long j = t + 1; j < a.cols() && !restart; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    a.add_row(t, i, Int(1));
                    u.add_row(t, i, Int(1));
                    restart = true;
                }
        if (restart) continue;

        if (sign(a.at(t, t)) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }

    SmithResult res{std::vector<Int>(dim, Int(0)), t, std::move(u), std::move(v)};
    for (long i = 0; i < t; ++i) res.invariant_factors[i] = a.at(i, i);
    return res;
}

}  // namespace brauer
