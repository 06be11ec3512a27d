#include "properclass/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace properclass {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::logic_error("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                if (rhs.at(k, j) != 0) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    int n = rows_;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_row(int r) {
    for (int j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(int c) {
    for (int i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const mpz_class& m) {
    if (m == 0) return;
    for (int j = 0; j < cols_; ++j) at(dst, j) += m * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const mpz_class& m) {
    if (m == 0) return;
    for (int i = 0; i < rows_; ++i) at(i, dst) += m * at(i, src);
}

void SparseIntMatrix::add(int r, int c, int64_t v) {
    if (v == 0) return;
    auto& entries = col[c];
    auto it = std::lower_bound(entries.begin(), entries.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != entries.end() && it->first == r) {
        it->second += v;
        if (it->second == 0) entries.erase(it);
    } else {
        entries.insert(it, {r, v});
    }
}

long SparseIntMatrix::nonzeros() const {
    long n = 0;
    for (const auto& c : col) n += static_cast<long>(c.size());
    return n;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
    SparseIntMatrix out(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0) {
                if (!m.at(i, j).fits_slong_p())
                    throw std::overflow_error("sparse construction needs 64-bit entries");
                out.col[j].push_back({i, static_cast<int64_t>(m.at(i, j).get_si())});
            }
    return out;
}

IntMatrix SparseIntMatrix::to_dense() const {
    IntMatrix out(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [r, v] : col[j]) out.at(r, j) = v;
    return out;
}

}  // namespace properclass
