#ifndef PROPERCLASS_INTMATRIX_HPP
#define PROPERCLASS_INTMATRIX_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace properclass {

/// Dense matrix over arbitrary-precision integers. Row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const mpz_class& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix& rhs) const = default;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix transposed() const;

    /// Determinant by fraction-free Bareiss elimination; square only.
    mpz_class determinant() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void negate_row(int r);
    void negate_col(int c);
    /// row[dst] += m * row[src]
    void add_row_multiple(int dst, int src, const mpz_class& m);
    void add_col_multiple(int dst, int src, const mpz_class& m);

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Sparse integer matrix in column-major triplet form; entries fit in
/// 64 bits at construction time (boundary matrices are ±1). The exact
/// elimination engine widens to arbitrary precision when required.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    // per column: (row, value) sorted by row, values nonzero
    std::vector<std::vector<std::pair<int32_t, int64_t>>> col;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), col(c) {}

    void add(int r, int c, int64_t v);  // accumulate, keep sorted/nonzero
    long nonzeros() const;

    static SparseIntMatrix from_dense(const IntMatrix& m);
    IntMatrix to_dense() const;
};

}  // namespace properclass

#endif
