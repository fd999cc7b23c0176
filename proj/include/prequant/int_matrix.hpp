#pragma once

#include "prequant/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace prequant {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntVector operator*(const IntVector& v) const;
    RatVector operator*(const RatVector& v) const;

    // v^T M, i.e. the transpose applied to v.
    RatVector apply_transpose(const RatVector& v) const;

    bool is_zero() const;
    bool operator==(const IntMatrix& other) const = default;

    // Exact determinant via fraction-free (Bareiss) elimination. Square matrices only.
    Integer determinant() const;
    std::size_t rank() const;

    // Column operations used by the normal-form algorithms.
    void swap_columns(std::size_t a, std::size_t b);
    void swap_rows(std::size_t a, std::size_t b);
    void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_column(std::size_t c);
    void negate_row(std::size_t r);

    std::string to_string() const;  // rows separated by ';', entries by ','

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

}  // namespace prequant
