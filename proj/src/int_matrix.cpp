#include "prequant/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace prequant {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : r)
            entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out(r, c) += a * other(k, c);
        }
    return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("vector dimension mismatch");
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += (*this)(r, c) * v[c];
    return out;
}

RatVector IntMatrix::operator*(const RatVector& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("vector dimension mismatch");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += Rational((*this)(r, c)) * v[c];
    return out;
}

RatVector IntMatrix::apply_transpose(const RatVector& v) const {
    if (v.size() != rows_)
        throw std::invalid_argument("vector dimension mismatch");
    RatVector out(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[c] += Rational((*this)(r, c)) * v[r];
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0)
            return false;
    return true;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_)
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix a = *this;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
    // Fraction-free elimination on a copy; rank is the number of pivots.
    IntMatrix a = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a(pivot, c) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        a.swap_rows(rank, pivot);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (a(r, c) == 0)
                continue;
            Integer f = a(r, c);
            Integer p = a(rank, c);
            for (std::size_t j = c; j < cols_; ++j)
                a(r, j) = a(r, j) * p - a(rank, j) * f;
        }
        ++rank;
    }
    return rank;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::negate_column(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            out += ';';
        out += join(row(r));
    }
    return out;
}

}  // namespace prequant
