#include "volrig/linalg.hpp"

#include <algorithm>
#include <utility>

#include "volrig/errors.hpp"

namespace volrig {

namespace {

bool is_digits(std::string_view text)
{
    if (text.empty())
        return false;
    return std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_integer(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (!is_digits(digits))
        fail(ErrorKind::InvalidParameters, "malformed rational '" + std::string(text) + "'");
    return Integer(std::string(text.front() == '+' ? text.substr(1) : text));
}

using IntegerRows = std::vector<std::vector<Integer>>;

// Each row multiplied by the lcm of its denominators; rank and the sign
// pattern of minors are unchanged, determinants pick up the row scales.
IntegerRows integer_rows(const RationalMatrix& m, Rational* scale = nullptr)
{
    IntegerRows rows(m.rows(), std::vector<Integer>(m.cols()));
    Rational total = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            lcm = boost::multiprecision::lcm(lcm, denominator(m(r, c)));
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = numerator(m(r, c)) * (lcm / denominator(m(r, c)));
        total *= lcm;
    }
    if (scale)
        *scale = total;
    return rows;
}

// Fraction-free elimination in place; returns the rank and, through `sign`,
// the parity of the row swaps performed.
std::size_t bareiss(IntegerRows& a, std::size_t cols, int* sign = nullptr)
{
    const std::size_t rows = a.size();
    std::size_t r = 0;
    int swaps = 1;
    Integer previous = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r) {
            std::swap(a[pivot], a[r]);
            swaps = -swaps;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / previous;
            a[i][c] = 0;
        }
        previous = a[r][c];
        ++r;
    }
    if (sign)
        *sign = swaps;
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text))
        fail(ErrorKind::InvalidParameters, "malformed rational '" + std::string(text) + "'");
    const Integer den(std::string{den_text});
    if (den == 0)
        fail(ErrorKind::InvalidParameters, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value)
{
    return numerator(value).str() + "/" + denominator(value).str();
}

RationalMatrix RationalMatrix::identity(std::size_t size)
{
    RationalMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        m(i, i) = 1;
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const
{
    return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RationalVector RationalMatrix::column(std::size_t c) const
{
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<std::size_t>& columns) const
{
    RationalMatrix out(rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < columns.size(); ++k)
            out(r, k) = (*this)(r, columns[k]);
    return out;
}

RationalMatrix RationalMatrix::without(std::size_t row, std::size_t col) const
{
    RationalMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
        if (r == row)
            continue;
        for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
            if (c == col)
                continue;
            out(rr, cc++) = (*this)(r, c);
        }
        ++rr;
    }
    return out;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = (*this)(r, c);
    return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const
{
    require(x.size() == cols_, ErrorKind::InvalidParameters, "matrix-vector size mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero())
                out[r] += (*this)(r, c) * x[c];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
    require(cols_ == other.rows_, ErrorKind::InvalidParameters, "matrix product size mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(r, k).is_zero())
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out(r, c) += (*this)(r, k) * other(k, c);
        }
    return out;
}

std::size_t rank(const RationalMatrix& matrix)
{
    if (matrix.rows() == 0 || matrix.cols() == 0)
        return 0;
    IntegerRows rows = integer_rows(matrix);
    return bareiss(rows, matrix.cols());
}

Rational determinant(const RationalMatrix& matrix)
{
    require(matrix.rows() == matrix.cols(), ErrorKind::InvalidParameters,
            "determinant of a non-square matrix");
    const std::size_t size = matrix.rows();
    if (size == 0)
        return 1;
    Rational scale;
    IntegerRows rows = integer_rows(matrix, &scale);
    int swap_sign = 1;
    if (bareiss(rows, size, &swap_sign) < size)
        return 0;
    return Rational(rows[size - 1][size - 1]) * swap_sign / scale;
}

std::vector<RationalVector> nullspace(const RationalMatrix& matrix)
{
    RationalMatrix a = matrix;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c).is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(pivot, j), a(r, j));
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero())
                continue;
            const Rational factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -a(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalVector solve(const RationalMatrix& matrix, const RationalVector& rhs)
{
    const std::size_t size = matrix.rows();
    require(matrix.cols() == size && rhs.size() == size, ErrorKind::InvalidParameters,
            "solve expects a square system");
    RationalMatrix a(size, size + 1);
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c)
            a(r, c) = matrix(r, c);
        a(r, size) = rhs[r];
    }
    for (std::size_t c = 0; c < size; ++c) {
        std::size_t pivot = c;
        while (pivot < size && a(pivot, c).is_zero())
            ++pivot;
        require(pivot < size, ErrorKind::InvalidParameters, "singular linear system");
        if (pivot != c)
            for (std::size_t j = 0; j <= size; ++j)
                std::swap(a(pivot, j), a(c, j));
        for (std::size_t i = 0; i < size; ++i) {
            if (i == c || a(i, c).is_zero())
                continue;
            const Rational factor = a(i, c) / a(c, c);
            for (std::size_t j = c; j <= size; ++j)
                a(i, j) -= factor * a(c, j);
        }
    }
    RationalVector x(size);
    for (std::size_t i = 0; i < size; ++i)
        x[i] = a(i, size) / a(i, i);
    return x;
}

}  // namespace volrig
