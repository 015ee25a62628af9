/**
 * Exact rational scalars and dense rational matrices.
 *
 * Rank and determinant use fraction-free (Bareiss) elimination on an
 * integer-scaled copy of the matrix; kernels come from a reduced row echelon
 * form over the rationals. There are no pivot thresholds anywhere.
 */
#ifndef VOLRIG_LINALG_HPP
#define VOLRIG_LINALG_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace volrig {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "num/den" or a plain integer. Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// Always emits "num/den" in lowest terms with a positive denominator.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t size);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const
    {
        return data_[r * cols_ + c];
    }

    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;

    /// Submatrix formed by the given column indices, in the given order.
    RationalMatrix select_columns(const std::vector<std::size_t>& columns) const;
    RationalMatrix without(std::size_t row, std::size_t col) const;
    RationalMatrix transposed() const;

    RationalVector operator*(const RationalVector& x) const;
    RationalMatrix operator*(const RationalMatrix& other) const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& matrix);
Rational determinant(const RationalMatrix& matrix);

/// Basis of the right kernel {x : Mx = 0}; one vector per free column of the
/// reduced row echelon form.
std::vector<RationalVector> nullspace(const RationalMatrix& matrix);

/// Solves Mx = b for square invertible M; throws InvalidParameters otherwise.
RationalVector solve(const RationalMatrix& matrix, const RationalVector& rhs);

/// 2x2 determinant [u, v] = u_x v_y - v_x u_y.
inline Rational cross(const Rational& ux, const Rational& uy, const Rational& vx,
                      const Rational& vy)
{
    return ux * vy - vx * uy;
}

}  // namespace volrig

#endif
