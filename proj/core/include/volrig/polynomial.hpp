/**
 * Dense univariate polynomials over Q, rational functions, and exact real
 * root counting/isolation with Sturm sequences.
 */
#ifndef VOLRIG_POLYNOMIAL_HPP
#define VOLRIG_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "volrig/linalg.hpp"

namespace volrig {

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients with the constant term first; trailing zeros are dropped.
    explicit Polynomial(RationalVector coefficients);
    Polynomial(const Rational& constant);  // NOLINT: implicit on purpose

    static Polynomial variable();
    static Polynomial monomial(const Rational& coefficient, int degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    const RationalVector& coefficients() const noexcept { return coefficients_; }
    Rational coefficient(int k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& t) const;
    double evaluate(double t) const;
    int sign_at(const Rational& t) const { return (*this)(t).sign(); }

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

    bool operator==(const Polynomial& other) const = default;

private:
    void trim();
    RationalVector coefficients_;
};

struct Division {
    Polynomial quotient;
    Polynomial remainder;
};

Division divide(const Polynomial& dividend, const Polynomial& divisor);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// f / gcd(f, f'), monic.
Polynomial square_free_part(const Polynomial& f);

/// p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k), each rescaled by a positive
/// constant to keep coefficients small.
std::vector<Polynomial> sturm_sequence(const Polynomial& f);

int sign_variations(const std::vector<Polynomial>& sequence, const Rational& t);
int sign_variations_at_infinity(const std::vector<Polynomial>& sequence, bool positive);

/// Number of distinct real roots; throws InvalidParameters for zero f.
std::size_t count_real_roots(const Polynomial& f);

/// Distinct real roots in the half-open interval (lower, upper].
std::size_t count_real_roots_in(const Polynomial& f, const Rational& lower, const Rational& upper);

/// Every real root lies strictly inside (-B, B).
Rational root_bound(const Polynomial& f);

/// A real root known to lie in the open interval (lower, upper), or exactly
/// at lower == upper.
struct RootInterval {
    Rational lower;
    Rational upper;

    bool is_exact() const { return lower == upper; }
    Rational midpoint() const { return (lower + upper) / 2; }
    Rational width() const { return upper - lower; }
    double approximate() const { return static_cast<double>(midpoint()); }
};

/// Disjoint isolating intervals for the distinct real roots, ascending, each
/// no wider than max_width. Rational roots are returned exactly whenever they
/// are found (bisection hit, simplest-fraction probe or linear deflation).
std::vector<RootInterval> isolate_real_roots(const Polynomial& f, const Rational& max_width = 1);

/// Narrows an isolating interval of a root of f down to max_width.
RootInterval refine_root(const Polynomial& f, RootInterval root, const Rational& max_width);

/// The fraction with the smallest denominator in the open interval (lower, upper).
Rational simplest_rational_between(const Rational& lower, const Rational& upper);

std::string to_string(const Polynomial& f);

/// numerator / denominator with gcd 1 and a monic denominator.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(Polynomial(), Polynomial(Rational(1))) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);
    RationalFunction(const Polynomial& numerator)  // NOLINT: implicit on purpose
        : RationalFunction(numerator, Polynomial(Rational(1))) {}
    RationalFunction(const Rational& constant)  // NOLINT: implicit on purpose
        : RationalFunction(Polynomial(constant), Polynomial(Rational(1))) {}

    const Polynomial& numerator() const noexcept { return numerator_; }
    const Polynomial& denominator() const noexcept { return denominator_; }

    /// Throws ExcludedRoot when t is a pole.
    Rational operator()(const Rational& t) const;
    double evaluate(double t) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    bool operator==(const RationalFunction& other) const = default;

private:
    Polynomial numerator_;
    Polynomial denominator_;
};

}  // namespace volrig

#endif
