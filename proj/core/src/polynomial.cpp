#include "volrig/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "volrig/errors.hpp"

namespace volrig {

Polynomial::Polynomial(RationalVector coefficients) : coefficients_(std::move(coefficients))
{
    trim();
}

Polynomial::Polynomial(const Rational& constant)
{
    if (constant != 0)
        coefficients_.push_back(constant);
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& coefficient, int degree)
{
    RationalVector c(degree + 1);
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

void Polynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back() == 0)
        coefficients_.pop_back();
}

Rational Polynomial::coefficient(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coefficients_[k];
}

const Rational& Polynomial::leading() const
{
    require(!is_zero(), ErrorKind::InvalidParameters, "zero polynomial has no leading coefficient");
    return coefficients_.back();
}

Rational Polynomial::operator()(const Rational& t) const
{
    Rational value = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        value = value * t + *it;
    return value;
}

double Polynomial::evaluate(double t) const
{
    double value = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        value = value * t + static_cast<double>(*it);
    return value;
}

Polynomial Polynomial::derivative() const
{
    if (degree() < 1)
        return {};
    RationalVector c(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k)
        c[k - 1] = coefficients_[k] * static_cast<long>(k);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return {};
    Polynomial out = *this;
    const Rational lead = leading();
    for (auto& c : out.coefficients_)
        c /= lead;
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coefficients_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.coefficients_.size() > coefficients_.size())
        coefficients_.resize(other.coefficients_.size());
    for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
        coefficients_[k] += other.coefficients_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.coefficients_.size() > coefficients_.size())
        coefficients_.resize(other.coefficients_.size());
    for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
        coefficients_[k] -= other.coefficients_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    if (is_zero() || other.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    RationalVector product(coefficients_.size() + other.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] == 0)
            continue;
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
    coefficients_ = std::move(product);
    trim();
    return *this;
}

Division divide(const Polynomial& dividend, const Polynomial& divisor)
{
    require(!divisor.is_zero(), ErrorKind::InvalidParameters, "division by the zero polynomial");
    if (dividend.degree() < divisor.degree())
        return {Polynomial(), dividend};
    RationalVector rem = dividend.coefficients();
    const int dd = divisor.degree();
    RationalVector quot(dividend.degree() - dd + 1);
    const Rational& lead = divisor.leading();
    for (int k = dividend.degree() - dd; k >= 0; --k) {
        const Rational factor = rem[k + dd] / lead;
        quot[k] = factor;
        if (factor == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[k + j] -= factor * divisor.coefficients()[j];
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = divide(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Polynomial square_free_part(const Polynomial& f)
{
    require(!f.is_zero(), ErrorKind::InvalidParameters, "square-free part of the zero polynomial");
    if (f.degree() < 1)
        return f.monic();
    return divide(f, gcd(f, f.derivative())).quotient.monic();
}

namespace {

// Positive rescaling keeps signs and keeps the Sturm chain coefficients small.
Polynomial normalized_positive(const Polynomial& p)
{
    if (p.is_zero())
        return p;
    const Rational lead = abs(p.leading());
    RationalVector c = p.coefficients();
    for (auto& x : c)
        x /= lead;
    return Polynomial(std::move(c));
}

int count_variations(const std::vector<int>& signs)
{
    int variations = 0;
    int previous = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (previous != 0 && s != previous)
            ++variations;
        previous = s;
    }
    return variations;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& f)
{
    require(!f.is_zero(), ErrorKind::InvalidParameters, "Sturm sequence of the zero polynomial");
    std::vector<Polynomial> seq{normalized_positive(f)};
    Polynomial next = normalized_positive(f.derivative());
    while (!next.is_zero()) {
        seq.push_back(next);
        next = normalized_positive(-divide(seq[seq.size() - 2], seq.back()).remainder);
    }
    return seq;
}

int sign_variations(const std::vector<Polynomial>& sequence, const Rational& t)
{
    std::vector<int> signs;
    signs.reserve(sequence.size());
    for (const auto& p : sequence)
        signs.push_back(p.sign_at(t));
    return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<Polynomial>& sequence, bool positive)
{
    std::vector<int> signs;
    signs.reserve(sequence.size());
    for (const auto& p : sequence) {
        int s = p.leading().sign();
        if (!positive && p.degree() % 2 == 1)
            s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

std::size_t count_real_roots(const Polynomial& f)
{
    require(!f.is_zero(), ErrorKind::InvalidParameters, "the zero polynomial has infinitely many roots");
    const auto seq = sturm_sequence(square_free_part(f));
    return static_cast<std::size_t>(sign_variations_at_infinity(seq, false) -
                                    sign_variations_at_infinity(seq, true));
}

std::size_t count_real_roots_in(const Polynomial& f, const Rational& lower, const Rational& upper)
{
    require(!f.is_zero(), ErrorKind::InvalidParameters, "the zero polynomial has infinitely many roots");
    if (!(lower < upper))
        return 0;
    const auto seq = sturm_sequence(square_free_part(f));
    return static_cast<std::size_t>(sign_variations(seq, lower) - sign_variations(seq, upper));
}

Rational root_bound(const Polynomial& f)
{
    require(!f.is_zero(), ErrorKind::InvalidParameters, "root bound of the zero polynomial");
    // Cauchy: |root| <= 1 + max |a_k / a_n|.
    Rational largest = 0;
    for (int k = 0; k < f.degree(); ++k)
        largest = std::max(largest, Rational(abs(f.coefficients()[k] / f.leading())));
    return largest + 2;
}

Rational simplest_rational_between(const Rational& lower, const Rational& upper)
{
    require(lower < upper, ErrorKind::InvalidParameters, "empty interval");
    if (lower < 0 && upper > 0)
        return 0;
    if (upper <= 0)
        return -simplest_rational_between(-upper, -lower);
    // 0 <= lower < upper from here on.
    const Integer floor_lower = numerator(lower) / denominator(lower);
    const Rational candidate = Rational(floor_lower + 1);
    if (candidate < upper)
        return candidate;
    // Both ends share the integer part; recurse on the reciprocals of the
    // fractional parts.
    const Rational base(floor_lower);
    const Rational lo_frac = lower - base;
    const Rational hi_frac = upper - base;
    if (lo_frac == 0) {
        const Rational inv = 1 / hi_frac;
        const Integer whole = numerator(inv) / denominator(inv);
        return base + 1 / Rational(whole + 1);
    }
    return base + 1 / simplest_rational_between(1 / hi_frac, 1 / lo_frac);
}

namespace {

struct Isolator {
    Polynomial square_free;
    std::vector<Polynomial> sturm;
    Rational max_width;
    std::vector<RootInterval> roots;

    void run(const Rational& lower, const Rational& upper, int below, int above)
    {
        const int count = below - above;
        if (count <= 0)
            return;
        if (count == 1) {
            if (square_free.sign_at(upper) == 0) {
                roots.push_back({upper, upper});
                return;
            }
            if (upper - lower <= max_width) {
                roots.push_back({lower, upper});
                return;
            }
        }
        const Rational mid = (lower + upper) / 2;
        const int at_mid = sign_variations(sturm, mid);
        run(lower, mid, below, at_mid);
        run(mid, upper, at_mid, above);
    }
};

// Tries to pin a bracketed root to an exact rational.
void try_exact(const Polynomial& square_free, RootInterval& root)
{
    if (root.is_exact())
        return;
    const Rational probe = simplest_rational_between(root.lower, root.upper);
    if (square_free.sign_at(probe) == 0)
        root = {probe, probe};
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& f, const Rational& max_width)
{
    require(max_width > 0, ErrorKind::InvalidParameters, "isolation width must be positive");
    Isolator iso{square_free_part(f), {}, max_width, {}};
    if (iso.square_free.degree() < 1)
        return {};
    iso.sturm = sturm_sequence(iso.square_free);
    const Rational bound = root_bound(iso.square_free);
    iso.run(-bound, bound, sign_variations(iso.sturm, -bound), sign_variations(iso.sturm, bound));

    for (auto& root : iso.roots)
        try_exact(iso.square_free, root);

    // Whatever is left after removing the exact roots; a linear remainder
    // gives its root exactly.
    Polynomial rest = iso.square_free;
    std::size_t inexact = 0;
    for (const auto& root : iso.roots) {
        if (root.is_exact())
            rest = divide(rest, Polynomial(RationalVector{-root.lower, Rational(1)})).quotient;
        else
            ++inexact;
    }
    if (inexact == 1 && rest.degree() == 1) {
        const Rational value = -rest.coefficient(0) / rest.coefficient(1);
        for (auto& root : iso.roots)
            if (!root.is_exact())
                root = {value, value};
    }
    return iso.roots;
}

RootInterval refine_root(const Polynomial& f, RootInterval root, const Rational& max_width)
{
    if (root.is_exact())
        return root;
    const Polynomial g = square_free_part(f);
    const auto seq = sturm_sequence(g);
    // Invariant: exactly one root of g in (lower, upper], and upper is not a
    // root. The lower end may be another root; Sturm counts handle that.
    while (root.width() > max_width) {
        const Rational mid = root.midpoint();
        if (g.sign_at(mid) == 0)
            return {mid, mid};
        if (sign_variations(seq, root.lower) - sign_variations(seq, mid) == 1)
            root.upper = mid;
        else
            root.lower = mid;
    }
    return root;
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const Rational& c = f.coefficients()[k];
        if (c == 0)
            continue;
        if (!first)
            out << (c > 0 ? " + " : " - ");
        else if (c < 0)
            out << "-";
        const Rational magnitude = abs(c);
        if (magnitude != 1 || k == 0)
            out << magnitude.str();
        if (k >= 1)
            out << "t";
        if (k >= 2)
            out << "^" << k;
        first = false;
    }
    return out.str();
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
{
    require(!denominator.is_zero(), ErrorKind::InvalidParameters, "rational function with zero denominator");
    if (numerator.is_zero()) {
        denominator_ = Polynomial(Rational(1));
        return;
    }
    const Polynomial common = gcd(numerator, denominator);
    if (common.degree() > 0) {
        numerator = divide(numerator, common).quotient;
        denominator = divide(denominator, common).quotient;
    }
    const Rational lead = denominator.leading();
    numerator_ = divide(numerator, Polynomial(lead)).quotient;
    denominator_ = denominator.monic();
}

Rational RationalFunction::operator()(const Rational& t) const
{
    const Rational den = denominator_(t);
    require(den != 0, ErrorKind::ExcludedRoot, "rational function evaluated at a pole");
    return numerator_(t) / den;
}

double RationalFunction::evaluate(double t) const
{
    return numerator_.evaluate(t) / denominator_.evaluate(t);
}

RationalFunction RationalFunction::operator-() const
{
    return RationalFunction(-numerator_, denominator_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.denominator_ == b.denominator_)
        return RationalFunction(a.numerator_ + b.numerator_, a.denominator_);
    return RationalFunction(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                            a.denominator_ * b.denominator_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    require(!b.numerator_.is_zero(), ErrorKind::InvalidParameters, "division by the zero rational function");
    return RationalFunction(a.numerator_ * b.denominator_, a.denominator_ * b.numerator_);
}

}  // namespace volrig
