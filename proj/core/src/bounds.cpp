#include "volrig/bounds.hpp"

#include <algorithm>

#include "volrig/errors.hpp"

namespace volrig {

namespace {

Integer factorial(long k)
{
    Integer out = 1;
    for (long i = 2; i <= k; ++i)
        out *= i;
    return out;
}

Integer binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer out = 1;
    for (long i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

Integer as_integer(const Rational& value, const char* what)
{
    require(denominator(value) == 1, ErrorKind::InternalConsistency,
            std::string(what) + " evaluated to a non-integer");
    return numerator(value);
}

}  // namespace

ClassBounds::ClassBounds(Integer lower_bound, std::optional<Integer> upper_bound,
                         std::vector<BoundRule> rules)
    : lower(std::move(lower_bound)), upper(std::move(upper_bound)), provenance(std::move(rules))
{
    require(lower >= 1, ErrorKind::InvalidParameters, "lower bound must be at least 1");
    require(!upper || lower <= *upper, ErrorKind::InvalidParameters,
            "lower bound exceeds upper bound");
}

Rational borcea_streinu_bound(int d, int n)
{
    require(d >= 1, ErrorKind::InvalidParameters, "dimension must be positive");
    require(n >= d + 1, ErrorKind::InvalidParameters, "need n >= d + 1");
    Rational out(factorial(static_cast<long>(d) * (n - d - 1)));
    for (int i = 0; i < d; ++i)
        out *= Rational(factorial(i), factorial(n - d - 1 + i));
    as_integer(out, "the mixed-volume bound");
    return out;
}

Integer catalan_bound(int n)
{
    require(n >= 4, ErrorKind::InvalidParameters, "the Catalan bound needs n >= 4");
    return as_integer(Rational(binomial(2 * n - 6, n - 3), Integer(n - 2)), "the Catalan bound");
}

Integer bipyramid_bound(int n)
{
    require(n >= 5, ErrorKind::InvalidParameters, "the bipyramid bound needs n >= 5");
    return n - 4;
}

Integer parity_lower_bound(int n)
{
    require(n >= 5, ErrorKind::InvalidParameters, "the parity bound needs n >= 5");
    return n % 2 == 0 ? 2 : 1;
}

ClassBounds gluing_bounds(const std::vector<ClassBounds>& parts)
{
    require(!parts.empty(), ErrorKind::InvalidParameters, "nothing to glue");
    Integer lower = 1;
    std::optional<Integer> upper = Integer(1);
    std::vector<BoundRule> rules;
    for (const auto& part : parts) {
        lower *= part.lower;
        if (upper && part.upper)
            *upper *= *part.upper;
        else
            upper.reset();
        rules.insert(rules.end(), part.provenance.begin(), part.provenance.end());
    }
    rules.push_back({"Gluing", {static_cast<long>(parts.size())}});
    return ClassBounds(lower, upper, std::move(rules));
}

ClassBounds combined_bounds(int d, int n, bool minimally_rigid, bool triangulation,
                            bool is_bipyramid)
{
    Integer lower = 1;
    std::optional<Integer> upper;
    std::vector<BoundRule> rules;
    auto tighten_upper = [&](const Integer& value, BoundRule rule) {
        if (!upper || value < *upper)
            upper = value;
        rules.push_back(std::move(rule));
    };
    if (minimally_rigid && n >= d + 1)
        tighten_upper(numerator(borcea_streinu_bound(d, n)), {"Eq1", {d, n}});
    if (d == 2 && triangulation && n >= 4)
        tighten_upper(catalan_bound(n), {"Catalan", {n}});
    if (d == 2 && is_bipyramid && n >= 5) {
        tighten_upper(bipyramid_bound(n), {"Bipyramid", {n}});
        lower = parity_lower_bound(n);
        rules.push_back({"Parity", {n}});
    }
    return ClassBounds(lower, upper, std::move(rules));
}

}  // namespace volrig
