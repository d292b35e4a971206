#include "ckrep/classify.hpp"

#include "ckrep/errors.hpp"
#include "ckrep/rational.hpp"

#include <cmath>
#include <numeric>

namespace ckrep {

std::optional<std::pair<double, std::vector<long>>> commensurate_exponents(
    const std::vector<double>& a, const TypeBounds& bounds) {
    const std::size_t n = a.size();
    if (n == 0) return std::nullopt;
    for (double ai : a)
        if (!(ai > 0.0 && ai < 1.0))
            throw DomainError("entries must lie strictly between 0 and 1");

    const double log_base = std::log(a[0]);
    std::vector<Rational> ratios(n);
    BigInt common_den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::log(a[i]) / log_base;  // positive
        ratios[i] = rational_approx(r, bounds.qmax, 1e-12);
        if (ratios[i] <= 0) return std::nullopt;
        common_den = boost::multiprecision::lcm(common_den, denominator(ratios[i]));
        if (common_den > bounds.pmax) return std::nullopt;
    }

    std::vector<long> p(n);
    long g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const BigInt pi = numerator(ratios[i]) * (common_den / denominator(ratios[i]));
        if (pi < 1 || pi > bounds.pmax) return std::nullopt;
        p[i] = pi.convert_to<long>();
        g = std::gcd(g, p[i]);
    }
    for (auto& pi : p) pi /= g;

    // lambda from the coordinate with the smallest exponent (numerically the
    // most stable root), verified on all coordinates.
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (p[i] < p[k]) k = i;
    const double lambda = std::exp(std::log(a[k]) / static_cast<double>(p[k]));
    if (!(lambda > 0.0 && lambda < 1.0)) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(a[i] - std::pow(lambda, static_cast<double>(p[i]))) > bounds.tol)
            return std::nullopt;
    return std::make_pair(lambda, std::move(p));
}

TypeClassification classify_type(const std::vector<double>& a, const TypeBounds& bounds) {
    TypeClassification out;
    out.bounds = bounds;
    if (auto found = commensurate_exponents(a, bounds)) {
        out.kind = TypeClassification::Kind::III_lambda;
        out.lambda = found->first;
        out.exponents = std::move(found->second);
    } else {
        out.kind = TypeClassification::Kind::III_one;
    }
    return out;
}

}  // namespace ckrep
