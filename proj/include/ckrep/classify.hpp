#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ckrep {

struct TypeBounds {
    long pmax = 64;
    std::int64_t qmax = 1000000;
    double tol = 1e-9;
};

struct TypeClassification {
    enum class Kind { III_lambda, III_one };
    Kind kind = Kind::III_one;
    double lambda = 0.0;           // set iff kind == III_lambda
    std::vector<long> exponents;   // gcd 1, set iff kind == III_lambda
    TypeBounds bounds;             // the decision context, always recorded
};

/// Search for 0 < lambda < 1 and positive integers p with gcd 1 such that
/// a_i = lambda^{p_i} within bounds.tol. Exponent ratios are reconstructed
/// from ln a_i / ln a_1 via continued-fraction convergents (denominators
/// <= qmax), cleared to integers, gcd-reduced and capped at pmax; lambda is
/// recovered from the coordinate with the smallest exponent and the
/// candidate is verified on every coordinate. Returns nullopt when no
/// candidate verifies — a bounded-search result, not a proof.
std::optional<std::pair<double, std::vector<long>>> commensurate_exponents(
    const std::vector<double>& a, const TypeBounds& bounds = {});

/// III_lambda with the found (lambda, p), else III_one annotated with the
/// search bounds. Entries outside (0,1) throw DomainError.
TypeClassification classify_type(const std::vector<double>& a, const TypeBounds& bounds = {});

}  // namespace ckrep
