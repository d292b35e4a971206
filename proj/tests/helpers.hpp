#pragma once

#include "ckrep/classify.hpp"
#include "ckrep/gns.hpp"
#include "ckrep/interval_rep.hpp"
#include "ckrep/overlap.hpp"
#include "ckrep/sequence_rep.hpp"
#include "ckrep/spectral.hpp"
#include "ckrep/words.hpp"

#include <memory>
#include <numeric>
#include <optional>
#include <random>

namespace ckt {

using namespace ckrep;

inline Rational q(long num, long den = 1) { return Rational(num, den); }

// ---------------------------------------------------------------------------
// Fixture matrices and points
// ---------------------------------------------------------------------------

inline std::shared_ptr<const ZeroOneMatrix> all_ones(std::size_t n) {
    return std::make_shared<ZeroOneMatrix>(n, std::vector<int>(n * n, 1));
}

// Golden-mean shift: full row then a single return edge.
inline std::shared_ptr<const ZeroOneMatrix> golden_mean() {
    return std::make_shared<ZeroOneMatrix>(2, std::vector<int>{1, 1, 1, 0});
}

// 3x3 with holes on the first two diagonal slots.
inline std::shared_ptr<const ZeroOneMatrix> hole3() {
    return std::make_shared<ZeroOneMatrix>(3, std::vector<int>{0, 1, 1, 1, 0, 1, 1, 1, 1});
}

inline LambdaPoint hole3_point() {
    return LambdaPoint::from_exact(hole3(), {q(1, 3), q(1, 3), q(1, 2)},
                                   {q(1, 4), q(1, 4), q(1, 2)});
}

inline LambdaPoint golden_mean_point() {
    // a = (2/3, 1/2) has eigenvector (2/3, 1/3).
    return LambdaPoint::from_exact(golden_mean(), {q(2, 3), q(1, 2)}, {q(2, 3), q(1, 3)});
}

inline LambdaPoint cuntz_point(std::vector<Rational> a) {
    // For the full matrix the eigenvector equals a and membership means sum a = 1.
    auto m = all_ones(a.size());
    auto x = a;
    return LambdaPoint::from_exact(std::move(m), std::move(a), std::move(x));
}

inline LambdaPoint o2_half() { return cuntz_point({q(1, 2), q(1, 2)}); }
inline LambdaPoint o2_thirds() { return cuntz_point({q(1, 3), q(2, 3)}); }

// Floating fixture: a = (g, g^2) with g the positive root of g + g^2 = 1.
inline LambdaPoint o2_golden_float() {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    return check_lambda_membership(all_ones(2),
                                   {rational_from_double(g), rational_from_double(1.0 - g)});
}

// ---------------------------------------------------------------------------
// Random generators (deterministic seeds chosen by each test)
// ---------------------------------------------------------------------------

inline std::shared_ptr<const ZeroOneMatrix> random_admissible_matrix(std::mt19937_64& rng,
                                                                     std::size_t n) {
    std::bernoulli_distribution bit(0.6);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> entries(n * n);
        for (auto& e : entries) e = bit(rng) ? 1 : 0;
        auto m = std::make_shared<ZeroOneMatrix>(n, entries);
        if (m->admissible()) return m;
    }
    throw std::logic_error("random_admissible_matrix: rejection sampling failed");
}

/// Exact point from the inverse construction: pick a positive rational
/// eigenvector x with sum 1 and read a_i = x_i / (Ax)_i; the pair (a, x)
/// then satisfies the eigen-equation by arithmetic.
inline std::optional<LambdaPoint> random_exact_point(std::mt19937_64& rng,
                                                     std::shared_ptr<const ZeroOneMatrix> m) {
    const std::size_t n = m->n();
    std::uniform_int_distribution<long> weight(1, 20);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Rational> x(n);
        Rational sum(0);
        for (auto& xi : x) {
            xi = q(weight(rng));
            sum += xi;
        }
        for (auto& xi : x) xi /= sum;
        std::vector<Rational> a(n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Rational row(0);
            for (std::size_t j = 0; j < n; ++j)
                if (m->entry(i, j)) row += x[j];
            a[i] = x[i] / row;
            ok = a[i] > 0 && a[i] < 1;
        }
        if (!ok) continue;
        return LambdaPoint::from_exact(m, std::move(a), std::move(x));
    }
    return std::nullopt;
}

inline StepFunction<Radical> random_step_function(std::mt19937_64& rng, std::size_t cells = 4) {
    std::uniform_int_distribution<long> num(1, 23);
    std::uniform_int_distribution<long> den(24, 60);
    std::uniform_int_distribution<long> val(-5, 5);
    std::vector<Rational> bp{q(0)};
    for (std::size_t k = 0; k + 1 < cells; ++k) bp.push_back(Rational(num(rng), den(rng)));
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    bp.push_back(q(1));
    std::vector<Radical> vals;
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) vals.emplace_back(q(val(rng), 3));
    return {std::move(bp), std::move(vals)};
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

/// One branch y in [lo, hi) |-> factor * f(alpha*y + beta) of a piecewise
/// affine pullback operator.
template <class V>
struct PullbackPiece {
    Rational lo, hi;
    V factor;
    Rational alpha, beta;
};

/// Evaluates sum of branch pullbacks on a step function by midpoint
/// sampling over the refined cell grid — deliberately different mechanics
/// from the transport implementation it cross-checks.
template <class V>
StepFunction<V> pullback_oracle(const StepFunction<V>& f,
                                const std::vector<PullbackPiece<V>>& pieces) {
    using Traits = scalar_traits<V>;
    std::vector<Rational> bp{q(0), q(1)};
    for (const auto& piece : pieces) {
        bp.push_back(piece.lo);
        bp.push_back(piece.hi);
        for (const auto& t : f.breakpoints()) {
            const Rational y = (t - piece.beta) / piece.alpha;
            if (piece.lo < y && y < piece.hi) bp.push_back(y);
        }
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    while (bp.front() < 0) bp.erase(bp.begin());
    while (bp.back() > 1) bp.pop_back();

    std::vector<V> vals;
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const Rational mid = (bp[k] + bp[k + 1]) / 2;
        V v = Traits::zero();
        for (const auto& piece : pieces) {
            if (piece.lo <= mid && mid < piece.hi)
                v = v + piece.factor * f.value_at(piece.alpha * mid + piece.beta);
        }
        vals.push_back(std::move(v));
    }
    return {std::move(bp), std::move(vals)};
}

/// Word-sum evaluation of T_m: sum over all index words of length m of
/// D_{j1 j2} ... D_{j_{m-1} j_m} v_{j_m}.
template <class V>
V t_brute_force(const OverlapData<V>& data, std::size_t m) {
    using Traits = scalar_traits<V>;
    const std::size_t n = data.v.size();
    V total = Traits::zero();
    std::vector<std::size_t> word(m, 0);
    while (true) {
        V term = Traits::one();
        for (std::size_t k = 0; k + 1 < m; ++k) term = term * data.d[word[k]][word[k + 1]];
        term = term * data.v[word[m - 1]];
        total = total + term;
        std::size_t pos = m;
        while (pos > 0 && word[pos - 1] == n - 1) word[--pos] = 0;
        if (pos == 0) break;
        ++word[pos - 1];
    }
    return total;
}

/// Exhaustive commensurability search: every exponent vector with entries
/// in [1, pmax] and gcd 1, lambda read off the first coordinate.
inline std::optional<std::pair<double, std::vector<long>>> classify_brute_force(
    const std::vector<double>& a, long pmax, double tol) {
    const std::size_t n = a.size();
    std::vector<long> p(n, 1);
    std::optional<std::pair<double, std::vector<long>>> best;
    while (true) {
        long g = 0;
        for (long pi : p) g = std::gcd(g, pi);
        if (g == 1) {
            const double lambda = std::pow(a[0], 1.0 / static_cast<double>(p[0]));
            bool ok = lambda > 0.0 && lambda < 1.0;
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = std::abs(a[i] - std::pow(lambda, static_cast<double>(p[i]))) <= tol;
            if (ok && !best) best = {lambda, p};
        }
        std::size_t pos = n;
        while (pos > 0 && p[pos - 1] == pmax) p[--pos] = 1;
        if (pos == 0) break;
        ++p[pos - 1];
    }
    return best;
}

}  // namespace ckt
