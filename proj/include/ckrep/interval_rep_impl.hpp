#pragma once

// Template implementations for interval_rep.hpp; include that header instead.

#include <cmath>

namespace ckrep {

template <class V>
StepFunction<V> eta_apply(const IntervalSystem& sys, std::size_t i, const StepFunction<V>& f) {
    using Traits = scalar_traits<V>;
    const std::size_t n = sys.n();
    if (i >= n) throw DomainError("generator index out of range");
    const Rational& a_i = sys.point().a()[i];
    const V amp = Traits::sqrt_rational(Rational(1) / a_i);

    std::vector<Rational> bp{Rational(0)};
    std::vector<V> vals;
    auto append = [&](const Rational& hi, V v) {
        if (hi <= bp.back()) return;  // skip empty cells
        bp.push_back(hi);
        vals.push_back(std::move(v));
    };

    if (sys.c(i) > 0) append(sys.c(i), Traits::zero());
    for (std::size_t j = 0; j < n; ++j) {
        const auto& cell = sys.cell(i, j);
        if (!cell.present) continue;
        const Rational& rj_lo = sys.c(j);
        const Rational& rj_hi = sys.c(j + 1);
        // f's cells restricted to R_j, pushed through t |-> a_i t + offset.
        const auto& fb = f.breakpoints();
        for (std::size_t k = 0; k < f.values().size(); ++k) {
            const Rational lo = std::max(fb[k], rj_lo);
            const Rational hi = std::min(fb[k + 1], rj_hi);
            if (!(lo < hi)) continue;
            const Rational img_hi = (hi == rj_hi) ? cell.hi : Rational(a_i * hi + cell.offset);
            append(img_hi, V(amp * f.values()[k]));
        }
    }
    if (sys.c(i + 1) < 1) append(Rational(1), Traits::zero());
    if (bp.back() != 1) throw InternalError("eta_apply: transported cells do not reach 1");
    return StepFunction<V>(std::move(bp), std::move(vals));
}

template <class V>
StepFunction<V> eta_adjoint_apply(const IntervalSystem& sys, std::size_t i,
                                  const StepFunction<V>& f) {
    using Traits = scalar_traits<V>;
    const std::size_t n = sys.n();
    if (i >= n) throw DomainError("generator index out of range");
    const Rational& a_i = sys.point().a()[i];
    const V amp = Traits::sqrt_rational(a_i);

    std::vector<Rational> bp{Rational(0)};
    std::vector<V> vals;
    auto append = [&](const Rational& hi, V v) {
        if (hi <= bp.back()) return;
        bp.push_back(hi);
        vals.push_back(std::move(v));
    };

    for (std::size_t j = 0; j < n; ++j) {
        const auto& cell = sys.cell(i, j);
        if (!cell.present) {
            append(sys.c(j + 1), Traits::zero());
            continue;
        }
        // f's cells restricted to V_ij, pulled back by u |-> (u - offset)/a_i.
        const auto& fb = f.breakpoints();
        for (std::size_t k = 0; k < f.values().size(); ++k) {
            const Rational lo = std::max(fb[k], cell.lo);
            const Rational hi = std::min(fb[k + 1], cell.hi);
            if (!(lo < hi)) continue;
            const Rational pre_hi =
                (hi == cell.hi) ? sys.c(j + 1) : Rational((hi - cell.offset) / a_i);
            append(pre_hi, V(amp * f.values()[k]));
        }
        append(sys.c(j + 1), Traits::zero());  // in case f's support misses part of V_ij
    }
    if (bp.back() != 1) throw InternalError("eta_adjoint_apply: cells do not reach 1");
    return StepFunction<V>(std::move(bp), std::move(vals));
}

template <class V>
StepFunction<V> eta_apply_word(const IntervalSystem& sys, const MultiIndex& word,
                               StepFunction<V> f) {
    for (std::size_t t = word.size(); t-- > 0;) f = eta_apply(sys, word[t], f);
    return f;
}

template <class V>
StepFunction<V> eta_adjoint_apply_word(const IntervalSystem& sys, const MultiIndex& word,
                                       StepFunction<V> f) {
    for (std::size_t t = 0; t < word.size(); ++t) f = eta_adjoint_apply(sys, word[t], f);
    return f;
}

template <class V>
StepFunction<V> apply_monomial(const IntervalSystem& sys, const CKMonomial& m,
                               StepFunction<V> f) {
    if (!(m.context() == sys.point().matrix()))
        throw ContextMismatchError("monomial and system use different matrices");
    f = eta_adjoint_apply_word(sys, m.costar_word(), std::move(f));
    return eta_apply_word(sys, m.word(), std::move(f));
}

template <class V>
StepFunction<V> apply_formal_sum(const IntervalSystem& sys, const FormalSum& fsum,
                                 const StepFunction<V>& f) {
    using Traits = scalar_traits<V>;
    if (!(fsum.context() == sys.point().matrix()))
        throw ContextMismatchError("formal sum and system use different matrices");
    StepFunction<V> acc = StepFunction<V>::zero();
    for (const auto& [coeff, mono] : fsum.terms()) {
        StepFunction<V> part = apply_monomial(sys, mono, f);
        part *= Traits::from_rational(coeff);
        acc += part;
    }
    return acc;
}

template <class V>
V vector_state_value(const IntervalSystem& sys, const FormalSum& fsum) {
    const StepFunction<V> one = StepFunction<V>::one();
    return inner_product(one, apply_formal_sum(sys, fsum, one));
}

inline Radical vector_state_eval_exact(const IntervalSystem& sys, const FormalSum& fsum) {
    return vector_state_value<Radical>(sys, fsum);
}

inline double vector_state_eval(const IntervalSystem& sys, const FormalSum& fsum) {
    return vector_state_value<double>(sys, fsum);
}

template <class V>
std::vector<StepFunction<V>> cell_indicators(const IntervalSystem& sys) {
    std::vector<StepFunction<V>> out;
    out.reserve(sys.n());
    for (std::size_t i = 0; i < sys.n(); ++i)
        out.push_back(StepFunction<V>::indicator(sys.c(i), sys.c(i + 1)));
    return out;
}

template <class V>
RelationReport verify_ck_relations(const IntervalSystem& sys,
                                   const std::vector<StepFunction<V>>& probes) {
    using Traits = scalar_traits<V>;
    if (probes.empty()) throw DomainError("verify_ck_relations: no probes");
    const std::size_t n = sys.n();
    RelationReport report;

    auto record = [&](const std::string& name, const StepFunction<V>& diff) {
        const V ns = norm_sq(diff);
        RelationReport::Entry e;
        e.relation = name;
        e.exact_zero = Traits::is_zero(ns);
        e.residual = e.exact_zero ? 0.0 : std::sqrt(std::abs(Traits::real_to_double(ns)));
        if (e.residual >= report.max_residual) {
            report.max_residual = e.residual;
            report.worst = name;
        }
        report.all_exact_zero = report.all_exact_zero && e.exact_zero;
        report.entries.push_back(std::move(e));
    };

    for (std::size_t p = 0; p < probes.size(); ++p) {
        const auto& f = probes[p];
        const std::string tag = " (probe " + std::to_string(p + 1) + ")";
        for (std::size_t i = 0; i < n; ++i) {
            StepFunction<V> lhs = eta_adjoint_apply(sys, i, eta_apply(sys, i, f));
            StepFunction<V> rhs = StepFunction<V>::zero();
            for (std::size_t j = 0; j < n; ++j)
                if (sys.point().matrix().entry(i, j))
                    rhs += eta_apply(sys, j, eta_adjoint_apply(sys, j, f));
            record("s" + std::to_string(i + 1) + "'s" + std::to_string(i + 1) +
                       " = sum_j A(i,j) s_j s_j'" + tag,
                   lhs - rhs);
        }
        {
            StepFunction<V> sum = StepFunction<V>::zero();
            for (std::size_t i = 0; i < n; ++i)
                sum += eta_apply(sys, i, eta_adjoint_apply(sys, i, f));
            record("sum_i s_i s_i' = 1" + tag, sum - f);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                record("s" + std::to_string(i + 1) + "'s" + std::to_string(j + 1) + " = 0" + tag,
                       eta_adjoint_apply(sys, i, eta_apply(sys, j, f)));
            }
    }
    return report;
}

}  // namespace ckrep
