#pragma once

#include "ckrep/free_group.hpp"
#include "ckrep/interval_rep.hpp"
#include "ckrep/words.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace ckrep {

/// Backend view of the interval representation, so that the word/moment
/// machinery below can drive eta directly or through the tensor product.
template <class V>
struct IntervalRep {
    using Value = V;
    using Vec = StepFunction<V>;

    explicit IntervalRep(const IntervalSystem& system) : sys(&system) {}

    const IntervalSystem* sys;

    std::size_t n() const { return sys->n(); }
    Vec cyclic() const { return Vec::one(); }
    Vec zero_vec() const { return Vec::zero(); }
    Vec apply(std::size_t i, const Vec& f) const { return eta_apply(*sys, i, f); }
    Vec apply_adjoint(std::size_t i, const Vec& f) const { return eta_adjoint_apply(*sys, i, f); }
    Value inner(const Vec& f, const Vec& g) const { return inner_product(f, g); }
};

/// Finitely supported map group element -> base vector, i.e. an element of
/// (base space) tensor l2(F_n). Zero components are never stored.
template <class Base>
struct TensorVector {
    using Vec = typename Base::Vec;
    using Value = typename Base::Value;

    std::map<ReducedWord, Vec> comps;

    bool is_zero() const { return comps.empty(); }

    TensorVector& operator+=(const TensorVector& o) {
        for (const auto& [g, f] : o.comps) {
            auto it = comps.find(g);
            if (it == comps.end()) {
                comps.emplace(g, f);
            } else {
                it->second += f;
                if (it->second.is_zero()) comps.erase(it);
            }
        }
        return *this;
    }
    TensorVector& operator-=(const TensorVector& o) {
        TensorVector neg = o;
        for (auto& [g, f] : neg.comps) f *= scalar_traits<Value>::from_rational(Rational(-1));
        return *this += neg;
    }
    TensorVector& operator*=(const Value& s) {
        if (scalar_traits<Value>::is_zero(s)) {
            comps.clear();
            return *this;
        }
        for (auto& [g, f] : comps) f *= s;
        return *this;
    }
};

/// The tensor representation s_i |-> base(s_i) (x) U_{xi_i}, where U is the
/// left regular representation of the free group. The group keys supply a
/// Kronecker delta: positive words xi_J coincide only when J = K.
template <class Base>
struct TensorRep {
    using Value = typename Base::Value;
    using Vec = TensorVector<Base>;

    explicit TensorRep(Base b) : base(std::move(b)) {}

    Base base;

    std::size_t n() const { return base.n(); }

    Vec cyclic() const {
        Vec v;
        v.comps.emplace(ReducedWord::identity(), base.cyclic());
        return v;
    }
    Vec zero_vec() const { return {}; }

    Vec apply(std::size_t i, const Vec& tv) const {
        if (i >= n()) throw DomainError("generator index out of range");
        Vec out;
        for (const auto& [g, f] : tv.comps) {
            auto nf = base.apply(i, f);
            if (!nf.is_zero()) out.comps.emplace(g.left_mul(i, false), std::move(nf));
        }
        return out;
    }

    Vec apply_adjoint(std::size_t i, const Vec& tv) const {
        if (i >= n()) throw DomainError("generator index out of range");
        Vec out;
        for (const auto& [g, f] : tv.comps) {
            auto nf = base.apply_adjoint(i, f);
            if (!nf.is_zero()) out.comps.emplace(g.left_mul(i, true), std::move(nf));
        }
        return out;
    }

    Value inner(const Vec& u, const Vec& v) const {
        Value acc = scalar_traits<Value>::zero();
        auto it = u.comps.begin();
        auto jt = v.comps.begin();
        while (it != u.comps.end() && jt != v.comps.end()) {
            if (it->first < jt->first)
                ++it;
            else if (jt->first < it->first)
                ++jt;
            else {
                acc = acc + base.inner(it->second, jt->second);
                ++it;
                ++jt;
            }
        }
        return acc;
    }
};

/// rep(s_J) v: letters act right to left.
template <class Rep>
typename Rep::Vec apply_word(const Rep& rep, const MultiIndex& word, typename Rep::Vec v) {
    for (std::size_t t = word.size(); t-- > 0;) v = rep.apply(word[t], v);
    return v;
}

/// rep(s_J)^* v = rep(s_{j_m})^* ... rep(s_{j_1})^* v.
template <class Rep>
typename Rep::Vec apply_word_adjoint(const Rep& rep, const MultiIndex& word,
                                     typename Rep::Vec v) {
    for (std::size_t t = 0; t < word.size(); ++t) v = rep.apply_adjoint(word[t], v);
    return v;
}

/// <cyclic, rep(s_J s_K^*) cyclic>.
template <class Rep>
typename Rep::Value moment_value(const Rep& rep, const CKMonomial& m) {
    auto v = apply_word_adjoint(rep, m.costar_word(), rep.cyclic());
    v = apply_word(rep, m.word(), std::move(v));
    return rep.inner(rep.cyclic(), v);
}

/// Moment of the tensor representation built over the given base.
template <class Base>
typename Base::Value gns_moment_value(const Base& base, const CKMonomial& m) {
    return moment_value(TensorRep<Base>(base), m);
}

inline Radical gns_moment_exact(const IntervalSystem& sys, const CKMonomial& m) {
    return gns_moment_value(IntervalRep<Radical>(sys), m);
}
inline double gns_moment(const IntervalSystem& sys, const CKMonomial& m) {
    return scalar_traits<double>::real_to_double(
        gns_moment_value(IntervalRep<double>(sys), m));
}

template <class Value>
struct MomentEntry {
    MultiIndex word, costar_word;
    Value value;
};

/// All moments <cyclic, rep(s_J s_K^*) cyclic> over nonzero monomial pairs
/// with |J|, |K| <= max_len (the identity pair included). Computed through
/// cached adjoint words: the moment equals <rep(s_J)* cyclic, rep(s_K)* cyclic>.
template <class Rep>
std::vector<MomentEntry<typename Rep::Value>> moment_table(const Rep& rep,
                                                           const ZeroOneMatrix& context,
                                                           std::size_t max_len,
                                                           std::size_t length_cap = 8) {
    if (rep.n() != context.n()) throw ContextMismatchError("representation/matrix size mismatch");
    if (max_len > length_cap)
        throw ResourceError("max_len " + std::to_string(max_len) + " exceeds cap " +
                            std::to_string(length_cap));
    std::vector<MultiIndex> words{{}};
    for (std::size_t l = 1; l <= max_len; ++l)
        for (auto& w : enumerate_admissible(context, l)) words.push_back(std::move(w));

    std::vector<typename Rep::Vec> adjoint_orbit;
    adjoint_orbit.reserve(words.size());
    for (const auto& w : words)
        adjoint_orbit.push_back(apply_word_adjoint(rep, w, rep.cyclic()));

    auto ctx = std::make_shared<ZeroOneMatrix>(context);
    std::vector<MomentEntry<typename Rep::Value>> out;
    for (std::size_t p = 0; p < words.size(); ++p)
        for (std::size_t q = 0; q < words.size(); ++q) {
            if (!CKMonomial::try_make(ctx, words[p], words[q])) continue;
            out.push_back({words[p], words[q], rep.inner(adjoint_orbit[p], adjoint_orbit[q])});
        }
    return out;
}

struct StateComparisonReport {
    double max_deviation = 0.0;
    bool all_exact = true;  // meaningful for exact value scalars only
    std::size_t pairs_checked = 0;
    std::size_t failures = 0;  // deviations above tol
    std::string worst_pair;
};

/// Compare the representation's cyclic-vector moments against the
/// quasi-free state of the point on all nonzero monomial pairs up to
/// max_len.
template <class Rep>
StateComparisonReport compare_states(const Rep& rep, const LambdaPoint& p, std::size_t max_len,
                                     double tol = 1e-12) {
    using Value = typename Rep::Value;
    using Traits = scalar_traits<Value>;
    auto ctx = p.matrix_ptr();
    StateComparisonReport report;
    for (const auto& entry : moment_table(rep, p.matrix(), max_len)) {
        const auto mono = CKMonomial::make(ctx, entry.word, entry.costar_word);
        const Rational expected = quasifree_eval_exact(p, mono);
        const Value diff = entry.value - Traits::from_rational(expected);
        const bool exact_zero = Traits::is_zero(diff);
        const double dev = exact_zero ? 0.0 : std::abs(Traits::real_to_double(diff));
        report.all_exact = report.all_exact && exact_zero;
        ++report.pairs_checked;
        if (dev > tol) ++report.failures;
        if (dev >= report.max_deviation) {
            report.max_deviation = dev;
            report.worst_pair = mono.str();
        }
    }
    return report;
}

struct GpReport {
    double residual = 0.0;
    bool exact_zero = false;
    double z_norm_deviation = 0.0;  // | ||z||^2 - 1 |, recorded rather than enforced
};

/// Residual || rep(z_1 s_1 + ... + z_n s_n) candidate - candidate ||.
template <class Rep>
GpReport gp_fixed_point_check(const Rep& rep, const std::vector<typename Rep::Value>& z,
                              const typename Rep::Vec& candidate) {
    using Value = typename Rep::Value;
    using Traits = scalar_traits<Value>;
    if (z.size() != rep.n()) throw DomainError("coefficient vector length mismatch");

    typename Rep::Vec w = rep.zero_vec();
    Value zn = Traits::zero();
    for (std::size_t i = 0; i < z.size(); ++i) {
        auto part = rep.apply(i, candidate);
        part *= z[i];
        w += part;
        zn = zn + Traits::conj(z[i]) * z[i];
    }
    w -= candidate;
    const Value ns = rep.inner(w, w);
    GpReport report;
    report.exact_zero = Traits::is_zero(ns);
    report.residual = report.exact_zero ? 0.0 : std::sqrt(std::abs(Traits::real_to_double(ns)));
    report.z_norm_deviation = std::abs(Traits::real_to_double(zn) - 1.0);
    return report;
}

}  // namespace ckrep
