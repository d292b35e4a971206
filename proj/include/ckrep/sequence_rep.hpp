#pragma once

#include "ckrep/errors.hpp"
#include "ckrep/scalar_traits.hpp"

#include <cmath>
#include <cstdint>
#include <map>

namespace ckrep {

/// Finitely supported vector over the standard basis e_1, e_2, ... of
/// l2(N); explicit zeros are never stored.
template <class V>
class SequenceVector {
public:
    using Traits = scalar_traits<V>;

    SequenceVector() = default;

    static SequenceVector basis(std::int64_t k) {
        if (k < 1) throw DomainError("basis index must be >= 1");
        SequenceVector v;
        v.comps_[k] = Traits::one();
        return v;
    }

    bool is_zero() const { return comps_.empty(); }
    const std::map<std::int64_t, V>& components() const { return comps_; }

    void set(std::int64_t k, V v) {
        if (Traits::is_zero(v))
            comps_.erase(k);
        else
            comps_[k] = std::move(v);
    }

    void add(std::int64_t k, const V& v) {
        auto it = comps_.find(k);
        if (it == comps_.end()) {
            if (!Traits::is_zero(v)) comps_.emplace(k, v);
            return;
        }
        it->second = it->second + v;
        if (Traits::is_zero(it->second)) comps_.erase(it);
    }

    SequenceVector& operator+=(const SequenceVector& o) {
        for (const auto& [k, v] : o.comps_) add(k, v);
        return *this;
    }
    SequenceVector& operator-=(const SequenceVector& o) {
        for (const auto& [k, v] : o.comps_) add(k, V(Traits::zero() - v));
        return *this;
    }
    SequenceVector& operator*=(const V& s) {
        if (Traits::is_zero(s)) {
            comps_.clear();
            return *this;
        }
        for (auto& [k, v] : comps_) v = v * s;
        return *this;
    }

    friend bool operator==(const SequenceVector& a, const SequenceVector& b) {
        return a.comps_ == b.comps_;
    }

private:
    std::map<std::int64_t, V> comps_;
};

template <class V>
V inner_product(const SequenceVector<V>& f, const SequenceVector<V>& g) {
    using Traits = scalar_traits<V>;
    V acc = Traits::zero();
    const auto& a = f.components();
    const auto& b = g.components();
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (it->first < jt->first)
            ++it;
        else if (jt->first < it->first)
            ++jt;
        else {
            acc = acc + Traits::conj(it->second) * jt->second;
            ++it;
            ++jt;
        }
    }
    return acc;
}

/// The two-generator sequence realization on l2(N) for a parameter pair
/// (a, b), a + b = 1:
///   s_1 e_n = sqrt(a) e_{2n-1} - sqrt(b) e_{2n},
///   s_2 e_n = sqrt(b) e_{2n-1} + sqrt(a) e_{2n},
/// with the adjoints read off rowwise. The cyclic vector is e_1.
template <class V>
class PairSequenceRep {
public:
    using Traits = scalar_traits<V>;
    using Value = V;
    using Vec = SequenceVector<V>;

    PairSequenceRep(const Rational& a, const Rational& b) : a_(a), b_(b) {
        if (a <= 0 || a >= 1 || b <= 0 || b >= 1)
            throw DomainError("pair parameters must lie strictly between 0 and 1");
        if (std::abs(to_double(Rational(a + b - 1))) > 1e-9)
            throw DomainError("pair parameters must satisfy a + b = 1");
        sqrt_a_ = Traits::sqrt_rational(a);
        sqrt_b_ = Traits::sqrt_rational(b);
    }

    std::size_t n() const { return 2; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    Vec cyclic() const { return Vec::basis(1); }
    Vec zero_vec() const { return {}; }

    Vec apply(std::size_t i, const Vec& v) const {
        if (i >= 2) throw DomainError("generator index out of range");
        Vec out;
        for (const auto& [k, c] : v.components()) {
            if (k > (std::int64_t{1} << 60)) throw ResourceError("sequence index overflow");
            if (i == 0) {
                out.add(2 * k - 1, V(sqrt_a_ * c));
                out.add(2 * k, V(Traits::zero() - sqrt_b_ * c));
            } else {
                out.add(2 * k - 1, V(sqrt_b_ * c));
                out.add(2 * k, V(sqrt_a_ * c));
            }
        }
        return out;
    }

    Vec apply_adjoint(std::size_t i, const Vec& v) const {
        if (i >= 2) throw DomainError("generator index out of range");
        Vec out;
        for (const auto& [k, c] : v.components()) {
            if (k % 2 == 1) {  // e_{2n-1} component
                out.add((k + 1) / 2, V((i == 0 ? sqrt_a_ : sqrt_b_) * c));
            } else {  // e_{2n} component
                out.add(k / 2, i == 0 ? V(Traits::zero() - sqrt_b_ * c) : V(sqrt_a_ * c));
            }
        }
        return out;
    }

    Value inner(const Vec& u, const Vec& v) const { return inner_product(u, v); }

private:
    Rational a_, b_;
    V sqrt_a_, sqrt_b_;
};

}  // namespace ckrep
