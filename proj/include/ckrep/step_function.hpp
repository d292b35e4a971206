#pragma once

#include "ckrep/errors.hpp"
#include "ckrep/scalar_traits.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace ckrep {

/// Piecewise-constant function on [0,1]: exact rational breakpoints
/// 0 = t_0 < ... < t_M = 1 and one value per cell [t_k, t_{k+1})
/// (half-open cell convention; shared endpoints belong to the right cell).
/// The value scalar V is Radical, double or complex<double>.
template <class V>
class StepFunction {
public:
    using Traits = scalar_traits<V>;

    StepFunction() : StepFunction(Traits::zero()) {}

    explicit StepFunction(V constant_value)
        : breakpoints_{Rational(0), Rational(1)}, values_{std::move(constant_value)} {}

    StepFunction(std::vector<Rational> breakpoints, std::vector<V> values)
        : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
        if (breakpoints_.size() < 2 || values_.size() + 1 != breakpoints_.size())
            throw DomainError("step function: breakpoint/value count mismatch");
        if (breakpoints_.front() != 0 || breakpoints_.back() != 1)
            throw DomainError("step function must span [0,1]");
        for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k)
            if (!(breakpoints_[k] < breakpoints_[k + 1]))
                throw DomainError("step function breakpoints must be strictly increasing");
    }

    static StepFunction constant(V v) { return StepFunction(std::move(v)); }
    static StepFunction zero() { return StepFunction(); }
    static StepFunction one() { return StepFunction(Traits::one()); }

    /// Indicator of [lo, hi); requires 0 <= lo < hi <= 1.
    static StepFunction indicator(const Rational& lo, const Rational& hi) {
        if (lo < 0 || hi > 1 || !(lo < hi)) throw DomainError("indicator: bad interval");
        std::vector<Rational> bp{Rational(0)};
        std::vector<V> vals;
        if (lo > 0) {
            bp.push_back(lo);
            vals.push_back(Traits::zero());
        }
        bp.push_back(hi);
        vals.push_back(Traits::one());
        if (hi < 1) {
            bp.push_back(Rational(1));
            vals.push_back(Traits::zero());
        }
        return StepFunction(std::move(bp), std::move(vals));
    }

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<V>& values() const { return values_; }
    std::size_t cell_count() const { return values_.size(); }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(),
                           [](const V& v) { return Traits::is_zero(v); });
    }

    /// Value of the cell containing t; t = 1 reads the last cell.
    const V& value_at(const Rational& t) const {
        if (t < 0 || t > 1) throw DomainError("value_at: argument outside [0,1]");
        auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
        std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin());
        if (k >= breakpoints_.size()) k = breakpoints_.size() - 1;  // t == 1
        return values_[k - 1];
    }

    /// Merge adjacent cells carrying equal values.
    StepFunction normalized() const {
        std::vector<Rational> bp{breakpoints_.front()};
        std::vector<V> vals;
        for (std::size_t k = 0; k < values_.size(); ++k) {
            if (!vals.empty() && vals.back() == values_[k]) {
                bp.back() = breakpoints_[k + 1];
            } else {
                vals.push_back(values_[k]);
                bp.push_back(breakpoints_[k + 1]);
            }
        }
        return StepFunction(std::move(bp), std::move(vals));
    }

    StepFunction& operator*=(const V& s) {
        for (auto& v : values_) v = v * s;
        return *this;
    }
    friend StepFunction operator*(const V& s, StepFunction f) { return f *= s; }

    StepFunction operator-() const {
        StepFunction out = *this;
        for (auto& v : out.values_) v = V(Traits::zero() - v);
        return out;
    }

    friend StepFunction operator+(const StepFunction& f, const StepFunction& g) {
        return combine(f, g, /*subtract=*/false);
    }
    friend StepFunction operator-(const StepFunction& f, const StepFunction& g) {
        return combine(f, g, /*subtract=*/true);
    }
    StepFunction& operator+=(const StepFunction& g) { return *this = *this + g; }
    StepFunction& operator-=(const StepFunction& g) { return *this = *this - g; }

    /// Structural equality after normalization (exact for exact scalars).
    friend bool operator==(const StepFunction& f, const StepFunction& g) {
        StepFunction a = f.normalized(), b = g.normalized();
        return a.breakpoints_ == b.breakpoints_ && a.values_ == b.values_;
    }

private:
    static StepFunction combine(const StepFunction& f, const StepFunction& g, bool subtract) {
        std::vector<Rational> bp{Rational(0)};
        std::vector<V> vals;
        std::size_t i = 0, j = 0;
        while (i < f.values_.size() && j < g.values_.size()) {
            V v = subtract ? V(f.values_[i] - g.values_[j]) : V(f.values_[i] + g.values_[j]);
            const Rational& fe = f.breakpoints_[i + 1];
            const Rational& ge = g.breakpoints_[j + 1];
            const Rational& next = fe < ge ? fe : ge;
            vals.push_back(std::move(v));
            bp.push_back(next);
            if (fe == next) ++i;
            if (ge == next) ++j;
        }
        return StepFunction(std::move(bp), std::move(vals));
    }

    std::vector<Rational> breakpoints_;
    std::vector<V> values_;
};

/// L2 pairing sum_cells conj(f) * g * width over the common refinement;
/// exact when V is exact.
template <class V>
V inner_product(const StepFunction<V>& f, const StepFunction<V>& g) {
    using Traits = scalar_traits<V>;
    V acc = Traits::zero();
    std::size_t i = 0, j = 0;
    Rational t(0);
    while (i < f.values().size() && j < g.values().size()) {
        const Rational& fe = f.breakpoints()[i + 1];
        const Rational& ge = g.breakpoints()[j + 1];
        const Rational& next = fe < ge ? fe : ge;
        acc = acc + Traits::conj(f.values()[i]) * g.values()[j] *
                        Traits::from_rational(next - t);
        if (fe == next) ++i;
        if (ge == next) ++j;
        t = next;
    }
    return acc;
}

template <class V>
V norm_sq(const StepFunction<V>& f) {
    return inner_product(f, f);
}

}  // namespace ckrep
