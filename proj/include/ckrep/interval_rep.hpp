#pragma once

#include "ckrep/spectral.hpp"
#include "ckrep/step_function.hpp"
#include "ckrep/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ckrep {

/// The interval geometry attached to a parameter point: breakpoints
/// c_i = x_1 + ... + x_i, offsets b_ij = c_{i-1} - a_i sum_{k<=j}(1-A_ik)x_k,
/// source intervals R_i = [c_{i-1}, c_i] and target intervals
/// V_ij = [a_i c_{j-1} + b_ij, a_i c_j + b_ij] for A_ij = 1, which tile R_i.
///
/// All geometry is exact rational. For a floating point (eigen-equation
/// verified only approximately) the V_ij are laid out cumulatively with
/// widths a_i * x_j and the final right endpoint clamped to c_i; the clamp
/// defect is the eigen-residual (identically zero for exact points, where
/// the built cells coincide with the closed formulas).
class IntervalSystem {
public:
    struct Cell {
        bool present = false;
        Rational lo, hi;
        Rational offset;  // transport map R_j -> V_ij is t |-> a_i * t + offset
    };

    explicit IntervalSystem(LambdaPoint point);

    const LambdaPoint& point() const { return point_; }
    std::size_t n() const { return point_.n(); }
    bool exact() const { return point_.exact(); }

    /// c_0 = 0, ..., c_n = 1.
    const std::vector<Rational>& breakpoints() const { return c_; }
    const Rational& c(std::size_t i) const { return c_[i]; }

    /// Offset from the closed formula (0-based: b(i,j) is b_{i+1,j+1}).
    const Rational& offset_formula(std::size_t i, std::size_t j) const {
        return b_formula_[i][j];
    }

    const Cell& cell(std::size_t i, std::size_t j) const { return cells_[i * n() + j]; }

    /// Largest clamp adjustment across rows; 0 for exact points.
    double tiling_defect() const { return tiling_defect_; }

private:
    LambdaPoint point_;
    std::vector<Rational> c_;
    std::vector<std::vector<Rational>> b_formula_;
    std::vector<Cell> cells_;
    double tiling_defect_ = 0.0;
};

IntervalSystem build_interval_system(LambdaPoint point);

/// eta(s_i): the part of f living on R_j is transported onto V_ij by
/// t |-> a_i t + b_ij with amplitude factor a_i^{-1/2}; zero outside R_i.
template <class V>
StepFunction<V> eta_apply(const IntervalSystem& sys, std::size_t i, const StepFunction<V>& f);

/// eta(s_i)^*: (s_i^* f)(t) = a_i^{1/2} f(a_i t + b_ij) on R_j when
/// A_ij = 1, zero on R_j otherwise.
template <class V>
StepFunction<V> eta_adjoint_apply(const IntervalSystem& sys, std::size_t i,
                                  const StepFunction<V>& f);

/// eta(s_J) f, letters applied right to left.
template <class V>
StepFunction<V> eta_apply_word(const IntervalSystem& sys, const MultiIndex& word,
                               StepFunction<V> f);

/// eta(s_J)^* f = s_{j_m}^* ... s_{j_1}^* f.
template <class V>
StepFunction<V> eta_adjoint_apply_word(const IntervalSystem& sys, const MultiIndex& word,
                                       StepFunction<V> f);

/// eta(s_J s_K^*) f.
template <class V>
StepFunction<V> apply_monomial(const IntervalSystem& sys, const CKMonomial& m,
                               StepFunction<V> f);

/// Linear extension over a FormalSum.
template <class V>
StepFunction<V> apply_formal_sum(const IntervalSystem& sys, const FormalSum& fsum,
                                 const StepFunction<V>& f);

/// <1, eta(f_sum) 1>.
template <class V>
V vector_state_value(const IntervalSystem& sys, const FormalSum& fsum);

Radical vector_state_eval_exact(const IntervalSystem& sys, const FormalSum& fsum);
double vector_state_eval(const IntervalSystem& sys, const FormalSum& fsum);

/// Indicators of the source intervals R_1..R_n.
template <class V>
std::vector<StepFunction<V>> cell_indicators(const IntervalSystem& sys);

struct RelationReport {
    struct Entry {
        std::string relation;
        double residual = 0.0;
        bool exact_zero = false;
    };
    std::vector<Entry> entries;
    double max_residual = 0.0;
    bool all_exact_zero = true;
    std::string worst;
};

/// Residuals of the defining relations on the probe functions:
/// s_i^* s_i = sum_j A_ij s_j s_j^*, sum_i s_i s_i^* = I, s_i^* s_j = 0 (i != j).
template <class V>
RelationReport verify_ck_relations(const IntervalSystem& sys,
                                   const std::vector<StepFunction<V>>& probes);

}  // namespace ckrep

#include "ckrep/interval_rep_impl.hpp"
