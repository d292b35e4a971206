#pragma once

#include "ckrep/errors.hpp"
#include "ckrep/scalar_traits.hpp"
#include "ckrep/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ckrep {

/// Overlap data for two points on the same matrix: the matrix
/// D_ij = sqrt(a_i b_i A_ij), the vector v_j = sqrt(x_j y_j), the Schwarz
/// row ratios c_i = sum_j D_ij v_j / v_i and their maximum c. For a != b
/// the lemma guarantees 0 < c < 1; a == b is the degenerate boundary with
/// every ratio exactly 1.
template <class V>
struct OverlapData {
    OverlapData(LambdaPoint pa, LambdaPoint pb)
        : point_a(std::move(pa)), point_b(std::move(pb)) {}

    LambdaPoint point_a, point_b;
    std::vector<std::vector<V>> d;
    std::vector<V> v;
    std::vector<double> row_ratios;
    double c = 1.0;
    bool degenerate = false;
};

template <class V>
OverlapData<V> overlap_data(const LambdaPoint& point_a, const LambdaPoint& point_b) {
    using Traits = scalar_traits<V>;
    if (!(point_a.matrix() == point_b.matrix()))
        throw ContextMismatchError("points live over different matrices");
    const std::size_t n = point_a.n();
    OverlapData<V> data(point_a, point_b);
    data.degenerate = point_a.a() == point_b.a();
    data.d.assign(n, std::vector<V>(n, Traits::zero()));
    data.v.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        data.v[j] = Traits::sqrt_rational(point_a.x()[j] * point_b.x()[j]);
    for (std::size_t i = 0; i < n; ++i) {
        const V d_row = Traits::sqrt_rational(point_a.a()[i] * point_b.a()[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (point_a.matrix().entry(i, j)) data.d[i][j] = d_row;
    }
    data.row_ratios.resize(n);
    double max_ratio = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        V acc = Traits::zero();
        for (std::size_t j = 0; j < n; ++j) acc = acc + data.d[i][j] * data.v[j];
        data.row_ratios[i] =
            Traits::real_to_double(acc) / Traits::real_to_double(data.v[i]);
        max_ratio = std::max(max_ratio, data.row_ratios[i]);
    }
    data.c = data.degenerate ? 1.0 : max_ratio;
    return data;
}

/// T_m = 1^T D^{m-1} v for m = 2..m_max, via repeated matrix-vector
/// products (no word enumeration). Exact when V is exact.
template <class V>
std::vector<V> t_sequence(const OverlapData<V>& data, std::size_t m_max) {
    using Traits = scalar_traits<V>;
    if (m_max < 2) throw DomainError("t_sequence: m_max must be >= 2");
    const std::size_t n = data.v.size();
    std::vector<V> u = data.v;
    std::vector<V> out;
    out.reserve(m_max - 1);
    for (std::size_t m = 2; m <= m_max; ++m) {
        std::vector<V> next(n, Traits::zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) next[i] = next[i] + data.d[i][j] * u[j];
        u = std::move(next);
        V total = Traits::zero();
        for (const auto& ui : u) total = total + ui;
        out.push_back(total);
    }
    return out;
}

/// The overlap bound |<xi|zeta>| <= T_m.
double overlap_bound(const OverlapData<double>& data, std::size_t m);

/// The conditional bound q * T_m with q = sqrt(a_{i0} b_{i0'}/(x_{i0} y_{i0'}))
/// (0-based indices). Degenerate data yields 1.
double conditional_overlap_bound(const OverlapData<double>& data, std::size_t i0,
                                 std::size_t i0_prime, std::size_t m);

struct Certificate {
    double c = 1.0;
    bool degenerate = false;
    double epsilon = 0.0;
    /// Smallest m >= 2 with T_m <= epsilon, when reached within the
    /// tabulation cap.
    std::optional<std::size_t> m_star;
    /// Smallest m with the analytic guarantee c^{m-1} <= epsilon.
    std::size_t guarantee_m = 0;
    std::vector<double> t_head;  // T_2, T_3, ... (at most head_size values)
    std::string verdict;
};

/// Distinctness certificate: computes c, tabulates T_m until it falls below
/// epsilon (or the cap), and reports the geometric guarantee c^{m-1} that
/// holds regardless of tabulation.
Certificate inequivalence_certificate(const LambdaPoint& point_a, const LambdaPoint& point_b,
                                      double epsilon, std::size_t tab_cap = 1000000,
                                      std::size_t head_size = 32);

}  // namespace ckrep
