#include "ckrep/interval_rep.hpp"

#include "ckrep/errors.hpp"

#include <cmath>

namespace ckrep {

IntervalSystem::IntervalSystem(LambdaPoint point) : point_(std::move(point)) {
    const std::size_t n = point_.n();
    const auto& a = point_.a();
    const auto& x = point_.x();
    const ZeroOneMatrix& m = point_.matrix();

    c_.assign(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) c_[i + 1] = c_[i] + x[i];
    if (c_[n] != 1) throw InternalError("interval system: breakpoints do not end at 1");
    for (std::size_t i = 0; i < n; ++i)
        if (!(c_[i] < c_[i + 1])) throw InternalError("interval system: breakpoints not increasing");

    b_formula_.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        Rational skipped(0);  // sum_{k<=j} (1 - A_ik) x_k
        for (std::size_t j = 0; j < n; ++j) {
            if (!m.entry(i, j)) skipped += x[j];
            b_formula_[i][j] = c_[i] - a[i] * skipped;
            if (j > 0 && b_formula_[i][j] > b_formula_[i][j - 1])
                throw InternalError("interval system: offset rows must be non-increasing");
        }
    }

    // Lay the target cells out contiguously with exact widths a_i * x_j and
    // clamp the row end to c_{i+1}; the defect is the row eigen-residual.
    cells_.assign(n * n, Cell{});
    for (std::size_t i = 0; i < n; ++i) {
        Rational pos = c_[i];
        std::ptrdiff_t last = -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!m.entry(i, j)) continue;
            Cell& cell = cells_[i * n + j];
            cell.present = true;
            cell.lo = pos;
            pos += a[i] * (c_[j + 1] - c_[j]);
            cell.hi = pos;
            cell.offset = cell.lo - a[i] * c_[j];
            last = static_cast<std::ptrdiff_t>(j);
        }
        if (last < 0) throw InternalError("interval system: row without admissible targets");
        const double defect = std::abs(to_double(Rational(pos - c_[i + 1])));
        tiling_defect_ = std::max(tiling_defect_, defect);
        if (point_.exact()) {
            if (pos != c_[i + 1])
                throw InternalError("interval system: exact point fails to tile a row");
        } else if (defect > 1e-9) {
            throw InternalError("interval system: tiling defect " + std::to_string(defect) +
                                " exceeds the bug-trap bound");
        }
        cells_[i * n + static_cast<std::size_t>(last)].hi = c_[i + 1];
    }

    // For exact points the cumulative layout must reproduce the closed
    // formulas verbatim.
    if (point_.exact()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Cell& cell = cells_[i * n + j];
                if (!cell.present) continue;
                if (cell.offset != b_formula_[i][j] ||
                    cell.lo != a[i] * c_[j] + b_formula_[i][j] ||
                    cell.hi != a[i] * c_[j + 1] + b_formula_[i][j])
                    throw InternalError("interval system: cells disagree with closed formulas");
            }
    }
}

IntervalSystem build_interval_system(LambdaPoint point) { return IntervalSystem(std::move(point)); }

}  // namespace ckrep
