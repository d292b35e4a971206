#include "ckrep/spectral.hpp"

#include "ckrep/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ckrep {

namespace {

void check_open_unit_cube(const std::vector<Rational>& a) {
    for (const auto& ai : a)
        if (ai <= 0 || ai >= 1)
            throw DomainError("parameter entries must lie strictly between 0 and 1");
}

// Exact check of (diag(a)*A)x = x with sum x = 1, x > 0.
bool eigen_verifies(const ZeroOneMatrix& m, const std::vector<Rational>& a,
                    const std::vector<Rational>& x) {
    const std::size_t n = m.n();
    Rational sum(0);
    for (const auto& xi : x) {
        if (xi <= 0) return false;
        sum += xi;
    }
    if (sum != 1) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < n; ++j)
            if (m.entry(i, j)) row += x[j];
        if (a[i] * row != x[i]) return false;
    }
    return true;
}

}  // namespace

PfResult pf_eigen(const std::vector<std::vector<double>>& m, const PfOptions& opts) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("empty matrix");
    for (const auto& row : m) {
        if (row.size() != n) throw DomainError("matrix is not square");
        for (double e : row)
            if (e < 0.0 || !std::isfinite(e)) throw DomainError("matrix entries must be >= 0");
    }
    if (!is_irreducible_pattern(m)) throw PreconditionError("matrix is reducible");

    // Iterate with M + I; the +1 shift cancels at the end.
    std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n);
    double lambda_prev = 0.0;
    for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = v[i];
            for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * v[j];
            w[i] = acc;
            sum += acc;
        }
        const double lambda = sum;  // sum(v) == 1
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / sum;

        if (it > 1 && std::abs(lambda - lambda_prev) <= opts.tol * std::max(1.0, std::abs(lambda))) {
            // Also require a small eigen-residual before declaring convergence.
            double resid = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * v[j];
                resid = std::max(resid, std::abs(acc - (lambda - 1.0) * v[i]));
            }
            if (resid <= 10.0 * opts.tol * std::max(1.0, std::abs(lambda)))
                return {lambda - 1.0, v, it};
        }
        lambda_prev = lambda;
    }
    throw NumericError("power iteration failed to converge", lambda_prev - 1.0, v);
}

std::vector<std::vector<double>> hat_a_matrix(const ZeroOneMatrix& a_matrix,
                                              const std::vector<Rational>& a) {
    if (a.size() != a_matrix.n()) throw DomainError("parameter vector length mismatch");
    check_open_unit_cube(a);
    const std::size_t n = a_matrix.n();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const double ai = to_double(a[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (a_matrix.entry(i, j)) m[i][j] = ai;
    }
    return m;
}

double lambda_residual(const ZeroOneMatrix& a_matrix, const std::vector<Rational>& a,
                       const PfOptions& opts) {
    a_matrix.require_admissible();
    return pf_eigen(hat_a_matrix(a_matrix, a), opts).eigenvalue - 1.0;
}

LambdaPoint LambdaPoint::from_exact(std::shared_ptr<const ZeroOneMatrix> a_matrix,
                                    std::vector<Rational> a, std::vector<Rational> x) {
    a_matrix->require_admissible();
    if (a.size() != a_matrix->n() || x.size() != a_matrix->n())
        throw DomainError("vector length mismatch");
    check_open_unit_cube(a);
    if (!eigen_verifies(*a_matrix, a, x))
        throw PreconditionError("(diag(a)A)x = x does not hold exactly");
    LambdaPoint p;
    p.matrix_ = std::move(a_matrix);
    p.a_ = std::move(a);
    p.x_ = std::move(x);
    p.mode_ = ScalarMode::exact_rational;
    p.residual_ = 0.0;
    return p;
}

LambdaPoint check_lambda_membership(std::shared_ptr<const ZeroOneMatrix> a_matrix,
                                    const std::vector<Rational>& a, double tol,
                                    ModePreference prefer, std::int64_t lift_max_den) {
    a_matrix->require_admissible();
    auto m = hat_a_matrix(*a_matrix, a);
    PfOptions opts;
    opts.tol = std::min(1e-13, tol / 10.0);
    const PfResult pf = pf_eigen(m, opts);
    const double signed_residual = pf.eigenvalue - 1.0;
    if (std::abs(signed_residual) > tol)
        throw NotInLambdaError("PFE(diag(a)A) - 1 = " + std::to_string(signed_residual) +
                                   " exceeds tolerance",
                               signed_residual);

    LambdaPoint p;
    p.matrix_ = std::move(a_matrix);
    p.a_ = a;

    if (prefer != ModePreference::force_float) {
        std::vector<Rational> lifted(pf.eigenvector.size());
        for (std::size_t i = 0; i < lifted.size(); ++i)
            lifted[i] = rational_approx(pf.eigenvector[i], lift_max_den);
        if (eigen_verifies(p.matrix(), a, lifted)) {
            p.x_ = std::move(lifted);
            p.mode_ = ScalarMode::exact_rational;
            p.residual_ = 0.0;
            return p;
        }
        if (prefer == ModePreference::force_exact)
            throw DomainError("exact mode requested but the eigenvector does not verify exactly");
    }

    // Floating mode: keep the iterate, renormalized so sum x = 1 holds exactly.
    std::vector<Rational> x(pf.eigenvector.size());
    Rational sum(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rational_from_double(pf.eigenvector[i]);
        sum += x[i];
    }
    for (auto& xi : x) xi /= sum;
    p.x_ = std::move(x);
    p.mode_ = ScalarMode::floating;
    p.residual_ = signed_residual;
    return p;
}

LambdaPoint solve_last_coordinate(std::shared_ptr<const ZeroOneMatrix> a_matrix,
                                  const std::vector<Rational>& a_partial, double tol,
                                  ModePreference prefer) {
    a_matrix->require_admissible();
    const std::size_t n = a_matrix->n();
    if (a_partial.size() != n - 1)
        throw DomainError("expected " + std::to_string(n - 1) + " leading coordinates");
    check_open_unit_cube(a_partial);

    const double eps = 1e-9;  // the open cube excludes the endpoints
    std::vector<Rational> a(a_partial);
    a.push_back(Rational(0));
    PfOptions opts;
    opts.tol = 1e-13;
    auto f = [&](double t) {
        a[n - 1] = rational_from_double(t);
        return pf_eigen(hat_a_matrix(*a_matrix, a), opts).eigenvalue - 1.0;
    };

    double lo = eps, hi = 1.0 - eps;
    double flo = f(lo), fhi = f(hi);
    if (flo > 0.0 || fhi < 0.0)
        throw NoSolutionError("PFE - 1 does not change sign over the slice: f(" +
                              std::to_string(lo) + ") = " + std::to_string(flo) + ", f(" +
                              std::to_string(hi) + ") = " + std::to_string(fhi));

    // PFE is strictly increasing in the last coordinate, so the root is unique.
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double root = 0.5 * (lo + hi);

    // Prefer an exact rational root when one verifies end to end.
    if (prefer != ModePreference::force_float) {
        const Rational snapped = rational_approx(root, 100000);
        if (snapped > 0 && snapped < 1) {
            a[n - 1] = snapped;
            try {
                LambdaPoint p = check_lambda_membership(a_matrix, a, tol, prefer);
                if (p.exact()) return p;
            } catch (const Error&) {
                // fall through to the floating root
            }
        }
    }
    a[n - 1] = rational_from_double(root);
    return check_lambda_membership(a_matrix, a, tol, prefer);
}

}  // namespace ckrep
