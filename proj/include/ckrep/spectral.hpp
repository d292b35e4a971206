#pragma once

#include "ckrep/matrix.hpp"
#include "ckrep/rational.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace ckrep {

struct PfOptions {
    double tol = 1e-12;              // relative convergence of eigenvalue estimates
    std::size_t max_iterations = 1000000;
};

struct PfResult {
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;  // positive, normalized to sum 1
    std::size_t iterations = 0;
};

/// Perron-Frobenius eigenvalue/eigenvector of an irreducible nonnegative
/// matrix. Power iteration runs on M + I so that periodic irreducible
/// matrices (which the admissible class allows) still converge.
/// Throws PreconditionError for reducible input and NumericError (carrying
/// the last iterate) when the iteration cap is hit.
PfResult pf_eigen(const std::vector<std::vector<double>>& m, const PfOptions& opts = {});

enum class ScalarMode { exact_rational, floating };
enum class ModePreference { automatic, force_exact, force_float };

/// A parameter vector a in (0,1)^n together with the normalized
/// Perron-Frobenius eigenvector x of diag(a)*A and the membership residual
/// PFE(diag(a)*A) - 1. Both vectors are stored as exact rationals (doubles
/// convert losslessly); mode() is exact_rational only when (diag(a)*A)x = x
/// has been verified in exact arithmetic, in which case residual() is 0.
class LambdaPoint {
public:
    const ZeroOneMatrix& matrix() const { return *matrix_; }
    std::shared_ptr<const ZeroOneMatrix> matrix_ptr() const { return matrix_; }
    std::size_t n() const { return a_.size(); }

    const std::vector<Rational>& a() const { return a_; }
    const std::vector<Rational>& x() const { return x_; }
    double a_d(std::size_t i) const { return to_double(a_[i]); }
    double x_d(std::size_t i) const { return to_double(x_[i]); }

    ScalarMode mode() const { return mode_; }
    bool exact() const { return mode_ == ScalarMode::exact_rational; }
    double residual() const { return residual_; }

    /// Exact construction: verifies a in (0,1)^n, x > 0, sum x = 1 and
    /// (diag(a)*A)x = x in rational arithmetic. Throws PreconditionError.
    static LambdaPoint from_exact(std::shared_ptr<const ZeroOneMatrix> a_matrix,
                                  std::vector<Rational> a, std::vector<Rational> x);

    friend LambdaPoint check_lambda_membership(std::shared_ptr<const ZeroOneMatrix>,
                                               const std::vector<Rational>&, double,
                                               ModePreference, std::int64_t);

private:
    LambdaPoint() = default;

    std::shared_ptr<const ZeroOneMatrix> matrix_;
    std::vector<Rational> a_, x_;
    ScalarMode mode_ = ScalarMode::floating;
    double residual_ = 0.0;
};

/// diag(a)*A as a dense double matrix. Throws DomainError unless a in (0,1)^n.
std::vector<std::vector<double>> hat_a_matrix(const ZeroOneMatrix& a_matrix,
                                              const std::vector<Rational>& a);

/// Signed residual PFE(diag(a)*A) - 1.
double lambda_residual(const ZeroOneMatrix& a_matrix, const std::vector<Rational>& a,
                       const PfOptions& opts = {});

/// Membership test. Accepts when |PFE - 1| <= tol and returns the point,
/// attempting the exact-rational lift of the eigenvector unless the mode
/// preference says otherwise; throws NotInLambdaError (carrying the signed
/// residual) on rejection.
LambdaPoint check_lambda_membership(std::shared_ptr<const ZeroOneMatrix> a_matrix,
                                    const std::vector<Rational>& a, double tol = 1e-9,
                                    ModePreference prefer = ModePreference::automatic,
                                    std::int64_t lift_max_den = 1000000);

/// Solve PFE(diag(a)*A) = 1 for the last coordinate by bisection over
/// (eps, 1-eps), eps = 1e-9, using strict monotonicity of the PF eigenvalue
/// in the matrix entries. Throws NoSolutionError when the bracket shows no
/// sign change.
LambdaPoint solve_last_coordinate(std::shared_ptr<const ZeroOneMatrix> a_matrix,
                                  const std::vector<Rational>& a_partial, double tol = 1e-9,
                                  ModePreference prefer = ModePreference::automatic);

}  // namespace ckrep
