#pragma once

#include "ckrep/interval_rep.hpp"
#include "ckrep/matrix.hpp"
#include "ckrep/radical.hpp"
#include "ckrep/spectral.hpp"
#include "ckrep/step_function.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace ckrep {

/// Matrix file: first line n, then n lines of n space-separated 0/1 digits.
/// Parse errors carry 1-based line numbers.
ZeroOneMatrix parse_matrix_stream(std::istream& in, const std::string& source_name);
ZeroOneMatrix parse_matrix_file(const std::string& path);

nlohmann::json diagnostics_json(const MatrixDiagnostics& d);
nlohmann::json lambda_point_json(const LambdaPoint& p);
nlohmann::json interval_system_json(const IntervalSystem& sys);

/// {breakpoints:[...], values:[...]} with doubles; exact-mode functions add
/// breakpoints_exact / values_exact string arrays.
nlohmann::json step_function_json(const StepFunction<double>& f);
nlohmann::json step_function_json(const StepFunction<Radical>& f);

}  // namespace ckrep
