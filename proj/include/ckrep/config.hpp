#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace ckrep {

/// Runtime knobs shared by the CLI subcommands. Values load from defaults,
/// then an optional key=value config file (path argument or the
/// CKREP_CONFIG environment variable), then per-invocation flags.
struct RunConfig {
    double tol_eigen = 1e-12;
    double tol_membership = 1e-9;
    double tol_classify = 1e-9;
    double tol_compare = 1e-12;
    long pmax = 64;
    std::int64_t qmax = 1000000;
    std::size_t max_len = 4;
    std::size_t length_cap = 8;
    double epsilon = 1e-6;
    std::string mode = "auto";     // auto | exact | float
    std::string format = "table";  // table | json

    /// Throws DomainError when caps or tolerances are non-positive or an
    /// enum string is unknown.
    void validate() const;
};

/// Name of the environment variable holding a config file path.
inline constexpr const char* kConfigEnvVar = "CKREP_CONFIG";

/// Load defaults overlaid with the config file (explicit path wins over the
/// environment variable; a missing explicit file is an error, a missing
/// env-var file is ignored).
RunConfig load_config(const std::optional<std::string>& explicit_path = std::nullopt);

}  // namespace ckrep
