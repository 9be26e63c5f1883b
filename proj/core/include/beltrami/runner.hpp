#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "beltrami/config.hpp"

namespace beltrami {

/// Exit codes shared by the library entry points and the CLI.
enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_config_error = 2,
    exit_numerical_error = 3,
};

/// Write the basis manifest (JSON) and one sampled-field CSV per element.
int run_basis(const RunConfig& config, const std::filesystem::path& out_dir,
              std::ostream& log);

/// Run the residual suite against the pinned thresholds; one line per
/// check. When `out_dir` holds files from a previous basis run they are
/// cross-checked against freshly computed values. Returns exit_ok only if
/// every check passes.
int run_verify(const RunConfig& config,
               const std::optional<std::filesystem::path>& out_dir,
               std::ostream& log);

/// Least-squares boundary fit: coefficients JSON + interior field CSV.
int run_bvp(const RunConfig& config, const std::filesystem::path& out_dir,
            std::ostream& log);

/// Rebuild the closed-form cross-check artifacts and report the maximum
/// deviation between the numerically constructed system and the closed
/// forms (orders up to 3).
int run_example(const std::optional<std::filesystem::path>& out_dir,
                std::ostream& log);

} // namespace beltrami
