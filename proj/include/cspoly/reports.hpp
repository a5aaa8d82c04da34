#pragma once

#include "cspoly/families.hpp"
#include "cspoly/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace cspoly {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitClaimFailure = 2,
    kExitSolverFailure = 3,
    kExitConfigError = 4,
};

/// Parameters of one command run.
struct RunConfig {
    std::string command;
    unsigned m = 2;
    std::optional<unsigned> s;
    unsigned k = 3;
    std::string strategy = "exhaustive";
    std::optional<std::size_t> target;
    std::optional<std::string> family_path;  // theorem-kneighb: load instead of generating
    std::optional<std::string> import_path;  // family: verify a user family
    unsigned precision_bits = 0;             // 0 selects the per-command default
    Tolerances tol;
    bool tol_face_set = false;
    std::uint64_t cap = 1'000'000;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    bool timing = false;

    /// Throws std::invalid_argument for inconsistent settings.
    void validate() const;

    /// Everything that can influence results (worker count and output
    /// paths are excluded so reports do not depend on them).
    nlohmann::json to_json() const;
};

/// Outcome of a command: the report plus any auxiliary artifacts.
struct CommandResult {
    nlohmann::json report;
    int exit_code = kExitOk;
    std::optional<nlohmann::json> family;       // family command / generated family
    std::optional<nlohmann::json> certificates; // certificates of the main check
    std::string vertices_csv;                   // vertex dump of the main construction
    std::string refusals_csv;                   // refused / failed index sets
};

CommandResult cmd_theorem_2neighb(const RunConfig& cfg);
CommandResult cmd_theorem_kneighb(const RunConfig& cfg);
CommandResult cmd_antipodal(const RunConfig& cfg);
CommandResult cmd_family(const RunConfig& cfg);

/// Dispatches on cfg.command. Config errors become a report with exit code 4.
CommandResult run_command(const RunConfig& cfg);

nlohmann::json family_to_json(const SetFamily& f);
/// Accepts {"m":..,"members":[..]} or a bare array of bitmasks (then
/// `m_fallback` supplies m).
SetFamily family_from_json(const nlohmann::json& j, unsigned m_fallback);

/// Floor of (cube root of 3)^d / 3.
std::uint64_t antipodal_baseline(unsigned d);

/// 3^floor(d/2 - 1) - 1.
Integer antipodal_lower_bound(unsigned d);

/// CSV of vertex coordinates: index, angle numerator/denominator (of pi), coordinates.
std::string vertices_to_csv(const EmbeddedPolytope& p);

}  // namespace cspoly
