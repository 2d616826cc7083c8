#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <orthokern/ball_kernels.hpp>
#include <orthokern/cube_kernels.hpp>
#include <orthokern/identities.hpp>

namespace orthokern::cli {

enum class ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

/// Parses argv (without the program name), runs the command and writes the
/// result to `out`; diagnostics go to `err`.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

// Serialization, shared with the tests.

/// Single-line JSON, keys sorted.
std::string report_json(const IdentityReport& r);
/// Human-readable block headed by the identity's label.
std::string report_text(const IdentityReport& r);
/// "Thm 1.2 / eq:Gegen-1" style label for an identity tag.
std::string identity_label(const std::string& tag);

std::string csv_number(double v);
std::string sweep_csv(const std::vector<CriticalRow>& rows);
std::string scan_csv(const CubeScan& scan);

}  // namespace orthokern::cli
