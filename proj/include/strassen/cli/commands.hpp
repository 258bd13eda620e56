#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"
#include "strassen/cli/instance.hpp"
#include "strassen/coupling.hpp"
#include "strassen/driver.hpp"
#include "strassen/oracle.hpp"

namespace strassen::cli {

struct SolveOptions {
  std::size_t steps = 1;
  bool trace = false;
  // Coupling entries as doubles instead of "p/q" strings.
  bool as_float = false;
  // Also run the max-flow oracle on the truncated data.
  bool oracle_check = false;
};

// Largest k0 for which `bounds` also computes the schedule row; 3^k grows
// too fast to be useful beyond this.
inline constexpr std::uint64_t kMaxScheduleSteps = 4096;

// Each returns the output document; errors propagate as exceptions.
nlohmann::json cmd_solve(const Instance& instance, const SolveOptions& options);
nlohmann::json cmd_verify(const nlohmann::json& coupling_doc,
                          const Instance& instance);
nlohmann::json cmd_bounds(const Instance& instance, Index n, Index m,
                          const Rational& eps);
nlohmann::json cmd_oracle(const Instance& instance);

// Pretty-printed with a trailing newline; keys sorted, so output is
// byte-identical across runs.
std::string render(const nlohmann::json& doc);

// [[n, m, "p/q"], ...] in lexicographic order.
nlohmann::json coupling_to_json(const Coupling& lam, bool as_float = false);
// Inverse of coupling_to_json for exact documents. ParseError on bad input.
Coupling coupling_from_json(const nlohmann::json& entries);

nlohmann::json schedule_to_json(const Schedule& schedule);
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace strassen::cli
