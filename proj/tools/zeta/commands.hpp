#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zeta_result.hpp"

namespace zeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

inline constexpr long kDefaultPrecisionBits = 128;

enum class TableFormat { kText, kJson, kCsv };

// Default precision, honoring ZETA_DEFAULT_PREC. Empty if the variable is set
// but is not a valid precision.
std::optional<long> default_precision();

// Table rows for s = 2..max_s: even s through the exact cotangent chain (with
// its numeric rendering), odd s through the polygamma route.
std::vector<ZetaResult> build_table(long max_s, long precision_bits);

void render_table(const std::vector<ZetaResult>& rows, TableFormat format, std::ostream& out);

struct CheckOutcome {
  std::string name;
  bool passed = true;
  // Set on failure.
  long first_failing_s = 0;
  std::string discrepancy;
};

// Exact vs Bernoulli equality, polygamma vs exact (even s), polygamma vs
// Dirichlet (odd s), and reflection residuals, for arguments up to max_s.
std::vector<CheckOutcome> run_checks(long max_s, long precision_bits);

// Entry point shared by the zeta executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zeta::cli
