#ifndef POLYOSC_REPORT_HPP
#define POLYOSC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyosc/grid.hpp"
#include "polyosc/system.hpp"

namespace polyosc {

enum class CheckStatus { Pass, Fail, Skipped };

const char* check_status_name(CheckStatus status);

// One verification check. Informational entries (notes that carry context
// but can never gate the run) use status Skipped.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::optional<double> max_residual;
  std::string summary;
};

struct VerifyOptions {
  int basis_n1 = 40;
  int basis_n2 = 40;
  double tolerance = 1e-9;
  Rational e_max = 40;
  std::optional<GridSpec> grid;  // defaults_for(l2) when absent
};

struct VerificationReport {
  SystemSpec system;
  VerifyOptions options;
  GridSpec grid;  // the grid actually used
  std::vector<CheckResult> checks;
  bool overall_pass = false;  // true iff no check failed
};

// Runs the full check suite applicable to the system kind.
VerificationReport run_verification(const SystemSpec& sys,
                                    const VerifyOptions& options);

// Stable JSON form: insertion-ordered fields, floats rounded to 12
// significant digits, byte-identical across runs for identical inputs.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

// %.12g formatting used for every float that reaches an output.
std::string format_double(double value);

// The same double a %.12g round-trip would print, so JSON numbers are
// deterministic at 12 significant digits.
double round_to_12(double value);

}  // namespace polyosc

#endif
