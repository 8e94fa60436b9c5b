#pragma once

// Command implementations behind the g2fp executable. Each returns the
// process exit code: 0 when every check passes, 1 on a failed check, 2 on a
// usage or parse error.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "g2fp/fpdata.hpp"
#include "g2fp/io.hpp"
#include "g2fp/solver.hpp"

namespace g2fp {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct ReportCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct ReportSection {
  std::string title;
  std::vector<ReportCheck> checks;
  std::vector<std::pair<std::string, Json>> values;
};

struct Report {
  std::string command;
  std::string headline;
  std::vector<ReportSection> sections;

  bool passed() const;
  std::string to_text() const;
  Json to_json() const;
};

struct VerifyOptions {
  bool chern = false;
  bool basis = false;
  bool pairing = false;
};

Report verify_report(const FixedPointData& data, const VerifyOptions& options);
Report classify_report(const MomentProfile& profile, const BigInt& weight_bound);

/// Parses "2,1" style lists. Throws MalformedScalar.
std::vector<BigInt> parse_integer_list(const std::string& csv);

int cmd_generate(const std::string& b_csv, const std::optional<std::string>& out_path,
                 std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& in_path, const VerifyOptions& options, bool json,
               std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& in_path, const std::optional<std::string>& bound, bool json,
                 std::ostream& out, std::ostream& err);

}  // namespace g2fp
