#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexdual {

/// One checked statement: a stable id, the statement in words, the verdict,
/// and the data the verdict was read off from.
struct Claim {
  std::string id;
  std::string statement;
  bool pass = false;
  std::string witness;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<Claim> claims;

  bool pass() const;
  std::size_t failed_count() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Suites runnable individually: duality, plr, orbit-stabilizer, table2,
/// diatonic. "all" is accepted by run_suite and concatenates the rest.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite name.
VerificationReport run_suite(const std::string& name);

void print_report(const VerificationReport& report, std::ostream& out);

std::string to_json_string(const VerificationReport& report);

/// Inverse of to_json_string; throws std::invalid_argument on malformed input.
VerificationReport report_from_json_string(const std::string& text);

}  // namespace hexdual
