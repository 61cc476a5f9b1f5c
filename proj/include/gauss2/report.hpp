#ifndef GAUSS2_REPORT_HPP
#define GAUSS2_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gauss2/gauss_map.hpp"
#include "gauss2/minors.hpp"

namespace gauss2 {

enum class Command { verify, minors, properties };
enum class OutputFormat { text, json };

struct FamilySource {
  enum class Kind { paper, random, file };
  Kind kind = Kind::paper;
  std::uint64_t seed = 0;
  std::string path;

  bool operator==(const FamilySource&) const = default;
};

/// Accepts "paper", "random:<seed>" or "file:<path>".
FamilySource parse_family_source(const std::string& text);
std::string to_string(const FamilySource& src);

struct RunConfig {
  Command command = Command::verify;
  unsigned g_min = 4;
  unsigned g_max = 18;
  bool g_range_set = false;  // an explicit range constrains file families
  std::uint64_t prime = 109;
  FamilySource family;
  unsigned trials = 5;
  std::string out_path;
  OutputFormat format = OutputFormat::text;
  std::optional<std::uint64_t> prime_override;  // minors only

  bool operator==(const RunConfig&) const = default;
};

struct GenusResult {
  unsigned g = 0;
  std::optional<RankReport> report;
  /// Set only when an expectation table applies (built-in family at the
  /// default prime).
  std::optional<bool> expected_pass;
  std::string error;
  std::string warning;
  double ms = 0;
};

struct MinorsResult {
  Elt N = 0;
  std::uint64_t prime_N = 5;
  Elt N_prime = 0;
  std::uint64_t prime_N_prime = 23;
  bool pass = false;
  bool informational = false;  // prime override: values recorded, not judged
  std::string error;
};

struct RunReport {
  RunConfig config;
  std::vector<GenusResult> reports;
  std::optional<MinorsResult> minors;
  std::map<std::string, bool> properties;
  double total_ms = 0;
};

struct ExpectedRanks {
  std::size_t r0;
  std::size_t r1;
  std::size_t r2;
};

/// Reference rank chain for the built-in family, 4 <= g <= 18:
/// r0 = 2g-3; r1 = binom(g,2) for g <= 10 and 6g-13 above; r2 = binom(g,2)
/// for g <= 17 and 152 at g = 18.
ExpectedRanks expected_paper_ranks(unsigned g);

RunReport cmd_verify(const RunConfig& cfg);
RunReport cmd_minors(const RunConfig& cfg);
RunReport cmd_properties(const RunConfig& cfg);
RunReport run_command(const RunConfig& cfg);

/// True iff no genus errored and every expectation comparison, property
/// check and minor comparison passed.
bool run_passed(const RunReport& rep);

std::string to_json_string(const RunReport& rep, int indent = 2);
RunReport run_report_from_json(const std::string& text);
std::string to_text(const RunReport& rep);

}  // namespace gauss2

#endif
