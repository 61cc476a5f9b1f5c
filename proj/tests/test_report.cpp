#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "gauss2/report.hpp"
#include "json.hpp"

using namespace gauss2;

namespace {

RunConfig base_config(Command cmd) {
  RunConfig cfg;
  cfg.command = cmd;
  return cfg;
}

}  // namespace

TEST_CASE("family source parsing") {
  CHECK(parse_family_source("paper").kind == FamilySource::Kind::paper);
  const FamilySource r = parse_family_source("random:42");
  CHECK(r.kind == FamilySource::Kind::random);
  CHECK(r.seed == 42);
  const FamilySource f = parse_family_source("file:fam.txt");
  CHECK(f.kind == FamilySource::Kind::file);
  CHECK(f.path == "fam.txt");
  CHECK_THROWS(parse_family_source("flavor:odd"));
  CHECK_THROWS(parse_family_source("file:"));
  CHECK(to_string(r) == "random:42");
}

TEST_CASE("expected table spot values") {
  CHECK(expected_paper_ranks(4).r0 == 5);
  CHECK(expected_paper_ranks(4).r1 == 6);
  CHECK(expected_paper_ranks(10).r1 == 45);
  CHECK(expected_paper_ranks(11).r1 == 53);
  CHECK(expected_paper_ranks(17).r2 == 136);
  CHECK(expected_paper_ranks(18).r2 == 152);
  CHECK_THROWS(expected_paper_ranks(3));
}

TEST_CASE("verify over the full paper range") {
  RunConfig cfg = base_config(Command::verify);
  const RunReport rep = cmd_verify(cfg);
  REQUIRE(rep.reports.size() == 15);
  for (const auto& r : rep.reports) {
    CHECK(r.error.empty());
    REQUIRE(r.report.has_value());
    REQUIRE(r.expected_pass.has_value());
    CHECK(*r.expected_pass);
  }
  CHECK(run_passed(rep));
}

TEST_CASE("verify with a random family records no expectation") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = cfg.g_max = 6;
  cfg.prime = 10007;
  cfg.family = parse_family_source("random:42");
  const RunReport rep = cmd_verify(cfg);
  REQUIRE(rep.reports.size() == 1);
  CHECK(rep.reports[0].error.empty());
  CHECK(rep.reports[0].report.has_value());
  CHECK_FALSE(rep.reports[0].expected_pass.has_value());
  CHECK(run_passed(rep));
}

TEST_CASE("verify reports InvalidModulus with genus context") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = cfg.g_max = 4;
  cfg.prime = 3;
  const RunReport rep = cmd_verify(cfg);
  REQUIRE(rep.reports.size() == 1);
  CHECK(rep.reports[0].g == 4);
  CHECK_FALSE(rep.reports[0].error.empty());
  CHECK_FALSE(run_passed(rep));
}

TEST_CASE("per-genus failures do not stop the rest of the range") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = 4;
  cfg.g_max = 6;
  cfg.prime = 3;  // every genus collides mod 3, each gets its own error
  const RunReport rep = cmd_verify(cfg);
  REQUIRE(rep.reports.size() == 3);
  for (unsigned i = 0; i < 3; ++i) {
    CHECK(rep.reports[i].g == 4 + i);
    CHECK_FALSE(rep.reports[i].error.empty());
  }
}

TEST_CASE("derivative-bearing pipelines are refused when 2g-4 reaches p") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = cfg.g_max = 8;  // 2g-4 = 12 >= 11
  cfg.prime = 11;
  cfg.family = parse_family_source("random:5");
  const RunReport rep = cmd_verify(cfg);
  REQUIRE(rep.reports.size() == 1);
  CHECK_FALSE(rep.reports[0].error.empty());

  cfg.prime = 13;  // 2g-4 = 12 < 13: runs
  const RunReport ok = cmd_verify(cfg);
  REQUIRE(ok.reports.size() == 1);
  CHECK(ok.reports[0].error.empty());
}

TEST_CASE("the verdict table flips exactly where the dimensions cross") {
  for (unsigned g = 4; g <= 18; ++g) {
    const std::size_t domain = static_cast<std::size_t>(g - 2) * (g - 3) / 2;
    const std::size_t target = 7 * (static_cast<std::size_t>(g) - 1);
    CHECK((domain <= target) == (g <= 17));
  }
}

TEST_CASE("verify range validation") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = 4;
  cfg.g_max = 19;
  const RunReport rep = cmd_verify(cfg);
  REQUIRE(rep.reports.size() == 1);
  CHECK_FALSE(rep.reports[0].error.empty());
  CHECK_FALSE(run_passed(rep));
}

TEST_CASE("minors command") {
  const RunReport rep = cmd_minors(base_config(Command::minors));
  REQUIRE(rep.minors.has_value());
  CHECK(rep.minors->N == 4);
  CHECK(rep.minors->prime_N == 5);
  CHECK(rep.minors->N_prime == 16);
  CHECK(rep.minors->prime_N_prime == 23);
  CHECK(rep.minors->pass);
  CHECK(run_passed(rep));
}

TEST_CASE("minors with a prime override records values informationally") {
  RunConfig cfg = base_config(Command::minors);
  cfg.prime_override = 109;
  const RunReport rep = cmd_minors(cfg);
  REQUIRE(rep.minors.has_value());
  CHECK(rep.minors->informational);
  CHECK(rep.minors->N != 0);
  CHECK(rep.minors->N_prime != 0);
  CHECK(rep.minors->pass);
}

TEST_CASE("minors rejects non-paper families") {
  RunConfig cfg = base_config(Command::minors);
  cfg.family = parse_family_source("random:1");
  const RunReport rep = cmd_minors(cfg);
  REQUIRE(rep.minors.has_value());
  CHECK_FALSE(rep.minors->error.empty());
  CHECK_FALSE(run_passed(rep));
}

TEST_CASE("properties on the paper family") {
  RunConfig cfg = base_config(Command::properties);
  cfg.g_min = 4;
  cfg.g_max = 12;
  const RunReport rep = cmd_properties(cfg);
  CHECK(rep.reports.empty());  // no per-genus errors
  REQUIRE_FALSE(rep.properties.empty());
  for (const auto& [name, ok] : rep.properties) {
    INFO(name);
    CHECK(ok);
  }
  CHECK(rep.properties.count("degree_drop") == 1);
  CHECK(run_passed(rep));
}

TEST_CASE("properties on a random family") {
  RunConfig cfg = base_config(Command::properties);
  cfg.g_min = 5;
  cfg.g_max = 9;
  cfg.prime = 10007;
  cfg.family = parse_family_source("random:7");
  cfg.trials = 10;
  const RunReport rep = cmd_properties(cfg);
  for (const auto& [name, ok] : rep.properties) {
    INFO(name);
    CHECK(ok);
  }
  CHECK(run_passed(rep));
}

TEST_CASE("properties with trials=0 skips the sampled checks") {
  RunConfig cfg = base_config(Command::properties);
  cfg.g_min = cfg.g_max = 5;
  cfg.trials = 0;
  const RunReport rep = cmd_properties(cfg);
  CHECK(rep.properties.count("degree_drop") == 0);
  CHECK(rep.properties.count("leading_coeff_closed_forms") == 0);
  CHECK(rep.properties.count("kernel_quadrics_vanish") == 0);
  CHECK(rep.properties.count("pq_identity") == 1);
  CHECK(rep.properties.count("vandermonde_minor") == 1);
  CHECK(run_passed(rep));
}

TEST_CASE("file families flow through verify") {
  const std::string path = "report_family_test.txt";
  {
    std::ofstream out(path);
    out << "6\n3 12 21 29 37 41\n6 18 24 36 39 42\n";
  }
  RunConfig cfg = base_config(Command::verify);
  cfg.family = parse_family_source("file:" + path);
  const RunReport rep = cmd_verify(cfg);
  REQUIRE(rep.reports.size() == 1);
  CHECK(rep.reports[0].g == 6);
  CHECK(rep.reports[0].error.empty());

  // An explicit range that excludes the file genus is a range error.
  cfg.g_range_set = true;
  cfg.g_min = cfg.g_max = 7;
  const RunReport bad = cmd_verify(cfg);
  REQUIRE(bad.reports.size() == 1);
  CHECK_FALSE(bad.reports[0].error.empty());
  std::remove(path.c_str());
}

TEST_CASE("JSON serialization round-trips losslessly") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = 4;
  cfg.g_max = 6;
  const RunReport rep = cmd_verify(cfg);
  const std::string text = to_json_string(rep);
  const RunReport parsed = run_report_from_json(text);
  CHECK(to_json_string(parsed) == text);

  const RunReport minors_rep = cmd_minors(base_config(Command::minors));
  const std::string minors_text = to_json_string(minors_rep);
  CHECK(to_json_string(run_report_from_json(minors_text)) == minors_text);

  RunConfig pcfg = base_config(Command::properties);
  pcfg.g_min = pcfg.g_max = 5;
  const RunReport props = cmd_properties(pcfg);
  const std::string props_text = to_json_string(props);
  CHECK(to_json_string(run_report_from_json(props_text)) == props_text);

  // Error entries round-trip too.
  RunConfig ecfg = base_config(Command::verify);
  ecfg.g_min = ecfg.g_max = 4;
  ecfg.prime = 3;
  const RunReport errs = cmd_verify(ecfg);
  const std::string errs_text = to_json_string(errs);
  CHECK(to_json_string(run_report_from_json(errs_text)) == errs_text);
}

TEST_CASE("JSON document exposes the stable schema keys") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = cfg.g_max = 4;
  const nlohmann::json j = nlohmann::json::parse(to_json_string(cmd_verify(cfg)));
  for (const char* key : {"config", "reports", "minors", "properties", "timings"})
    CHECK(j.contains(key));
  REQUIRE(j["reports"].size() == 1);
  const nlohmann::json& r = j["reports"][0];
  for (const char* key :
       {"g", "prime", "r0", "r1", "r2", "dim_I2", "dim_ker_nu", "rank_nu",
        "corank_nu", "rank_tau", "corank_tau", "mu_injective", "mu_surjective",
        "expected_pass"})
    CHECK(r.contains(key));

  const nlohmann::json m =
      nlohmann::json::parse(to_json_string(cmd_minors(base_config(Command::minors))));
  for (const char* key : {"N", "N_prime", "pass"})
    CHECK(m["minors"].contains(key));
}

TEST_CASE("mathematical content is deterministic across runs") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = 4;
  cfg.g_max = 7;
  const RunReport a = cmd_verify(cfg);
  const RunReport b = cmd_verify(cfg);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    REQUIRE(a.reports[i].report.has_value());
    REQUIRE(b.reports[i].report.has_value());
    CHECK(a.reports[i].report->r0 == b.reports[i].report->r0);
    CHECK(a.reports[i].report->r1 == b.reports[i].report->r1);
    CHECK(a.reports[i].report->r2 == b.reports[i].report->r2);
  }
}

TEST_CASE("a failing property check fails the run") {
  RunConfig cfg = base_config(Command::properties);
  cfg.g_min = cfg.g_max = 5;
  RunReport rep = cmd_properties(cfg);
  CHECK(run_passed(rep));
  rep.properties["pq_identity"] = false;
  CHECK_FALSE(run_passed(rep));
}

TEST_CASE("text rendering mentions the headline quantities") {
  RunConfig cfg = base_config(Command::verify);
  cfg.g_min = cfg.g_max = 4;
  const std::string text = to_text(cmd_verify(cfg));
  CHECK(text.find("For g= 4") != std::string::npos);
  CHECK(text.find("dim I_2=") != std::string::npos);
  CHECK(text.find("corank(tau)=") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
}
