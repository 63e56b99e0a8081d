#include "lagblow/error.hpp"
#include "lagblow/workbench/report.hpp"
#include "lagblow/workbench/workspace.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

namespace {

using namespace lagblow;
using namespace lagblow::workbench;
using lagblow::testing::Engine;

ErrorKind parse_kind(std::string_view doc, std::vector<std::string>* diagnostics = nullptr) {
  try {
    parse_spec(doc);
  } catch (const Error& e) {
    if (diagnostics) *diagnostics = e.diagnostics();
    return e.kind();
  }
  ADD_FAILURE() << "document parsed";
  return ErrorKind::InputError;
}

bool any_contains(const std::vector<std::string>& items, const std::string& needle) {
  for (const auto& s : items) {
    if (s.find(needle) != std::string::npos) return true;
  }
  return false;
}

nlohmann::json clifford_json() { return nlohmann::json::parse(builtin_document("clifford-cp2")); }

TEST(ParseDocument, CliffordInventory) {
  const auto w = builtin_example("clifford-cp2");
  ASSERT_EQ(w.lagrangians.size(), 1u);
  const auto& l = w.lagrangians[0];
  EXPECT_EQ(l.critical_points.size(), 4u);
  int mu2 = 0, mu4 = 0, marked = 0;
  for (const auto& c : l.classes) {
    mu2 += c.maslov == 2;
    mu4 += c.maslov == 4;
    marked += c.through_point;
  }
  EXPECT_EQ(mu2, 3);
  EXPECT_EQ(mu4, 6);
  EXPECT_EQ(marked, 3);
  EXPECT_EQ(w.manifold.lambda_pi, Rational{6});
  EXPECT_EQ(w.blowup().rho_sq, Rational(1, 3));
  EXPECT_NE(w.metadata.at("x0").find("0 < |a| < |b| < 1"), std::string::npos);
}

TEST(ParseDocument, EmptyDocument) {
  EXPECT_EQ(parse_kind(""), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind("[]"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind("{}"), ErrorKind::ParseError);
}

TEST(ParseDocument, MalformedJsonCarriesPosition) {
  try {
    parse_spec("{\n  \"manifold\": {\n    \"n\": 2,,\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("3:"), std::string::npos) << e.what();
  }
}

TEST(ParseDocument, SchemaErrorsAreCollected) {
  auto j = clifford_json();
  j["manifold"].erase("n");
  j["lagrangians"][0]["classes"][0]["area_over_pi"] = "1/0";
  j["lagrangians"][0]["critical_points"][1]["index"] = "one";
  std::vector<std::string> diag;
  EXPECT_EQ(parse_kind(j.dump(), &diag), ErrorKind::ParseError);
  EXPECT_TRUE(any_contains(diag, "/manifold/n: missing"));
  EXPECT_TRUE(any_contains(diag, "/lagrangians/0/classes/0/area_over_pi"));
  EXPECT_TRUE(any_contains(diag, "/lagrangians/0/critical_points/1/index: expected an integer"));
}

TEST(ParseDocument, UndeclaredClassNamesReference) {
  auto j = clifford_json();
  j["lagrangians"][0]["quantum_counts"].push_back(
      {{"from", "p0"}, {"to", "p1a"}, {"class", "A9"}, {"count", 1}});
  std::vector<std::string> diag;
  EXPECT_EQ(parse_kind(j.dump(), &diag), ErrorKind::ValidationError);
  EXPECT_TRUE(any_contains(diag, "A9"));
}

TEST(ParseDocument, ValidationErrors) {
  auto j = clifford_json();
  j["lagrangians"][0]["classes"][0]["area_over_pi"] = "1/2";
  j["lagrangians"].push_back(j["lagrangians"][0]);
  std::vector<std::string> diag;
  EXPECT_EQ(parse_kind(j.dump(), &diag), ErrorKind::ValidationError);
  EXPECT_TRUE(any_contains(diag, "duplicate lagrangian T_Cliff"));
  EXPECT_TRUE(any_contains(diag, "A0"));
}

TEST(ParseDocument, IntegerRationalLiterals) {
  auto j = clifford_json();
  j["manifold"]["lambda_pi"] = 6;
  EXPECT_EQ(parse_spec(j.dump()).manifold.lambda_pi, Rational{6});
}

TEST(BuiltinExample, UnknownName) {
  try {
    builtin_example("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownExample);
  }
  EXPECT_EQ(builtin_example_names().size(), 4u);
}

TEST(Serialize, RoundTripBuiltins) {
  for (const auto& name : builtin_example_names()) {
    const auto w = builtin_example(name);
    const auto text = serialize(w);
    EXPECT_EQ(parse_spec(text), w) << name;
    EXPECT_EQ(serialize(parse_spec(text)), text) << name;
  }
}

TEST(SerializeProperty, RoundTripRandomWorkspaces) {
  Engine rng(91);
  const model::ManifoldData m{2, Rational{6}, true};
  for (int i = 0; i < 100; ++i) {
    Workspace w;
    w.manifold = m;
    auto l = lagblow::testing::random_pearl_fixture(rng, m);
    if (lagblow::testing::coin(rng)) l.betti_mod2 = pearl::default_reference_betti(l);
    w.lagrangians.push_back(l);
    if (lagblow::testing::coin(rng)) w.floer_pairs.push_back(lagblow::testing::random_floer_pair(rng));
    if (lagblow::testing::coin(rng)) w.metadata["note"] = "seed " + std::to_string(i);
    const auto text = serialize(w);
    EXPECT_EQ(parse_spec(text), w);
  }
}

TEST(RunReport, CliffordBlowup) {
  const auto r = run_report(builtin_example("clifford-cp2"), Command::Blowup, "example clifford-cp2");
  ASSERT_EQ(r.lagrangians.size(), 1u);
  const auto& s = r.lagrangians[0];
  EXPECT_TRUE(s.admissibility.admissible);
  EXPECT_EQ(s.min_maslov_blowup, 2);
  EXPECT_EQ(r.rho_sq, Rational(1, 3));
  ASSERT_TRUE(s.homology);
  EXPECT_TRUE(*s.differential_zero);
  EXPECT_EQ(s.homology->verdict, Verdict::Wide);
  EXPECT_EQ(s.homology->free_ranks(), (std::vector<std::size_t>{1, 2, 1}));
  ASSERT_EQ(s.corrections.size(), 4u);
  for (const auto& c : s.corrections) EXPECT_EQ(c.k, 2);
  EXPECT_FALSE(r.refused());
}

TEST(RunReport, RealProjectivePlaneBlowupRefused) {
  const auto r = run_report(builtin_example("rp2-cp2"), Command::Blowup, "example rp2-cp2");
  ASSERT_EQ(r.lagrangians.size(), 1u);
  EXPECT_TRUE(r.lagrangians[0].refused);
  EXPECT_FALSE(r.lagrangians[0].homology);
  EXPECT_EQ(r.lagrangians[0].min_maslov_blowup, 1);
  EXPECT_TRUE(r.refused());
}

TEST(RunReport, CliffordQh) {
  const auto r = run_report(builtin_example("clifford-cp2"), Command::Qh, "x");
  EXPECT_EQ(r.lagrangians[0].homology->verdict, Verdict::Wide);
  EXPECT_EQ(r.lagrangians[0].homology->free_ranks(), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(RunReport, AcyclicIsNarrow) {
  const auto r = run_report(builtin_example("acyclic-pair"), Command::Qh, "x");
  EXPECT_EQ(r.lagrangians[0].homology->verdict, Verdict::Narrow);
}

TEST(RunReport, FloerCommands) {
  const auto w = builtin_example("acyclic-pair");
  const auto hf = run_report(w, Command::Hf, "x");
  ASSERT_EQ(hf.floer.size(), 1u);
  EXPECT_EQ(hf.floer[0].rank, 0u);
  const auto up = run_report(w, Command::HfBlowup, "x");
  EXPECT_EQ(up.floer[0].rank, 0u);
  const auto none = run_report(builtin_example("clifford-cp2"), Command::Hf, "x");
  EXPECT_TRUE(none.floer.empty());
  EXPECT_FALSE(none.diagnostics.empty());
}

TEST(RunReport, ErrorsCarryCommandContext) {
  auto w = builtin_example("clifford-cp2");
  w.lagrangians[0].quantum_counts.push_back({"p1a", "p0", "A0", 1});
  try {
    run_report(w, Command::Qh, "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("qh: "), std::string::npos) << e.what();
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Commands, ParseAndPrint) {
  for (const char* name : {"check", "qh", "blowup", "hf", "hf-blowup"}) {
    EXPECT_EQ(to_string(parse_command(name)), name);
  }
  EXPECT_THROW(parse_command("frobnicate"), Error);
}

TEST(Render, DeterministicAcrossRuns) {
  for (const auto& name : builtin_example_names()) {
    for (auto cmd : {Command::Check, Command::Qh, Command::Blowup, Command::Hf, Command::HfBlowup}) {
      const auto a = run_report(builtin_example(name), cmd, name);
      const auto b = run_report(builtin_example(name), cmd, name);
      EXPECT_EQ(render_text(a, true), render_text(b, true));
      EXPECT_EQ(render_json(a, true), render_json(b, true));
    }
  }
}

TEST(Render, JsonMatchesReport) {
  const auto r = run_report(builtin_example("clifford-cp2"), Command::Blowup, "example clifford-cp2");
  const auto j = nlohmann::json::parse(render_json(r, false));
  EXPECT_EQ(j["command"], "blowup");
  EXPECT_EQ(j["manifold"]["rho_sq"], "1/3");
  const auto& l = j["lagrangians"][0];
  EXPECT_EQ(l["verdict"], "wide");
  EXPECT_EQ(l["differential_zero"], true);
  EXPECT_EQ(l["corrections"].size(), 4u);
  EXPECT_EQ(l["corrections"][0]["classes"], (nlohmann::json{"A0+A2", "A1+A2"}));
  EXPECT_FALSE(l.contains("differential"));
}

TEST(Render, TextMentionsVerdictsAndLedger) {
  const auto r = run_report(builtin_example("clifford-cp2"), Command::Blowup, "example clifford-cp2");
  const auto text = render_text(r, false);
  EXPECT_NE(text.find("verdict: wide"), std::string::npos);
  EXPECT_NE(text.find("p0 -> p1a  k = 2 (even)  classes: A0+A2, A1+A2"), std::string::npos);
  EXPECT_NE(text.find("rho^2 = 1/3"), std::string::npos);
}

// ---- command-line tool ----------------------------------------------------

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  const std::string cmd = std::string(PEARL_BLOWUP_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("blowup --example clifford-cp2").status, 0);
  EXPECT_EQ(run_cli("blowup --example rp2-cp2").status, 1);
  EXPECT_EQ(run_cli("qh --example nope").status, 2);
  EXPECT_EQ(run_cli("frobnicate --example clifford-cp2").status, 2);
  EXPECT_EQ(run_cli("qh").status, 2);
  EXPECT_EQ(run_cli("qh --input /nonexistent/file.json").status, 2);
}

TEST(Cli, InputFiles) {
  const std::string dir = ::testing::TempDir();
  const std::string good = dir + "/lagblow_good.json";
  const std::string bad = dir + "/lagblow_bad.json";
  const std::string invalid = dir + "/lagblow_invalid.json";
  std::ofstream(good) << builtin_document("clifford-cp2");
  std::ofstream(bad) << "{ not json";
  auto j = clifford_json();
  j["lagrangians"][0]["classes"][0]["area_over_pi"] = "1/2";
  std::ofstream(invalid) << j.dump();
  const auto ok = run_cli("qh --json --input " + good);
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["lagrangians"][0]["verdict"], "wide");
  EXPECT_EQ(run_cli("qh --input " + bad).status, 2);
  const auto v = run_cli("check --input " + invalid);
  EXPECT_EQ(v.status, 1);
  EXPECT_NE(v.out.find("A0"), std::string::npos);
}

TEST(Cli, OutputIsByteIdentical) {
  const auto a = run_cli("blowup --example clifford-cp2 --verbose");
  const auto b = run_cli("blowup --example clifford-cp2 --verbose");
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("corrections:"), std::string::npos);
}

}  // namespace
