#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>

#include "fixtures.hpp"
#include "hopfdual/instance_io.hpp"

using namespace hopfdual;
using namespace fixtures;

namespace {

bool commutative(const AlgebraData& a) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      if (a.multiply(a.basis(i), a.basis(j)) != a.multiply(a.basis(j), a.basis(i))) return false;
  return true;
}

bool cocommutative(const CoalgebraData& c) {
  const std::size_t n = c.rank();
  for (std::size_t h = 0; h < n; ++h) {
    Vector d = c.comult().matrix().column(h);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i * n + j] != d[j * n + i]) return false;
  }
  return true;
}

const std::vector<CatalogEntry>& all_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& n : entry_names()) out.push_back(get_entry(n));
    return out;
  }();
  return entries;
}

const CatalogEntry& entry(const std::string& name) {
  for (const auto& e : all_entries())
    if (e.name == name) return e;
  throw std::runtime_error("no entry " + name);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidElement;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Catalog, ListingIsDeterministicAndHasTheNamedEntries) {
  std::vector<std::string> names = entry_names();
  EXPECT_EQ(names, entry_names());
  for (const char* want : {"Z_C2", "gauss", "swap_smash", "sweedler4_Q", "sweedler4_Z3", "sweedler4_Z", "Zmod6_C2"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
  std::vector<EntrySummary> s = list_entries();
  ASSERT_EQ(s.size(), names.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].name, names[i]);
}

TEST(Catalog, UnknownEntry) { EXPECT_EQ(kind_of([] { get_entry("no_such_entry"); }), ErrorKind::UnknownEntry); }

TEST(Catalog, GroupAlgebraAntipodes) {
  // S(g^i) = g^(n-i): the inverse in C_n
  for (std::size_t n : {2, 3, 4}) {
    const CatalogEntry& e = entry("Z_C" + std::to_string(n));
    EXPECT_EQ(e.hopf.rank(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(e.hopf.antipode().matrix().column(i), unit_vector(n, (n - i) % n));
  }
}

TEST(Catalog, SwapSmashData) {
  const CatalogEntry& e = entry("swap_smash");
  const CrossedProductData& cp = *e.crossed;
  EXPECT_EQ(cp.action.act(1, vec({1, 0})), vec({0, 1}));
  EXPECT_EQ(cp.action.act(1, vec({0, 1})), vec({1, 0}));
  EXPECT_TRUE(has_trivial_cocycle(cp));
}

TEST(Catalog, GaussianAndZmod6Squares) {
  // (1 # g)^2 = sigma(g, g) # 1
  const CrossedProductData& g = *entry("gauss").crossed;
  EXPECT_EQ(g.product.multiply(unit_vector(2, 1), unit_vector(2, 1)), vec({-1, 0}));
  const CrossedProductData& z6 = *entry("Zmod6_C2").crossed;
  EXPECT_EQ(z6.algebra().ring(), Ring::integers_mod(6));
  EXPECT_EQ(z6.product.multiply(unit_vector(2, 1), unit_vector(2, 1)), vec({5, 0}));
}

TEST(Catalog, CoboundaryValues) {
  // u = (1, 2, 3): sigma(g, g) = 4/3, sigma(g, g2) = 6, sigma(g2, g2) = 9/2
  const Matrix& s = entry("coboundary_C3_Q").crossed->cocycle.sigma.matrix();
  EXPECT_EQ(s(0, 1 * 3 + 1), Scalar(4, 3));
  EXPECT_EQ(s(0, 1 * 3 + 2), Scalar(6));
  EXPECT_EQ(s(0, 2 * 3 + 1), Scalar(6));
  EXPECT_EQ(s(0, 2 * 3 + 2), Scalar(9, 2));
  EXPECT_EQ(s(0, 0), Scalar(1));
}

TEST(Catalog, CoversRequiredCases) {
  std::set<std::string> rings;
  bool right = false, left = false, trivial_sigma = false, twisted = false;
  bool comm_a = false, noncomm_a = false, cocomm = false, noncocomm = false;
  for (const auto& e : all_entries()) {
    rings.insert(e.ring().name());
    if (!e.iso_suites) continue;
    for (Side s : e.sides) (s == Side::Right ? right : left) = true;
    CrossedProductData cp = e.crossed_product();
    (has_trivial_cocycle(cp) ? trivial_sigma : twisted) = true;
    (commutative(cp.algebra()) ? comm_a : noncomm_a) = true;
    (cocommutative(e.hopf.coalgebra()) ? cocomm : noncocomm) = true;
  }
  EXPECT_TRUE(right && left);
  EXPECT_TRUE(trivial_sigma && twisted);
  EXPECT_TRUE(comm_a && noncomm_a);
  EXPECT_TRUE(cocomm && noncocomm);
  for (const char* r : {"Z", "Q", "Z/3", "Z/6"}) EXPECT_TRUE(rings.count(r)) << r;
}

TEST(Catalog, EveryEntryValidates) {
  for (const auto& e : all_entries()) {
    ValidationReport r = validate_entry(e);
    EXPECT_TRUE(r.passed()) << e.name << ": " << r.first_failure();
  }
}

TEST(Catalog, ExpectationsHoldAndIdsAreUnique) {
  for (const auto& e : all_entries()) {
    ASSERT_FALSE(e.expected.empty()) << e.name;
    for (const auto& x : e.expected) {
      SuiteRun run = run_suite(e, parse_suite(x.suite));
      EXPECT_EQ(run.passed(), x.passes) << e.name << " " << x.suite << ": " << run.report.first_failure();
      std::set<std::string> ids;
      for (const auto& c : run.report.checks) EXPECT_TRUE(ids.insert(c.id).second) << e.name << " repeats " << c.id;
    }
  }
}

TEST(Suite, NamesRoundTrip) {
  for (const auto& [s, name] : suite_names()) EXPECT_EQ(parse_suite(name), s);
  EXPECT_EQ(kind_of([] { parse_suite("everything"); }), ErrorKind::ParseError);
}

TEST(Suite, PartsAreSubsetsOfAll) {
  const CatalogEntry& e = entry("gauss");
  SuiteRun all = run_suite(e, Suite::All);
  std::set<std::string> ids;
  for (const auto& c : all.report.checks) ids.insert(c.id);
  std::size_t covered = 0;
  for (Suite s : {Suite::Hopf, Suite::Crossed, Suite::Smash, Suite::Duality, Suite::Cleft, Suite::Opposite}) {
    SuiteRun part = run_suite(e, s);
    EXPECT_TRUE(part.passed()) << to_string(s) << ": " << part.report.first_failure();
    EXPECT_FALSE(part.report.checks.empty()) << to_string(s);
    for (const auto& c : part.report.checks) EXPECT_TRUE(ids.count(c.id)) << to_string(s) << " " << c.id;
    covered += part.report.checks.size();
  }
  // the cleft and opposite suites repeat the hypotheses they need
  EXPECT_GE(covered, all.report.checks.size());
}

TEST(Suite, NamedChecksPresent) {
  SuiteRun r = run_suite(entry("swap_smash"), Suite::All);
  for (const char* id : {"hopf-antipode", "crossed-biconditional", "smash-compare", "upsilon-1a", "omega-4",
                         "compat-phi", "compat-op-psi", "lambda-bijective", "lambda-bar-bijective", "phi-inverse-left",
                         "right-pi-alpha", "op-pi-delta", "smash-duality-iso", "op-smash-duality-iso", "mn-iso",
                         "roundtrip-recovers", "cleft-route-matches", "tau-cocycle", "opposite-chain-matches"})
    EXPECT_TRUE(r.report.passed(id)) << id;
}

TEST(Suite, MutatedAntipodeFailsAtG) {
  CatalogEntry e = entry("Z_C2");
  Matrix s(2, 2);
  s(0, 0) = s(0, 1) = 1;  // S(g) = e
  e.supplied_antipode = LinearMap(e.hopf.carrier(), e.hopf.carrier(), s);
  SuiteRun run = run_suite(e, Suite::Hopf);
  EXPECT_FALSE(run.passed());
  const CheckResult* c = run.report.find("hopf-antipode-supplied-axiom");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_EQ(c->witness, "g");
  EXPECT_EQ(run.report.find("hopf-antipode-supplied")->witness, "g");
}

TEST(Suite, ValidatorsOnlyEntrySkipsIsoSuites) {
  SuiteRun run = run_suite(entry("sweedler4_Z"), Suite::Duality);
  ASSERT_EQ(run.report.checks.size(), 1u);
  EXPECT_EQ(run.report.checks[0].id, "iso-suites");
}

TEST(Suite, SmallUFailsTheHypotheses) {
  CatalogEntry e = entry("sweedler_smash");
  e.u[Side::Right] = {vec({1, 1, 0, 0}), vec({1, -1, 0, 0})};
  e.sides = {Side::Right};
  SuiteRun run = run_suite(e, Suite::Duality);
  EXPECT_FALSE(run.passed());
  const CheckResult* c = run.report.find("theorem-hypotheses");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->witness.rfind("HypothesisFailed", 0), 0u);
  EXPECT_EQ(run.report.find("smash-duality-iso"), nullptr);
}

TEST(Suite, NormStatementOnlyWhenItApplies) {
  SuiteRun full = run_suite(entry("sweedler4_Q"), Suite::Duality);
  EXPECT_TRUE(full.report.passed("norm-compat"));
  SuiteRun small = run_suite(entry("sweedler4_U2"), Suite::Duality);
  EXPECT_TRUE(small.passed()) << small.report.first_failure();
  EXPECT_EQ(small.report.find("norm-compat"), nullptr);
  EXPECT_NE(small.report.find("norm-hypotheses")->witness.find("does not hold"), std::string::npos);
  EXPECT_TRUE(small.report.passed("lambda-injective"));
}

TEST(Report, CanonicalIsByteIdenticalAndUntimed) {
  std::vector<SuiteRun> a{run_suite(entry("gauss"), Suite::Crossed), run_suite(entry("Z_C3"), Suite::Hopf)};
  std::vector<SuiteRun> b{run_suite(entry("gauss"), Suite::Crossed), run_suite(entry("Z_C3"), Suite::Hopf)};
  EXPECT_EQ(render_json(a, {true}), render_json(b, {true}));
  EXPECT_EQ(render_text(a, {true}), render_text(b, {true}));
  EXPECT_EQ(render_json(a, {true}).find("seconds"), std::string::npos);
  EXPECT_NE(render_json(a, {false}).find("seconds"), std::string::npos);
  nlohmann::json j = report_json(a, {true});
  EXPECT_EQ(j["runs"][0]["entry"], "gauss");
  EXPECT_EQ(j["runs"][1]["entry"], "Z_C3");
  EXPECT_TRUE(j["passed"].get<bool>());
  auto checks = j["runs"][0]["checks"];
  for (std::size_t i = 1; i < checks.size(); ++i)
    EXPECT_LE(checks[i - 1]["id"].get<std::string>(), checks[i]["id"].get<std::string>());
}

TEST(Report, ConcurrentRunsMatchSequential) {
  std::vector<CatalogEntry> es{entry("Z_C2"), entry("gauss"), entry("swap_smash")};
  EXPECT_EQ(render_json(run_suites(es, Suite::Crossed, 1), {true}), render_json(run_suites(es, Suite::Crossed, 3), {true}));
}

TEST(InstanceIO, EveryEntryRoundTrips) {
  for (const auto& e : all_entries()) {
    InstanceFile f = parse_instance_text(io::pretty(export_entry(e)));
    EXPECT_TRUE(same_entry(e, f.entry)) << e.name;
    EXPECT_EQ(f.suite, Suite::All);
  }
}

TEST(InstanceIO, FileRoundTrip) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / "hopfdual_zc2_roundtrip.json";
  write_instance(entry("Z_C2"), p.string(), Suite::Hopf);
  InstanceFile f = parse_instance(p.string());
  std::filesystem::remove(p);
  EXPECT_TRUE(same_entry(entry("Z_C2"), f.entry));
  EXPECT_EQ(f.suite, Suite::Hopf);
  ASSERT_TRUE(f.entry.supplied_antipode.has_value());
  EXPECT_EQ(*f.entry.supplied_antipode, entry("Z_C2").hopf.antipode());
}

TEST(InstanceIO, IndexOutOfRangeNamesTheRecord) {
  nlohmann::json j = export_entry(entry("Z_C2"));
  j["hopf"]["mult"][2] = {1, 7, 1, "1"};
  std::string msg = message_of([&] { parse_instance_json(j); });
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ValidationError);
  EXPECT_NE(msg.find("hopf.mult[2] = [1,7,1,\"1\"]"), std::string::npos) << msg;
}

TEST(InstanceIO, CocycleWithoutAction) {
  nlohmann::json j = export_entry(entry("gauss"));
  j.erase("action");
  j["suite"] = "crossed";
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ValidationError);
  EXPECT_NE(message_of([&] { parse_instance_json(j); }).find("missing action"), std::string::npos);
}

TEST(InstanceIO, MalformedInputs) {
  EXPECT_EQ(kind_of([] { parse_instance_text("{ not json"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_instance("/nonexistent/instance.json"); }), ErrorKind::ParseError);

  nlohmann::json base = export_entry(entry("gauss"));
  nlohmann::json j = base;
  j["ring"] = "R";
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ParseError);
  j = base;
  j["hopf"]["counit"][0] = "1/2";  // not an integer
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ValidationError);
  j = base;
  j["hopf"]["counit"][0] = 1;  // numbers must be strings
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ParseError);
  j = base;
  j["suite"] = "everything";
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ParseError);
  j = base;
  j.erase("hopf");
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ParseError);
  j = base;
  j["sides"] = {"up"};
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ParseError);
}

TEST(InstanceIO, BrokenStructureIsAnInputError) {
  nlohmann::json j = export_entry(entry("Z_C2"));
  j["hopf"]["mult"][3] = {1, 1, 1, "1"};  // g^2 = g: no antipode
  EXPECT_EQ(kind_of([&] { parse_instance_json(j); }), ErrorKind::ValidationError);

  nlohmann::json k = export_entry(entry("gauss"));
  k["cocycle"][3] = {1, 1, 0, "2"};  // sigma(g, g) = 2 is not invertible over Z
  EXPECT_EQ(kind_of([&] { parse_instance_json(k); }), ErrorKind::ValidationError);
}

TEST(InstanceIO, RationalAndResidueFormatting) {
  nlohmann::json q = export_entry(entry("coboundary_C3_Q"));
  std::string text = q.dump();
  EXPECT_NE(text.find("\"4/3\""), std::string::npos);
  EXPECT_NE(text.find("\"9/2\""), std::string::npos);
  nlohmann::json z6 = export_entry(entry("Zmod6_C2"));
  EXPECT_EQ(z6["ring"], "Z/6");
  EXPECT_NE(z6.dump().find("[1,1,0,\"5\"]"), std::string::npos);
}
