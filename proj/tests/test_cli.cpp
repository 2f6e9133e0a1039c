#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

// runs the CLI with stderr folded into the captured output
Result cli(const std::string& args) {
  std::string cmd = std::string("\"") + HOPFDUAL_CLI + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string instance(const std::string& name) { return std::string(HOPFDUAL_SOURCE_DIR) + "/instances/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "hopfdual_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, ListsCatalog) {
  Result r = cli("catalog list");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z_C2\thopf\tZ\trank 2"), std::string::npos);
  EXPECT_NE(r.out.find("sweedler4_Z3"), std::string::npos);

  Result j = cli("catalog list --format json");
  ASSERT_EQ(j.code, 0);
  auto parsed = nlohmann::json::parse(j.out);
  ASSERT_TRUE(parsed.is_array());
  EXPECT_EQ(parsed[0]["name"], "Z_C2");
}

TEST(Cli, RunsCatalogEntry) {
  Result r = cli("catalog run gauss --suite crossed --canonical");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("== gauss [crossed] PASS", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("ok   crossed-biconditional"), std::string::npos);
  EXPECT_NE(r.out.find("failed: PASS"), std::string::npos);
}

TEST(Cli, DualitySuiteCoversBothSides) {
  Result r = cli("catalog run sweedler4_Q --suite duality --format json --canonical");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  std::set<std::string> ids;
  for (const auto& c : j["runs"][0]["checks"]) {
    ids.insert(c["id"].get<std::string>());
    EXPECT_TRUE(c["passed"].get<bool>()) << c["id"];
  }
  for (const char* id : {"smash-duality-iso", "op-smash-duality-iso", "lambda-bijective", "lambda-bar-bijective", "omega-3"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Cli, CanonicalReportIsByteIdentical) {
  Result a = cli("report --format json --canonical --suite crossed --entry gauss --entry Z_C3");
  Result b = cli("report --format json --canonical --suite crossed --entry gauss --entry Z_C3");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("seconds"), std::string::npos);
  Result t = cli("report --format text --suite crossed --entry gauss");
  EXPECT_NE(t.out.find("s)"), std::string::npos) << t.out;
}

TEST(Cli, ReportToFile) {
  fs::path p = scratch("report.txt");
  Result r = cli("report --format text --canonical --suite hopf --entry Z_C2 --out " + p.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(p).rfind("== Z_C2 [hopf] PASS", 0), 0u);
}

TEST(Cli, ExportThenVerify) {
  fs::path p = scratch("gauss.json");
  Result e = cli("catalog export gauss " + p.string() + " --suite crossed");
  ASSERT_EQ(e.code, 0) << e.out;
  auto j = nlohmann::json::parse(slurp(p));
  EXPECT_EQ(j["suite"], "crossed");
  Result v = cli("verify " + p.string() + " --canonical");
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(v.out, cli("catalog run gauss --suite crossed --canonical").out);
}

TEST(Cli, ShippedInstancesVerify) {
  for (const char* f : {"Z_C2.json", "gauss.json", "swap_smash.json", "sweedler4_Q.json", "Zmod6_C2.json", "gauss_cleft.json"}) {
    Result r = cli("verify " + instance(f) + " --suite crossed");
    EXPECT_EQ(r.code, 0) << f << "\n" << r.out;
  }
}

TEST(Cli, BadAntipodeFailsWithWitness) {
  Result r = cli("verify " + instance("Z_C2_bad_antipode.json") + " --canonical");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("FAIL hopf-antipode-supplied-axiom"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[g]"), std::string::npos) << r.out;
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(cli("catalog run no_such_entry").code, 2);
  EXPECT_EQ(cli("catalog run gauss --suite everything").code, 2);
  EXPECT_EQ(cli("verify /nonexistent/file.json").code, 2);
  EXPECT_EQ(cli("report").code, 2);  // --format is required
  EXPECT_EQ(cli("report --format xml").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("report --format text --jobs 0").code, 2);

  fs::path p = scratch("broken.json");
  std::ofstream(p) << "{ \"name\": ";
  Result r = cli("verify " + p.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("error:"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  Result r = cli("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("catalog"), std::string::npos);
  EXPECT_EQ(cli("report --help").code, 0);
}
