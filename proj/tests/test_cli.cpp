#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI with the given arguments; stdout is captured, stderr dropped.
Run lab(const std::string& args) {
  const std::string cmd = std::string(COCLASS_LAB_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, WitnessDim5) {
  const auto r = lab("witness dim5 --p 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("[x1, beta1 beta2(x1)] = x5"), std::string::npos);
  const auto j = nlohmann::json::parse(lab("witness dim5 --p 7 --format json").out);
  EXPECT_EQ(j["confirmed"], true);
  EXPECT_EQ(j["defect_at_x1"], (nlohmann::json{0, 0, 0, 0, 1}));
}

TEST(Cli, WitnessHeisenbergVariants) {
  const auto r = lab("witness heisenberg --k 2 --m 1 --p 3 --variant both --format json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["variants"]["corrected"]["beta2_check"]["commuting"], true);
  EXPECT_EQ(j["variants"]["printed"]["beta2_check"]["commuting"], false);
  EXPECT_EQ(j["variants"]["corrected"]["defect_at_u1"], (nlohmann::json{0, 0, 0, 0, 1}));
  const auto printed = nlohmann::json::parse(
      lab("witness heisenberg --k 2 --m 1 --variant printed --format json").out);
  EXPECT_FALSE(printed["variants"].contains("corrected"));
  EXPECT_EQ(lab("witness heisenberg --k 1 --m 1").exit_code, 2);
}

TEST(Cli, VerifyFiliformFive) {
  const auto r = lab("verify builtin:filiform:5 --p 3 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& rep = j["reports"][0];
  EXPECT_EQ(rep["prediction"]["verdict"], "equals_Autc");
  EXPECT_EQ(rep["consistent"], true);
  EXPECT_EQ(rep["enumeration"]["equal"], true);
}

TEST(Cli, VerifyInconsistentEntryExitsOne) {
  EXPECT_EQ(lab("verify heisenberg:1:1 --p 3").exit_code, 1);
}

TEST(Cli, BudgetExceeded) {
  EXPECT_EQ(lab("search-commuting builtin:dim5 --p 3 --budget 5").exit_code, 3);
  EXPECT_EQ(lab("verify dim5 --p 3 --budget 5").exit_code, 3);
  const std::string cmd = "env COCLASS_LAB_BUDGET=5 " + std::string(COCLASS_LAB_PATH) +
                          " check-subgroup dim5 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(lab("").exit_code, 2);
  EXPECT_EQ(lab("invariants builtin:nosuch:1").exit_code, 2);
  EXPECT_EQ(lab("frobnicate").exit_code, 2);
  EXPECT_EQ(lab("witness dim5 --p 4").exit_code, 2);
  EXPECT_EQ(lab("invariants filiform:4 --format yaml").exit_code, 2);
  EXPECT_EQ(lab("--help").exit_code, 0);
}

TEST(Cli, ValidateFiles) {
  const auto clean = temp_file("coclass_abelian4.json",
                               R"({"name":"abelian4","field":"rational","dim":4,"brackets":[]})"
                               "\n");
  EXPECT_EQ(lab("validate " + clean.string()).exit_code, 0);
  // [e1,e2] = e3, [e2,e3] = e2, [e1,e3] = e3: Jacobi residual on (e1,e2,e3) is e3 - e2
  const auto broken = temp_file(
      "coclass_broken.json",
      R"({"name":"broken","field":{"prime":3},"dim":3,"brackets":[{"i":0,"j":1,"terms":[{"k":2,"c":1}]},{"i":1,"j":2,"terms":[{"k":1,"c":1}]},{"i":0,"j":2,"terms":[{"k":2,"c":1}]}]})"
      "\n");
  const auto r = lab("validate " + broken.string() + " --format json");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["clean"], false);
  const auto reversed = temp_file(
      "coclass_reversed.json",
      R"({"name":"rev","field":"rational","dim":3,"brackets":[{"i":1,"j":0,"terms":[{"k":2,"c":1}]}]})"
      "\n");
  EXPECT_EQ(lab("validate " + reversed.string()).exit_code, 1);
  EXPECT_EQ(lab("validate /nonexistent/file.json").exit_code, 2);
}

TEST(Cli, InvariantsAndSearch) {
  const auto j = nlohmann::json::parse(lab("invariants builtin:dim5 --format json").out);
  EXPECT_EQ(j[0]["profile"]["dim_Z2"], 5);
  EXPECT_EQ(j[0]["prediction"]["rule"], "R4:coclass3_dim5_iff");
  const auto s = nlohmann::json::parse(lab("search-commuting filiform:4 --p 3 --format json").out);
  EXPECT_EQ(s[0]["size"], "9");
  const auto m =
      nlohmann::json::parse(lab("search-commuting filiform:4 --members --format json").out);
  EXPECT_EQ(m[0]["members"].size(), 9u);
  const auto c = nlohmann::json::parse(lab("check-subgroup dim5 --p 3 --format json").out);
  EXPECT_EQ(c[0]["closed"], false);
  EXPECT_FALSE(c[0]["witness"].is_null());
}

TEST(Cli, CatalogFile) {
  const std::string data = COCLASS_DATA_DIR;
  const auto r = lab("invariants " + data + "/coclass3_dim6.json --format json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 4u);
  EXPECT_EQ(lab("validate " + data + "/catalog.json").exit_code, 0);
}

TEST(Cli, JsonIsDeterministic) {
  const auto a = lab("verify dim5 --p 3 --format json");
  const auto b = lab("verify dim5 --p 3 --format json --jobs 2");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}
