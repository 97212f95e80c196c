#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::filesystem::path kDir = std::filesystem::temp_directory_path() / "pdimer_cli_test";

int run(const std::string& args) {
  std::filesystem::create_directories(kDir);
  const std::string cmd = std::string(PDIMER_CLI_PATH) + " " + args + " >" + (kDir / "stdout.txt").string() + " 2>" +
                          (kDir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string write_config(const std::string& name, const std::string& json) {
  std::filesystem::create_directories(kDir);
  const auto p = kDir / name;
  std::ofstream(p) << json;
  return p.string();
}

}  // namespace

TEST(Cli, ListPrintsCatalog) {
  EXPECT_EQ(run("list"), 0);
  const auto out = slurp(kDir / "stdout.txt");
  for (const char* n : {"fig1a", "fig2b", "fig3-noninteracting", "fig4"}) EXPECT_NE(out.find(n), std::string::npos);
}

TEST(Cli, RunToStdoutAndFile) {
  const auto cfg = write_config("small.json", R"({"time": {"t_max": 2, "samples": 5}})");
  EXPECT_EQ(run("run fig1a --config " + cfg), 0);
  const auto out = slurp(kDir / "stdout.txt");
  EXPECT_EQ(out.rfind("t,I,C,D,EF", 0), 0u);
  EXPECT_NE(out.find("\n0.000000000000,1.0"), std::string::npos);

  const auto csv = (kDir / "fig1b.csv").string();
  EXPECT_EQ(run("run fig1b --config " + cfg + " --verify --dt 5e-4 --raw-elements --out " + csv), 0);
  const auto text = slurp(csv);
  EXPECT_NE(text.find("rho14_im"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("run no-such-scenario"), 1);
  EXPECT_NE(slurp(kDir / "stderr.txt").find("no-such-scenario"), std::string::npos);

  const auto bad = write_config("bad.json", R"({"time": {"samples": 0}})");
  EXPECT_EQ(run("run fig1a --config " + bad), 1);
  EXPECT_NE(slurp(kDir / "stderr.txt").find("time.samples"), std::string::npos);

  EXPECT_EQ(run("run fig1a --config /nonexistent/x.json"), 2);
  const auto small = write_config("tiny.json", R"({"time": {"t_max": 1, "samples": 2}})");
  EXPECT_EQ(run("run fig1a --config " + small + " --out /nonexistent/dir/out.csv"), 2);
  EXPECT_EQ(run("run fig1a --dt -1"), 1);
  EXPECT_EQ(run("frobnicate"), 1);
}

TEST(Cli, WarnsBelowValidityRange) {
  const auto cfg = write_config("close.json", R"({"separation": 0.1, "time": {"t_max": 1, "samples": 2}})");
  EXPECT_EQ(run("run fig1a --config " + cfg), 0);
  EXPECT_NE(slurp(kDir / "stderr.txt").find("warning"), std::string::npos);
}
