#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pdimer/csv.hpp"
#include "pdimer/error.hpp"
#include "pdimer/scenarios.hpp"

using namespace pdimer;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::size_t columns(const std::string& line) { return 1 + std::count(line.begin(), line.end(), ','); }

ScenarioResult fig1a(int samples, bool raw = false) {
  auto cfg = *find_scenario("fig1a");
  cfg.samples = samples;
  cfg.raw_elements = raw;
  return run_scenario(cfg);
}

}  // namespace

TEST(CsvFormat, Values) {
  EXPECT_EQ(format_csv_value(0.0), "0.000000000000");
  EXPECT_EQ(format_csv_value(-0.0), "0.000000000000");
  EXPECT_EQ(format_csv_value(-1e-15), "0.000000000000");
  EXPECT_EQ(format_csv_value(1.0), "1.000000000000");
  EXPECT_EQ(format_csv_value(-0.25), "-0.250000000000");
}

TEST(Csv, Fig1aHeaderAndFirstRow) {
  std::ostringstream out;
  write_csv(out, fig1a(11));
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[0], "t,I,C,D,EF,concurrence,bound_lhs,pPsiPlus,pPsiMinus,pPhiPlus,pPhiMinus");
  EXPECT_EQ(lines[1].rfind("0.000000000000,1.0", 0), 0u) << lines[1];
  for (const auto& l : lines) EXPECT_EQ(columns(l), 11u);
}

TEST(Csv, RawElementColumns) {
  std::ostringstream out;
  write_csv(out, fig1a(3, true));
  const auto lines = lines_of(out.str());
  EXPECT_EQ(columns(lines[0]), 11u + 20u);
  EXPECT_NE(lines[0].find("rho11_re,rho11_im,rho12_re"), std::string::npos);
  EXPECT_EQ(columns(lines[1]), 31u);
}

TEST(Csv, SweepGridShape) {
  auto cfg = *find_scenario("fig4");
  cfg.samples = 6;
  cfg.sweep.points = 4;
  cfg.t_max = 1.0;
  std::ostringstream out;
  write_csv(out, run_scenario(cfg));
  const auto lines = lines_of(out.str());
  EXPECT_EQ(lines.size(), 1u + 4u * 6u);
  EXPECT_EQ(lines[0].rfind("delta,t,I", 0), 0u);
  EXPECT_EQ(lines[7].rfind("0.666666666667,0.000000000000", 0), 0u) << lines[7];
}

TEST(Csv, DeterministicBytes) {
  std::ostringstream a, b;
  write_csv(a, fig1a(21));
  write_csv(b, fig1a(21));
  EXPECT_EQ(a.str(), b.str());
}

TEST(EmitCsv, WritesFileAndRejectsEmpty) {
  const auto dir = std::filesystem::temp_directory_path() / "pdimer_csv_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  emit_csv(fig1a(5), path);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(lines_of(text.str()).size(), 6u);

  const auto empty_path = dir / "empty.csv";
  ScenarioResult empty;
  try {
    emit_csv(empty, empty_path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.is_io());
  }
  EXPECT_FALSE(std::filesystem::exists(empty_path));

  EXPECT_THROW(emit_csv(fig1a(3), dir / "missing" / "x.csv"), Error);
  std::filesystem::remove_all(dir);
}
