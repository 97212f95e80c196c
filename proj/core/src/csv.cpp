#include "pdimer/csv.hpp"

#include <cstdio>
#include <fstream>

#include "pdimer/error.hpp"

namespace pdimer {

std::string format_csv_value(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::vector<std::string> csv_header(const ScenarioResult& result) {
  std::vector<std::string> h;
  if (result.axis != SweepAxis::None) h.emplace_back(sweep_column(result.axis));
  for (const char* c : {"t", "I", "C", "D", "EF", "concurrence", "bound_lhs", "pPsiPlus", "pPsiMinus", "pPhiPlus",
                        "pPhiMinus"}) {
    h.emplace_back(c);
  }
  if (result.raw_elements) {
    for (int i = 1; i <= 4; ++i)
      for (int j = i; j <= 4; ++j) {
        const std::string base = "rho" + std::to_string(i) + std::to_string(j);
        h.push_back(base + "_re");
        h.push_back(base + "_im");
      }
  }
  return h;
}

void write_csv(std::ostream& out, const ScenarioResult& result) {
  const auto header = csv_header(result);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';

  std::string line;
  auto put = [&](double v) {
    if (!line.empty()) line += ',';
    line += format_csv_value(v);
  };
  for (const auto& block : result.blocks) {
    for (const auto& rec : block.records) {
      line.clear();
      if (result.axis != SweepAxis::None) put(block.sweep_value);
      const auto& r = rec.report;
      for (double v : {rec.t, r.mutual_information, r.classical, r.discord, r.entanglement_of_formation,
                       r.concurrence, r.bound_lhs, rec.bell.psi_plus, rec.bell.psi_minus, rec.bell.phi_plus,
                       rec.bell.phi_minus}) {
        put(v);
      }
      if (result.raw_elements && rec.raw) {
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = i; j < 4; ++j) {
            put((*rec.raw)(i, j).real());
            put((*rec.raw)(i, j).imag());
          }
      }
      out << line << '\n';
    }
  }
}

void emit_csv(const ScenarioResult& result, const std::filesystem::path& destination) {
  if (result.row_count() == 0) throw Error(ErrorKind::IoError, "no records to write");
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + destination.string() + " for writing");
  write_csv(out, result);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write to " + destination.string() + " failed");
}

}  // namespace pdimer
