#pragma once

// CSV layout: [sweep column,] t, I, C, D, EF, concurrence, bound_lhs,
// pPsiPlus, pPsiMinus, pPhiPlus, pPhiMinus[, raw rho_ij re/im columns].
// Values are printed in fixed notation with 12 decimals.

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "pdimer/scenarios.hpp"

namespace pdimer {

std::string format_csv_value(double x);

std::vector<std::string> csv_header(const ScenarioResult& result);

void write_csv(std::ostream& out, const ScenarioResult& result);

/// Writes the result to a file. Throws IoError on an empty result (no file is
/// created) or when the file cannot be written.
void emit_csv(const ScenarioResult& result, const std::filesystem::path& destination);

}  // namespace pdimer
