#pragma once

#include <string>
#include <vector>

#include "cvnet/netfile.hpp"

namespace cvnet {

// One parameter sweep: row i holds every requested report metric evaluated at
// grid[i]. Cells are finite doubles or NaN (rendered "nan") for degenerate
// ratios.
struct SweepResult {
  std::string variable;
  std::vector<double> grid;
  std::vector<std::string> columns;  // <metric>_<partyA><partyB>
  std::vector<std::vector<double>> rows;
};

// Inclusive uniform grid with `steps` points; steps == 1 evaluates `from`
// only. Deterministic: identical invocations produce identical results.
SweepResult sweep(const Netfile& netfile, const std::string& var, double from,
                  double to, int steps);

// CSV rendering: comma separator, 17 significant digits, LF line endings,
// mandatory header. Byte-identical across runs.
std::string to_csv(const SweepResult& result);
std::string format_cell(double v);

// Built-in figure reproduction; returns the paths written.
//   fig3: ratio of E_N, the xi pair, the xi sum ratio, and the E_N sum,
//         versus theta2 on a 200-point grid over [0, pi].
//   fig6: the contangle triple on the same grid.
std::vector<std::string> write_figure(const std::string& name,
                                      const std::string& out_dir);

}  // namespace cvnet
