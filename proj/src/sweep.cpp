#include "cvnet/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "cvnet/entanglement.hpp"

namespace cvnet {
namespace {

double nan_guarded_ratio(double num, double den) {
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return num / den;
}

std::string join(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += l;
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IOFailure("cannot open '" + path.string() + "' for writing");
  }
  out << body;
  if (!out) {
    throw IOFailure("write failed for '" + path.string() + "'");
  }
}

std::string csv_render(const std::string& key_column,
                       const std::vector<std::string>& columns,
                       const std::vector<double>& grid,
                       const std::vector<std::vector<double>>& rows) {
  std::string out = key_column;
  for (const auto& c : columns) {
    out += ',';
    out += c;
  }
  out += '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += format_cell(grid[i]);
    for (double v : rows[i]) {
      out += ',';
      out += format_cell(v);
    }
    out += '\n';
  }
  return out;
}

// Reference parameters behind the built-in figures: three pure states with
// real off-diagonals 0.3, 0.5, 0.7, a balanced first splitter, phi2 = 1, and
// theta2 sweeping an inclusive 200-point grid over [0, pi].
struct FigurePoint {
  double en_a1b1, en_a1b2c1, xi_a1b1, xi_a1b2, xi_a1c1;
  double en_a1b2, en_a1c1;
};

FigurePoint figure_point(double theta2) {
  auto cm = MultiModeCM::from_modes({{"A", pure_state(0.3, 0.0)},
                                     {"B", pure_state(0.5, 0.0)},
                                     {"C", pure_state(0.7, 0.0)}});
  cm = apply_bs(cm, BeamSplitter(std::numbers::pi / 4.0, 0.0, "A", "B"));
  const MultiModeCM pair = partial_trace(cm, {"A", "B"});
  cm = apply_bs(cm, BeamSplitter(theta2, 1.0, "B", "C"));
  FigurePoint p;
  p.en_a1b1 = logneg_two_mode(pair);
  p.xi_a1b1 = xi_two_mode(pair);
  p.en_a1b2c1 = logneg_bipartition(cm, {"A"});
  const MultiModeCM ab = partial_trace(cm, {"A", "B"});
  const MultiModeCM ac = partial_trace(cm, {"A", "C"});
  p.xi_a1b2 = xi_two_mode(ab);
  p.xi_a1c1 = xi_two_mode(ac);
  p.en_a1b2 = logneg_two_mode(ab);
  p.en_a1c1 = logneg_two_mode(ac);
  return p;
}

std::vector<double> figure_grid() {
  std::vector<double> grid(200);
  for (int i = 0; i < 200; ++i) {
    grid[i] = i == 199 ? std::numbers::pi
                       : std::numbers::pi * i / 199.0;
  }
  return grid;
}

}  // namespace

std::string format_cell(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SweepResult sweep(const Netfile& netfile, const std::string& var, double from,
                  double to, int steps) {
  if (steps <= 0) {
    throw NonPositiveSteps("sweep needs a positive number of steps");
  }
  const auto holes = netfile.placeholders();
  if (std::find(holes.begin(), holes.end(), var) == holes.end()) {
    throw UnboundVariable("sweep variable '" + var +
                          "' is not a placeholder in the netfile");
  }

  SweepResult result;
  result.variable = var;
  result.grid.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    if (steps == 1) {
      result.grid.push_back(from);
    } else {
      result.grid.push_back(i == steps - 1
                                ? to
                                : from + (to - from) * i / (steps - 1));
    }
  }

  bool named = false;
  for (double value : result.grid) {
    const NetworkSpec spec = netfile.build({{var, value}});
    const auto run = run_network(spec);
    const auto reports = evaluate_reports(run, spec);
    if (!named) {
      for (const auto& r : reports) {
        result.columns.push_back(std::string(metric_name(r.request.metric)) +
                                 "_" + join(r.request.party_a) +
                                 join(r.request.party_b));
      }
      named = true;
    }
    std::vector<double> row;
    row.reserve(reports.size());
    for (const auto& r : reports) {
      row.push_back(r.value);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string to_csv(const SweepResult& result) {
  return csv_render(result.variable, result.columns, result.grid, result.rows);
}

std::vector<std::string> write_figure(const std::string& name,
                                      const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IOFailure("cannot create directory '" + out_dir + "': " +
                    ec.message());
  }

  const auto grid = figure_grid();
  std::vector<FigurePoint> points;
  points.reserve(grid.size());
  for (double theta2 : grid) {
    points.push_back(figure_point(theta2));
  }

  std::vector<std::string> written;
  const auto emit = [&](const std::string& file,
                        const std::vector<std::string>& columns,
                        auto&& row_of) {
    std::vector<std::vector<double>> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
      rows.push_back(row_of(p));
    }
    const auto path = dir / file;
    write_file(path, csv_render("theta2", columns, grid, rows));
    written.push_back(path.string());
  };

  if (name == "fig3") {
    emit("fig3_ratio_en.csv", {"EN_A1B1", "EN_A1B2C1", "ratio_EN"},
         [](const FigurePoint& p) {
           return std::vector<double>{
               p.en_a1b1, p.en_a1b2c1,
               nan_guarded_ratio(p.en_a1b1, p.en_a1b2c1)};
         });
    emit("fig3_xi_pair.csv", {"xi_A1B2", "xi_A1C1"}, [](const FigurePoint& p) {
      return std::vector<double>{p.xi_a1b2, p.xi_a1c1};
    });
    emit("fig3_xi_sum_ratio.csv", {"xi_A1B1", "xi_sum", "ratio_xi"},
         [](const FigurePoint& p) {
           const double sum = p.xi_a1b2 + p.xi_a1c1;
           return std::vector<double>{p.xi_a1b1, sum,
                                      nan_guarded_ratio(sum, p.xi_a1b1)};
         });
    emit("fig3_en_sum.csv", {"EN_A1B1", "EN_A1B2", "EN_A1C1", "EN_sum"},
         [](const FigurePoint& p) {
           return std::vector<double>{p.en_a1b1, p.en_a1b2, p.en_a1c1,
                                      p.en_a1b2 + p.en_a1c1};
         });
  } else if (name == "fig6") {
    emit("fig6_contangle.csv", {"C_A1B2C1", "C_A1B2", "C_A1C1"},
         [](const FigurePoint& p) {
           return std::vector<double>{p.en_a1b2c1 * p.en_a1b2c1,
                                      p.en_a1b2 * p.en_a1b2,
                                      p.en_a1c1 * p.en_a1c1};
         });
  } else {
    throw InvalidParameter("unknown figure '" + name +
                           "' (expected fig3 or fig6)");
  }
  return written;
}

}  // namespace cvnet
