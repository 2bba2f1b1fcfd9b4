#include "cavent/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cavent/dynamics.hpp"
#include "cavent/entanglement.hpp"
#include "cavent/oracle.hpp"
#include "cavent/tolerances.hpp"

namespace cavent {

namespace {

PhotonDistribution distribution_for(const SweepConfig& cfg) {
  if (cfg.field_kind == FieldKind::fock) {
    const double m = cfg.field_param;
    if (m < 0.0 || m != std::floor(m)) {
      throw std::invalid_argument(
          "sweep: fock field parameter must be a nonnegative integer");
    }
    return fock_distribution(static_cast<int>(m));
  }
  return thermal_distribution(cfg.field_param, cfg.tail_epsilon);
}

std::vector<double> uniform_grid(double lo, double hi, int steps) {
  std::vector<double> g(static_cast<std::size_t>(steps));
  const double span = hi - lo;
  for (int i = 0; i < steps; ++i) {
    g[static_cast<std::size_t>(i)] =
        lo + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

void verify_against_oracle(const PhotonDistribution& d, RabiAngle gt,
                           const TwoAtomDensity& analytic) {
  const double tolerance = d.kind == FieldKind::fock
                               ? tol::oracle_match_fock
                               : tol::oracle_match_thermal;
  const TwoAtomDensity reference = oracle::oracle_two_atom_density(d, gt);
  const double gap = (analytic.matrix() - reference.matrix()).max_abs();
  if (gap > tolerance) {
    std::ostringstream msg;
    msg << "oracle verification failed at gt=" << gt.gt << ": max entry gap "
        << gap << " exceeds " << tolerance;
    throw oracle_mismatch_error(msg.str());
  }
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (!(cfg.gt_min < cfg.gt_max)) {
    throw std::invalid_argument("sweep: gt_min must be below gt_max");
  }
  if (cfg.steps < 2) {
    throw std::invalid_argument("sweep: need at least 2 steps");
  }
  const PhotonDistribution d = distribution_for(cfg);
  const std::vector<double> grid =
      uniform_grid(cfg.gt_min, cfg.gt_max, cfg.steps);

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RabiAngle gt(grid[i]);
    const TwoAtomDensity rho = two_atom_density(d, gt);
    if (cfg.verify && i % 16 == 0) verify_against_oracle(d, gt, rho);
    const EntanglementResult r = entanglement_of_formation(rho);
    rows.push_back({gt.gt, r.concurrence, r.eof});
  }
  return rows;
}

std::string format_sig(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("format_sig: value must be finite");
  }
  constexpr int significant = 12;
  if (x == 0.0) return "0." + std::string(significant - 1, '0');
  const int magnitude =
      static_cast<int>(std::floor(std::log10(std::abs(x))));
  int decimals = significant - 1 - magnitude;
  if (decimals < 0) decimals = 0;
  if (decimals > 340) decimals = 340;
  char buf[400];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // '\n' endings on any platform
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path.string());
  }
  out << "gt,concurrence,eof\n";
  for (const SweepRow& r : rows) {
    out << format_sig(r.gt) << ',' << format_sig(r.concurrence) << ','
        << format_sig(r.eof) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

struct Series {
  std::string label;
  std::vector<SweepRow> rows;
};

FigureOutput write_figure(const std::filesystem::path& out_dir,
                          const std::string& stem,
                          const std::vector<Series>& series,
                          const std::string& title) {
  std::filesystem::create_directories(out_dir);
  FigureOutput paths{out_dir / (stem + ".csv"), out_dir / (stem + ".gnuplot")};

  std::ofstream csv(paths.csv, std::ios::binary);
  if (!csv) {
    throw std::runtime_error("cannot open output file: " + paths.csv.string());
  }
  csv << "gt";
  for (const Series& s : series) csv << ",eof_" << s.label;
  csv << '\n';
  const std::size_t n = series.front().rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    csv << format_sig(series.front().rows[i].gt);
    for (const Series& s : series) csv << ',' << format_sig(s.rows[i].eof);
    csv << '\n';
  }
  if (!csv) throw std::runtime_error("write failed: " + paths.csv.string());

  std::ofstream plot(paths.plot_script, std::ios::binary);
  if (!plot) {
    throw std::runtime_error("cannot open output file: " +
                             paths.plot_script.string());
  }
  plot << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'gt'\n"
       << "set ylabel 'entanglement of formation'\n"
       << "set title '" << title << "'\n"
       << "set terminal pngcairo size 900,600\n"
       << "set output '" << stem << ".png'\n"
       << "plot";
  for (std::size_t i = 0; i < series.size(); ++i) {
    plot << (i == 0 ? " " : ", ") << "'" << stem + ".csv"
         << "' using 1:" << (i + 2) << " with lines";
  }
  plot << '\n';
  if (!plot) {
    throw std::runtime_error("write failed: " + paths.plot_script.string());
  }
  return paths;
}

std::vector<SweepRow> figure_sweep(FieldKind kind, double param) {
  SweepConfig cfg;
  cfg.field_kind = kind;
  cfg.field_param = param;
  cfg.steps = 1000;
  cfg.tail_epsilon = tol::default_tail_epsilon;
  return run_sweep(cfg);
}

}  // namespace

FigureOutput reproduce_fig2(const std::filesystem::path& out_dir) {
  std::vector<Series> series;
  for (int m : {0, 10, 100}) {
    series.push_back({"n" + std::to_string(m),
                      figure_sweep(FieldKind::fock, static_cast<double>(m))});
  }
  return write_figure(out_dir, "fig2", series,
                      "two-atom entanglement, Fock cavity fields");
}

FigureOutput reproduce_fig3(const std::filesystem::path& out_dir) {
  const std::vector<std::pair<std::string, double>> nbars = {
      {"nbar0.1", 0.1}, {"nbar1", 1.0}, {"nbar10", 10.0}};
  std::vector<Series> series;
  for (const auto& [label, nbar] : nbars) {
    series.push_back({label, figure_sweep(FieldKind::thermal, nbar)});
  }
  return write_figure(out_dir, "fig3", series,
                      "two-atom entanglement, thermal cavity fields");
}

}  // namespace cavent
