#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavent/field.hpp"

// Rabi-angle sweeps and figure-style data products. All output is plain CSV
// plus a gnuplot command file; nothing is rendered in-process.

namespace cavent {

struct SweepConfig {
  FieldKind field_kind = FieldKind::fock;
  double field_param = 0.0;  // photon number m (fock) or mean <n> (thermal)
  double gt_min = 0.0;
  double gt_max = 6.283185307179586;  // 2*pi, covers all displayed structure
  int steps = 1000;
  double tail_epsilon = 1e-12;  // thermal only
  bool verify = false;          // cross-check every 16th point with the oracle
  std::string output_path;      // used by the CLI; run_sweep itself never writes
};

struct SweepRow {
  double gt = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
};

// Raised when a --verify cross-check disagrees with the brute-force oracle
// beyond tolerance; the CLI maps it to its own exit code.
class oracle_mismatch_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniform inclusive grid of cfg.steps points over [gt_min, gt_max]; one row
// of entanglement measures per point.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// 12-significant-digit fixed-notation formatting shared by every CSV writer;
// byte-deterministic for a given value.
std::string format_sig(double x);

void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::filesystem::path& path);

struct FigureOutput {
  std::filesystem::path csv;
  std::filesystem::path plot_script;
};

// Entanglement of formation vs gt for Fock fields m = 0, 10, 100 on a
// 1000-point [0, 2*pi] grid; columns gt, eof_n0, eof_n10, eof_n100.
FigureOutput reproduce_fig2(const std::filesystem::path& out_dir);

// Same sweep for thermal fields <n> = 0.1, 1, 10 (tail 1e-12); columns
// gt, eof_nbar0.1, eof_nbar1, eof_nbar10.
FigureOutput reproduce_fig3(const std::filesystem::path& out_dir);

}  // namespace cavent
