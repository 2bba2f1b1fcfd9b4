// Command-line front end: Rabi-angle sweeps and figure-style data products
// for the two-atom cavity entanglement model.
//
// Exit codes: 0 success, 1 usage/configuration error, 2 oracle-verification
// failure.

#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cavent/sweep.hpp"
#include "cavent/tolerances.hpp"

namespace {

void print_defaults() {
  const cavent::SweepConfig def;
  std::cout << "# cavent defaults (command-line flags override --config values)\n"
            << "[sweep]\n"
            << "field=fock\n"
            << "param=" << def.field_param << '\n'
            << "gt-min=" << def.gt_min << '\n'
            << "gt-max=" << cavent::format_sig(def.gt_max) << '\n'
            << "steps=" << def.steps << '\n'
            << "tail-eps=" << def.tail_epsilon << '\n'
            << "verify=false\n"
            << "[reproduce.fig2]\nout=.\n"
            << "[reproduce.fig3]\nout=.\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-atom entanglement mediated by a single-mode cavity"};
  app.set_config("--config", "", "optional key=value configuration file");
  bool show_config = false;
  app.add_flag("--show-config", show_config, "print all defaults and exit");

  cavent::SweepConfig cfg;
  std::string field_name = "fock";
  CLI::App* sweep = app.add_subcommand(
      "sweep", "entanglement of formation over a Rabi-angle grid");
  sweep
      ->add_option("--field", field_name,
                   "cavity field statistics: fock or thermal")
      ->check(CLI::IsMember({"fock", "thermal"}));
  sweep->add_option("--param", cfg.field_param,
                    "photon number m (fock) or mean photon number (thermal)");
  sweep->add_option("--gt-min", cfg.gt_min, "lowest Rabi angle");
  sweep->add_option("--gt-max", cfg.gt_max, "highest Rabi angle");
  sweep->add_option("--steps", cfg.steps, "grid points (inclusive endpoints)");
  sweep->add_option("--tail-eps", cfg.tail_epsilon,
                    "thermal truncation tail mass");
  sweep->add_flag("--verify", cfg.verify,
                  "cross-check every 16th point against the brute-force oracle");
  sweep->add_option("--out", cfg.output_path, "output CSV path")->required();

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "emit the reference figure datasets");
  std::string fig2_dir = ".";
  std::string fig3_dir = ".";
  CLI::App* fig2 = reproduce->add_subcommand(
      "fig2", "Fock fields m = 0, 10, 100 over gt in [0, 2pi]");
  fig2->add_option("--out", fig2_dir, "output directory");
  CLI::App* fig3 = reproduce->add_subcommand(
      "fig3", "thermal fields <n> = 0.1, 1, 10 over gt in [0, 2pi]");
  fig3->add_option("--out", fig3_dir, "output directory");
  reproduce->require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (show_config) {
      print_defaults();
      return 0;
    }
    if (sweep->parsed()) {
      cfg.field_kind = field_name == "thermal" ? cavent::FieldKind::thermal
                                               : cavent::FieldKind::fock;
      const auto rows = cavent::run_sweep(cfg);
      cavent::write_sweep_csv(rows, cfg.output_path);
      std::cout << "wrote " << rows.size() << " rows to " << cfg.output_path
                << '\n';
      return 0;
    }
    if (reproduce->parsed()) {
      if (fig2->parsed()) {
        const auto out = cavent::reproduce_fig2(fig2_dir);
        std::cout << "wrote " << out.csv.string() << " and "
                  << out.plot_script.string() << '\n';
        return 0;
      }
      if (fig3->parsed()) {
        const auto out = cavent::reproduce_fig3(fig3_dir);
        std::cout << "wrote " << out.csv.string() << " and "
                  << out.plot_script.string() << '\n';
        return 0;
      }
      std::cerr << "reproduce: expected fig2 or fig3\n";
      return 1;
    }
    std::cerr << app.help() << '\n';
    return 1;
  } catch (const cavent::oracle_mismatch_error& e) {
    std::cerr << "oracle verification failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
