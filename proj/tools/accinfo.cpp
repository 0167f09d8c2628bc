// Command-line front end: ensemble ingestion, optimization runs, built-in
// scenarios, and plot-ready sweep data.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "accinfo/json_io.hpp"
#include "accinfo/optimizer.hpp"
#include "accinfo/scenarios.hpp"

namespace {

using namespace accinfo;

constexpr int kExitConverged = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitMaxRounds = 2;
constexpr int kExitNoProgress = 3;

struct CommonOpts {
  std::string functional = "ai";
  std::size_t k = 0;
  std::string k_strategy = "grow";
  double alpha0 = 0.0;
  double tol_info = 1e-12;
  double tol_residual = 1e-8;
  int max_rounds = 20000;
  std::uint64_t seed = 1;
  int restarts = 1;
  double merge_tol = 1e-8;
  std::string trace_path;
  std::string out_path;
  bool bits = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_functional) {
  if (with_functional)
    cmd->add_option("--functional", o.functional, "ai or helstrom")
        ->check(CLI::IsMember({"ai", "helstrom"}));
  cmd->add_option("--k", o.k, "POVM member count (0 = number of states)");
  cmd->add_option("--k-strategy", o.k_strategy)
      ->check(CLI::IsMember({"fixed", "davies", "grow", "prune"}));
  cmd->add_option("--alpha0", o.alpha0, "initial step size (0 = automatic)");
  cmd->add_option("--tol-info", o.tol_info);
  cmd->add_option("--tol-residual", o.tol_residual);
  cmd->add_option("--max-rounds", o.max_rounds);
  cmd->add_option("--seed", o.seed);
  cmd->add_option("--restarts", o.restarts);
  cmd->add_option("--merge-tol", o.merge_tol);
  cmd->add_option("--trace", o.trace_path, "iteration trace CSV path");
  cmd->add_option("--out", o.out_path, "result JSON path");
  cmd->add_flag("--bits", o.bits, "report information in bits");
}

IterationConfig make_config(const CommonOpts& o) {
  IterationConfig cfg;
  cfg.alpha0 = o.alpha0;
  cfg.tol_info = o.tol_info;
  cfg.tol_residual = o.tol_residual;
  cfg.max_rounds = o.max_rounds;
  cfg.k = o.k;
  cfg.seed = o.seed;
  cfg.restarts = o.restarts;
  cfg.merge_tol = o.merge_tol;
  if (o.k_strategy == "fixed") cfg.k_strategy = KStrategy::Fixed;
  else if (o.k_strategy == "davies") cfg.k_strategy = KStrategy::Davies;
  else if (o.k_strategy == "prune") cfg.k_strategy = KStrategy::Prune;
  else cfg.k_strategy = KStrategy::Grow;
  return cfg;
}

GradientFunctional make_functional(const std::string& name) {
  return name == "helstrom" ? GradientFunctional::helstrom()
                            : GradientFunctional::accessible_information();
}

nlohmann::json povm_to_json(const Povm& m) {
  nlohmann::json members = nlohmann::json::array();
  for (const HermMatrix& op : m.members()) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < op.dim(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < op.dim(); ++c)
        row.push_back({op.mat()(r, c).real(), op.mat()(r, c).imag()});
      rows.push_back(std::move(row));
    }
    members.push_back(std::move(rows));
  }
  return {{"dim", m.dim()}, {"members", std::move(members)}};
}

void write_result_json(const OptimizationResult& res, const CommonOpts& o,
                       const std::string& functional) {
  if (o.out_path.empty()) return;
  const bool helstrom = functional == "helstrom";
  const double value = !helstrom && o.bits
                           ? res.info_value / std::numbers::ln2
                           : res.info_value;
  nlohmann::json doc = {
      {"functional", functional},
      {"info", value},
      {"base", helstrom ? "probability" : (o.bits ? "bit" : "nat")},
      {"residual", res.final_residual},
      {"rounds", res.rounds_used},
      {"converged", res.converged},
      {"K", res.povm.size()},
      {"povm", povm_to_json(res.povm)},
  };
  std::ofstream out(o.out_path);
  if (!out) throw InvalidInput("cannot open " + o.out_path);
  out << doc.dump(2) << '\n';
}

int run_optimize(const Ensemble& e, const CommonOpts& o) {
  OptimizationResult res =
      optimize(e, make_functional(o.functional), make_config(o));
  if (!o.trace_path.empty()) write_trace_csv(res.trace, o.trace_path);
  write_result_json(res, o, o.functional);
  if (o.functional == "helstrom") {
    std::printf("helstrom success rate: %.10f, K=%zu, rounds=%d, "
                "residual=%.3e, %s\n",
                res.info_value, res.povm.size(), res.rounds_used,
                res.final_residual,
                res.converged ? "converged" : "NOT converged");
  } else {
    const double value =
        o.bits ? res.info_value / std::numbers::ln2 : res.info_value;
    std::printf("%s: %.10f %s, K=%zu, rounds=%d, residual=%.3e, %s\n",
                o.functional.c_str(), value, o.bits ? "bits" : "nats",
                res.povm.size(), res.rounds_used, res.final_residual,
                res.converged ? "converged" : "NOT converged");
  }
  return res.converged ? kExitConverged : kExitMaxRounds;
}

int cmd_optimize(const std::string& input, const CommonOpts& o) {
  return run_optimize(load_ensemble(input), o);
}

int cmd_helstrom(const std::string& input, CommonOpts o) {
  o.functional = "helstrom";
  o.k_strategy = "fixed";
  Ensemble e = load_ensemble(input);
  if (e.size() == 2) {
    Povm proj = scenarios::helstrom_projectors(e);
    std::printf("analytic projector success rate: %.10f\n",
                success_rate(joint_probabilities(e, proj)));
  }
  return run_optimize(e, o);
}

int cmd_scenario(const std::string& name, std::optional<double> epsilon,
                 const CommonOpts& o) {
  if (name == "adhoc") {
    Ensemble e = scenarios::adhoc_ensemble();
    const std::string path = o.out_path.empty() ? "adhoc.json" : o.out_path;
    save_ensemble(e, path);
    std::printf("wrote %s\n", path.c_str());

    CommonOpts ho = o;
    ho.k_strategy = "fixed";
    ho.k = 2;
    ho.out_path.clear();
    ho.functional = "helstrom";
    int rc1 = run_optimize(e, ho);
    CommonOpts ao = o;
    ao.out_path.clear();
    ao.functional = "ai";
    int rc2 = run_optimize(e, ao);
    return rc1 != kExitConverged ? rc1 : rc2;
  }
  if (name == "tomographic") {
    if (!epsilon) {
      std::cerr << "error: --epsilon is required for the tomographic scenario\n";
      return kExitBadInput;
    }
    const double eps = *epsilon;
    Ensemble sextet = scenarios::tomographic_sextet(eps);
    const std::string path = o.out_path.empty() ? "sextet.json" : o.out_path;
    save_ensemble(sextet, path);
    std::printf("wrote %s\n", path.c_str());

    CommonOpts ao = o;
    ao.out_path.clear();
    ao.functional = "ai";
    if (ao.k == 0 && ao.k_strategy == "fixed") ao.k = 6;
    OptimizationResult res =
        optimize(sextet, make_functional("ai"), make_config(ao));
    if (!o.trace_path.empty()) write_trace_csv(res.trace, o.trace_path);

    bool separable = false;
    const double i_ae = scenarios::i_alice_eve(eps, &separable);
    const double i_ab = scenarios::i_alice_bob(eps);
    const double numeric_bits = res.info_value / std::numbers::ln2;
    std::printf("epsilon      = %.6f\n", eps);
    std::printf("I_A&B        = %.10f bits\n", i_ab);
    std::printf("I_A&E        = %.10f bits (analytic)\n", i_ae);
    std::printf("I_A&E        = %.10f bits (numeric, K=%zu, rounds=%d)\n",
                numeric_bits, res.povm.size(), res.rounds_used);
    if (separable)
      std::printf("note: epsilon >= 2/3; the closed-form POVM is no longer "
                  "optimal there, and a blend of product states already "
                  "gives the eavesdropper 1/3 bit\n");
    return res.converged ? kExitConverged : kExitMaxRounds;
  }
  std::cerr << "error: unknown scenario '" << name << "'\n";
  return kExitBadInput;
}

int cmd_sweep(double eps_start, double eps_end, double eps_step,
              const CommonOpts& o) {
  if (eps_step <= 0.0 || eps_end < eps_start) {
    std::cerr << "error: empty epsilon grid\n";
    return kExitBadInput;
  }
  const std::string path = o.out_path.empty() ? "sweep.csv" : o.out_path;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open " << path << '\n';
    return kExitBadInput;
  }
  out << "epsilon,i_ab_bits,i_ae_bits,i_numeric_bits\n";
  char buf[160];
  for (double eps = eps_start; eps <= eps_end + 1e-12; eps += eps_step) {
    Ensemble sextet = scenarios::tomographic_sextet(eps);
    CommonOpts ao = o;
    ao.functional = "ai";
    OptimizationResult res =
        optimize(sextet, make_functional("ai"), make_config(ao));
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", eps,
                  scenarios::i_alice_bob(eps), scenarios::i_alice_eve(eps),
                  res.info_value / std::numbers::ln2);
    out << buf;
  }
  std::printf("wrote %s\n", path.c_str());
  return kExitConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accessible-information POVM optimizer"};
  app.require_subcommand(1);

  CommonOpts opt_o, hel_o, scen_o, sweep_o;
  std::string opt_input, hel_input, scen_name;
  double epsilon = -1.0;
  double eps_start = 0.0, eps_end = 0.65, eps_step = 0.05;

  CLI::App* opt = app.add_subcommand("optimize", "optimize a POVM for an ensemble file");
  opt->add_option("input", opt_input, "ensemble JSON")->required();
  add_common_flags(opt, opt_o, true);

  CLI::App* hel = app.add_subcommand("helstrom", "minimum-error discrimination");
  hel->add_option("input", hel_input, "ensemble JSON")->required();
  add_common_flags(hel, hel_o, false);

  CLI::App* scen = app.add_subcommand("scenario", "run a built-in scenario");
  scen->add_option("name", scen_name, "adhoc or tomographic")->required();
  CLI::Option* eps_opt =
      scen->add_option("--epsilon", epsilon, "noise level for tomographic");
  add_common_flags(scen, scen_o, false);

  CLI::App* sweep = app.add_subcommand("sweep", "epsilon sweep of the tomographic scenario");
  sweep->add_option("--eps-start", eps_start);
  sweep->add_option("--eps-end", eps_end);
  sweep->add_option("--eps-step", eps_step);
  add_common_flags(sweep, sweep_o, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (opt->parsed()) return cmd_optimize(opt_input, opt_o);
    if (hel->parsed()) return cmd_helstrom(hel_input, hel_o);
    if (scen->parsed())
      return cmd_scenario(scen_name,
                          eps_opt->count() > 0 ? std::optional<double>(epsilon)
                                               : std::nullopt,
                          scen_o);
    if (sweep->parsed())
      return cmd_sweep(eps_start, eps_end, eps_step, sweep_o);
  } catch (const NoProgress& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitNoProgress;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
