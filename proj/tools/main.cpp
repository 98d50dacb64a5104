#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gateaux/derivative.hpp"
#include "gateaux/json_writer.hpp"
#include "gateaux/lp.hpp"
#include "gateaux/mc.hpp"
#include "gateaux/problem_file.hpp"
#include "gateaux/sequences.hpp"
#include "gateaux/verify.hpp"

namespace {

using gateaux::input_error;
using gateaux::precondition_error;
using nlohmann::ordered_json;

// Human-readable number: short but unambiguous for typical values.
std::string human(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

ordered_json weight_json(const gateaux::Weight& w) {
  if (w.is_infinite()) return "inf";
  return w.value();
}

std::string weight_human(const gateaux::Weight& w) {
  return w.is_infinite() ? "inf" : human(w.value());
}

ordered_json function_json(const gateaux::MeasureSpace& space,
                           const gateaux::SimpleFunction& f) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < space.size(); ++i) {
    j[space.id(i)] = f[i];
  }
  return j;
}

ordered_json atom_list_json(const gateaux::MeasureSpace& space,
                            const gateaux::AtomSet& set) {
  ordered_json j = ordered_json::array();
  for (std::size_t i : set.indices()) j.push_back(space.id(i));
  return j;
}

std::string atom_list_human(const gateaux::MeasureSpace& space,
                            const gateaux::AtomSet& set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set.indices()) {
    if (!first) out += ", ";
    first = false;
    out += space.id(i);
  }
  return out + "}";
}

void emit(const ordered_json& j) { std::fputs(gateaux::dump_json17(j).c_str(), stdout); }

// Shared state for the file-based subcommands.
struct FileArgs {
  std::string path;
  bool json = false;
  std::optional<double> zero_tol;
};

struct LoadedSpaceProblem {
  gateaux::MeasureSpace space;
  gateaux::SimpleFunction f;
  std::optional<gateaux::SimpleFunction> h;
  std::optional<double> p;
  double zero_tol = 0.0;
  std::vector<std::string> snapped;
};

LoadedSpaceProblem load_space_problem(const FileArgs& args) {
  gateaux::ProblemFile pf = gateaux::load_problem_file(args.path);
  if (!pf.space) throw input_error("input needs a space");
  if (!pf.f) throw input_error("input needs f");
  LoadedSpaceProblem out{*pf.space, *pf.f, pf.h, pf.p, 0.0, {}};
  out.zero_tol = args.zero_tol ? *args.zero_tol : pf.zero_tol.value_or(0.0);
  out.snapped = gateaux::snap_zeros(out.space, out.f, out.zero_tol);
  return out;
}

ordered_json common_header(const char* command,
                           const LoadedSpaceProblem& prob) {
  ordered_json j;
  j["command"] = command;
  j["zero_tol"] = prob.zero_tol;
  j["snapped_atoms"] = prob.snapped;
  return j;
}

int run_analyze(const FileArgs& args) {
  const LoadedSpaceProblem prob = load_space_problem(args);
  const gateaux::ClassifyReport report =
      gateaux::classify(prob.space, prob.f);

  if (args.json) {
    ordered_json j = common_header("analyze", prob);
    j["differentiable"] = report.differentiable;
    j["in_g"] = report.in_g;
    j["a1_holds"] = report.a1_holds;
    j["zero_atoms"] = atom_list_json(prob.space, report.zero_atoms);
    j["zero_measure"] = weight_json(report.zero_measure);
    if (report.differentiable) {
      const gateaux::DualElement deriv =
          gateaux::derivative_functional(prob.space, prob.f);
      j["density"] = function_json(prob.space, deriv.density());
      j["operator_norm"] = deriv.operator_norm();
      j["witness"] = nullptr;
      j["witness_one_sided"] = nullptr;
    } else {
      const gateaux::DirectionalLimit sides = gateaux::directional_derivatives(
          prob.space, prob.f, *report.witness);
      j["density"] = nullptr;
      j["operator_norm"] = nullptr;
      j["witness"] = function_json(prob.space, *report.witness);
      j["witness_one_sided"] = {{"plus", sides.plus()},
                                {"minus", sides.minus()}};
    }
    emit(j);
    return 0;
  }

  std::printf("differentiable: %s\n", yesno(report.differentiable));
  std::printf("in_g: %s\n", yesno(report.in_g));
  std::printf("a1_holds: %s\n", yesno(report.a1_holds));
  std::printf("zero_atoms: %s\n",
              atom_list_human(prob.space, report.zero_atoms).c_str());
  std::printf("zero_measure: %s\n",
              weight_human(report.zero_measure).c_str());
  if (report.differentiable) {
    const gateaux::DualElement deriv =
        gateaux::derivative_functional(prob.space, prob.f);
    std::string density;
    for (std::size_t i = 0; i < prob.space.size(); ++i) {
      if (i) density += " ";
      density += prob.space.id(i) + ":" + human(deriv.density()[i]);
    }
    std::printf("density: %s\n", density.c_str());
    std::printf("operator_norm: %s\n", human(deriv.operator_norm()).c_str());
  } else {
    const gateaux::DirectionalLimit sides = gateaux::directional_derivatives(
        prob.space, prob.f, *report.witness);
    std::string ids;
    for (std::size_t i = 0; i < prob.space.size(); ++i) {
      if ((*report.witness)[i] == 1.0) ids = prob.space.id(i);
    }
    std::printf("witness: indicator of {%s}\n", ids.c_str());
    std::printf("witness_one_sided: +%s / %s\n", human(sides.plus()).c_str(),
                human(sides.minus()).c_str());
  }
  return 0;
}

int run_derive(const FileArgs& args) {
  const LoadedSpaceProblem prob = load_space_problem(args);
  if (!prob.h) throw input_error("input needs a direction h");
  const gateaux::ClassifyReport report =
      gateaux::classify(prob.space, prob.f);
  if (!report.differentiable) {
    throw precondition_error(
        "norm is not differentiable at f; run the onesided command for "
        "the one-sided values");
  }
  const double value = gateaux::gateaux_derivative(prob.space, prob.f, *prob.h);
  const gateaux::DualElement deriv =
      gateaux::derivative_functional(prob.space, prob.f);

  if (args.json) {
    ordered_json j = common_header("derive", prob);
    j["l1_norm_f"] = gateaux::l1_norm(prob.space, prob.f);
    j["derivative"] = value;
    j["density"] = function_json(prob.space, deriv.density());
    j["operator_norm"] = deriv.operator_norm();
    emit(j);
    return 0;
  }

  std::printf("l1_norm_f: %s\n",
              human(gateaux::l1_norm(prob.space, prob.f)).c_str());
  std::printf("derivative: %s\n", human(value).c_str());
  std::printf("operator_norm: %s\n", human(deriv.operator_norm()).c_str());
  return 0;
}

int run_onesided(const FileArgs& args) {
  const LoadedSpaceProblem prob = load_space_problem(args);
  if (!prob.h) throw input_error("input needs a direction h");
  const gateaux::DirectionalLimit sides =
      gateaux::directional_derivatives(prob.space, prob.f, *prob.h);

  if (args.json) {
    ordered_json j = common_header("onesided", prob);
    j["two_sided"] = sides.is_two_sided();
    j["plus"] = sides.plus();
    j["minus"] = sides.minus();
    j["gap"] = sides.gap();
    if (sides.is_two_sided()) {
      j["value"] = sides.value();
    } else {
      j["value"] = nullptr;
    }
    emit(j);
    return 0;
  }

  std::printf("two_sided: %s\n", yesno(sides.is_two_sided()));
  std::printf("plus: %s\n", human(sides.plus()).c_str());
  std::printf("minus: %s\n", human(sides.minus()).c_str());
  std::printf("gap: %s\n", human(sides.gap()).c_str());
  return 0;
}

int run_verify(const FileArgs& args, const gateaux::FDSchedule& schedule,
               double tol) {
  const LoadedSpaceProblem prob = load_space_problem(args);
  if (!prob.h) throw input_error("input needs a direction h");
  const gateaux::FDReport report =
      gateaux::fd_directional(prob.space, prob.f, *prob.h, schedule, tol);
  const bool verified = report.stabilized && report.max_deviation <= tol;

  if (args.json) {
    ordered_json j = common_header("verify", prob);
    j["schedule"] = {{"t0", schedule.t0},
                     {"shrink", schedule.shrink},
                     {"steps", schedule.steps}};
    j["tol"] = tol;
    j["plus_quotients"] = report.plus_quotients;
    j["minus_quotients"] = report.minus_quotients;
    j["plus_estimate"] = report.plus_estimate;
    j["minus_estimate"] = report.minus_estimate;
    j["stabilized"] = report.stabilized;
    if (report.stabilization_step) {
      j["stabilization_step"] = *report.stabilization_step;
    } else {
      j["stabilization_step"] = nullptr;
    }
    j["closed_plus"] = report.closed_plus;
    j["closed_minus"] = report.closed_minus;
    if (report.closed_form) {
      j["closed_form"] = *report.closed_form;
    } else {
      j["closed_form"] = nullptr;
    }
    j["max_deviation"] = report.max_deviation;
    j["verified"] = verified;
    emit(j);
    return verified ? 0 : 1;
  }

  if (report.stabilization_step) {
    std::printf("stabilized: yes (step %d)\n", *report.stabilization_step);
  } else {
    std::printf("stabilized: no\n");
  }
  std::printf("plus_estimate: %s\n", human(report.plus_estimate).c_str());
  std::printf("minus_estimate: %s\n", human(report.minus_estimate).c_str());
  std::printf("closed_plus: %s\n", human(report.closed_plus).c_str());
  std::printf("closed_minus: %s\n", human(report.closed_minus).c_str());
  std::printf("max_deviation: %s\n", human(report.max_deviation).c_str());
  std::printf("verified: %s\n", yesno(verified));
  return verified ? 0 : 1;
}

int run_lp(const FileArgs& args, int remainder_steps) {
  const LoadedSpaceProblem prob = load_space_problem(args);
  if (!prob.p) throw input_error("input needs an exponent p");
  if (*prob.p == 1.0) {
    throw input_error(
        "p = 1 is the kinked case; use the analyze or onesided commands");
  }
  const gateaux::PExponent p(*prob.p);
  const double norm = gateaux::lp_norm(prob.space, prob.f, p);
  const gateaux::LpFunctional deriv =
      gateaux::lp_frechet_derivative(prob.space, prob.f, p);
  const double q_norm = gateaux::lp_norm(prob.space, deriv.density(),
                                         gateaux::PExponent(p.conjugate()));

  if (args.json) {
    ordered_json j = common_header("lp", prob);
    j["p"] = p.p();
    j["lp_norm_f"] = norm;
    j["density"] = function_json(prob.space, deriv.density());
    j["dual_q_norm"] = q_norm;
    if (prob.h) {
      j["action_on_h"] = deriv.evaluate(*prob.h);
      ordered_json table = ordered_json::array();
      for (int k = 0; k <= remainder_steps; ++k) {
        const double scale = std::ldexp(1.0, -k);
        const gateaux::SimpleFunction hk = gateaux::scaled(scale, *prob.h);
        ordered_json row;
        row["k"] = k;
        row["h_scale"] = scale;
        row["h_norm"] = gateaux::lp_norm(prob.space, hk, p);
        row["ratio"] = gateaux::lp_remainder_ratio(prob.space, prob.f, p, hk);
        table.push_back(row);
      }
      j["remainder_table"] = table;
    } else {
      j["action_on_h"] = nullptr;
      j["remainder_table"] = nullptr;
    }
    emit(j);
    return 0;
  }

  std::printf("p: %s\n", human(p.p()).c_str());
  std::printf("lp_norm_f: %s\n", human(norm).c_str());
  std::printf("dual_q_norm: %s\n", human(q_norm).c_str());
  if (prob.h) {
    std::printf("action_on_h: %s\n", human(deriv.evaluate(*prob.h)).c_str());
    std::printf("remainder ratios along h/2^k:\n");
    for (int k = 0; k <= remainder_steps; ++k) {
      const double scale = std::ldexp(1.0, -k);
      const gateaux::SimpleFunction hk = gateaux::scaled(scale, *prob.h);
      std::printf("  k=%-3d ||h||=%-22s ratio=%s\n", k,
                  human(gateaux::lp_norm(prob.space, hk, p)).c_str(),
                  human(gateaux::lp_remainder_ratio(prob.space, prob.f, p,
                                                    hk)).c_str());
    }
  }
  return 0;
}

int run_seq(const std::string& action, const FileArgs& args,
            int remainder_steps) {
  gateaux::ProblemFile pf = gateaux::load_problem_file(args.path);
  if (!pf.sequence) throw input_error("input needs a sequence");
  const gateaux::GeoTailSequence& x = *pf.sequence;

  if (action == "norm") {
    const double norm = gateaux::seq_l1_norm(x);
    if (args.json) {
      ordered_json j;
      j["command"] = "seq";
      j["subaction"] = "norm";
      j["l1_norm"] = norm;
      j["in_g"] = gateaux::seq_in_g(x);
      emit(j);
      return 0;
    }
    std::printf("l1_norm: %s\n", human(norm).c_str());
    std::printf("in_g: %s\n", yesno(gateaux::seq_in_g(x)));
    return 0;
  }

  if (action == "derive") {
    if (!pf.sequence_direction) {
      throw input_error("input needs a direction h");
    }
    const double value = gateaux::seq_gateaux(x, *pf.sequence_direction);
    if (args.json) {
      ordered_json j;
      j["command"] = "seq";
      j["subaction"] = "derive";
      j["derivative"] = value;
      j["h_l1_norm"] = pf.sequence_direction->l1_norm();
      emit(j);
      return 0;
    }
    std::printf("derivative: %s\n", human(value).c_str());
    return 0;
  }

  if (action == "classify") {
    const gateaux::SeqClassifyReport report = gateaux::seq_classify(x);
    if (args.json) {
      ordered_json j;
      j["command"] = "seq";
      j["subaction"] = "classify";
      j["differentiable"] = report.differentiable;
      if (report.witness_index) {
        j["witness_index"] = *report.witness_index;
        j["one_sided"] = {{"plus", report.one_sided->plus()},
                          {"minus", report.one_sided->minus()}};
      } else {
        j["witness_index"] = nullptr;
        j["one_sided"] = nullptr;
      }
      emit(j);
      return 0;
    }
    std::printf("differentiable: %s\n", yesno(report.differentiable));
    if (report.witness_index) {
      std::printf("witness_index: %zu\n", *report.witness_index);
      std::printf("one_sided: +%s / %s\n",
                  human(report.one_sided->plus()).c_str(),
                  human(report.one_sided->minus()).c_str());
    }
    return 0;
  }

  if (action == "frechet-fail") {
    ordered_json rows = ordered_json::array();
    for (int k = 1; k <= remainder_steps; ++k) {
      const gateaux::FrechetFailureRow row =
          gateaux::frechet_failure_witness(x, static_cast<std::size_t>(k));
      if (args.json) {
        ordered_json r;
        r["k"] = row.k;
        r["index"] = row.index;
        r["direction_value"] = row.direction_value;
        r["direction_norm"] = row.direction_norm;
        r["ratio"] = row.ratio;
        rows.push_back(r);
      } else {
        std::printf("  k=%-3zu index=%-4zu ||h||=%-22s ratio=%s\n", row.k,
                    row.index, human(row.direction_norm).c_str(),
                    human(row.ratio).c_str());
      }
    }
    if (args.json) {
      ordered_json j;
      j["command"] = "seq";
      j["subaction"] = "frechet-fail";
      j["rows"] = rows;
      emit(j);
    }
    return 0;
  }

  throw input_error("unknown seq action: " + action +
                    " (expected norm, derive, classify or frechet-fail)");
}

int run_mcnull(std::size_t dim, std::uint64_t samples, std::uint64_t seed,
               const std::vector<double>& weights, bool json) {
  gateaux::McConfig config;
  config.dimension = dim;
  config.samples = samples;
  config.seed = seed;
  config.weights = weights;
  const gateaux::McReport report = gateaux::monte_carlo_null(config);

  if (json) {
    ordered_json j;
    j["command"] = "mcnull";
    j["dimension"] = report.dimension;
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["generator"] = report.generator;
    j["shard_size"] = report.shard_size;
    j["shards"] = report.shards;
    j["non_differentiable"] = report.non_differentiable;
    j["fraction"] = report.fraction;
    emit(j);
    return 0;
  }

  std::printf("dimension: %zu\n", report.dimension);
  std::printf("samples: %llu\n",
              static_cast<unsigned long long>(report.samples));
  std::printf("seed: %llu\n", static_cast<unsigned long long>(report.seed));
  std::printf("non_differentiable: %llu\n",
              static_cast<unsigned long long>(report.non_differentiable));
  std::printf("fraction: %s\n", human(report.fraction).c_str());
  std::printf("generator: %s (%llu shards of %llu)\n",
              report.generator.c_str(),
              static_cast<unsigned long long>(report.shards),
              static_cast<unsigned long long>(report.shard_size));
  return 0;
}

void add_file_options(CLI::App* cmd, FileArgs& args) {
  cmd->add_option("input", args.path, "problem file (JSON)")->required();
  cmd->add_flag("--json", args.json, "machine-readable output");
  cmd->add_option("--zero-tol", args.zero_tol,
                  "snap |f| <= tol to exact zero before analysis");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differentiability of the L1 norm on atomic measure spaces"};
  app.require_subcommand(1);

  FileArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify f: differentiable point or kink");
  add_file_options(analyze, analyze_args);

  FileArgs derive_args;
  CLI::App* derive = app.add_subcommand(
      "derive", "derivative of the L1 norm at f along h");
  add_file_options(derive, derive_args);

  FileArgs onesided_args;
  CLI::App* onesided = app.add_subcommand(
      "onesided", "one-sided derivatives at f along h");
  add_file_options(onesided, onesided_args);

  FileArgs verify_args;
  gateaux::FDSchedule schedule;
  double verify_tol = 1e-12;
  CLI::App* verify = app.add_subcommand(
      "verify", "finite-difference check of the closed form");
  add_file_options(verify, verify_args);
  verify->add_option("--t0", schedule.t0, "largest step");
  verify->add_option("--shrink", schedule.shrink, "step shrink factor");
  verify->add_option("--steps", schedule.steps, "number of steps");
  verify->add_option("--tol", verify_tol, "plateau and deviation tolerance");

  FileArgs lp_args;
  int lp_steps = 20;
  CLI::App* lp = app.add_subcommand(
      "lp", "p-norm derivative and remainder decay, 1 < p < inf");
  add_file_options(lp, lp_args);
  lp->add_option("--remainder-steps", lp_steps,
                 "last k in the h/2^k remainder table")
      ->check(CLI::NonNegativeNumber);

  FileArgs seq_args;
  std::string seq_action;
  int seq_steps = 10;
  CLI::App* seq = app.add_subcommand(
      "seq", "summable sequences: norm, derivative, classification");
  seq->add_option("action", seq_action,
                  "norm | derive | classify | frechet-fail")
      ->required();
  add_file_options(seq, seq_args);
  seq->add_option("--remainder-steps", seq_steps,
                  "last tail offset k in the frechet-fail table")
      ->check(CLI::PositiveNumber);

  std::size_t mc_dim = 0;
  std::uint64_t mc_samples = 100000;
  std::uint64_t mc_seed = 0;
  std::vector<double> mc_weights;
  bool mc_json = false;
  CLI::App* mcnull = app.add_subcommand(
      "mcnull", "fraction of Gaussian samples that land on a kink");
  mcnull->add_option("--dim", mc_dim, "number of atoms")->required();
  mcnull->add_option("--samples", mc_samples, "sample count");
  mcnull->add_option("--seed", mc_seed, "RNG seed");
  mcnull->add_option("--weights", mc_weights,
                     "per-atom weights (comma separated; default all 1)")
      ->delimiter(',');
  mcnull->add_flag("--json", mc_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_args);
    if (app.got_subcommand(derive)) return run_derive(derive_args);
    if (app.got_subcommand(onesided)) return run_onesided(onesided_args);
    if (app.got_subcommand(verify)) {
      return run_verify(verify_args, schedule, verify_tol);
    }
    if (app.got_subcommand(lp)) return run_lp(lp_args, lp_steps);
    if (app.got_subcommand(seq)) {
      return run_seq(seq_action, seq_args, seq_steps);
    }
    if (app.got_subcommand(mcnull)) {
      return run_mcnull(mc_dim, mc_samples, mc_seed, mc_weights, mc_json);
    }
  } catch (const input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const precondition_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
