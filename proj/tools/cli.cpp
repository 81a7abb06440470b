#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orcd/curve_io.hpp"
#include "orcd/errors.hpp"
#include "orcd/model_io.hpp"
#include "orcd/solver.hpp"

namespace orcd::cli {
namespace {

std::vector<double> grid_values(const RunConfig& cfg, GridSpec fallback) {
  const GridSpec g = cfg.grid.value_or(fallback);
  return linspace(g.start, g.stop, g.steps);
}

void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (!cfg.output_path) {
    out << payload;
    return;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file " + *cfg.output_path);
  file << payload;
  file.flush();
  if (!file) throw IoError("failed writing " + *cfg.output_path);
}

std::string render_curve(const RunConfig& cfg, const RateCurve& curve) {
  if (cfg.format == "json") return curve_to_json(curve) + "\n";
  std::ostringstream os;
  write_curve_csv(curve, os);
  return os.str();
}

RateFamily scalar_family(const ModelSpec& spec) {
  if (const auto* p = std::get_if<ParallelBinaryMrcd>(&spec)) return *p;
  if (const auto* b = std::get_if<BinaryMrcd>(&spec)) return *b;
  if (const auto* g = std::get_if<GaussianMrcd>(&spec)) return *g;
  throw UsageError("sweep needs a parallel_binary, binary or gaussian model");
}

const std::string& require_model(const RunConfig& cfg) {
  if (!cfg.model_path) throw UsageError(cfg.command + " requires --model");
  return *cfg.model_path;
}

std::string run_command(const RunConfig& cfg) {
  if (cfg.command == "fig4") return render_curve(cfg, run_fig4(cfg));
  if (cfg.command == "fig6") return render_curve(cfg, run_fig6(cfg));
  if (cfg.command == "fig7") return render_curve(cfg, run_fig7(cfg));
  if (cfg.command == "sweep") {
    if (!cfg.param) throw UsageError("sweep requires --param");
    if (!cfg.grid) throw UsageError("sweep requires --grid");
    const RateFamily family = scalar_family(load_model(require_model(cfg)));
    return render_curve(cfg, sweep(family, *cfg.param, grid_values(cfg, *cfg.grid)));
  }
  if (cfg.format != "json") throw UsageError(cfg.command + " only writes JSON");
  const DiscreteOrcd model = to_discrete(load_model(require_model(cfg)));
  if (cfg.command == "solve") {
    SolverConfig sc;
    sc.restarts = cfg.restarts;
    sc.seed = cfg.seed;
    return solve_report_to_json(solve_capacity(model, sc)) + "\n";
  }
  // classify
  nlohmann::json cases = nlohmann::json::array();
  for (TightnessCase c : classify_cutset_tightness(model)) cases.push_back(to_string(c));
  nlohmann::json doc = {{"cases", cases}, {"cutset", cutset_discrete(model)}};
  return doc.dump(2) + "\n";
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  GridSpec g;
  char c1 = 0, c2 = 0;
  long long steps = 0;
  if (!(in >> g.start >> c1 >> g.stop >> c2 >> steps) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw UsageError("grid must look like start:stop:steps, got '" + text + "'");
  }
  if (steps < 2) throw UsageError("grid needs at least 2 steps");
  if (!(g.stop > g.start)) throw UsageError("grid stop must exceed start");
  g.steps = static_cast<std::size_t>(steps);
  return g;
}

RateCurve run_fig4(const RunConfig& cfg) {
  const ParallelBinaryMrcd base{0.0, cfg.p_z.value_or(0.15), cfg.r1.value_or(1.2)};
  return sweep(base, "delta", grid_values(cfg, {0.0, 0.5, 201}));
}

RateCurve run_fig6(const RunConfig& cfg) {
  const GaussianMrcd base{cfg.power.value_or(0.3), 0.0, cfg.r1.value_or(1.0)};
  return sweep(base, "rho", grid_values(cfg, {0.0, 1.0, 201}));
}

RateCurve run_fig7(const RunConfig& cfg) {
  const BinaryMrcd base{0.0, cfg.p_z.value_or(0.5), cfg.r1.value_or(0.25)};
  return sweep(base, "delta", grid_values(cfg, {0.0, 0.5, 201}));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rates, bounds and capacity of state-dependent orthogonal relay channels", "orcd"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string grid_text;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.output_path, "Output file (stdout if omitted)");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", grid_text, "Sweep grid start:stop:steps");
  };

  auto* fig4 = app.add_subcommand("fig4", "Parallel binary MRC-D rates versus delta");
  add_common(fig4);
  add_grid(fig4);
  fig4->add_option("--r1", cfg.r1, "Relay link rate (default 1.2)");
  fig4->add_option("--pz", cfg.p_z, "State parameter (default 0.15)");

  auto* fig6 = app.add_subcommand("fig6", "Gaussian MRC-D rates versus rho");
  add_common(fig6);
  add_grid(fig6);
  fig6->add_option("--r1", cfg.r1, "Relay link rate (default 1)");
  fig6->add_option("--power", cfg.power, "Source power (default 0.3)");

  auto* fig7 = app.add_subcommand("fig7", "Binary MRC-D rates and capacity versus delta");
  add_common(fig7);
  add_grid(fig7);
  fig7->add_option("--r1", cfg.r1, "Relay link rate (default 0.25)");
  fig7->add_option("--pz", cfg.p_z, "State parameter (default 0.5)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter of a closed-form model");
  add_common(sweep_cmd);
  add_grid(sweep_cmd);
  sweep_cmd->add_option("--model", cfg.model_path, "Model JSON file")->required();
  sweep_cmd->add_option("--param", cfg.param, "Parameter to sweep (delta, p_z, r1, power, rho)")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Numerically evaluate the capacity of a discrete model");
  add_common(solve_cmd);
  solve_cmd->add_option("--model", cfg.model_path, "Model JSON file")->required();
  solve_cmd->add_option("--restarts", cfg.restarts, "Random restarts")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", cfg.seed, "Random seed");

  auto* classify_cmd = app.add_subcommand("classify", "Report which cut-set tightness cases hold");
  add_common(classify_cmd);
  classify_cmd->add_option("--model", cfg.model_path, "Model JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return e.get_exit_code() == 0 ? kOk : kValidation;
  }

  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if ((cfg.command == "solve" || cfg.command == "classify") && !app.get_subcommand(cfg.command)->count("--format")) {
    cfg.format = "json";
  }

  try {
    if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
    emit(cfg, run_command(cfg), out);
    return kOk;
  } catch (...) {
    return report_failure(std::current_exception(), err);
  }
}

int report_failure(std::exception_ptr failure, std::ostream& err) {
  try {
    std::rethrow_exception(failure);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolver;
  } catch (const std::invalid_argument& e) {  // ValidationError, UsageError
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  }
}

}  // namespace orcd::cli
