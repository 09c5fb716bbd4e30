#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "steergp/config.h"
#include "steergp/coord_filter.h"
#include "steergp/error.h"
#include "steergp/experiments.h"
#include "steergp/kernel.h"
#include "steergp/serialize.h"

namespace {

using nlohmann::json;
using namespace steergp;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Invocation {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
};

struct Output {
  std::string text;
  bool pass = true;
};

template <typename Section>
const Section& require_section(const std::optional<Section>& s, const char* key) {
  if (!s) throw ConfigError(key, "section required by this subcommand is missing");
  return *s;
}

DiagonalKernel analytic_for_layer(const NetworkConfig& net, std::size_t layer) {
  const DiagonalKernel k0 = input_diagonal_kernel(make_input(net));
  if (layer <= net.depth) {
    const std::vector<int> q(net.filter_modes.begin(),
                             net.filter_modes.begin() + static_cast<long>(layer));
    return analytic_closed(k0, layer, q, net.sigma_w_sq);
  }
  return analytic_closed(k0, net.depth, net.filter_modes, net.sigma_w_sq, true);
}

void check_layer(const NetworkConfig& net, std::size_t layer, const char* key) {
  if (layer > net.linear_layers()) {
    throw ConfigError(key, "exceeds the number of layers (" +
                               std::to_string(net.linear_layers()) + ")");
  }
}

json runtime_json(const double* runtime) {
  return runtime ? json(*runtime) : json(nullptr);
}

Output run_kernel(const RunConfig& run, const Invocation& inv, const double* runtime) {
  const KernelSection& s = require_section(run.kernel, "kernel");
  const NetworkConfig& net = run.network;
  check_layer(net, s.layer, "kernel.layer");

  std::optional<DiagonalKernel> analytic;
  if (s.analytic) analytic = analytic_for_layer(net, s.layer);
  std::optional<KernelMatrix> empirical;
  Output out;
  json structure = nullptr;
  if (s.empirical) {
    empirical = empirical_kernel(net, make_input(net), s.layer, s.draws, net.seed);
    const DiagonalityReport d = diagonality_check(*empirical, run.tolerances.sigma_mult);
    const SingleModeReport m = single_mode_check(*empirical, run.tolerances.sigma_mult);
    bool mode_ok = m.pass;
    if (analytic && m.mode) mode_ok = mode_ok && *m.mode == analytic->mode;
    out.pass = d.pass && mode_ok;
    structure = {{"diagonal", d.pass},
                 {"max_off_diagonal_ratio", d.max_ratio},
                 {"single_mode", mode_ok},
                 {"located_mode", m.mode ? json(*m.mode) : json(nullptr)},
                 {"nonzero_modes", m.nonzero_modes}};
  }

  if (inv.format == "csv") {
    std::vector<ResultRow> rows;
    const RadialGrid& grid = net.grid;
    int mode = analytic ? analytic->mode : 0;
    if (!analytic && empirical) {
      const SingleModeReport m = single_mode_check(*empirical, run.tolerances.sigma_mult);
      mode = m.mode.value_or(empirical->window().lo);
    }
    for (std::size_t a = 0; a < grid.size(); ++a) {
      ResultRow r;
      r.depth = s.layer;
      r.width = net.widths[s.layer];
      r.draws = empirical ? s.draws : 0;
      r.mode = mode;
      r.bin = a;
      r.seed = net.seed;
      r.analytic = analytic ? analytic->values[a] : 0.0;
      if (empirical && empirical->window().contains(mode)) {
        r.empirical = empirical->at(mode, mode, a, a).real();
        r.std_err = empirical->std_err(mode, mode, a, a);
      }
      const double diff = std::abs(r.empirical - r.analytic);
      r.rel_err = r.analytic != 0.0 ? diff / std::abs(r.analytic) : diff;
      rows.push_back(r);
    }
    out.text = rows_to_csv(rows);
    return out;
  }

  json j;
  j["suite"] = "kernel";
  j["layer"] = s.layer;
  j["pass"] = out.pass;
  j["runtime_seconds"] = runtime_json(runtime);
  j["structure"] = structure;
  if (analytic) {
    j["analytic"] = {{"mode", analytic->mode},
                     {"grid", analytic->grid.values()},
                     {"values", analytic->values}};
  } else {
    j["analytic"] = nullptr;
  }
  j["empirical"] = empirical ? json::parse(kernel_to_json(*empirical)) : json(nullptr);
  out.text = j.dump(2) + "\n";
  return out;
}

Output run_converge(const RunConfig& run, const Invocation& inv, const double* runtime) {
  const SweepSection& s = require_section(run.sweep, "converge");
  check_layer(run.network, s.layer, "converge.layer");
  SweepSpec spec;
  spec.base = run.network;
  spec.widths = s.widths;
  spec.draws = s.draws;
  spec.seeds = inv.seed ? std::vector<std::uint64_t>{*inv.seed} : s.seeds;
  spec.layer = s.layer;
  spec.sigma_mult = run.tolerances.sigma_mult;
  const SweepResult r = converge_sweep(spec);

  Output out;
  out.pass = r.structure_pass;
  if (inv.format == "csv") {
    out.text = rows_to_csv(r.rows);
    return out;
  }
  json medians = json::array();
  const std::vector<double> med = median_rel_err(spec, r.rows);
  for (std::size_t i = 0; i < spec.widths.size(); ++i) {
    medians.push_back({{"width", spec.widths[i]}, {"median_rel_err", med[i]}});
  }
  json structure = json::array();
  for (const StructureFinding& f : r.structure) {
    structure.push_back({{"width", f.width},
                         {"replicates", f.replicates},
                         {"layer", f.layer},
                         {"diagonal", f.diagonal},
                         {"single_mode", f.single_mode},
                         {"located_mode", f.located_mode},
                         {"expected_mode", f.expected_mode}});
  }
  json rows = json::array();
  for (const ResultRow& row : r.rows) {
    rows.push_back({{"L", row.depth}, {"width", row.width}, {"draws", row.draws},
                    {"mode", row.mode}, {"bin", row.bin}, {"analytic", row.analytic},
                    {"empirical", row.empirical}, {"std_err", row.std_err},
                    {"rel_err", row.rel_err}, {"seed", row.seed}});
  }
  json j = {{"suite", "converge"},
            {"pass", r.structure_pass},
            {"runtime_seconds", runtime_json(runtime)},
            {"medians", medians},
            {"structure", structure},
            {"rows", rows}};
  out.text = j.dump(2) + "\n";
  return out;
}

Output run_check(const RunConfig& run, const Invocation& inv, const double* runtime) {
  require_section(run.check, "check");
  const SuiteReport r = equivariance_suite(run.network, run.network.seed, suite_options(run));
  Output out;
  out.pass = r.pass();
  out.text = inv.format == "csv" ? suite_to_csv(r) : suite_to_json(r, runtime);
  return out;
}

Output run_sample_gp(const RunConfig& run, const Invocation& inv, const double*) {
  const SampleGpSection& s = require_section(run.sample_gp, "sample_gp");
  const NetworkConfig& net = run.network;
  check_layer(net, s.layer, "sample_gp.layer");
  const DiagonalKernel k = analytic_for_layer(net, s.layer);
  const ModeField f = gp_sample(k, net.input.rep_index, s.channels, net.seed);
  Output out;
  if (inv.format == "csv") {
    std::ostringstream csv;
    csv << "channel,mode,bin,re,im\n";
    for (std::size_t c = 0; c < f.channels(); ++c) {
      for (int m = f.window().lo; m <= f.window().hi; ++m) {
        for (std::size_t a = 0; a < f.bins(); ++a) {
          const Complex v = f.at(c, m, a);
          csv << c << ',' << m << ',' << a << ',' << format_double(v.real()) << ','
              << format_double(v.imag()) << '\n';
        }
      }
    }
    out.text = csv.str();
  } else {
    out.text = mode_field_to_json(f);
  }
  return out;
}

Output run_filter_check(const RunConfig& run, const Invocation& inv, const double* runtime) {
  const FilterCheckSection& s = require_section(run.filter_check, "filter_check");
  CompositeFilter filter;
  for (const CoordFilterTermSpec& t : s.terms) {
    filter.terms.push_back(build_coord_filter(t.profile, t.m, t.n));
  }
  const double dev = check_kernel_constraint(filter, s.rho_in_freq, s.rho_out_freq, s.trials,
                                             run.network.seed);
  Output out;
  out.pass = dev <= run.tolerances.constraint;
  if (inv.format == "csv") {
    out.text = "item,pass,max_dev,tolerance\nkernel_constraint," +
               std::string(out.pass ? "true" : "false") + "," + format_double(dev) + "," +
               format_double(run.tolerances.constraint) + "\n";
  } else {
    out.text = summary_json("filter_check", out.pass, dev, runtime);
  }
  return out;
}

using Runner = Output (*)(const RunConfig&, const Invocation&, const double*);

int execute(Runner runner, const Invocation& inv) {
  RunConfig run = load_run_config(inv.config_path);
  if (inv.seed) run.network.seed = *inv.seed;

  const auto start = std::chrono::steady_clock::now();
  // Wall-clock time goes into the output only when the config asks for it;
  // otherwise identical runs must produce identical bytes.
  Output out = runner(run, inv, nullptr);
  if (run.record_runtime) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (inv.format == "json") {
      json j = json::parse(out.text);
      if (j.is_object() && j.contains("runtime_seconds")) {
        j["runtime_seconds"] = seconds;
        out.text = j.dump(2) + "\n";
      }
    }
  }

  if (inv.out_path.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream file(inv.out_path, std::ios::binary);
    if (!file) throw ConfigError("--out", "cannot open '" + inv.out_path + "' for writing");
    file << out.text;
    if (!file) throw Error("failed writing '" + inv.out_path + "'");
  }
  if (!out.pass) {
    std::cerr << "steergp: checks failed\n";
    return kExitCheckFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steerable CNN kernel experiments"};
  app.require_subcommand(1);
  Invocation inv;

  const std::pair<const char*, Runner> commands[] = {
      {"kernel", run_kernel},
      {"converge", run_converge},
      {"check", run_check},
      {"sample-gp", run_sample_gp},
      {"filter-check", run_filter_check},
  };
  const char* help[] = {
      "Analytic and/or empirical kernel at one layer",
      "Width sweep of the empirical kernel against the infinite-width limit",
      "Equivariance and oracle battery",
      "Sample fields from the limiting Gaussian process",
      "Kernel constraint check of a coordinate-space filter",
  };
  std::vector<std::pair<CLI::App*, Runner>> subs;
  std::optional<std::uint64_t> seed;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, help[i]);
    sub->add_option("--config", inv.config_path, "Run config (JSON)")->required();
    sub->add_option("--out", inv.out_path, "Output file (default: stdout)");
    sub->add_option("--seed", seed, "Override the config seed");
    sub->add_option("--format", inv.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    subs.emplace_back(sub, commands[i].second);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  inv.seed = seed;

  try {
    for (const auto& [sub, runner] : subs) {
      if (sub->parsed()) return execute(runner, inv);
    }
  } catch (const ConfigError& e) {
    std::cerr << "steergp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "steergp: error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
