#include "steergp/config.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "steergp/error.h"

namespace steergp {

using nlohmann::json;

void NetworkConfig::validate() const {
  const std::size_t layers = linear_layers();
  if (widths.size() != layers + 1) {
    throw ConfigError("widths", "expected " + std::to_string(layers + 1) +
                                    " entries for depth " +
                                    std::to_string(depth) +
                                    (final_linear ? " with final_linear" : "") +
                                    ", got " + std::to_string(widths.size()));
  }
  for (std::size_t w : widths) {
    if (w == 0) throw ConfigError("widths", "multiplicities must be positive");
  }
  if (filter_modes.size() != layers) {
    throw ConfigError("filter_modes", "expected " + std::to_string(layers) +
                                          " entries, got " +
                                          std::to_string(filter_modes.size()));
  }
  if (!(sigma_w_sq > 0.0) || !std::isfinite(sigma_w_sq)) {
    throw ConfigError("sigma_w_sq", "must be a positive finite number");
  }
  if (input.window.lo > input.window.hi) {
    throw ConfigError("input", "mode_lo exceeds mode_hi");
  }
  for (const FieldTerm& t : input.terms) {
    if (t.channel >= widths.front()) {
      throw ConfigError("input", "term channel " + std::to_string(t.channel) +
                                     " out of range for n^0 = " +
                                     std::to_string(widths.front()));
    }
    if (!input.window.contains(t.mode)) {
      throw ConfigError("input", "term mode " + std::to_string(t.mode) +
                                     " outside [mode_lo, mode_hi]");
    }
  }
}

ModeField make_input(const NetworkConfig& config) {
  return synth_field(config.input.terms, config.grid, config.input.rep_index,
                     config.widths.front(), config.input.window);
}

namespace {

// Reads one JSON object, tracking which keys were consumed so that leftovers
// can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& raw(const std::string& key) {
    if (!j_.contains(key)) throw ConfigError(qualified(key), "missing required key");
    seen_.insert(key);
    return j_.at(key);
  }

  template <typename T>
  T required(const std::string& key) {
    const json& v = raw(key);
    return convert<T>(v, qualified(key));
  }

  template <typename T>
  T optional(const std::string& key, T fallback) {
    if (!has(key)) return fallback;
    return required<T>(key);
  }

  ObjectReader object(const std::string& key) {
    return ObjectReader(raw(key), qualified(key));
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) throw ConfigError(qualified(key), "unknown key");
    }
  }

  std::string qualified(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  template <typename T>
  static T convert(const json& v, const std::string& where) {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(where, "expected a boolean");
    } else if constexpr (std::is_unsigned_v<T>) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ConfigError(where, "expected a non-negative integer");
      }
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(where, "expected an integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(where, "expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(where, "expected a string");
    }
    return v.get<T>();
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename T>
std::vector<T> read_list(ObjectReader& r, const std::string& key) {
  const json& v = r.raw(key);
  const std::string where = r.qualified(key);
  if (!v.is_array()) throw ConfigError(where, "expected a list");
  std::vector<T> out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(ObjectReader::convert<T>(e, where));
  return out;
}

RadialProfile read_profile(ObjectReader r) {
  const auto kind = r.required<std::string>("kind");
  RadialProfile out;
  if (kind == "constant") {
    out = ConstantProfile{r.required<double>("value")};
  } else if (kind == "gaussian") {
    GaussianProfile g;
    g.amplitude = r.required<double>("amplitude");
    g.center = r.required<double>("center");
    g.width = r.required<double>("width");
    if (!(g.width > 0.0)) throw ConfigError(r.qualified("width"), "must be positive");
    out = g;
  } else if (kind == "power_decay") {
    PowerDecayProfile d;
    d.amplitude = r.required<double>("amplitude");
    d.scale = r.required<double>("scale");
    d.power = r.required<double>("power");
    if (!(d.scale > 0.0)) throw ConfigError(r.qualified("scale"), "must be positive");
    out = d;
  } else {
    throw ConfigError(r.qualified("kind"), "unknown profile kind '" + kind + "'");
  }
  r.finish();
  return out;
}

Complex read_complex(ObjectReader& r, const std::string& key) {
  const auto parts = read_list<double>(r, key);
  if (parts.size() != 2) throw ConfigError(r.qualified(key), "expected [re, im]");
  return {parts[0], parts[1]};
}

RadialGrid read_grid(ObjectReader r) {
  const bool has_values = r.has("values");
  const bool has_count = r.has("count") || r.has("p_max");
  if (has_values == has_count) {
    throw ConfigError(r.qualified("values"),
                      "give either explicit values or count and p_max");
  }
  try {
    if (has_values) {
      auto v = read_list<double>(r, "values");
      r.finish();
      return RadialGrid(std::move(v));
    }
    const auto count = r.required<std::size_t>("count");
    const auto p_max = r.required<double>("p_max");
    r.finish();
    return RadialGrid::Uniform(count, p_max);
  } catch (const ShapeError& e) {
    throw ConfigError("radial_grid", e.what());
  }
}

InputSpec read_input(ObjectReader r) {
  InputSpec in;
  in.rep_index = r.required<int>("rep_index");
  in.window.lo = r.required<int>("mode_lo");
  in.window.hi = r.required<int>("mode_hi");
  const json& terms = r.raw("terms");
  if (!terms.is_array()) throw ConfigError(r.qualified("terms"), "expected a list");
  for (std::size_t x = 0; x < terms.size(); ++x) {
    ObjectReader t(terms[x], r.qualified("terms[" + std::to_string(x) + "]"));
    FieldTerm term;
    term.channel = t.required<std::size_t>("channel");
    term.mode = t.required<int>("mode");
    term.profile = read_profile(t.object("profile"));
    if (t.has("amplitude")) term.amplitude = read_complex(t, "amplitude");
    t.finish();
    in.terms.push_back(term);
  }
  r.finish();
  return in;
}

Tolerances read_tolerances(ObjectReader r) {
  Tolerances t;
  t.rotation = r.required<double>("rotation");
  t.translation = r.required<double>("translation");
  t.oracle = r.required<double>("oracle");
  t.constraint = r.required<double>("constraint");
  t.cubic = r.required<double>("cubic");
  t.sigma_mult = r.required<double>("sigma_mult");
  r.finish();
  return t;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", std::string("not valid JSON: ") + e.what());
  }
  ObjectReader r(root, "");
  RunConfig run;
  NetworkConfig& net = run.network;
  net.depth = r.required<std::size_t>("depth");
  net.widths = read_list<std::size_t>(r, "widths");
  net.filter_modes = read_list<int>(r, "filter_modes");
  net.sigma_w_sq = r.required<double>("sigma_w_sq");
  net.grid = read_grid(r.object("radial_grid"));
  net.seed = r.required<std::uint64_t>("seed");
  net.input = read_input(r.object("input"));
  net.final_linear = r.optional<bool>("final_linear", false);
  net.validate();

  run.tolerances = read_tolerances(r.object("tolerances"));

  if (r.has("output")) {
    ObjectReader o = r.object("output");
    run.record_runtime = o.required<bool>("record_runtime");
    o.finish();
  }
  if (r.has("kernel")) {
    ObjectReader k = r.object("kernel");
    KernelSection s;
    s.layer = k.required<std::size_t>("layer");
    s.draws = k.required<std::size_t>("draws");
    s.analytic = k.required<bool>("analytic");
    s.empirical = k.required<bool>("empirical");
    k.finish();
    if (s.draws == 0) throw ConfigError("kernel.draws", "must be at least 1");
    run.kernel = s;
  }
  if (r.has("converge")) {
    ObjectReader c = r.object("converge");
    SweepSection s;
    s.widths = read_list<std::size_t>(c, "widths");
    s.draws = c.required<std::size_t>("draws");
    s.seeds = read_list<std::uint64_t>(c, "seeds");
    s.layer = c.required<std::size_t>("layer");
    c.finish();
    if (s.widths.empty()) throw ConfigError("converge.widths", "must not be empty");
    if (s.seeds.empty()) throw ConfigError("converge.seeds", "must not be empty");
    if (s.draws == 0) throw ConfigError("converge.draws", "must be at least 1");
    run.sweep = s;
  }
  if (r.has("check")) {
    ObjectReader c = r.object("check");
    CheckSection s;
    s.thetas = read_list<double>(c, "thetas");
    const auto t = read_list<double>(c, "translation");
    if (t.size() != 2) throw ConfigError("check.translation", "expected [tx, ty]");
    s.translation = {t[0], t[1]};
    s.moment_draws = c.required<std::size_t>("moment_draws");
    s.constraint_trials = c.required<std::size_t>("constraint_trials");
    s.cubic_modes = c.required<std::size_t>("cubic_modes");
    s.inject_two_mode_filter = c.optional<bool>("inject_two_mode_filter", false);
    c.finish();
    run.check = s;
  }
  if (r.has("sample_gp")) {
    ObjectReader g = r.object("sample_gp");
    SampleGpSection s;
    s.layer = g.required<std::size_t>("layer");
    s.channels = g.required<std::size_t>("channels");
    g.finish();
    if (s.channels == 0) throw ConfigError("sample_gp.channels", "must be positive");
    run.sample_gp = s;
  }
  if (r.has("filter_check")) {
    ObjectReader f = r.object("filter_check");
    FilterCheckSection s;
    const json& terms = f.raw("terms");
    if (!terms.is_array() || terms.empty()) {
      throw ConfigError("filter_check.terms", "expected a non-empty list");
    }
    for (std::size_t x = 0; x < terms.size(); ++x) {
      ObjectReader t(terms[x], "filter_check.terms[" + std::to_string(x) + "]");
      CoordFilterTermSpec spec;
      spec.profile = read_profile(t.object("profile"));
      spec.m = t.required<int>("m");
      spec.n = t.required<int>("n");
      t.finish();
      s.terms.push_back(spec);
    }
    s.rho_in_freq = f.required<int>("rho_in_freq");
    s.rho_out_freq = f.required<int>("rho_out_freq");
    s.trials = f.required<std::size_t>("trials");
    f.finish();
    run.filter_check = s;
  }
  r.finish();
  return run;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

namespace {

json profile_json(const RadialProfile& profile) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantProfile>) {
          return {{"kind", "constant"}, {"value", p.value}};
        } else if constexpr (std::is_same_v<T, GaussianProfile>) {
          return {{"kind", "gaussian"},
                  {"amplitude", p.amplitude},
                  {"center", p.center},
                  {"width", p.width}};
        } else {
          return {{"kind", "power_decay"},
                  {"amplitude", p.amplitude},
                  {"scale", p.scale},
                  {"power", p.power}};
        }
      },
      profile);
}

}  // namespace

std::string network_config_json(const NetworkConfig& config) {
  json terms = json::array();
  for (const FieldTerm& t : config.input.terms) {
    terms.push_back({{"channel", t.channel},
                     {"mode", t.mode},
                     {"profile", profile_json(t.profile)},
                     {"amplitude", {t.amplitude.real(), t.amplitude.imag()}}});
  }
  json j = {
      {"depth", config.depth},
      {"widths", config.widths},
      {"filter_modes", config.filter_modes},
      {"sigma_w_sq", config.sigma_w_sq},
      {"radial_grid", {{"values", std::vector<double>(config.grid.values().begin(),
                                                      config.grid.values().end())}}},
      {"seed", config.seed},
      {"input",
       {{"rep_index", config.input.rep_index},
        {"mode_lo", config.input.window.lo},
        {"mode_hi", config.input.window.hi},
        {"terms", terms}}},
      {"final_linear", config.final_linear},
  };
  return j.dump();
}

std::string config_digest(const NetworkConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : network_config_json(config)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace steergp
