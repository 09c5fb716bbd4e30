#include "steergp/serialize.h"

#include <algorithm>

#include "json.hpp"
#include "steergp/error.h"

namespace steergp {

using nlohmann::json;

namespace {

json complex_array(std::span<const Complex> values) {
  json out = json::array();
  for (const Complex& c : values) out.push_back({c.real(), c.imag()});
  return out;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("record is missing '") + key + "'");
  return j.at(key).get<T>();
}

void read_complex_array(const json& j, std::span<Complex> dst, const char* what) {
  if (!j.is_array() || j.size() != dst.size()) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(dst.size()) +
                     " (re, im) pairs");
  }
  for (std::size_t x = 0; x < dst.size(); ++x) {
    dst[x] = Complex(j[x].at(0).get<double>(), j[x].at(1).get<double>());
  }
}

json grid_json(const RadialGrid& g) {
  return std::vector<double>(g.values().begin(), g.values().end());
}

}  // namespace

std::string mode_field_to_json(const ModeField& f) {
  json j = {
      {"type", "mode_field"},
      {"rep_index", f.rep_index()},
      {"grid", grid_json(f.grid())},
      {"channels", f.channels()},
      {"mode_lo", f.window().lo},
      {"mode_hi", f.window().hi},
      {"data", complex_array(f.data())},
  };
  return j.dump();
}

ModeField mode_field_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (field<std::string>(j, "type") != "mode_field") throw Error("not a mode_field record");
  ModeField f(field<int>(j, "rep_index"),
              RadialGrid(field<std::vector<double>>(j, "grid")),
              field<std::size_t>(j, "channels"),
              {field<int>(j, "mode_lo"), field<int>(j, "mode_hi")});
  read_complex_array(j.at("data"), f.data(), "mode_field.data");
  return f;
}

std::string kernel_to_json(const KernelMatrix& k) {
  json j = {
      {"type", "kernel_matrix"},
      {"grid", grid_json(k.grid())},
      {"mode_lo", k.window().lo},
      {"mode_hi", k.window().hi},
      {"entries", complex_array(k.entries())},
      {"std_err", std::vector<double>(k.std_errs().begin(), k.std_errs().end())},
  };
  if (k.provenance()) {
    j["draws"] = k.provenance()->draws;
    j["seed"] = k.provenance()->seed;
    j["config_digest"] = k.provenance()->config_digest;
  }
  return j.dump();
}

KernelMatrix kernel_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (field<std::string>(j, "type") != "kernel_matrix") {
    throw Error("not a kernel_matrix record");
  }
  KernelMatrix k(RadialGrid(field<std::vector<double>>(j, "grid")),
                 {field<int>(j, "mode_lo"), field<int>(j, "mode_hi")});
  read_complex_array(j.at("entries"), k.entries(), "kernel_matrix.entries");
  const auto se = field<std::vector<double>>(j, "std_err");
  if (se.size() != k.std_errs().size()) throw ShapeError("kernel_matrix.std_err size");
  std::ranges::copy(se, k.std_errs().begin());
  if (j.contains("draws")) {
    k.set_provenance({field<std::size_t>(j, "draws"), field<std::uint64_t>(j, "seed"),
                      field<std::string>(j, "config_digest")});
  }
  return k;
}

}  // namespace steergp
