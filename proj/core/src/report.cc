#include <charconv>
#include <sstream>

#include "json.hpp"
#include "steergp/experiments.h"

namespace steergp {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "L,width,draws,mode,bin,analytic,empirical,std_err,rel_err,seed\n";
  for (const ResultRow& r : rows) {
    out << r.depth << ',' << r.width << ',' << r.draws << ',' << r.mode << ','
        << r.bin << ',' << format_double(r.analytic) << ','
        << format_double(r.empirical) << ',' << format_double(r.std_err) << ','
        << format_double(r.rel_err) << ',' << r.seed << '\n';
  }
  return out.str();
}

namespace {

nlohmann::json runtime_value(const double* runtime_seconds) {
  return runtime_seconds ? nlohmann::json(*runtime_seconds) : nlohmann::json(nullptr);
}

}  // namespace

std::string summary_json(const std::string& suite, bool pass, double max_dev,
                         const double* runtime_seconds) {
  // nlohmann objects iterate in key order, so the dump is stable.
  nlohmann::json j = {{"suite", suite},
                      {"pass", pass},
                      {"max_dev", max_dev},
                      {"runtime_seconds", runtime_value(runtime_seconds)}};
  return j.dump(2) + "\n";
}

std::string suite_to_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "item,pass,max_dev,tolerance\n";
  for (const SuiteItem& i : report.items) {
    out << i.name << ',' << (i.pass ? "true" : "false") << ','
        << format_double(i.max_dev) << ',' << format_double(i.tolerance) << '\n';
  }
  return out.str();
}

std::string suite_to_json(const SuiteReport& report, const double* runtime_seconds) {
  double max_dev = 0.0;
  nlohmann::json items = nlohmann::json::array();
  for (const SuiteItem& i : report.items) {
    max_dev = std::max(max_dev, i.max_dev);
    items.push_back({{"name", i.name},
                     {"pass", i.pass},
                     {"max_dev", i.max_dev},
                     {"tolerance", i.tolerance}});
  }
  nlohmann::json j = {{"suite", "check"},
                      {"pass", report.pass()},
                      {"max_dev", max_dev},
                      {"runtime_seconds", runtime_value(runtime_seconds)},
                      {"items", items}};
  return j.dump(2) + "\n";
}

}  // namespace steergp
