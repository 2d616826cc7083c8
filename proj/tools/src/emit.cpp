#include <map>
#include <string>
#include <variant>

#include <fmt/format.h>

#include <nlohmann/json.hpp>
#include "orthokern_cli/cli.hpp"
#include "json_io.hpp"

namespace orthokern::cli {

nlohmann::json params_json(const ParamMap& params) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, value] : params) {
    std::visit([&](const auto& v) { j[key] = v; }, value);
  }
  return j;
}

nlohmann::json report_to_json(const IdentityReport& r) {
  return {{"identity", r.identity}, {"params", params_json(r.params)}, {"lhs", r.lhs},
          {"rhs", r.rhs},           {"abs_err", r.abs_err},            {"rel_err", r.rel_err},
          {"order", r.order}};
}

std::string report_json(const IdentityReport& r) { return report_to_json(r).dump(); }

std::string identity_label(const std::string& tag) {
  static const std::map<std::string, std::string> labels{
      {"eq:main", "Thm 1.1 / eq:main"},
      {"poisson-product", "two-factor Poisson kernel identity"},
      {"eq:Gegen-1", "Thm 1.2 / eq:Gegen-1"},
      {"eq:Gegen-2", "Thm 1.2 / eq:Gegen-2"},
      {"eq:addition", "Prop 2.1 / eq:addition"},
      {"eq:generatingC", "eq:generatingC"},
      {"product-formula", "Gegenbauer product formula"},
      {"eq:HG", "eq:HG (Hermite-Genocchi)"},
      {"eq:intGx", "eq:intGx"},
  };
  const auto it = labels.find(tag);
  return it == labels.end() ? tag : it->second;
}

namespace {

std::string param_text(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::vector<double>>) {
          std::string s = "(";
          for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + fmt::format("{}", x[i]);
          return s + ")";
        } else {
          return fmt::format("{}", x);
        }
      },
      v);
}

}  // namespace

std::string report_text(const IdentityReport& r) {
  std::string s = identity_label(r.identity) + "\n";
  for (const auto& [key, value] : r.params) s += fmt::format("  {:<8} = {}\n", key, param_text(value));
  s += fmt::format("  lhs      = {:.17g}\n", r.lhs);
  s += fmt::format("  rhs      = {:.17g}\n", r.rhs);
  s += fmt::format("  abs_err  = {:.3e}\n", r.abs_err);
  s += fmt::format("  rel_err  = {:.3e}\n", r.rel_err);
  if (r.order > 0) s += fmt::format("  order    = {}\n", r.order);
  return s;
}

std::string csv_number(double v) { return fmt::format("{:.17g}", v); }

std::string sweep_csv(const std::vector<CriticalRow>& rows) {
  std::string s = "delta,n,lebesgue,critical_value\n";
  for (const CriticalRow& r : rows) {
    s += fmt::format("{},{},{},{}\n", csv_number(r.delta), r.n, csv_number(r.lebesgue),
                     csv_number(r.critical_value));
  }
  return s;
}

std::string scan_csv(const CubeScan& scan) {
  std::string s;
  for (int i = 0; i < scan.dim; ++i) s += fmt::format("x{},", i + 1);
  s += "value\n";
  for (std::size_t k = 0; k < scan.values.size(); ++k) {
    for (double c : scan.point(k)) s += csv_number(c) + ",";
    s += csv_number(scan.values[k]) + "\n";
  }
  return s;
}

}  // namespace orthokern::cli
