#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "camix/mixing.hpp"
#include "camix/textio.hpp"

namespace camix {

// Machine-readable report forms. Exact values travel as strings (counts,
// count/m^width measures, num/den rationals); decimals are companions for
// plotting, never authoritative. nlohmann::json objects keep keys sorted, so
// identical reports serialize byte-identically.

inline nlohmann::json correlation_json(const Correlation& c) {
  return nlohmann::json{{"i", c.i},
                        {"j", c.j},
                        {"count", to_string(c.value.count)},
                        {"width", c.value.width},
                        {"value", format_measure(c.value)},
                        {"value_decimal", c.value.value().convert_to<double>()},
                        {"deviation", format_rational(c.deviation)}};
}

inline nlohmann::json report_json(const MixingReport& rep) {
  nlohmann::json lattice = nlohmann::json::array();
  for (const Correlation& c : rep.lattice) lattice.push_back(correlation_json(c));
  return nlohmann::json{{"rule", rep.rule_text},
                        {"A", rep.a_text},
                        {"B", rep.b_text},
                        {"rect", {{"p", rep.rect.p}, {"n", rep.rect.n}}},
                        {"mu_A", format_measure(rep.mu_a)},
                        {"mu_B", format_measure(rep.mu_b)},
                        {"product", format_rational(rep.product)},
                        {"lattice", lattice},
                        {"cesaro_value", format_rational(rep.cesaro_value)},
                        {"cesaro_deviation", format_rational(rep.cesaro_deviation)},
                        {"cesaro_bound", format_rational(rep.cesaro_bound)},
                        {"weak_sum", format_rational(rep.weak_sum)},
                        {"strong_tail", correlation_json(rep.strong_tail)}};
}

// One row per lattice point, schema fixed for downstream plotting.
inline std::string report_csv(const MixingReport& rep) {
  std::string out = "i,j,count,width,value_decimal,deviation_num,deviation_den\n";
  for (const Correlation& c : rep.lattice) {
    out += std::to_string(c.i);
    out += ',';
    out += std::to_string(c.j);
    out += ',';
    out += to_string(c.value.count);
    out += ',';
    out += std::to_string(c.value.width);
    out += ',';
    out += format_decimal(c.value.value());
    out += ',';
    out += numerator(c.deviation).str();
    out += ',';
    out += denominator(c.deviation).str();
    out += '\n';
  }
  return out;
}

}  // namespace camix
