#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "camix/errors.hpp"
#include "camix/event.hpp"
#include "camix/mixing.hpp"
#include "camix/oracle.hpp"
#include "camix/report_io.hpp"
#include "camix/rule.hpp"
#include "camix/textio.hpp"

namespace camix {

// Parsed command line. The driver in tools/ fills this from flags; tests
// construct it directly. Exit codes: 0 success, 1 domain error (violated
// precondition, budget, mismatch found by oracle-check), 2 config error
// (unknown command, parse failure, unsupported format).
struct RunConfig {
  std::string command;
  std::string rule_text;
  std::string event_text;           // preimage, measure
  std::string a_text;               // correlate, cesaro, weakmix, strongmix, threshold
  std::string b_text;
  Coord i = 0;
  Coord j = 1;
  Coord p = 1;                      // lattice rectangle
  Coord n = 1;
  std::string along_text;           // strongmix: "i:j,i:j,..."
  std::uint64_t max_len = 2;        // search-nonfactor box
  std::uint64_t max_j = 1;
  std::uint64_t limit = 50;         // search-nonfactor listing cap
  std::string format = "text";      // text | json | csv
  std::uint64_t cap = kDefaultEnumerationBudget;     // block listing cap
  std::uint64_t budget = kDefaultEnumerationBudget;  // oracle word budget
  bool parallel = false;
  unsigned threads = 0;
};

namespace cli_detail {

inline std::string with_decimal(const std::string& exact, const Rational& q) {
  return exact + " (= " + format_decimal(q) + ")";
}

inline std::string measure_line(const ExactMeasure& mu) {
  return with_decimal(format_measure(mu), mu.value());
}

inline std::string rational_line(const Rational& q) {
  return with_decimal(format_rational(q), q);
}

inline std::vector<ActionIndex> parse_index_list(const std::string& text) {
  const std::string s = detail::strip_ws(text);
  if (s.empty()) throw ParseError("empty index list");
  std::vector<ActionIndex> out;
  std::size_t pos = 0;
  while (true) {
    ActionIndex idx;
    idx.i = detail::take_int(s, pos, "index i");
    detail::expect(s, pos, ":");
    idx.j = detail::take_int(s, pos, "index j");
    out.push_back(idx);
    if (pos == s.size()) break;
    detail::expect(s, pos, ",");
  }
  return out;
}

inline void emit(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << "\n"; }

inline int cmd_preimage(const RunConfig& cfg, std::ostream& out) {
  const AdditiveRule rule = parse_rule(cfg.rule_text);
  const AffineEvent event = parse_event(cfg.event_text, rule.modulus());
  const AffineEvent pulled = action_preimage(rule, ActionIndex{cfg.i, cfg.j}, event);
  const ExactMeasure mu = measure(pulled);
  const bool listed = mu.count <= cfg.cap;
  std::vector<Word> words;
  if (listed) words = blocks(pulled, cfg.cap);

  if (cfg.format == "json") {
    nlohmann::json doc{{"command", "preimage"},
                       {"rule", format_rule(rule)},
                       {"event", format_event(event)},
                       {"i", cfg.i},
                       {"j", cfg.j},
                       {"window", {pulled.window_lo(), pulled.window_hi()}},
                       {"count", to_string(mu.count)},
                       {"measure", format_measure(mu)},
                       {"measure_decimal", mu.value().convert_to<double>()},
                       {"blocks_listed", listed}};
    if (listed) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Word& w : words) arr.push_back(format_event(make_cylinder(
          rule.modulus(), w.offset, w.symbols)));
      doc["blocks"] = arr;
    }
    emit(out, doc);
    return 0;
  }
  out << "rule: " << format_rule(rule) << "\n";
  out << "event: " << format_event(event) << "\n";
  out << "index: (" << cfg.i << "," << cfg.j << ")\n";
  out << "window: [" << pulled.window_lo() << "," << pulled.window_hi() << "]\n";
  out << "count: " << to_string(mu.count) << "\n";
  out << "measure: " << measure_line(mu) << "\n";
  if (!listed) {
    out << "blocks: omitted (count " << to_string(mu.count) << " exceeds cap " << cfg.cap
        << ")\n";
    return 0;
  }
  out << "blocks:\n";
  for (const Word& w : words)
    out << "@" << w.offset << ":[" << to_string(w, rule.modulus()) << "]\n";
  return 0;
}

inline int cmd_measure(const RunConfig& cfg, std::ostream& out) {
  const AdditiveRule rule = parse_rule(cfg.rule_text);
  const AffineEvent event = parse_event(cfg.event_text, rule.modulus());
  const ExactMeasure mu = measure(event);
  if (cfg.format == "json") {
    emit(out, nlohmann::json{{"command", "measure"},
                             {"event", format_event(event)},
                             {"window", {event.window_lo(), event.window_hi()}},
                             {"count", to_string(mu.count)},
                             {"measure", format_measure(mu)},
                             {"measure_decimal", mu.value().convert_to<double>()}});
    return 0;
  }
  out << "event: " << format_event(event) << "\n";
  out << "window: [" << event.window_lo() << "," << event.window_hi() << "]\n";
  out << "measure: " << measure_line(mu) << "\n";
  return 0;
}

inline int cmd_correlate(const RunConfig& cfg, std::ostream& out) {
  const AdditiveRule rule = parse_rule(cfg.rule_text);
  const AffineEvent a = parse_event(cfg.a_text, rule.modulus());
  const AffineEvent b = parse_event(cfg.b_text, rule.modulus());
  const Correlation c = correlation(rule, a, b, ActionIndex{cfg.i, cfg.j});
  if (cfg.format == "json") {
    nlohmann::json doc = correlation_json(c);
    doc["command"] = "correlate";
    doc["rule"] = format_rule(rule);
    doc["A"] = format_event(a);
    doc["B"] = format_event(b);
    emit(out, doc);
    return 0;
  }
  if (cfg.format == "csv") {
    MixingReport single;
    single.lattice.push_back(c);
    out << report_csv(single);
    return 0;
  }
  out << "rule: " << format_rule(rule) << "\n";
  out << "A: " << format_event(a) << "\n";
  out << "B: " << format_event(b) << "\n";
  out << "index: (" << cfg.i << "," << cfg.j << ")\n";
  out << "value: " << measure_line(c.value) << "\n";
  out << "deviation: " << rational_line(c.deviation) << "\n";
  return 0;
}

inline MixingReport build_report(const RunConfig& cfg) {
  const AdditiveRule rule = parse_rule(cfg.rule_text);
  const AffineEvent a = parse_event(cfg.a_text, rule.modulus());
  const AffineEvent b = parse_event(cfg.b_text, rule.modulus());
  return cesaro_report(rule, a, b, LatticeRect{cfg.p, cfg.n},
                       EvalOptions{cfg.parallel, cfg.threads});
}

inline void report_header(const MixingReport& rep, std::ostream& out) {
  out << "rule: " << rep.rule_text << "\n";
  out << "A: " << rep.a_text << "\n";
  out << "B: " << rep.b_text << "\n";
  out << "rect: p=" << rep.rect.p << " n=" << rep.rect.n << "\n";
  out << "mu(A): " << measure_line(rep.mu_a) << "\n";
  out << "mu(B): " << measure_line(rep.mu_b) << "\n";
  out << "product: " << rational_line(rep.product) << "\n";
}

inline int cmd_cesaro(const RunConfig& cfg, std::ostream& out) {
  const MixingReport rep = build_report(cfg);
  if (cfg.format == "json") {
    nlohmann::json doc = report_json(rep);
    doc["command"] = "cesaro";
    emit(out, doc);
    return 0;
  }
  if (cfg.format == "csv") {
    out << report_csv(rep);
    return 0;
  }
  report_header(rep, out);
  out << "lattice (i,j value deviation):\n";
  for (const Correlation& c : rep.lattice)
    out << "(" << c.i << "," << c.j << ") " << format_measure(c.value) << " "
        << format_rational(c.deviation) << "\n";
  out << "cesaro_value: " << rational_line(rep.cesaro_value) << "\n";
  out << "cesaro_deviation: " << rational_line(rep.cesaro_deviation) << "\n";
  out << "cesaro_bound: " << rational_line(rep.cesaro_bound) << "\n";
  out << "weak_sum: " << rational_line(rep.weak_sum) << "\n";
  out << "strong_tail: (" << rep.strong_tail.i << "," << rep.strong_tail.j << ") "
      << format_measure(rep.strong_tail.value) << " "
      << format_rational(rep.strong_tail.deviation) << "\n";
  return 0;
}

inline int cmd_weakmix(const RunConfig& cfg, std::ostream& out) {
  const MixingReport rep = build_report(cfg);
  if (cfg.format == "json") {
    nlohmann::json doc = report_json(rep);
    doc["command"] = "weakmix";
    emit(out, doc);
    return 0;
  }
  if (cfg.format == "csv") {
    out << report_csv(rep);
    return 0;
  }
  report_header(rep, out);
  out << "weak_sum: " << rational_line(rep.weak_sum) << "\n";
  out << "cesaro_bound: " << rational_line(rep.cesaro_bound) << "\n";
  return 0;
}

inline int cmd_strongmix(const RunConfig& cfg, std::ostream& out) {
  const AdditiveRule rule = parse_rule(cfg.rule_text);
  const AffineEvent a = parse_event(cfg.a_text, rule.modulus());
  const AffineEvent b = parse_event(cfg.b_text, rule.modulus());
  const std::vector<ActionIndex> along = parse_index_list(cfg.along_text);
  if (cfg.format == "csv") {
    MixingReport rows;
    for (const ActionIndex& idx : along)
      rows.lattice.push_back(correlation(rule, a, b, idx));
    out << report_csv(rows);
    return 0;
  }
  const std::vector<Rational> devs = strong_mixing_probe(rule, a, b, along);
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < along.size(); ++k)
      arr.push_back(nlohmann::json{{"i", along[k].i},
                                   {"j", along[k].j},
                                   {"deviation", format_rational(devs[k])}});
    emit(out, nlohmann::json{{"command", "strongmix"},
                             {"rule", format_rule(rule)},
                             {"A", format_event(a)},
                             {"B", format_event(b)},
                             {"deviations", arr}});
    return 0;
  }
  out << "rule: " << format_rule(rule) << "\n";
  out << "A: " << format_event(a) << "\n";
  out << "B: " << format_event(b) << "\n";
  for (std::size_t k = 0; k < along.size(); ++k)
    out << "(" << along[k].i << "," << along[k].j << "): " << rational_line(devs[k]) << "\n";
  return 0;
}

inline int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
  const AdditiveRule rule = parse_rule(cfg.rule_text);
  const AffineEvent a = parse_event(cfg.a_text, rule.modulus());
  const AffineEvent b = parse_event(cfg.b_text, rule.modulus());
  const Coord i_star = disjoint_threshold(rule, a, b, cfg.j);
  const Coord i_star_alt = disjoint_threshold_variant(rule, a, b, cfg.j);
  if (cfg.format == "json") {
    emit(out, nlohmann::json{{"command", "threshold"},
                             {"rule", format_rule(rule)},
                             {"A", format_event(a)},
                             {"B", format_event(b)},
                             {"j", cfg.j},
                             {"i_star", i_star},
                             {"i_star_alt", i_star_alt}});
    return 0;
  }
  out << "rule: " << format_rule(rule) << "\n";
  out << "A: " << format_event(a) << "\n";
  out << "B: " << format_event(b) << "\n";
  out << "j: " << cfg.j << "\n";
  out << "i_star: " << i_star << "\n";
  out << "i_star_alt: " << i_star_alt << "\n";
  return 0;
}

inline int cmd_search_nonfactor(const RunConfig& cfg, std::ostream& out) {
  const AdditiveRule rule = parse_rule(cfg.rule_text);
  const std::vector<NonfactorWitness> found =
      search_nonfactorizing(rule, cfg.max_len, cfg.max_j);
  const std::size_t shown = std::min<std::size_t>(found.size(), cfg.limit);
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < shown; ++k)
      arr.push_back(nlohmann::json{{"A", format_event(found[k].a)},
                                   {"B", format_event(found[k].b)},
                                   {"j", found[k].j},
                                   {"deviation", format_rational(found[k].deviation)}});
    emit(out, nlohmann::json{{"command", "search-nonfactor"},
                             {"rule", format_rule(rule)},
                             {"max_len", cfg.max_len},
                             {"max_j", cfg.max_j},
                             {"total", found.size()},
                             {"witnesses", arr}});
    return 0;
  }
  out << "rule: " << format_rule(rule) << "\n";
  out << "box: max_len=" << cfg.max_len << " max_j=" << cfg.max_j << "\n";
  out << "witnesses: " << found.size() << "\n";
  for (std::size_t k = 0; k < shown; ++k)
    out << "A=" << format_event(found[k].a) << " B=" << format_event(found[k].b)
        << " j=" << found[k].j << " deviation=" << format_rational(found[k].deviation)
        << "\n";
  if (shown < found.size()) out << "(" << found.size() - shown << " more not shown)\n";
  return 0;
}

// Fixed deterministic box of cross-checks between the solver path and the
// brute-force path; exits nonzero on any mismatch.
inline int cmd_oracle_check(const RunConfig& cfg, std::ostream& out) {
  std::uint64_t comparisons = 0, mismatches = 0;
  auto check = [&](bool ok) {
    ++comparisons;
    if (!ok) ++mismatches;
  };

  for (Symbol m : {Symbol{2}, Symbol{3}}) {
    std::vector<AdditiveRule> rules;
    for (Coord lo : {Coord{-1}, Coord{0}}) {
      for (std::size_t w : {std::size_t{1}, std::size_t{2}}) {
        std::vector<Symbol> coeffs(w, 0);
        while (true) {
          try {
            rules.push_back(make_rule(m, lo, lo + static_cast<Coord>(w) - 1, coeffs));
          } catch (const ContractViolation&) {
          }
          bool wrapped = true;
          for (std::size_t pos = w; pos-- > 0;) {
            if (++coeffs[pos] < m) {
              wrapped = false;
              break;
            }
            coeffs[pos] = 0;
          }
          if (wrapped) break;
        }
      }
    }
    rules.push_back(make_rule(m, -1, 1, {1, 1, 1}));

    std::vector<AffineEvent> events;
    for (std::size_t len : {std::size_t{1}, std::size_t{2}}) {
      std::vector<Symbol> syms(len, 0);
      while (true) {
        events.push_back(make_cylinder(m, 0, syms));
        bool wrapped = true;
        for (std::size_t pos = len; pos-- > 0;) {
          if (++syms[pos] < m) {
            wrapped = false;
            break;
          }
          syms[pos] = 0;
        }
        if (wrapped) break;
      }
    }

    for (const AdditiveRule& rule : rules) {
      const GeneralRule table = GeneralRule::tabulate(rule);
      check(is_surjective(rule) == brute_surjectivity(rule, 3, cfg.budget));
      check(is_surjective(rule) == brute_surjectivity(table, 3, cfg.budget));
      for (const AffineEvent& a : events) {
        const AffineEvent pulled = preimage(rule, a);
        const std::vector<Word> lex = blocks(pulled, cfg.budget);
        check(lex == brute_preimage(rule, a, cfg.budget));
        check(lex == brute_preimage(table, a, cfg.budget));
        check(measure(pulled).count == BigInt(lex.size()));
        for (const ActionIndex idx : {ActionIndex{0, 1}, ActionIndex{1, 1}}) {
          const Correlation c = correlation(rule, a, a, idx);
          const ExactMeasure ref = brute_correlation(rule, a, a, idx, cfg.budget);
          check(c.value.count == ref.count && c.value.width == ref.width);
          const AffineEvent acted = action_preimage(rule, idx, a);
          const AffineEvent trivial(m, a.window_lo(), a.window_hi(),
                                    IntMatrix(0, a.width()), {});
          check(measure(acted) ==
                brute_correlation(rule, a, trivial, idx, cfg.budget));
        }
      }
    }
  }

  if (cfg.format == "json") {
    emit(out, nlohmann::json{{"command", "oracle-check"},
                             {"budget", cfg.budget},
                             {"comparisons", comparisons},
                             {"mismatches", mismatches}});
  } else {
    out << "budget: " << cfg.budget << "\n";
    out << "comparisons: " << comparisons << "\n";
    out << "mismatches: " << mismatches << "\n";
  }
  return mismatches == 0 ? 0 : 1;
}

}  // namespace cli_detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kCsvCommands{"correlate", "cesaro", "weakmix",
                                                     "strongmix"};
  try {
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv") {
      err << "config error: unknown format \"" << cfg.format << "\"\n";
      return 2;
    }
    if (cfg.format == "csv" &&
        std::find(kCsvCommands.begin(), kCsvCommands.end(), cfg.command) ==
            kCsvCommands.end()) {
      err << "config error: csv output is only available for correlation commands\n";
      return 2;
    }
    if (cfg.command == "preimage") return cli_detail::cmd_preimage(cfg, out);
    if (cfg.command == "measure") return cli_detail::cmd_measure(cfg, out);
    if (cfg.command == "correlate") return cli_detail::cmd_correlate(cfg, out);
    if (cfg.command == "cesaro") return cli_detail::cmd_cesaro(cfg, out);
    if (cfg.command == "weakmix") return cli_detail::cmd_weakmix(cfg, out);
    if (cfg.command == "strongmix") return cli_detail::cmd_strongmix(cfg, out);
    if (cfg.command == "threshold") return cli_detail::cmd_threshold(cfg, out);
    if (cfg.command == "search-nonfactor") return cli_detail::cmd_search_nonfactor(cfg, out);
    if (cfg.command == "oracle-check") return cli_detail::cmd_oracle_check(cfg, out);
    err << "config error: unknown command \"" << cfg.command << "\"\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const EnumerationRefused& e) {
    err << "enumeration refused: " << e.what() << "\n";
    return 1;
  } catch (const ContractViolation& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace camix
