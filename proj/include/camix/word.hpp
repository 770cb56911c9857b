#pragma once

#include <compare>
#include <string>
#include <vector>

#include "camix/arith.hpp"

namespace camix {

// A finite restriction of a configuration: symbols at consecutive
// coordinates starting at `offset`. May be empty.
struct Word {
  Coord offset = 0;
  std::vector<Symbol> symbols;

  Coord lo() const { return offset; }
  Coord hi() const { return offset + static_cast<Coord>(symbols.size()) - 1; }
  std::size_t size() const { return symbols.size(); }

  // Symbol at absolute coordinate c; caller keeps c within [lo, hi].
  Symbol at(Coord c) const { return symbols[static_cast<std::size_t>(c - offset)]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.offset <=> b.offset; c != 0) return c;
    return a.symbols <=> b.symbols;
  }
};

// Compact rendering: digits run together for m <= 10, comma-separated otherwise.
inline std::string to_string(const Word& w, Symbol m) {
  std::string s;
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    if (m > 10 && i > 0) s += ',';
    s += std::to_string(w.symbols[i]);
  }
  return s;
}

}  // namespace camix
