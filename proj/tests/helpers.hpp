#pragma once

#include "fgaut/automorphisms.hpp"

#include <string_view>

namespace th {

inline fgaut::Word w(const fgaut::Basis& b, std::string_view text) { return fgaut::parse_word(b, text); }

inline fgaut::Automorphism aut(const fgaut::Basis& b, std::string_view text) {
  return fgaut::parse_automorphism(b, text);
}

inline const fgaut::Basis& f2() {
  static const fgaut::Basis b = fgaut::Basis::standard(2);
  return b;
}

}  // namespace th
