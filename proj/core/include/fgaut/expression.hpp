#pragma once

// Products of literals: `x * y`, `x^k`, parentheses, and juxtaposition for words.
//
//   words:         a1 (a2 a1)^-1 * x1
//   automorphisms: (a1 -> a1 a2) * (a1 -> a1 a2)^-1     bare literal allowed alone
//   M_k elements:  (a1 ; a1 -> a1 a2) * (a2 ; 1)

#include "fgaut/automorphisms.hpp"
#include "fgaut/mk_product.hpp"

#include <cstddef>
#include <string_view>

namespace fgaut {

/// Smallest standard rank naming every letter in `text`: max(2, 2 + largest x index).
std::size_t infer_rank(std::string_view text);

Word eval_word(const Basis& basis, std::string_view expr);
Automorphism eval_automorphism(const Basis& basis, std::string_view expr, std::size_t inverse_search_length = 6);
MkElement eval_mk(const Basis& a, std::string_view expr, std::size_t inverse_search_length = 6);

}  // namespace fgaut
