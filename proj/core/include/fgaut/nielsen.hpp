#pragma once

// Powers of Nielsen transformations in Aut(F_2).
//
// Throughout, tau is a1 -> a1 a2, a2 -> a2 on the rank-2 basis {a1, a2}. Its
// abelianization is [[1,0],[1,1]] and tau^p has matrix [[1,0],[p,1]].

#include "fgaut/automorphisms.hpp"

#include <optional>
#include <string>

namespace fgaut {

/// phi = (ad_y tau ad_y^-1)^p.
struct NielsenWitness {
  int power = 0;
  Word conjugator;
};

enum class SearchOutcome { witness, definitive_none, inconclusive };

const char* to_string(SearchOutcome outcome);

struct NielsenSearch {
  SearchOutcome outcome = SearchOutcome::inconclusive;
  std::optional<NielsenWitness> witness;
  std::string reason;
};

struct NielsenBounds {
  std::size_t max_conjugator_length = 4;
  int max_power = 4;
};

/// Trace 2 and determinant 1 on abelianization. Includes the identity class, hence every
/// inner automorphism. Throws DomainError unless rank is 2.
bool is_nielsen_power_outer(const Automorphism& phi);

/// (ad_y tau ad_y^-1)^p
Automorphism nielsen_conjugate_power(const Word& y, int power);

bool reproduces(const Automorphism& phi, const NielsenWitness& witness);

/// Three-valued search for phi = (ad_y tau ad_y^-1)^p with |y| <= bound.
///
/// Writing phi = ad_w tau^p, a witness needs w = y tau^p(y)^-1. Abelianizing gives
/// (I - M^p) y^ = w^, which for M = [[1,0],[1,1]] forces w^_1 = 0 and p | w^_2. Failing
/// either, or phi not being ad_w tau^p at all, is a definitive negative. Otherwise an
/// exhausted search is inconclusive.
NielsenSearch nielsen_power_witness(const Automorphism& phi, const NielsenBounds& bounds = {});

struct CommutingNielsenReport {
  bool powers_commute = false;  // [tau0^p, tau1^q] = 1
  bool commute = false;         // [tau0, tau1] = 1
  /// tau1 = ad_w tau0^sign with tau0(w) = w, searched when both commute.
  std::optional<Word> fixed_conjugator;
  int sign = 0;
  NielsenSearch witness0;
  NielsenSearch witness1;
};

/// Both inputs must be +-1 Nielsen powers on the outer level (abelianization conjugate to
/// [[1,0],[+-1,1]]: trace 2, determinant 1, not the identity); p and q nonzero.
CommutingNielsenReport commuting_nielsen_check(const Automorphism& tau0,
                                               const Automorphism& tau1, int p, int q,
                                               const NielsenBounds& bounds = {});

}  // namespace fgaut
