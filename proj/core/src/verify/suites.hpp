#pragma once

#include "fgaut/automorphisms.hpp"
#include "fgaut/mk_product.hpp"
#include "fgaut/splittings.hpp"
#include "fgaut/verify.hpp"

#include <string>
#include <vector>

namespace fgaut::verify::detail {

void add_word_suites(std::vector<Suite>& out);
void add_automorphism_suites(std::vector<Suite>& out);
void add_nielsen_suites(std::vector<Suite>& out);
void add_mk_suites(std::vector<Suite>& out);
void add_splitting_suites(std::vector<Suite>& out);
void add_family_suites(std::vector<Suite>& out);

// Samplers shared by the suites.

/// Reduced word with length uniform in [0, max_length].
Word random_word(Rng& rng, const Basis& basis, std::size_t max_length);

/// Generators of Aut(F_2) used for sampling: tau, the swap, a1 -> a1^-1, a2 -> a2 a1,
/// and the two basic inner automorphisms.
std::vector<Automorphism> aut_f2_generators(const Basis& a);

/// Product of up to `max_factors` generators or their inverses.
Automorphism random_product(Rng& rng, const std::vector<Automorphism>& gens, std::size_t max_factors);

MkElement random_mk(Rng& rng, const Basis& a, std::size_t arity, std::size_t coord_length,
                    std::size_t phi_factors);

/// Transvections with parameters a1, a2, tau and inner(a1), inner(a2) in Aut(F_N).
std::vector<Automorphism> stab0_generators(const RoseSplitting& s);

WkElement random_wk(Rng& rng, std::size_t k);

std::string show(const Automorphism& phi);

}  // namespace fgaut::verify::detail
