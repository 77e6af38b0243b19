#pragma once

// Explicit direct products of free groups in Aut(F_N) presented by generators: the
// transvection product D_B, the four maximal Aut families and the three Out families
// (the Out ones represented by automorphisms).

#include "fgaut/automorphisms.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fgaut {

enum class FamilyKind {
  DB,
  AutPlain,
  AutTauCentral,
  AutTauFirst,
  AutTauInner,
  OutPlain,
  OutTauCentral,
  OutTauFirst,
};

const char* to_string(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_string(std::string_view name);
const std::vector<FamilyKind>& all_family_kinds();
bool is_out_kind(FamilyKind kind);
/// Whether tau appears in one of the kind's factors.
bool lists_tau(FamilyKind kind);
/// 2N-3 for Aut kinds, 2N-4 for Out kinds and D_B.
std::size_t expected_nonabelian_factors(FamilyKind kind, std::size_t rank);

struct GeneratedFactor {
  std::string label;
  std::vector<Automorphism> generators;
  bool abelian = false;
};

/// Optional `conj` replaces every generator g by conj g conj^-1.
std::vector<GeneratedFactor> family_generators(FamilyKind kind, std::size_t rank,
                                               const std::optional<Automorphism>& conj = {});

std::size_t nonabelian_count(const std::vector<GeneratedFactor>& factors);

struct CrossPairCheck {
  std::size_t factor_a = 0, generator_a = 0;
  std::size_t factor_b = 0, generator_b = 0;
  bool commute = false;
};

struct NonabelianWitness {
  std::size_t factor = 0;
  /// Indices of a non-commuting generator pair, if one exists.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

struct DirectProductReport {
  std::vector<CrossPairCheck> cross;
  std::vector<NonabelianWitness> witnesses;
  /// Every cross pair commutes and every nonabelian factor has a witness.
  bool passes(const std::vector<GeneratedFactor>& factors) const;
  std::optional<CrossPairCheck> first_failure() const;
};

DirectProductReport check_direct_product(const std::vector<GeneratedFactor>& factors);

/// Products of at most `depth` generators and their inverses, sorted and deduplicated.
std::vector<Automorphism> word_table(const GeneratedFactor& factor, std::size_t depth);

/// The automorphisms lying in both depth tables; includes the identity.
std::vector<Automorphism> bounded_intersection_oracle(const GeneratedFactor& f1,
                                                      const GeneratedFactor& f2, std::size_t depth);

struct CentralizerBounds {
  /// Coordinate length for the Stab^0 probe.
  std::size_t depth = 1;
};

struct CentralizerReport {
  /// tau commutes with every generator of every factor not containing tau.
  bool tau_centralizes = false;
  /// A generator that tau fails to commute with: (factor label, generator).
  std::optional<std::pair<std::string, Automorphism>> obstruction;
  /// Probe results: elements of the Stab^0 enumeration commuting with all generators.
  std::vector<Automorphism> centralizing;
  std::size_t candidates = 0;
};

CentralizerReport centralizer_evidence(FamilyKind kind, std::size_t rank, const CentralizerBounds& bounds = {});

/// Probe candidates: mk_to_rose images of (g_1..g_2k ; phi) with |g_i| <= depth and phi from a
/// small fixed list of automorphisms of A, on the standard rose with N-2 petals.
std::vector<Automorphism> stab0_candidates(std::size_t rank, std::size_t depth);

std::vector<Automorphism> centralizer_in(const std::vector<Automorphism>& generators,
                                         const std::vector<Automorphism>& candidates);

struct FamilySpec {
  FamilyKind kind;
  std::size_t rank;
  std::optional<Automorphism> conj;
};

/// `AutTauCentral@N=3` with optional `~conj=<automorphism literal>`.
FamilySpec parse_family_spec(std::string_view text, std::optional<std::size_t> default_rank = {});

}  // namespace fgaut
