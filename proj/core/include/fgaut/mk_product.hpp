#pragma once

// The semidirect product M_k(A) = A^k x| Aut(A) with diagonal action:
//
//   (g_1..g_k ; phi) . (h_1..h_k ; psi) = (g_1 phi(h_1) .. g_k phi(h_k) ; phi psi)
//
// together with the diagonal-inverse subgroup J = {(g^-1..g^-1 ; ad_g)}, the embedding
// A^{k+1} -> M_k(A), the involutions alpha_i and the projections to Aut(A) and Out(A).

#include "fgaut/automorphisms.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgaut {

class MkElement {
public:
  MkElement(std::vector<Word> coords, Automorphism phi);

  static MkElement identity(const Basis& a, std::size_t k);

  std::size_t arity() const noexcept { return coords_.size(); }
  const Basis& basis() const noexcept { return phi_.basis(); }
  const std::vector<Word>& coords() const noexcept { return coords_; }
  const Word& coord(std::size_t i) const { return coords_.at(i); }
  const Automorphism& phi() const noexcept { return phi_; }

  MkElement inverse() const;

  friend MkElement operator*(const MkElement& x, const MkElement& y);
  friend bool operator==(const MkElement&, const MkElement&) = default;
  friend std::strong_ordering operator<=>(const MkElement& x, const MkElement& y) noexcept;

  /// `(g1 | g2 ; phi)` with phi in compact form.
  std::string to_string() const;

private:
  std::vector<Word> coords_;
  Automorphism phi_;
};

MkElement mk_mul(const MkElement& x, const MkElement& y);
MkElement mk_inv(const MkElement& x);
MkElement mk_identity(const Basis& a, std::size_t k);
MkElement mk_power(const MkElement& x, int exponent);
bool mk_commute(const MkElement& x, const MkElement& y);

/// (g^-1, ..., g^-1 ; ad_g)
MkElement j_element(const Word& g, std::size_t k);
bool in_j(const MkElement& m);
/// (1, ..., 1 ; tau)
MkElement tau_bar(const Basis& a, std::size_t k);

/// An element of A^{k+1}; the last part is the J summand.
struct TupleElement {
  std::vector<Word> parts;
  friend bool operator==(const TupleElement&, const TupleElement&) = default;
};

/// (g_1..g_k, x) -> (g_1 x^-1 .. g_k x^-1 ; ad_x)
MkElement embed_tuple(const TupleElement& t);
/// (g_1..g_k ; ad_x) -> (g_1 x .. g_k x, x). Throws DomainError if phi is not inner.
TupleElement extract_tuple(const MkElement& m);
/// Exchanges parts i (1-based) and k+1.
TupleElement swap_with_last(const TupleElement& t, std::size_t i);

/// alpha_i(g ; phi) = (g_1 g_i^-1 .. g_i^-1 .. g_k g_i^-1 ; ad_{g_i} phi), 1 <= i <= k.
MkElement alpha(std::size_t i, const MkElement& x);

const Automorphism& pi(const MkElement& m);
IntMatrix pi_bar_matrix(const MkElement& m);

/// The candidates commuting with every generator, sorted and deduplicated.
std::vector<MkElement> centralizer_probe(std::span<const MkElement> generators,
                                         std::span<const MkElement> candidates);

/// Every (g_1..g_k ; phi) with |g_i| <= coord_length and phi from `phis`.
std::vector<MkElement> enumerate_mk(const Basis& a, std::size_t k, std::size_t coord_length,
                                    std::span<const Automorphism> phis);

/// Generators {a1 a2 a1^-1, a2} of Fix(tau) in A = F_2.
std::vector<Word> fix_tau_generators(const Basis& a);
bool is_tau_fixed(const Word& w);

/// The four containing shapes for direct products of k+1 free factors in M_k(F_2):
///   central  A_1^t x .. x A_k^t x J^t x <tau_bar>
///   plain    A_1 x .. x A_k x J
///   j_tau    A_1^t x .. x A_k^t x <J, tau_bar>
///   a_tau    A_1^t x .. <A_j, tau_bar> .. x A_k^t x J^t
enum class MkShape { central, plain, j_tau, a_tau };

struct MkFactor {
  std::string label;
  std::vector<MkElement> generators;
  bool abelian = false;
};

std::vector<MkFactor> shape_generators(MkShape shape, const Basis& a, std::size_t k,
                                       std::size_t j = 1);

/// Coordinatewise membership: writes phi = ad_x tau^p and checks c_i = g_i x and x
/// against the shape's Fix(tau) constraints.
bool shape_membership(MkShape shape, const MkElement& m, std::size_t j = 1);

/// Parses `(g1 | g2 ; phi)`; phi in automorphism syntax without witness.
MkElement parse_mk(const Basis& a, std::string_view text, std::size_t inverse_search_length = 6);

}  // namespace fgaut
