#pragma once

// Collapsed roses and cages: coset normal forms, finite balls of the Bass-Serre tree,
// the twisted action of stabilizing automorphisms, and stabilizer decompositions.

#include "fgaut/automorphisms.hpp"
#include "fgaut/mk_product.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fgaut {

/// One vertex group A (a standard free factor) and k loops with stable letters.
class RoseSplitting {
public:
  RoseSplitting(Basis basis, Factor vertex_factor, std::vector<std::size_t> stable_positions);

  /// Standard basis of rank N; A spans the first N - k letters.
  static RoseSplitting standard(std::size_t rank, std::size_t petals);

  const Basis& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.rank(); }
  std::size_t petals() const noexcept { return stable_.size(); }
  const Factor& vertex_factor() const noexcept { return vertex_; }
  const std::vector<std::size_t>& stable_positions() const noexcept { return stable_; }
  /// Basis position of petal i (1-based).
  std::size_t stable_position(std::size_t petal) const;
  std::optional<std::size_t> petal_of(std::size_t position) const;
  Word stable_letter(std::size_t petal) const;

  /// The vertex factor's own basis; empty when A is trivial.
  std::optional<Basis> vertex_basis() const;
  Word to_vertex(const Word& w) const;
  Word from_vertex(const Word& w) const;

  /// `rose@N=4,k=2`
  std::string spec() const;

  friend bool operator==(const RoseSplitting&, const RoseSplitting&) = default;

private:
  Basis basis_;
  Factor vertex_;
  std::vector<std::size_t> stable_;
};

RoseSplitting parse_rose_spec(std::string_view spec);

/// Two vertex groups A and B joined by k edges; k - 1 connectors are stable letters.
struct CageSplitting {
  Basis basis;
  Factor factor_a;
  Factor factor_b;
  std::vector<std::size_t> connectors;

  static CageSplitting make(Basis basis, Factor a, Factor b, std::vector<std::size_t> connectors);
  std::size_t edges() const noexcept { return connectors.size() + 1; }
};

/// Representative of gA with the maximal A-suffix removed.
struct CosetVertex {
  Word rep;
  friend bool operator==(const CosetVertex&, const CosetVertex&) = default;
  friend std::strong_ordering operator<=>(const CosetVertex& a, const CosetVertex& b) noexcept {
    return a.rep <=> b.rep;
  }
};

CosetVertex coset_normal_form(const Word& g, const RoseSplitting& s);

struct Adjacency {
  std::size_t petal = 0;
  int sign = 1;
  friend bool operator==(const Adjacency&, const Adjacency&) = default;
};

/// gA and hA span an edge iff g^-1 h lies in A x_i^{+-1} A.
std::optional<Adjacency> are_adjacent(const CosetVertex& g, const CosetVertex& h,
                                      const RoseSplitting& s);

class TreeBall {
public:
  TreeBall(RoseSplitting splitting, std::size_t radius, std::vector<CosetVertex> vertices,
           std::vector<std::pair<std::size_t, std::size_t>> edges);

  const RoseSplitting& splitting() const noexcept { return splitting_; }
  std::size_t radius() const noexcept { return radius_; }
  const std::vector<CosetVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> find(const CosetVertex& v) const;
  bool contains(const CosetVertex& v) const { return find(v).has_value(); }
  bool has_edge(const CosetVertex& a, const CosetVertex& b) const;
  bool is_connected() const;
  bool is_tree() const;

  friend bool operator==(const TreeBall&, const TreeBall&) = default;

private:
  RoseSplitting splitting_;
  std::size_t radius_;
  std::vector<CosetVertex> vertices_;  // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges_;  // sorted, first < second
};

/// All normal forms of length <= radius and every adjacent pair among them.
TreeBall build_ball(const RoseSplitting& s, std::size_t radius);

std::string to_dot(const TreeBall& ball);
std::string to_json(const TreeBall& ball);
TreeBall ball_from_json(std::string_view json);

/// f_phi(b_A), the vertex whose stabilizer is phi(A), when phi(A) is a conjugate of A.
std::optional<CosetVertex> base_vertex_image(const Automorphism& phi, const RoseSplitting& s);

struct TwistedImage {
  CosetVertex vertex;
  /// phi was verified to lie in the stabilizer of the tree.
  bool checked = false;
};

/// f_phi(gA) = phi(g) f_phi(b_A). For phi fixing b_A this is phi(g)A; for ad_g it is left
/// translation by g.
TwistedImage twisted_vertex_action(const Automorphism& phi, const CosetVertex& v,
                                   const RoseSplitting& s);

/// Signed permutation of the petals: x_i -> x_{perm[i]}^{signs[i]} (0-based petals).
struct WkElement {
  std::vector<std::size_t> perm;
  std::vector<int> signs;

  static WkElement identity(std::size_t k);
  bool is_identity() const;
  Automorphism to_automorphism(const RoseSplitting& s) const;

  /// (w1 * w2)(x) = w1(w2(x))
  friend WkElement operator*(const WkElement& w1, const WkElement& w2);
  friend bool operator==(const WkElement&, const WkElement&) = default;
};

/// phi(a) = phi_a(a) on A, phi(x_i) = u_i w(x_i) v_i with u_i, v_i in A (full-basis words).
struct RoseStabDecomposition {
  std::vector<Word> u;
  std::vector<Word> v;
  WkElement w;
  std::optional<Automorphism> phi_a;  // absent when A is trivial
};

std::optional<RoseStabDecomposition> rose_stab_membership(const Automorphism& phi,
                                                          const RoseSplitting& s);
Automorphism reassemble(const RoseStabDecomposition& d, const RoseSplitting& s);

/// phi -> (u_1^-1 .. u_k^-1, v_1 .. v_k ; phi|_A). Throws DomainError unless w = 1.
MkElement rose_to_mk(const RoseStabDecomposition& d, const RoseSplitting& s);
/// a -> phi(a), x_i -> g_i^-1 x_i g_{k+i}.
Automorphism mk_to_rose(const MkElement& m, const RoseSplitting& s);

/// Conjugation by w on M_2k(A): w permutes the coordinate pairs (u_i^-1, v_i) by its
/// permutation and swaps a pair when it inverts that petal.
MkElement wk_act(const WkElement& w, const MkElement& m);

/// Stabilizer of the edge from b_A along petal j: w = 1 and u_j = 1.
bool edge_stab_membership(const Automorphism& phi, const RoseSplitting& s, std::size_t petal);

/// Edge stabilizer of petal 1 as M_{2k-1}(A): (u_2^-1 .. u_k^-1, v_1 .. v_k ; phi|_A).
MkElement edge_stab_to_mk(const Automorphism& phi, const RoseSplitting& s);

/// If f_phi carries the edge [b_A, x_j b_A] to g of that edge, returns ad_g^-1 phi.
std::optional<Automorphism> automorphic_lift(const Automorphism& phi, const RoseSplitting& s,
                                             std::size_t petal = 1);

using BallEdge = std::pair<CosetVertex, CosetVertex>;

/// Whether f_phi fixes every vertex of a simple edge path in the ball.
bool fixes_arc(const Automorphism& phi, const TreeBall& ball, const std::vector<BallEdge>& path);

struct ThirdCaseCheck {
  bool fixes_vertices = false;  // b_A, x1 b_A, w x1 b_A all fixed
  bool element_fixed = false;   // phi(w) = w
  bool consistent() const { return !fixes_vertices || element_fixed; }
};

/// For phi in the petal-1 edge stabilizer and nontrivial w in A.
ThirdCaseCheck third_case_fixed_element_check(const Automorphism& phi, const RoseSplitting& s,
                                              const Word& w);

struct CageDecomposition {
  std::optional<Automorphism> phi_a;
  std::optional<Automorphism> phi_b;
  std::vector<std::pair<Word, Word>> pairs;  // phi(x_i) = a_i x_i b_i
};

std::optional<CageDecomposition> cage_stab_representative(const Automorphism& phi,
                                                          const CageSplitting& c);

/// A' = A + x_j; petal j disappears.
RoseSplitting collapse_petal(const RoseSplitting& s, std::size_t petal);
CosetVertex collapse_vertex_map(const CosetVertex& v, const RoseSplitting& coarse);

}  // namespace fgaut
