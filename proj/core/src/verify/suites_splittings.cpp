#include "suites.hpp"

namespace fgaut::verify::detail {

namespace {

std::vector<Automorphism> stable_inners(const RoseSplitting& s) {
  std::vector<Automorphism> out;
  for (std::size_t i = 1; i <= s.petals(); ++i) out.push_back(inner(s.stable_letter(i)));
  return out;
}

std::vector<Automorphism> wk_generators(const RoseSplitting& s) {
  std::vector<Automorphism> out;
  const std::size_t k = s.petals();
  for (std::size_t i = 0; i < k; ++i) {
    WkElement w = WkElement::identity(k);
    w.signs[i] = -1;
    out.push_back(w.to_automorphism(s));
  }
  if (k >= 2) {
    WkElement w = WkElement::identity(k);
    std::swap(w.perm[0], w.perm[1]);
    out.push_back(w.to_automorphism(s));
  }
  return out;
}

Outcome tree_suite(const SuiteParams& p, Rng&) {
  std::vector<std::size_t> ranks = p.rank ? std::vector<std::size_t>{*p.rank} : std::vector<std::size_t>{3, 4, 5};
  const std::size_t max_len = p.length.value_or(3);
  Outcome o;
  for (auto n : ranks) {
    for (std::size_t k = 1; k + 2 <= n; ++k) {
      const RoseSplitting s = RoseSplitting::standard(n, k);
      for (std::size_t len = 0; len <= max_len; ++len) {
        TreeBall ball = build_ball(s, len);
        ++o.samples;
        if (!ball.is_tree()) {
          o.fail(s.spec() + " L=" + std::to_string(len) + ": not a tree");
          return o;
        }
      }
    }
  }
  return o;
}

Outcome equivariance_suite(const SuiteParams& p, Rng& rng) {
  const std::size_t n = p.rank.value_or(4);
  const RoseSplitting s = RoseSplitting::standard(n, n - 2);
  const Basis& b = s.basis();
  auto gens = stab0_generators(s);
  for (auto& g : stable_inners(s)) gens.push_back(g);
  for (auto& g : wk_generators(s)) gens.push_back(g);
  const TreeBall ball = build_ball(s, 2);
  Outcome o;

  // f_phi(g v) = phi(g) f_phi(v)
  for (std::size_t i = 0; i < 100 && !o.failed(); ++i) {
    Automorphism phi = random_product(rng, gens, 3);
    Word g = random_word(rng, b, 3);
    const CosetVertex& v = ball.vertices()[rng.below(ball.vertices().size())];
    ++o.samples;
    auto lhs = twisted_vertex_action(phi, coset_normal_form(g * v.rep, s), s);
    auto rhs = coset_normal_form(phi.apply(g) * twisted_vertex_action(phi, v, s).vertex.rep, s);
    if (!lhs.checked || !(lhs.vertex == rhs)) {
      o.fail("phi = " + show(phi) + " ; g = " + g.to_string() + " ; v = " + v.rep.to_string());
    }
  }

  // inner(g) acts as left translation
  for (const auto& g : enumerate_ball(b, 2)) {
    const Automorphism ad = inner(g);
    for (const auto& v : ball.vertices()) {
      ++o.samples;
      if (!(twisted_vertex_action(ad, v, s).vertex == coset_normal_form(g * v.rep, s))) {
        o.fail("inner(" + g.to_string() + ") at " + v.rep.to_string());
        return o;
      }
    }
  }

  // vertex-stabilizing automorphisms preserve adjacency
  auto vertex_gens = stab0_generators(s);
  for (auto& g : wk_generators(s)) vertex_gens.push_back(g);
  for (std::size_t i = 0; i < 20 && !o.failed(); ++i) {
    Automorphism phi = random_product(rng, vertex_gens, 3);
    if (!rose_stab_membership(phi, s)) {
      o.fail("sampled generator product left the stabilizer: " + show(phi));
      break;
    }
    for (auto [a, c] : ball.edges()) {
      ++o.samples;
      auto fa = twisted_vertex_action(phi, ball.vertices()[a], s).vertex;
      auto fc = twisted_vertex_action(phi, ball.vertices()[c], s).vertex;
      if (!are_adjacent(fa, fc, s)) {
        o.fail("phi = " + show(phi) + " breaks edge " + ball.vertices()[a].rep.to_string() + " -- " +
               ball.vertices()[c].rep.to_string());
        break;
      }
    }
  }
  return o;
}

Outcome rose_stab_suite(const SuiteParams& p, Rng& rng) {
  const std::size_t n = p.rank.value_or(4);
  const RoseSplitting s = RoseSplitting::standard(n, n - 2);
  const std::size_t k = s.petals();
  const Basis a = *s.vertex_basis();
  const std::size_t len = p.length.value_or(2);
  Outcome o;

  for (std::size_t i = 0; i < 200 && !o.failed(); ++i) {
    MkElement m = random_mk(rng, a, 2 * k, len, 2);
    ++o.samples;
    Automorphism phi = mk_to_rose(m, s);
    auto d = rose_stab_membership(phi, s);
    if (!d || !d->w.is_identity() || rose_to_mk(*d, s) != m || reassemble(*d, s) != phi) {
      o.fail("round trip: " + m.to_string());
    }
  }
  for (std::size_t i = 0; i < 200 && !o.failed(); ++i) {
    MkElement m1 = random_mk(rng, a, 2 * k, len, 2), m2 = random_mk(rng, a, 2 * k, len, 2);
    ++o.samples;
    Automorphism phi = mk_to_rose(m1, s) * mk_to_rose(m2, s);
    auto d = rose_stab_membership(phi, s);
    if (!d || rose_to_mk(*d, s) != m1 * m2) o.fail("intertwining: " + m1.to_string() + " , " + m2.to_string());
  }

  // u_j = 1 separates left from right transvections.
  for (const auto& w : enumerate_ball(a, 2)) {
    if (w.is_identity() || o.failed()) continue;
    const Word fw = s.from_vertex(w);
    for (std::size_t i = 1; i <= k; ++i) {
      const Automorphism left = generators::left_transvection(s.basis(), i, fw);
      const Automorphism right = generators::right_transvection(s.basis(), i, fw);
      for (std::size_t j = 1; j <= k; ++j) {
        ++o.samples;
        if (edge_stab_membership(left, s, j) != (i != j) || !edge_stab_membership(right, s, j)) {
          o.fail("edge test: w = " + w.to_string() + " ; i = " + std::to_string(i) + " ; j = " + std::to_string(j));
        }
      }
    }
  }

  // Signed-permutation law and the induced action on coordinates.
  for (std::size_t i = 0; i < 100 && !o.failed(); ++i) {
    WkElement w1 = random_wk(rng, k), w2 = random_wk(rng, k);
    MkElement m1 = random_mk(rng, a, 2 * k, len, 2), m2 = random_mk(rng, a, 2 * k, len, 2);
    ++o.samples;
    Automorphism phi1 = mk_to_rose(m1, s) * w1.to_automorphism(s);
    Automorphism phi2 = mk_to_rose(m2, s) * w2.to_automorphism(s);
    auto d = rose_stab_membership(phi1 * phi2, s);
    if (!d || !(d->w == w1 * w2)) {
      o.fail("W_k law: " + show(phi1) + " , " + show(phi2));
      break;
    }
    if (reassemble(*d, s) != phi1 * phi2) {
      o.fail("reassembly: " + show(phi1 * phi2));
      break;
    }
    const Automorphism W = w1.to_automorphism(s);
    auto dc = rose_stab_membership(W * mk_to_rose(m1, s) * W.inverse(), s);
    if (!dc || rose_to_mk(*dc, s) != wk_act(w1, m1)) o.fail("W_k action: " + m1.to_string() + " under " + show(W));
  }
  return o;
}

Outcome lift_suite(const SuiteParams& p, Rng&) {
  const std::size_t n = p.rank.value_or(3);
  const RoseSplitting s = RoseSplitting::standard(n, n - 2);
  auto gens = stab0_generators(s);
  for (auto& g : stable_inners(s)) gens.push_back(g);
  std::vector<Automorphism> letters;
  for (const auto& g : gens) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  std::vector<Automorphism> products{Automorphism::identity(s.basis())};
  for (const auto& x : letters) products.push_back(x);
  for (const auto& x : letters) {
    for (const auto& y : letters) products.push_back(x * y);
  }
  const CosetVertex base{Word(s.basis())};
  const CosetVertex tip{s.stable_letter(1)};
  Outcome o;
  for (const auto& phi : products) {
    ++o.samples;
    auto lift = automorphic_lift(phi, s, 1);
    if (!lift || !edge_stab_membership(*lift, s, 1) || !(twisted_vertex_action(*lift, base, s).vertex == base) ||
        !(twisted_vertex_action(*lift, tip, s).vertex == tip)) {
      o.fail("phi = " + show(phi));
      return o;
    }
  }
  return o;
}

Outcome theta_suite(const SuiteParams& p, Rng&) {
  std::vector<std::size_t> ranks = p.rank ? std::vector<std::size_t>{*p.rank} : std::vector<std::size_t>{3, 4, 5};
  Outcome o;
  for (auto n : ranks) {
    const RoseSplitting s = RoseSplitting::standard(n, n - 2);
    const Basis a = *s.vertex_basis();
    const Word a1 = Word::generator(a, 0), a2 = Word::generator(a, 1);
    for (const Word& w : {a1, a2, a1 * a2}) {
      ++o.samples;
      const Word fw = s.from_vertex(w);
      // x1 -> x1 a, everything else conjugated by a^-1
      const Automorphism phi = inner(fw.inverse()) * generators::left_transvection(s.basis(), 1, fw);
      MkElement m = edge_stab_to_mk(phi, s);
      if (!in_j(m) || m != j_element(w.inverse(), 2 * s.petals() - 1)) {
        o.fail("N = " + std::to_string(n) + " ; a = " + w.to_string() + " ; image " + m.to_string());
        return o;
      }
    }
  }
  return o;
}

}  // namespace

void add_splitting_suites(std::vector<Suite>& out) {
  out.push_back({"splittings.tree", "balls of the Bass-Serre tree are trees", tree_suite});
  out.push_back({"splittings.equivariance", "f_phi(g x) = phi(g) f_phi(x); f_{ad_g}(x) = g x", equivariance_suite});
  out.push_back({"splittings.rose_stab", "phi(x_i) = u_i w(x_i) v_i", rose_stab_suite});
  out.push_back({"splittings.lift", "ad_g^-1 phi fixes the base edge", lift_suite});
  out.push_back({"splittings.theta", "Theta(L_1) = J", theta_suite});
}

}  // namespace fgaut::verify::detail
