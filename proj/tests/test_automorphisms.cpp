#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace fgaut;
using th::aut;
using th::f2;
using th::w;

namespace {

Automorphism tau2() { return generators::nielsen_tau(f2()); }

// Exponent sums counted letter by letter, independent of exponent_sums().
IntMatrix naive_matrix(const Automorphism& phi) {
  const std::size_t n = phi.basis().rank();
  std::vector<long> entries(n * n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (Letter l : phi.image(c).letters()) entries[l.index * n + c] += l.sign;
  }
  return IntMatrix(n, entries);
}

}  // namespace

TEST_CASE("make_automorphism") {
  CHECK(make_automorphism({w(f2(), "a1"), w(f2(), "a2")}, {w(f2(), "a1"), w(f2(), "a2")}).is_identity());
  const auto t = make_automorphism({w(f2(), "a1 a2"), w(f2(), "a2")}, {w(f2(), "a1 a2^-1"), w(f2(), "a2")});
  CHECK(t == tau2());
  CHECK_THROWS_AS(make_automorphism({w(f2(), "a1 a1"), w(f2(), "a2")}, {w(f2(), "a1"), w(f2(), "a2")}),
                  RoundTripFailure);
  try {
    (void)make_automorphism({w(f2(), "a1 a2"), w(f2(), "a2")}, {w(f2(), "a1"), w(f2(), "a2")});
    FAIL("expected round trip failure");
  } catch (const RoundTripFailure& e) {
    CHECK(e.letter() == 0);
  }
}

TEST_CASE("apply") {
  const auto t = tau2();
  CHECK(apply(t, w(f2(), "a1")) == w(f2(), "a1 a2"));
  CHECK(apply(t, w(f2(), "a1 a2")) == w(f2(), "a1 a2 a2"));
  CHECK(apply(t, w(f2(), "a2^-1")) == w(f2(), "a2^-1"));
  CHECK(apply(t, w(f2(), "a1^-1")) == w(f2(), "a2^-1 a1^-1"));
}

TEST_CASE("compose, inverse, inner") {
  const auto t = tau2();
  CHECK(inner(w(f2(), "a1"))(w(f2(), "a2")) == w(f2(), "a1 a2 a1^-1"));
  CHECK(compose(t, inverse(t)).is_identity());
  CHECK(compose(inner(w(f2(), "a1")), inner(w(f2(), "a1^-1"))).is_identity());
  const auto s = aut(f2(), "a1 -> a2; a2 -> a1");
  // phi * psi applies psi first.
  CHECK(compose(t, s)(w(f2(), "a1")) == t(s(w(f2(), "a1"))));
  CHECK(compose(t, s) != compose(s, t));
  CHECK(power(t, 3) == t * t * t);
  CHECK(power(t, -2) == inverse(t) * inverse(t));
  CHECK(power(t, 0).is_identity());
}

TEST_CASE("inner conjugator recovery") {
  for (const auto& g : enumerate_ball(f2(), 3)) {
    auto x = inner_conjugator(inner(g));
    REQUIRE(x.has_value());
    CHECK(*x == g);
  }
  CHECK_FALSE(inner_conjugator(tau2()).has_value());
}

TEST_CASE("abelianization matrices") {
  CHECK(abelianization_matrix(tau2()) == IntMatrix(2, {1, 0, 1, 1}));
  CHECK(abelianization_matrix(inner(w(f2(), "a1"))).is_identity());
  CHECK(is_in_ia3(power(tau2(), 3)));
  CHECK_FALSE(is_in_ia3(tau2()));
  CHECK(abelianization_matrix(tau2(), 3) == IntMatrix(2, {1, 0, 1, 1}, 3));
  const auto swap = aut(f2(), "a1 -> a2; a2 -> a1");
  CHECK(abelianization_matrix(swap).trace() == 0);
  CHECK(abelianization_matrix(swap).determinant() == -1);
}

TEST_CASE("abelianization matches the letter-count oracle and is functorial") {
  const Basis b3 = Basis::standard(3);
  std::vector<Automorphism> gens = {
      generators::nielsen_tau(b3),
      generators::left_transvection(b3, 1, w(b3, "a1 a2")),
      generators::right_transvection(b3, 1, w(b3, "a2^-1")),
      generators::petal_inversion(b3, 1),
      inner(w(b3, "x1 a1")),
      aut(b3, "a1 -> a2; a2 -> a1"),
  };
  for (const auto& phi : gens) {
    CHECK(abelianization_matrix(phi) == naive_matrix(phi));
    for (const auto& psi : gens) {
      CHECK(abelianization_matrix(phi * psi) == abelianization_matrix(phi) * abelianization_matrix(psi));
    }
  }
}

TEST_CASE("fixed_words") {
  CHECK(fixed_words(Automorphism::identity(f2()), 2).size() == 17);
  const auto fix3 = fixed_words(tau2(), 3);
  for (const char* text : {"1", "a2", "a2^-1", "a2^2", "a2^-2", "a2^3", "a2^-3", "a1 a2 a1^-1", "a1 a2^-1 a1^-1"}) {
    CHECK(std::find(fix3.begin(), fix3.end(), w(f2(), text)) != fix3.end());
  }
  CHECK(fix3.size() == 9);
  const auto flip = aut(f2(), "a1 -> a1^-1; a2 -> a2^-1");
  CHECK(fixed_words(flip, 4) == std::vector<Word>{Word(f2())});
}

TEST_CASE("Fix(tau^p) agrees with an independent subgroup closure") {
  // Closure by breadth-first multiplication, pruned at a generous length.
  const std::vector<Word> gens = {w(f2(), "a1 a2 a1^-1"), w(f2(), "a2")};
  const std::size_t L = 5;
  std::set<Word> seen{Word(f2())};
  std::vector<Word> frontier{Word(f2())};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        for (const auto& h : {g, g.inverse()}) {
          Word y = x * h;
          if (y.length() <= L + 3 && seen.insert(y).second) next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> oracle;
  for (const auto& x : seen)
    if (x.length() <= L) oracle.push_back(x);
  std::sort(oracle.begin(), oracle.end());
  for (int p : {1, 2, 3, -1}) {
    auto fix = fixed_words(power(tau2(), p), L);
    std::sort(fix.begin(), fix.end());
    CHECK(fix == oracle);
  }
  CHECK(subgroup_ball(gens, L, 2 * L) == oracle);
}

TEST_CASE("standard generators") {
  const Basis b3 = Basis::standard(3);
  const Basis b4 = Basis::standard(4);
  const auto lt = generators::left_transvection(b3, 1, w(b3, "a1"));
  CHECK(lt.image(2) == w(b3, "a1 x1"));
  CHECK(lt.image(0) == w(b3, "a1"));
  CHECK(generators::right_transvection(b3, 1, w(b3, "a2^-1")).image(2) == w(b3, "x1 a2^-1"));
  CHECK(generators::petal_inversion(b3, 1).image(2) == w(b3, "x1^-1"));
  const std::vector<std::size_t> perm{2, 1};
  const auto p = generators::petal_permutation(b4, perm);
  CHECK(p.image(2) == w(b4, "x2"));
  CHECK(p.image(3) == w(b4, "x1"));
  CHECK_THROWS_AS((void)generators::left_transvection(b3, 1, w(b3, "x1")), DomainError);
  CHECK(generators::stable_count(b4) == 2);
}

TEST_CASE("complete_with_inverse and parser witness handling") {
  auto t = complete_with_inverse({w(f2(), "a1 a2"), w(f2(), "a2")}, 3);
  REQUIRE(t.has_value());
  CHECK(*t == tau2());
  CHECK_FALSE(complete_with_inverse({w(f2(), "a1 a1"), w(f2(), "a2")}, 3).has_value());
  CHECK(aut(f2(), "a1 -> a1 a2 | a1 -> a1 a2^-1") == tau2());
  CHECK(aut(f2(), "1").is_identity());
  CHECK_THROWS_AS((void)parse_automorphism(f2(), "a1 -> a1 a1"), Error);
}

TEST_CASE("printing") {
  CHECK(tau2().to_string() == "a1 -> a1 a2; a2 -> a2");
  CHECK(tau2().to_compact_string() == "a1 -> a1 a2");
  CHECK(Automorphism::identity(f2()).to_compact_string() == "1");
}

TEST_CASE("automorphisms are injective on a ball") {
  const auto phi = tau2() * inner(w(f2(), "a2 a1")) * aut(f2(), "a1 -> a2; a2 -> a1");
  std::set<Word> images;
  const auto ball = enumerate_ball(f2(), 4);
  for (const auto& x : ball) images.insert(phi(x));
  CHECK(images.size() == ball.size());
}
