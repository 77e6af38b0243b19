#include "fgaut/nielsen.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace fgaut;
using th::aut;
using th::f2;
using th::w;

namespace {

Automorphism tau() { return generators::nielsen_tau(f2()); }

// Independent search: every y up to `len` and p in [-pmax, pmax].
std::optional<NielsenWitness> brute_witness(const Automorphism& phi, std::size_t len, int pmax) {
  for (const auto& y : enumerate_ball(f2(), len)) {
    for (int p = -pmax; p <= pmax; ++p) {
      const auto cand = power(inner(y) * tau() * inner(y.inverse()), p);
      if (cand == phi) return NielsenWitness{p, y};
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("outer criterion examples") {
  CHECK(is_nielsen_power_outer(tau()));
  CHECK(is_nielsen_power_outer(inner(w(f2(), "a1"))));
  CHECK_FALSE(is_nielsen_power_outer(aut(f2(), "a1 -> a2; a2 -> a1")));
  CHECK_FALSE(is_nielsen_power_outer(aut(f2(), "a1 -> a1^-1; a2 -> a2^-1")));
  CHECK_FALSE(is_nielsen_power_outer(aut(f2(), "a1 -> a1^-1")));
  CHECK_THROWS_AS((void)is_nielsen_power_outer(Automorphism::identity(Basis::standard(3))), DomainError);
}

TEST_CASE("outer criterion holds on the conjugated power family") {
  const auto ball = enumerate_ball(f2(), 2);
  for (const auto& g : ball)
    for (const auto& y : ball)
      for (int p = -3; p <= 3; ++p) CHECK(is_nielsen_power_outer(inner(g) * nielsen_conjugate_power(y, p)));
}

TEST_CASE("nielsen_conjugate_power") {
  const Word y = w(f2(), "a1 a2");
  CHECK(nielsen_conjugate_power(y, 2) == power(inner(y) * tau() * inner(y.inverse()), 2));
  CHECK(nielsen_conjugate_power(Word(f2()), 1) == tau());
  CHECK(nielsen_conjugate_power(y, 0).is_identity());
}

TEST_CASE("witness examples") {
  auto r = nielsen_power_witness(inner(w(f2(), "a2")) * tau(), {2, 4});
  REQUIRE(r.outcome == SearchOutcome::witness);
  CHECK(r.witness->power == 1);
  CHECK(r.witness->conjugator == w(f2(), "a1^-1"));
  CHECK(reproduces(inner(w(f2(), "a2")) * tau(), *r.witness));

  r = nielsen_power_witness(power(tau(), 2), {0, 4});
  REQUIRE(r.outcome == SearchOutcome::witness);
  CHECK(r.witness->power == 2);
  CHECK(r.witness->conjugator.is_identity());

  r = nielsen_power_witness(inner(w(f2(), "a1")) * tau());
  CHECK(r.outcome == SearchOutcome::definitive_none);
  CHECK_FALSE(r.witness.has_value());

  r = nielsen_power_witness(aut(f2(), "a1 -> a2; a2 -> a1"));
  CHECK(r.outcome == SearchOutcome::definitive_none);
}

TEST_CASE("search agrees with an exhaustive oracle") {
  // Targets ad_w tau^p for short w; the library answer must match brute force
  // whenever brute force finds something, and never claim a false negative.
  for (const auto& wd : enumerate_ball(f2(), 2)) {
    for (int p : {-2, -1, 1, 2}) {
      const auto phi = inner(wd) * power(tau(), p);
      const auto oracle = brute_witness(phi, 3, 2);
      const auto r = nielsen_power_witness(phi, {3, 4});
      if (oracle) {
        REQUIRE(r.outcome == SearchOutcome::witness);
        CHECK(reproduces(phi, *r.witness));
      } else {
        CHECK(r.outcome != SearchOutcome::witness);
      }
      if (r.outcome == SearchOutcome::witness) CHECK(reproduces(phi, *r.witness));
      // Abelianized obstruction: w^_1 = 0 and p | w^_2 is necessary.
      const auto e = exponent_sums(wd);
      if (e[0] != 0 || e[1] % p != 0) CHECK(r.outcome == SearchOutcome::definitive_none);
    }
  }
}

TEST_CASE("fixed subgroup of a witness is the conjugated Fix(tau)") {
  const auto phi = inner(w(f2(), "a2")) * tau();
  const auto r = nielsen_power_witness(phi);
  REQUIRE(r.outcome == SearchOutcome::witness);
  const Word y = r.witness->conjugator;
  const std::size_t L = 4;
  std::vector<Word> expect;
  for (const auto& x : fixed_words(power(tau(), r.witness->power), L + 2 * y.length())) {
    Word c = conjugate(x, y);
    if (c.length() <= L) expect.push_back(c);
  }
  std::sort(expect.begin(), expect.end());
  auto got = fixed_words(phi, L);
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
}

TEST_CASE("commuting Nielsen check examples") {
  auto rep = commuting_nielsen_check(tau(), inner(w(f2(), "a2")) * tau(), 2, 3);
  CHECK(rep.powers_commute);
  CHECK(rep.commute);
  REQUIRE(rep.fixed_conjugator.has_value());
  CHECK(*rep.fixed_conjugator == w(f2(), "a2"));
  CHECK(rep.sign == 1);

  rep = commuting_nielsen_check(tau(), tau(), 1, 1);
  CHECK(rep.commute);
  REQUIRE(rep.fixed_conjugator.has_value());
  CHECK(rep.fixed_conjugator->is_identity());

  rep = commuting_nielsen_check(tau(), inner(w(f2(), "a1")) * tau(), 1, 1);
  CHECK_FALSE(rep.commute);
  CHECK_FALSE(rep.powers_commute);

  CHECK_THROWS_AS((void)commuting_nielsen_check(tau(), tau(), 0, 1), DomainError);
  CHECK_THROWS_AS((void)commuting_nielsen_check(tau(), aut(f2(), "a1 -> a2; a2 -> a1"), 1, 1), DomainError);
}

TEST_CASE("trace-2 matrix lemma, exhaustive") {
  // M trace 2, det 1, and M E_n trace 2 for some n != 0 forces M lower-left zero,
  // where E_n = [[1,n],[0,1]].
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          if (a + d != 2 || a * d - b * c != 1) continue;
          for (long n = -3; n <= 3; ++n) {
            if (n == 0) continue;
            // M E_n = [[a, a n + b], [c, c n + d]]
            if (a + c * n + d == 2) CHECK(c == 0);
          }
        }
}
