#include "suites.hpp"

#include "fgaut/nielsen.hpp"

#include <map>

namespace fgaut::verify::detail {

namespace {

Outcome outer_suite(const SuiteParams& p, Rng&) {
  const Basis b = Basis::standard(2);
  const auto ball = enumerate_ball(b, p.length.value_or(2));
  Outcome o;
  for (const auto& g : ball) {
    const Automorphism ad = inner(g);
    for (const auto& y : ball) {
      for (int k = -3; k <= 3; ++k) {
        const Automorphism phi = ad * nielsen_conjugate_power(y, k);
        ++o.samples;
        if (!is_nielsen_power_outer(phi)) {
          o.fail("g = " + g.to_string() + " ; y = " + y.to_string() + " ; p = " + std::to_string(k));
          return o;
        }
      }
    }
  }
  const Word a1 = Word::generator(b, 0), a2 = Word::generator(b, 1);
  for (const auto& phi : {make_automorphism({a2, a1}, {a2, a1}),
                          make_automorphism({a1.inverse(), a2}, {a1.inverse(), a2}),
                          make_automorphism({a1.inverse(), a2.inverse()}, {a1.inverse(), a2.inverse()})}) {
    ++o.samples;
    if (is_nielsen_power_outer(phi)) o.fail("accepted " + show(phi));
  }
  return o;
}

Outcome trace_suite(const SuiteParams&, Rng&) {
  Outcome o;
  for (long a = -3; a <= 3; ++a) {
    for (long bb = -3; bb <= 3; ++bb) {
      for (long c = -3; c <= 3; ++c) {
        for (long d = -3; d <= 3; ++d) {
          IntMatrix m(2, {a, bb, c, d});
          if (m.trace() != 2 || m.determinant() != 1) continue;
          ++o.samples;
          for (long n = -3; n <= 3; ++n) {
            if (n == 0) continue;
            if ((m * IntMatrix(2, {1, n, 0, 1})).trace() == 2 && (c != 0 || a != 1 || d != 1)) {
              o.fail("M = " + m.to_string() + " ; n = " + std::to_string(n));
              return o;
            }
          }
        }
      }
    }
  }
  return o;
}

Outcome similar_suite(const SuiteParams& p, Rng&) {
  const Basis b = Basis::standard(2);
  const Automorphism tau = generators::nielsen_tau(b);
  const Word a1 = Word::generator(b, 0), a2 = Word::generator(b, 1);
  Outcome o;

  ++o.samples;
  auto r = nielsen_power_witness(inner(a2) * tau, {2, 4});
  if (r.outcome != SearchOutcome::witness || r.witness->power != 1 || r.witness->conjugator != a1.inverse()) {
    o.fail("ad_a2 tau: expected witness (1, a1^-1)");
    return o;
  }
  ++o.samples;
  r = nielsen_power_witness(inner(a1) * tau, {});
  if (r.outcome != SearchOutcome::definitive_none) {
    o.fail("ad_a1 tau: expected a definitive negative");
    return o;
  }

  // Witness validity and fixed-subgroup coherence over conjugated powers.
  const std::size_t ylen = p.length.value_or(2);
  const std::size_t flen = 4;
  const NielsenBounds bounds{4, 4};
  std::map<std::pair<int, std::size_t>, std::vector<Word>> tau_fixed;
  for (const auto& y : enumerate_ball(b, ylen)) {
    for (int k = -3; k <= 3; ++k) {
      if (k == 0) continue;
      const Automorphism phi = nielsen_conjugate_power(y, k);
      ++o.samples;
      const std::string ctx = "y = " + y.to_string() + " ; p = " + std::to_string(k);
      auto s = nielsen_power_witness(phi, bounds);
      if (s.outcome != SearchOutcome::witness) {
        o.fail(ctx + ": no witness (" + s.reason + ")");
        return o;
      }
      const auto& wit = *s.witness;
      if (!reproduces(phi, wit)) {
        o.fail(ctx + ": witness does not reproduce");
        return o;
      }
      const std::size_t reach = flen + 2 * wit.conjugator.length();
      auto key = std::pair{wit.power, reach};
      if (!tau_fixed.count(key)) tau_fixed[key] = fixed_words(power(tau, wit.power), reach);
      std::vector<Word> expected;
      for (const auto& w : tau_fixed[key]) {
        Word c = conjugate(w, wit.conjugator);
        if (c.length() <= flen) expected.push_back(c);
      }
      std::sort(expected.begin(), expected.end());
      auto got = fixed_words(phi, flen);
      std::sort(got.begin(), got.end());
      if (got != expected) {
        o.fail(ctx + ": fixed words disagree with the conjugated Fix(tau)");
        return o;
      }
    }
  }
  return o;
}

Outcome commuting_suite(const SuiteParams&, Rng&) {
  const Basis b = Basis::standard(2);
  const Automorphism tau = generators::nielsen_tau(b);
  const Word a1 = Word::generator(b, 0), a2 = Word::generator(b, 1);
  Outcome o;
  ++o.samples;
  auto r = commuting_nielsen_check(tau, inner(a2) * tau, 2, 3);
  if (!r.powers_commute || !r.commute || !r.fixed_conjugator || *r.fixed_conjugator != a2) {
    o.fail("(tau, ad_a2 tau, 2, 3)");
  }
  ++o.samples;
  r = commuting_nielsen_check(tau, tau, 1, 1);
  if (!r.commute || !r.fixed_conjugator || !r.fixed_conjugator->is_identity()) o.fail("(tau, tau, 1, 1)");
  ++o.samples;
  r = commuting_nielsen_check(tau, inner(a1) * tau, 1, 1);
  if (r.commute) o.fail("(tau, ad_a1 tau, 1, 1)");
  return o;
}

}  // namespace

void add_nielsen_suites(std::vector<Suite>& out) {
  out.push_back({"nielsen.outer", "trace 2, determinant 1 detects Nielsen powers in Out(F_2)", outer_suite});
  out.push_back({"nielsen.trace", "trace-2 subgroups of GL(2,Z) are cyclic", trace_suite});
  out.push_back({"nielsen.similar", "ad_w tau^p is a Nielsen power iff w = y tau^p(y)^-1", similar_suite});
  out.push_back({"nielsen.commuting", "commuting Nielsen transformations differ by Fix(tau)", commuting_suite});
}

}  // namespace fgaut::verify::detail
