#include "suites.hpp"

#include "fgaut/nielsen.hpp"

#include <map>
#include <set>

namespace fgaut::verify::detail {

namespace {

std::vector<Automorphism> standard_generators(const Basis& b) {
  RoseSplitting s = RoseSplitting::standard(b.rank(), b.rank() - 2);
  auto gens = stab0_generators(s);
  const std::size_t k = generators::stable_count(b);
  for (std::size_t i = 1; i <= k; ++i) gens.push_back(generators::petal_inversion(b, i));
  if (k >= 2) {
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i + 1;
    std::swap(perm[0], perm[1]);
    gens.push_back(generators::petal_permutation(b, perm));
  }
  return gens;
}

Outcome functor_suite(const SuiteParams& p, Rng& rng) {
  const Basis b = Basis::standard(p.rank.value_or(3));
  const auto gens = standard_generators(b);
  Outcome o;
  for (std::size_t i = 0; i < 500 && !o.failed(); ++i) {
    Automorphism f = random_product(rng, gens, 4), g = random_product(rng, gens, 4);
    ++o.samples;
    if (abelianization_matrix(f * g) != abelianization_matrix(f) * abelianization_matrix(g)) {
      o.fail("phi = " + show(f) + " ; psi = " + show(g));
    }
  }
  return o;
}

Outcome inner_hom_suite(const SuiteParams& p, Rng&) {
  const Basis b = Basis::standard(p.rank.value_or(3));
  const auto ball = enumerate_ball(b, p.length.value_or(3));
  std::vector<Automorphism> ads;
  for (const auto& g : ball) ads.push_back(inner(g));
  Outcome o;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = 0; j < ball.size(); ++j) {
      ++o.samples;
      if (ads[i] * ads[j] != inner(ball[i] * ball[j])) {
        o.fail("g = " + ball[i].to_string() + " ; h = " + ball[j].to_string());
        return o;
      }
    }
  }
  return o;
}

Outcome injective_suite(const SuiteParams& p, Rng& rng) {
  const Basis b = Basis::standard(p.rank.value_or(3));
  const auto gens = standard_generators(b);
  const auto ball = enumerate_ball(b, p.length.value_or(4));
  Outcome o;
  for (std::size_t i = 0; i < 20 && !o.failed(); ++i) {
    Automorphism f = random_product(rng, gens, 4);
    Automorphism fi = f.inverse();
    std::set<Word> images;
    for (const auto& w : ball) {
      Word img = f.apply(w);
      ++o.samples;
      if (!images.insert(img).second) o.fail("collision under " + show(f) + " at " + w.to_string());
      else if (fi.apply(img) != w) o.fail("inverse witness fails under " + show(f) + " at " + w.to_string());
      if (o.failed()) break;
    }
  }
  return o;
}

Outcome fix_tau_suite(const SuiteParams& p, Rng&) {
  const Basis b = Basis::standard(2);
  const std::size_t len = p.length.value_or(5);
  const Automorphism tau = generators::nielsen_tau(b);
  const Word a1 = Word::generator(b, 0), a2 = Word::generator(b, 1);
  const std::vector<Word> gens{a1 * a2 * a1.inverse(), a2};
  const auto oracle = subgroup_ball(gens, len, 2 * len);
  Outcome o;
  for (int k : {1, 2, 3}) {
    auto fixed = fixed_words(power(tau, k), len);
    std::sort(fixed.begin(), fixed.end());
    ++o.samples;
    if (fixed != oracle) {
      std::vector<Word> diff;
      std::set_symmetric_difference(fixed.begin(), fixed.end(), oracle.begin(), oracle.end(), std::back_inserter(diff));
      o.fail("p = " + std::to_string(k) + ": differs at " + (diff.empty() ? std::string("?") : diff.front().to_string()));
      return o;
    }
  }
  return o;
}

}  // namespace

void add_automorphism_suites(std::vector<Suite>& out) {
  out.push_back({"aut.functor", "abelianization is functorial", functor_suite});
  out.push_back({"aut.inner_hom", "g -> ad_g is a homomorphism", inner_hom_suite});
  out.push_back({"aut.injective", "automorphisms are injective on balls", injective_suite});
  out.push_back({"aut.fix_tau", "Fix(tau^p) = <a1 a2 a1^-1, a2> for p != 0", fix_tau_suite});
}

}  // namespace fgaut::verify::detail
