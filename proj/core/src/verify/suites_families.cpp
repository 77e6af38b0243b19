#include "suites.hpp"

#include "fgaut/families.hpp"

#include <set>

namespace fgaut::verify::detail {

namespace {

// The A-parameter of a transvection or inner automorphism generator.
std::optional<Word> parameter_of(const Automorphism& g) {
  if (auto w = inner_conjugator(g)) return w;
  const Basis& b = g.basis();
  for (std::size_t i = 1; i <= generators::stable_count(b); ++i) {
    const std::size_t pos = generators::stable_position(b, i);
    const Word x = Word::generator(b, pos);
    const Word& img = g.image(pos);
    if (img == x) continue;
    Word left = img * x.inverse(), right = x.inverse() * img;
    if (in_factor(left, generators::vertex_factor(b))) return left;
    if (in_factor(right, generators::vertex_factor(b))) return right;
  }
  return std::nullopt;
}

Outcome family_suite(FamilyKind kind, const SuiteParams& p, Rng& rng) {
  const std::size_t n = p.rank.value_or(3);
  const std::size_t depth = p.depth.value_or(3);
  const Basis b = Basis::standard(n);
  const std::string tag = std::string(to_string(kind)) + "@N=" + std::to_string(n);
  const auto factors = family_generators(kind, n);
  Outcome o;

  ++o.samples;
  if (nonabelian_count(factors) != expected_nonabelian_factors(kind, n)) {
    o.fail(tag + ": " + std::to_string(nonabelian_count(factors)) + " nonabelian factors");
    return o;
  }

  auto report = check_direct_product(factors);
  o.samples += report.cross.size();
  if (!report.passes(factors)) {
    if (auto f = report.first_failure()) {
      o.fail(tag + ": " + factors[f->factor_a].label + " vs " + factors[f->factor_b].label + " : " +
             show(factors[f->factor_a].generators[f->generator_a]) + " , " +
             show(factors[f->factor_b].generators[f->generator_b]));
    } else {
      o.fail(tag + ": a nonabelian factor has commuting generators");
    }
    return o;
  }

  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      ++o.samples;
      auto common = bounded_intersection_oracle(factors[i], factors[j], depth);
      if (common.size() != 1 || !common.front().is_identity()) {
        auto it = std::find_if(common.begin(), common.end(), [](const Automorphism& a) { return !a.is_identity(); });
        o.fail(tag + ": " + factors[i].label + " and " + factors[j].label + " share " +
               (it == common.end() ? std::string("nothing, not even 1") : show(*it)));
        return o;
      }
    }
  }

  // tau commutes with every factor not containing it exactly for the kinds that list it.
  const Automorphism tau = generators::nielsen_tau(b);
  std::optional<std::string> obstruction;
  for (const auto& f : factors) {
    if (std::find(f.generators.begin(), f.generators.end(), tau) != f.generators.end()) continue;
    for (const auto& g : f.generators) {
      if (!obstruction && !commute(tau, g)) obstruction = f.label;
    }
  }
  ++o.samples;
  if (lists_tau(kind) == obstruction.has_value()) {
    o.fail(tag + (obstruction ? ": tau fails against " + *obstruction : std::string(": tau centralizes every factor")));
    return o;
  }

  if (kind == FamilyKind::DB) {
    std::set<Automorphism> inners;
    for (const auto& g : enumerate_ball(b, 4)) inners.insert(inner(g));
    for (const auto& f : factors) {
      for (const auto& g : f.generators) {
        ++o.samples;
        if (inners.count(g) || inner_conjugator(g)) {
          o.fail(tag + ": inner generator " + show(g));
          return o;
        }
      }
    }
  }

  for (const auto& f : factors) {
    if (f.label.find("^tau") == std::string::npos) continue;
    for (const auto& g : f.generators) {
      ++o.samples;
      auto w = parameter_of(g);
      if (!w || tau.apply(*w) != *w) {
        o.fail(tag + ": parameter of " + show(g) + " is not tau-fixed");
        return o;
      }
    }
  }

  if (kind == FamilyKind::OutPlain) {
    const RoseSplitting s = RoseSplitting::standard(n, n - 2);
    for (const auto& g : factors.front().generators) {
      ++o.samples;
      const Word a = *parameter_of(g);
      MkElement m = edge_stab_to_mk(inner(a.inverse()) * g, s);
      if (!in_j(m)) {
        o.fail(tag + ": Theta image " + m.to_string() + " of " + show(g) + " is outside J");
        return o;
      }
    }
  }

  // IA_3 filter: each nonabelian factor keeps a non-commuting pair in IA_N(Z/3).
  for (const auto& f : factors) {
    if (f.abelian) continue;
    ++o.samples;
    std::vector<Automorphism> ia;
    for (const auto& g : word_table(f, 3)) {
      if (is_in_ia3(g)) ia.push_back(g);
    }
    bool found = false;
    for (std::size_t i = 0; i < ia.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < ia.size() && !found; ++j) found = !commute(ia[i], ia[j]);
    }
    if (!found) {
      o.fail(tag + ": " + f.label + " has no non-commuting pair in IA_3 at depth 3");
      return o;
    }
  }

  // Conjugation invariance on one seeded conjugator.
  {
    const RoseSplitting s = RoseSplitting::standard(n, n - 2);
    auto gens = stab0_generators(s);
    gens.push_back(inner(s.stable_letter(1)));
    gens.push_back(generators::petal_inversion(b, 1));
    Automorphism c = random_product(rng, gens, 3);
    auto conj = check_direct_product(family_generators(kind, n, c));
    ++o.samples;
    bool same = conj.cross.size() == report.cross.size();
    for (std::size_t i = 0; same && i < conj.cross.size(); ++i) same = conj.cross[i].commute == report.cross[i].commute;
    if (!same || !conj.passes(factors)) o.fail(tag + ": conjugation by " + show(c) + " changes the report");
  }
  return o;
}

}  // namespace

void add_family_suites(std::vector<Suite>& out) {
  for (FamilyKind kind : all_family_kinds()) {
    out.push_back({std::string("families.") + to_string(kind),
                   kind == FamilyKind::DB ? "transvection product D_B"
                                          : (is_out_kind(kind) ? "maximal products in Out(F_N)"
                                                               : "maximal products in Aut(F_N)"),
                   [kind](const SuiteParams& p, Rng& rng) { return family_suite(kind, p, rng); }});
  }
}

}  // namespace fgaut::verify::detail
