#include "fgaut/families.hpp"
#include "fgaut/splittings.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace fgaut;
using th::w;

namespace {

std::vector<std::string> labels(const std::vector<GeneratedFactor>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.label);
  return out;
}

// Composition table by repeated products, kept independent of word_table().
std::set<Automorphism> table(const GeneratedFactor& f, std::size_t depth) {
  std::vector<Automorphism> letters;
  for (const auto& g : f.generators) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  std::set<Automorphism> all{Automorphism::identity(f.generators.front().basis())};
  std::vector<Automorphism> layer(all.begin(), all.end());
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Automorphism> next;
    for (const auto& x : layer)
      for (const auto& l : letters) next.push_back(x * l);
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

const GeneratedFactor& by_label(const std::vector<GeneratedFactor>& fs, const std::string& label) {
  for (const auto& f : fs)
    if (f.label == label) return f;
  throw std::runtime_error("no factor " + label);
}

}  // namespace

TEST_CASE("kind names round trip") {
  CHECK(all_family_kinds().size() == 8);
  for (auto k : all_family_kinds()) CHECK(family_kind_from_string(to_string(k)) == k);
  CHECK_FALSE(family_kind_from_string("Nope").has_value());
  CHECK(is_out_kind(FamilyKind::OutPlain));
  CHECK_FALSE(is_out_kind(FamilyKind::DB));
  CHECK(lists_tau(FamilyKind::AutTauInner));
  CHECK_FALSE(lists_tau(FamilyKind::AutPlain));
}

TEST_CASE("generator listings") {
  auto db = family_generators(FamilyKind::DB, 3);
  CHECK(labels(db) == std::vector<std::string>{"L_1", "R_1"});
  for (const auto& f : db) CHECK(f.generators.size() == 2);
  CHECK(labels(family_generators(FamilyKind::AutTauCentral, 3)) ==
        std::vector<std::string>{"L_1^tau", "R_1^tau", "I(A)^tau", "<tau>"});
  CHECK(labels(family_generators(FamilyKind::AutPlain, 4)) ==
        std::vector<std::string>{"L_1", "L_2", "R_1", "R_2", "I(A)"});
  CHECK_THROWS_AS((void)family_generators(FamilyKind::DB, 2), DomainError);
}

TEST_CASE("every kind is a direct product with the expected number of nonabelian factors") {
  for (std::size_t n : {3u, 4u, 5u}) {
    for (auto k : all_family_kinds()) {
      const auto fs = family_generators(k, n);
      const auto rep = check_direct_product(fs);
      CHECK(rep.passes(fs));
      const std::size_t expect = (is_out_kind(k) || k == FamilyKind::DB) ? 2 * n - 4 : 2 * n - 3;
      CHECK(nonabelian_count(fs) == expect);
      CHECK(expected_nonabelian_factors(k, n) == expect);
      // Independent cross check: commutation by direct composition.
      for (std::size_t a = 0; a < fs.size(); ++a)
        for (std::size_t b = a + 1; b < fs.size(); ++b)
          for (const auto& x : fs[a].generators)
            for (const auto& y : fs[b].generators) CHECK(x * y == y * x);
      for (const auto& f : fs) {
        if (f.abelian) continue;
        bool found = false;
        for (const auto& x : f.generators)
          for (const auto& y : f.generators) found = found || !(x * y == y * x);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("direct product failures are reported") {
  const Basis b = Basis::standard(3);
  const auto fs = family_generators(FamilyKind::DB, 3);
  std::vector<GeneratedFactor> bad{fs[0], GeneratedFactor{"<tau>", {generators::nielsen_tau(b)}, true}};
  const auto rep = check_direct_product(bad);
  CHECK_FALSE(rep.passes(bad));
  REQUIRE(rep.first_failure().has_value());
  const auto tau = generators::nielsen_tau(b);
  const auto l = generators::left_transvection(b, 1, w(b, "a1"));
  CHECK((tau * l)(w(b, "x1")) == w(b, "a1 a2 x1"));
  CHECK((l * tau)(w(b, "x1")) == w(b, "a1 x1"));

  const auto plain = family_generators(FamilyKind::AutPlain, 3);
  std::vector<GeneratedFactor> ia{by_label(plain, "I(A)"), by_label(plain, "L_1"), by_label(plain, "R_1")};
  CHECK(check_direct_product(ia).passes(ia));
}

TEST_CASE("bounded intersections") {
  const auto db = family_generators(FamilyKind::DB, 3);
  const auto id = Automorphism::identity(Basis::standard(3));
  CHECK(bounded_intersection_oracle(db[0], db[1], 3) == std::vector<Automorphism>{id});
  const auto t2 = table(db[0], 2);
  CHECK(bounded_intersection_oracle(db[0], db[0], 2) == std::vector<Automorphism>(t2.begin(), t2.end()));
  const auto wt = word_table(db[0], 2);
  CHECK(std::set<Automorphism>(wt.begin(), wt.end()) == t2);

  const auto plain = family_generators(FamilyKind::AutPlain, 3);
  const auto central = family_generators(FamilyKind::AutTauCentral, 3);
  const auto& ia = by_label(plain, "I(A)");
  const auto& iat = by_label(central, "I(A)^tau");
  const auto inter = bounded_intersection_oracle(ia, iat, 2);
  const auto small = table(iat, 2);
  // I(A)^tau is generated by elements of I(A) of length 3 in its generators.
  for (const auto& x : inter) CHECK(small.count(x) == 1);
  CHECK(std::find(inter.begin(), inter.end(), id) != inter.end());

  for (auto k : all_family_kinds()) {
    const auto fs = family_generators(k, 3);
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        const auto ta = table(fs[a], 3), tb = table(fs[b], 3);
        std::vector<Automorphism> both;
        std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(both));
        CHECK(both == std::vector<Automorphism>{id});
        CHECK(bounded_intersection_oracle(fs[a], fs[b], 3) == both);
      }
  }
}

TEST_CASE("centralizer evidence") {
  auto r = centralizer_evidence(FamilyKind::AutTauCentral, 3);
  CHECK(r.tau_centralizes);
  CHECK_FALSE(r.obstruction.has_value());
  const auto tau = generators::nielsen_tau(Basis::standard(3));
  CHECK(std::find(r.centralizing.begin(), r.centralizing.end(), tau) != r.centralizing.end());
  CHECK(r.candidates > 0);

  r = centralizer_evidence(FamilyKind::AutPlain, 3);
  CHECK_FALSE(r.tau_centralizes);
  REQUIRE(r.obstruction.has_value());
  CHECK(r.obstruction->first == "L_1");

  r = centralizer_evidence(FamilyKind::AutTauInner, 3);
  CHECK(r.tau_centralizes);
  const Basis b = Basis::standard(3);
  for (const auto& g : fixed_words(tau, 3)) CHECK(commute(tau, inner(g)));

  for (std::size_t n : {3u, 4u, 5u})
    for (auto k : all_family_kinds())
      CHECK(centralizer_evidence(k, n).tau_centralizes == lists_tau(k));
}

TEST_CASE("structural properties") {
  for (std::size_t n : {3u, 4u}) {
    const Basis b = Basis::standard(n);
    // D_B contains no short inner automorphisms.
    for (const auto& f : family_generators(FamilyKind::DB, n))
      for (const auto& g : f.generators) CHECK_FALSE(inner_conjugator(g).has_value());
    // tau-variant transvection parameters lie in Fix(tau).
    const auto tau = generators::nielsen_tau(b);
    for (const auto& f : family_generators(FamilyKind::AutTauCentral, n)) {
      if (f.label[0] != 'L' && f.label[0] != 'R') continue;
      for (const auto& g : f.generators) CHECK(commute(g, tau));
    }
  }
  // Theta(L_1) lies in J for OutPlain.
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto s = RoseSplitting::standard(n, n - 2);
    const auto fs = family_generators(FamilyKind::OutPlain, n);
    for (const auto& g : by_label(fs, "L_1").generators) {
      // ad_a^-1 (x1 -> a x1) sends x1 -> x1 a and fixes the base edge.
      const Word a = strip_prefix(g(s.stable_letter(1)), s.vertex_factor()).prefix;
      const auto adjusted = inner(a.inverse()) * g;
      REQUIRE(edge_stab_membership(adjusted, s, 1));
      CHECK(in_j(edge_stab_to_mk(adjusted, s)));
    }
  }
}

TEST_CASE("IA3 filter keeps a nonabelian pair in every factor") {
  for (auto k : all_family_kinds()) {
    for (const auto& f : family_generators(k, 3)) {
      if (f.abelian) continue;
      std::vector<Automorphism> ia;
      for (const auto& x : table(f, 3))
        if (is_in_ia3(x)) ia.push_back(x);
      bool found = false;
      for (std::size_t i = 0; i < ia.size() && !found; ++i)
        for (std::size_t j = i + 1; j < ia.size() && !found; ++j) found = !commute(ia[i], ia[j]);
      CHECK(found);
    }
  }
}

TEST_CASE("conjugated families") {
  const Basis b = Basis::standard(4);
  const auto c = generators::petal_permutation(b, std::vector<std::size_t>{2, 1}) * generators::nielsen_tau(b);
  for (auto k : all_family_kinds()) {
    const auto fs = family_generators(k, 4, c);
    CHECK(check_direct_product(fs).passes(fs));
    const auto plain = family_generators(k, 4);
    CHECK(fs[0].generators[0] == c * plain[0].generators[0] * c.inverse());
  }
}

TEST_CASE("family spec parsing") {
  auto s = parse_family_spec("AutTauCentral@N=3");
  CHECK(s.kind == FamilyKind::AutTauCentral);
  CHECK(s.rank == 3);
  CHECK_FALSE(s.conj.has_value());
  s = parse_family_spec("DB", 5);
  CHECK(s.rank == 5);
  s = parse_family_spec("DB@N=3~conj=a1 -> a1 a2");
  REQUIRE(s.conj.has_value());
  CHECK(*s.conj == generators::nielsen_tau(Basis::standard(3)));
  CHECK_THROWS_AS((void)parse_family_spec("Nope@N=3"), ParseError);
  CHECK_THROWS_AS((void)parse_family_spec("DB@M=3"), ParseError);
}
