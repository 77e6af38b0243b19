#include "fgaut/nielsen.hpp"

#include <cstdlib>
#include <numeric>

namespace fgaut {

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::witness: return "witness";
    case SearchOutcome::definitive_none: return "definitive_none";
    case SearchOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

void require_rank2(const Basis& basis) {
  if (basis.rank() != 2) throw DomainError("Nielsen analysis needs a rank-2 basis");
}

NielsenSearch none(SearchOutcome outcome, std::string reason) {
  return NielsenSearch{outcome, std::nullopt, std::move(reason)};
}

}  // namespace

bool is_nielsen_power_outer(const Automorphism& phi) {
  require_rank2(phi.basis());
  IntMatrix m = abelianization_matrix(phi);
  return m.trace() == 2 && m.determinant() == 1;
}

Automorphism nielsen_conjugate_power(const Word& y, int power) {
  require_rank2(y.basis());
  Automorphism ad = inner(y);
  return fgaut::power(ad * generators::nielsen_tau(y.basis()) * ad.inverse(), power);
}

bool reproduces(const Automorphism& phi, const NielsenWitness& witness) {
  return nielsen_conjugate_power(witness.conjugator, witness.power) == phi;
}

NielsenSearch nielsen_power_witness(const Automorphism& phi, const NielsenBounds& bounds) {
  const Basis& basis = phi.basis();
  require_rank2(basis);
  IntMatrix m = abelianization_matrix(phi);
  if (m.at(0, 0) != 1 || m.at(0, 1) != 0 || m.at(1, 1) != 1) {
    return none(SearchOutcome::definitive_none,
                "abelianization " + m.to_string() + " is not a power of [[1,0],[1,1]]");
  }
  const int p = static_cast<int>(m.at(1, 0));
  if (std::abs(p) > bounds.max_power) {
    return none(SearchOutcome::inconclusive,
                "power " + std::to_string(p) + " exceeds bound " + std::to_string(bounds.max_power));
  }
  const Automorphism tau_p = power(generators::nielsen_tau(basis), p);
  // phi tau^-p has identity abelianization, so it is inner (IA(F_2) = Inn(F_2)).
  auto w = inner_conjugator(phi * tau_p.inverse());
  if (!w) return none(SearchOutcome::definitive_none, "phi tau^-p is not inner");

  if (p == 0) {
    if (w->is_identity()) return NielsenSearch{SearchOutcome::witness, NielsenWitness{0, Word(basis)}, ""};
    return none(SearchOutcome::definitive_none, "zeroth power must be the identity");
  }
  auto ws = exponent_sums(*w);
  if (ws[0] != 0 || ws[1] % p != 0) {
    return none(SearchOutcome::definitive_none,
                "(I - M^p) y = w has no integer solution for w = " + w->to_string());
  }
  const long y1 = -ws[1] / p;

  std::optional<Word> found;
  for_each_in_ball(basis, bounds.max_conjugator_length, [&](const Word& y) {
    if (found) return;
    if (exponent_sums(y)[0] != y1) return;
    if (y * tau_p.apply(y).inverse() == *w) found = y;
  });
  if (found) return NielsenSearch{SearchOutcome::witness, NielsenWitness{p, *found}, ""};
  return none(SearchOutcome::inconclusive,
              "no conjugator of length <= " + std::to_string(bounds.max_conjugator_length));
}

namespace {

void require_unit_nielsen_class(const Automorphism& phi, const char* which) {
  require_rank2(phi.basis());
  IntMatrix m = abelianization_matrix(phi);
  long content = 0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      content = std::gcd(content, m.at(r, c) - (r == c ? 1 : 0));
    }
  }
  if (m.trace() != 2 || m.determinant() != 1 || content != 1) {
    throw DomainError(std::string(which) + " is not a Nielsen transformation class: " + m.to_string());
  }
}

}  // namespace

CommutingNielsenReport commuting_nielsen_check(const Automorphism& tau0, const Automorphism& tau1,
                                               int p, int q, const NielsenBounds& bounds) {
  if (p == 0 || q == 0) throw DomainError("powers must be nonzero");
  require_unit_nielsen_class(tau0, "first argument");
  require_unit_nielsen_class(tau1, "second argument");

  CommutingNielsenReport report;
  report.witness0 = nielsen_power_witness(tau0, bounds);
  report.witness1 = nielsen_power_witness(tau1, bounds);
  report.powers_commute = commute(power(tau0, p), power(tau1, q));
  report.commute = commute(tau0, tau1);
  if (report.powers_commute && report.commute) {
    for (int sign : {1, -1}) {
      auto w = inner_conjugator(tau1 * power(tau0, -sign));
      if (w && tau0.apply(*w) == *w) {
        report.fixed_conjugator = *w;
        report.sign = sign;
        break;
      }
    }
  }
  return report;
}

}  // namespace fgaut
