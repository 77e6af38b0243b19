#include "fgaut/families.hpp"

#include "fgaut/mk_product.hpp"
#include "fgaut/splittings.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

namespace fgaut {

namespace {

struct KindName {
  FamilyKind kind;
  const char* name;
};

constexpr std::array<KindName, 8> kKindNames{{
    {FamilyKind::DB, "DB"},
    {FamilyKind::AutPlain, "AutPlain"},
    {FamilyKind::AutTauCentral, "AutTauCentral"},
    {FamilyKind::AutTauFirst, "AutTauFirst"},
    {FamilyKind::AutTauInner, "AutTauInner"},
    {FamilyKind::OutPlain, "OutPlain"},
    {FamilyKind::OutTauCentral, "OutTauCentral"},
    {FamilyKind::OutTauFirst, "OutTauFirst"},
}};

}  // namespace

const char* to_string(FamilyKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view name) {
  for (const auto& k : kKindNames) {
    if (name == k.name) return k.kind;
  }
  return std::nullopt;
}

const std::vector<FamilyKind>& all_family_kinds() {
  static const std::vector<FamilyKind> kinds = [] {
    std::vector<FamilyKind> out;
    for (const auto& k : kKindNames) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

bool is_out_kind(FamilyKind kind) {
  return kind == FamilyKind::OutPlain || kind == FamilyKind::OutTauCentral || kind == FamilyKind::OutTauFirst;
}

bool lists_tau(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::DB:
    case FamilyKind::AutPlain:
    case FamilyKind::OutPlain: return false;
    default: return true;
  }
}

std::size_t expected_nonabelian_factors(FamilyKind kind, std::size_t rank) {
  if (rank < 3) throw DomainError("families need N >= 3");
  return (kind == FamilyKind::DB || is_out_kind(kind)) ? 2 * rank - 4 : 2 * rank - 3;
}

namespace {

std::vector<Word> plain_params(const Basis& b) { return {Word::generator(b, 0), Word::generator(b, 1)}; }

std::vector<Word> fixed_params(const Basis& b) {
  Word a1 = Word::generator(b, 0), a2 = Word::generator(b, 1);
  return {a1 * a2 * a1.inverse(), a2};
}

GeneratedFactor transvections(const Basis& b, std::size_t i, bool left, bool fixed) {
  GeneratedFactor f{std::string(left ? "L_" : "R_") + std::to_string(i) + (fixed ? "^tau" : ""), {}, false};
  for (const auto& w : fixed ? fixed_params(b) : plain_params(b)) {
    f.generators.push_back(left ? generators::left_transvection(b, i, w) : generators::right_transvection(b, i, w));
  }
  return f;
}

GeneratedFactor inners(const Basis& b, bool fixed) {
  GeneratedFactor f{fixed ? "I(A)^tau" : "I(A)", {}, false};
  for (const auto& w : fixed ? fixed_params(b) : plain_params(b)) f.generators.push_back(inner(w));
  return f;
}

}  // namespace

std::vector<GeneratedFactor> family_generators(FamilyKind kind, std::size_t rank,
                                               const std::optional<Automorphism>& conj) {
  if (rank < 3) throw DomainError("families need N >= 3");
  const Basis b = Basis::standard(rank);
  if (conj && !(conj->basis() == b)) throw BasisMismatch();
  const std::size_t k = rank - 2;
  const Automorphism tau = generators::nielsen_tau(b);

  const bool fixed = kind != FamilyKind::DB && kind != FamilyKind::AutPlain && kind != FamilyKind::OutPlain;
  const bool tau_first = kind == FamilyKind::AutTauFirst || kind == FamilyKind::OutTauFirst;

  std::vector<GeneratedFactor> out;
  for (std::size_t i = 1; i <= k; ++i) {
    if (i == 1 && tau_first) {
      GeneratedFactor f = transvections(b, 1, true, false);
      f.label = "<tau,L_1>";
      f.generators.insert(f.generators.begin(), tau);
      out.push_back(std::move(f));
    } else {
      out.push_back(transvections(b, i, true, fixed));
    }
  }
  for (std::size_t i = 1; i <= k; ++i) out.push_back(transvections(b, i, false, fixed));

  switch (kind) {
    case FamilyKind::DB:
    case FamilyKind::OutPlain:
    case FamilyKind::OutTauFirst: break;
    case FamilyKind::AutPlain: out.push_back(inners(b, false)); break;
    case FamilyKind::AutTauCentral:
      out.push_back(inners(b, true));
      out.push_back(GeneratedFactor{"<tau>", {tau}, true});
      break;
    case FamilyKind::AutTauFirst: out.push_back(inners(b, true)); break;
    case FamilyKind::AutTauInner: {
      GeneratedFactor f = inners(b, false);
      f.label = "<I(A),tau>";
      f.generators.push_back(tau);
      out.push_back(std::move(f));
      break;
    }
    case FamilyKind::OutTauCentral: out.push_back(GeneratedFactor{"<[tau]>", {tau}, true}); break;
  }

  if (conj) {
    const Automorphism ci = conj->inverse();
    for (auto& f : out) {
      for (auto& g : f.generators) g = *conj * g * ci;
    }
  }
  return out;
}

std::size_t nonabelian_count(const std::vector<GeneratedFactor>& factors) {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [](const GeneratedFactor& f) { return !f.abelian; }));
}

bool DirectProductReport::passes(const std::vector<GeneratedFactor>& factors) const {
  if (first_failure()) return false;
  for (const auto& w : witnesses) {
    if (!factors.at(w.factor).abelian && !w.pair) return false;
  }
  return true;
}

std::optional<CrossPairCheck> DirectProductReport::first_failure() const {
  for (const auto& c : cross) {
    if (!c.commute) return c;
  }
  return std::nullopt;
}

DirectProductReport check_direct_product(const std::vector<GeneratedFactor>& factors) {
  DirectProductReport r;
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      for (std::size_t i = 0; i < factors[a].generators.size(); ++i) {
        for (std::size_t j = 0; j < factors[b].generators.size(); ++j) {
          r.cross.push_back({a, i, b, j, commute(factors[a].generators[i], factors[b].generators[j])});
        }
      }
    }
  }
  for (std::size_t a = 0; a < factors.size(); ++a) {
    NonabelianWitness w{a, std::nullopt};
    const auto& g = factors[a].generators;
    for (std::size_t i = 0; i < g.size() && !w.pair; ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (!commute(g[i], g[j])) {
          w.pair = std::pair{i, j};
          break;
        }
      }
    }
    r.witnesses.push_back(w);
  }
  return r;
}

std::vector<Automorphism> word_table(const GeneratedFactor& factor, std::size_t depth) {
  if (factor.generators.empty()) throw DomainError("factor has no generators");
  std::vector<Automorphism> letters;
  for (const auto& g : factor.generators) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  std::set<Automorphism> seen{Automorphism::identity(factor.generators.front().basis())};
  std::vector<Automorphism> frontier(seen.begin(), seen.end());
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Automorphism> next;
    for (const auto& f : frontier) {
      for (const auto& l : letters) {
        Automorphism p = f * l;
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Automorphism> bounded_intersection_oracle(const GeneratedFactor& f1, const GeneratedFactor& f2,
                                                      std::size_t depth) {
  if (depth < 1) throw DomainError("intersection depth must be at least 1");
  auto t1 = word_table(f1, depth);
  auto t2 = word_table(f2, depth);
  std::vector<Automorphism> out;
  std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(out));
  return out;
}

std::vector<Automorphism> stab0_candidates(std::size_t rank, std::size_t depth) {
  if (rank < 3) throw DomainError("families need N >= 3");
  const RoseSplitting s = RoseSplitting::standard(rank, rank - 2);
  const Basis a = *s.vertex_basis();
  const Word a1 = Word::generator(a, 0), a2 = Word::generator(a, 1);
  const Automorphism tau = generators::nielsen_tau(a);
  const Automorphism swap = make_automorphism({a2, a1}, {a2, a1});
  const Automorphism flip = make_automorphism({a1.inverse(), a2}, {a1.inverse(), a2});
  std::vector<Automorphism> phis{Automorphism::identity(a), tau, tau.inverse(), swap, flip,
                                 inner(a1), inner(a1.inverse()), inner(a2), inner(a2.inverse())};
  std::vector<Automorphism> out;
  for (const auto& m : enumerate_mk(a, 2 * s.petals(), depth, phis)) out.push_back(mk_to_rose(m, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Automorphism> centralizer_in(const std::vector<Automorphism>& gens,
                                         const std::vector<Automorphism>& candidates) {
  std::vector<Automorphism> out;
  for (const auto& c : candidates) {
    if (std::all_of(gens.begin(), gens.end(), [&](const Automorphism& g) { return commute(c, g); })) {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CentralizerReport centralizer_evidence(FamilyKind kind, std::size_t rank, const CentralizerBounds& bounds) {
  const auto factors = family_generators(kind, rank);
  const Automorphism tau = generators::nielsen_tau(Basis::standard(rank));
  CentralizerReport r;
  std::vector<Automorphism> all;
  for (const auto& f : factors) {
    all.insert(all.end(), f.generators.begin(), f.generators.end());
    if (std::find(f.generators.begin(), f.generators.end(), tau) != f.generators.end()) continue;
    for (const auto& g : f.generators) {
      if (!r.obstruction && !commute(tau, g)) r.obstruction = std::pair{f.label, g};
    }
  }
  r.tau_centralizes = !r.obstruction;
  auto candidates = stab0_candidates(rank, bounds.depth);
  r.candidates = candidates.size();
  r.centralizing = centralizer_in(all, candidates);
  return r;
}

FamilySpec parse_family_spec(std::string_view text, std::optional<std::size_t> default_rank) {
  std::string_view head = text;
  std::optional<std::string_view> conj_text;
  std::size_t conj_offset = 0;
  if (auto tilde = text.find('~'); tilde != std::string_view::npos) {
    head = text.substr(0, tilde);
    std::string_view rest = text.substr(tilde + 1);
    constexpr std::string_view key = "conj=";
    if (rest.substr(0, key.size()) != key) throw ParseError(tilde + 1, "expected 'conj='");
    conj_text = rest.substr(key.size());
    conj_offset = tilde + 1 + key.size();
  }
  std::string_view name = head;
  std::optional<std::size_t> rank = default_rank;
  if (auto at = head.find('@'); at != std::string_view::npos) {
    name = head.substr(0, at);
    std::string_view param = head.substr(at + 1);
    if (param.substr(0, 2) != "N=") throw ParseError(at + 1, "expected 'N=<rank>'");
    std::size_t n = 0;
    auto digits = param.substr(2);
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || p != digits.data() + digits.size()) throw ParseError(at + 3, "expected integer rank");
    rank = n;
  }
  auto kind = family_kind_from_string(name);
  if (!kind) throw ParseError(0, "unknown family kind '" + std::string(name) + "'");
  if (!rank) throw ParseError(head.size(), "missing rank");
  if (*rank < 3) throw ParseError(head.size(), "families need N >= 3");
  FamilySpec spec{*kind, *rank, std::nullopt};
  if (conj_text) {
    try {
      spec.conj = parse_automorphism(Basis::standard(*rank), *conj_text);
    } catch (const ParseError& e) {
      throw ParseError(conj_offset + e.position(), e.detail());
    }
  }
  return spec;
}

}  // namespace fgaut
