#include "suites.hpp"

namespace fgaut::verify::detail {

Word random_word(Rng& rng, const Basis& basis, std::size_t max_length) {
  const std::size_t len = rng.below(max_length + 1);
  std::vector<Letter> letters;
  while (letters.size() < len) {
    Letter l{static_cast<std::uint32_t>(rng.below(basis.rank())), static_cast<std::int8_t>(rng.below(2) ? -1 : 1)};
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return Word(basis, letters);
}

std::vector<Automorphism> aut_f2_generators(const Basis& a) {
  const Word a1 = Word::generator(a, 0), a2 = Word::generator(a, 1);
  return {
      generators::nielsen_tau(a),
      make_automorphism({a2, a1}, {a2, a1}),
      make_automorphism({a1.inverse(), a2}, {a1.inverse(), a2}),
      make_automorphism({a1, a2 * a1}, {a1, a2 * a1.inverse()}),
      inner(a1),
      inner(a2),
  };
}

Automorphism random_product(Rng& rng, const std::vector<Automorphism>& gens, std::size_t max_factors) {
  Automorphism out = Automorphism::identity(gens.front().basis());
  const std::size_t n = rng.below(max_factors + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = gens[rng.below(gens.size())];
    out = out * (rng.below(2) ? g.inverse() : g);
  }
  return out;
}

MkElement random_mk(Rng& rng, const Basis& a, std::size_t arity, std::size_t coord_length,
                    std::size_t phi_factors) {
  std::vector<Word> c;
  for (std::size_t i = 0; i < arity; ++i) c.push_back(random_word(rng, a, coord_length));
  return MkElement(std::move(c), random_product(rng, aut_f2_generators(a), phi_factors));
}

std::vector<Automorphism> stab0_generators(const RoseSplitting& s) {
  const Basis& b = s.basis();
  const auto vidx = s.vertex_factor().indices();
  std::vector<Automorphism> out;
  for (std::size_t petal = 1; petal <= s.petals(); ++petal) {
    const std::size_t pos = s.stable_position(petal);
    const Word x = s.stable_letter(petal);
    for (auto v : vidx) {
      const Word w = Word::generator(b, v);
      for (bool left : {true, false}) {
        auto img = Automorphism::identity(b).images();
        auto inv = img;
        img[pos] = left ? w * x : x * w;
        inv[pos] = left ? w.inverse() * x : x * w.inverse();
        out.push_back(make_automorphism(std::move(img), std::move(inv)));
      }
    }
  }
  if (vidx.size() >= 2) {
    auto img = Automorphism::identity(b).images();
    auto inv = img;
    const Word a1 = Word::generator(b, vidx[0]), a2 = Word::generator(b, vidx[1]);
    img[vidx[0]] = a1 * a2;
    inv[vidx[0]] = a1 * a2.inverse();
    out.push_back(make_automorphism(std::move(img), std::move(inv)));
  }
  for (auto v : vidx) out.push_back(inner(Word::generator(b, v)));
  return out;
}

WkElement random_wk(Rng& rng, std::size_t k) {
  WkElement w = WkElement::identity(k);
  for (std::size_t i = k; i > 1; --i) std::swap(w.perm[i - 1], w.perm[rng.below(i)]);
  for (auto& s : w.signs) s = rng.below(2) ? -1 : 1;
  return w;
}

std::string show(const Automorphism& phi) { return phi.to_string(); }

}  // namespace fgaut::verify::detail
