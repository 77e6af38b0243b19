#include "suites.hpp"

namespace fgaut::verify::detail {

namespace {

const Basis& f2() {
  static const Basis b = Basis::standard(2);
  return b;
}

Outcome assoc_suite(const SuiteParams& p, Rng& rng) {
  const std::size_t len = p.length.value_or(3);
  Outcome o;
  for (std::size_t i = 0; i < 1000 && !o.failed(); ++i) {
    const std::size_t k = 1 + i % 3;
    MkElement x = random_mk(rng, f2(), k, len, 3), y = random_mk(rng, f2(), k, len, 3),
              z = random_mk(rng, f2(), k, len, 3);
    const MkElement e = MkElement::identity(f2(), k);
    ++o.samples;
    const std::string ctx = x.to_string() + " , " + y.to_string() + " , " + z.to_string();
    if ((x * y) * z != x * (y * z)) o.fail("associativity: " + ctx);
    else if (x * e != x || e * x != x) o.fail("identity: " + ctx);
    else if (x * x.inverse() != e || x.inverse() * x != e) o.fail("inverse: " + ctx);
    else if (pi(x * y) != pi(x) * pi(y)) o.fail("pi homomorphism: " + ctx);
  }
  return o;
}

TupleElement random_tuple(Rng& rng, std::size_t k, std::size_t len) {
  TupleElement t;
  for (std::size_t i = 0; i <= k; ++i) t.parts.push_back(random_word(rng, f2(), len));
  return t;
}

std::string show_tuple(const TupleElement& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.parts.size(); ++i) s += (i ? ", " : "") + t.parts[i].to_string();
  return s + "]";
}

Outcome extra_suite(const SuiteParams& p, Rng& rng) {
  const std::size_t k = p.rank.value_or(3);
  const std::size_t len = p.length.value_or(3);
  Outcome o;
  for (std::size_t n = 0; n < 200 && !o.failed(); ++n) {
    TupleElement t = random_tuple(rng, k, len), s = random_tuple(rng, k, len);
    ++o.samples;
    const std::string ctx = show_tuple(t) + " , " + show_tuple(s);
    TupleElement ts;
    for (std::size_t i = 0; i <= k; ++i) ts.parts.push_back(t.parts[i] * s.parts[i]);
    if (extract_tuple(embed_tuple(t)) != t) o.fail("round trip: " + ctx);
    else if (embed_tuple(ts) != embed_tuple(t) * embed_tuple(s)) o.fail("embedding not a homomorphism: " + ctx);
    if (o.failed()) break;
    for (std::size_t i = 1; i <= k && !o.failed(); ++i) {
      if (embed_tuple(swap_with_last(t, i)) != alpha(i, embed_tuple(t))) {
        o.fail("equivariance at i = " + std::to_string(i) + ": " + ctx);
      }
    }
    // J is closed and the last summand lands in J.
    const Word& g = t.parts[0];
    const Word& h = s.parts[0];
    if (j_element(g, k) * j_element(h, k) != j_element(g * h, k) || j_element(g, k).inverse() != j_element(g.inverse(), k)) {
      o.fail("J closure: g = " + g.to_string() + " ; h = " + h.to_string());
    }
    TupleElement last(t);
    for (std::size_t i = 0; i < k; ++i) last.parts[i] = Word(f2());
    if (!in_j(embed_tuple(last))) o.fail("last summand outside J: " + ctx);
    if (!pi_bar_matrix(j_element(g, k)).is_identity()) o.fail("pi_bar of J element: " + g.to_string());
  }
  for (std::size_t n = 0; n < 200 && !o.failed(); ++n) {
    MkElement x = random_mk(rng, f2(), k, len, 3);
    ++o.samples;
    for (std::size_t i = 1; i <= k && !o.failed(); ++i) {
      if (alpha(i, alpha(i, x)) != x) o.fail("alpha_" + std::to_string(i) + " squared: " + x.to_string());
      for (std::size_t j = 1; j <= k && !o.failed(); ++j) {
        if (i == j) continue;
        MkElement y = x;
        for (int r = 0; r < 3; ++r) y = alpha(i, alpha(j, y));
        if (y != x) o.fail("(alpha_" + std::to_string(i) + " alpha_" + std::to_string(j) + ")^3: " + x.to_string());
      }
    }
  }
  return o;
}

}  // namespace

void add_mk_suites(std::vector<Suite>& out) {
  out.push_back({"mk.assoc", "M_k(A) group law", assoc_suite});
  out.push_back({"mk.extra", "A^(k+1) embeds in M_k(A) with a Sym(k+1) action", extra_suite});
}

}  // namespace fgaut::verify::detail
