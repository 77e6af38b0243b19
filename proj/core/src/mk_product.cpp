#include "fgaut/mk_product.hpp"

#include <algorithm>
#include <cctype>

namespace fgaut {

MkElement::MkElement(std::vector<Word> coords, Automorphism phi)
    : coords_(std::move(coords)), phi_(std::move(phi)) {
  for (const auto& g : coords_) {
    if (!(g.basis() == phi_.basis())) throw BasisMismatch();
  }
}

MkElement MkElement::identity(const Basis& a, std::size_t k) {
  return MkElement(std::vector<Word>(k, Word(a)), Automorphism::identity(a));
}

MkElement MkElement::inverse() const {
  Automorphism phi_inv = phi_.inverse();
  std::vector<Word> c;
  c.reserve(coords_.size());
  for (const auto& g : coords_) c.push_back(phi_inv.apply(g.inverse()));
  return MkElement(std::move(c), std::move(phi_inv));
}

MkElement operator*(const MkElement& x, const MkElement& y) {
  if (x.arity() != y.arity()) throw DomainError("M_k arity mismatch");
  std::vector<Word> c;
  c.reserve(x.arity());
  for (std::size_t i = 0; i < x.arity(); ++i) c.push_back(x.coords_[i] * x.phi_.apply(y.coords_[i]));
  return MkElement(std::move(c), x.phi_ * y.phi_);
}

std::strong_ordering operator<=>(const MkElement& x, const MkElement& y) noexcept {
  if (auto c = x.coords_.size() <=> y.coords_.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (auto c = x.coords_[i] <=> y.coords_[i]; c != 0) return c;
  }
  return x.phi_ <=> y.phi_;
}

std::string MkElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += " | ";
    out += coords_[i].to_string();
  }
  return out + " ; " + phi_.to_compact_string() + ")";
}

MkElement mk_mul(const MkElement& x, const MkElement& y) { return x * y; }
MkElement mk_inv(const MkElement& x) { return x.inverse(); }
MkElement mk_identity(const Basis& a, std::size_t k) { return MkElement::identity(a, k); }

MkElement mk_power(const MkElement& x, int exponent) {
  MkElement base = exponent < 0 ? x.inverse() : x;
  MkElement out = MkElement::identity(x.basis(), x.arity());
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = out * base;
  return out;
}

bool mk_commute(const MkElement& x, const MkElement& y) { return x * y == y * x; }

MkElement j_element(const Word& g, std::size_t k) {
  return MkElement(std::vector<Word>(k, g.inverse()), inner(g));
}

bool in_j(const MkElement& m) {
  auto x = inner_conjugator(m.phi());
  if (!x) return false;
  return std::all_of(m.coords().begin(), m.coords().end(),
                     [&](const Word& g) { return g == x->inverse(); });
}

MkElement tau_bar(const Basis& a, std::size_t k) {
  return MkElement(std::vector<Word>(k, Word(a)), generators::nielsen_tau(a));
}

MkElement embed_tuple(const TupleElement& t) {
  if (t.parts.empty()) throw DomainError("tuple needs at least the J summand");
  const Word& x = t.parts.back();
  Word xi = x.inverse();
  std::vector<Word> c;
  c.reserve(t.parts.size() - 1);
  for (std::size_t i = 0; i + 1 < t.parts.size(); ++i) c.push_back(t.parts[i] * xi);
  return MkElement(std::move(c), inner(x));
}

TupleElement extract_tuple(const MkElement& m) {
  auto x = inner_conjugator(m.phi());
  if (!x) throw DomainError("extract_tuple: phi is not inner");
  TupleElement t;
  t.parts.reserve(m.arity() + 1);
  for (const auto& g : m.coords()) t.parts.push_back(g * *x);
  t.parts.push_back(*x);
  return t;
}

TupleElement swap_with_last(const TupleElement& t, std::size_t i) {
  if (i < 1 || i >= t.parts.size()) throw DomainError("tuple index out of range");
  TupleElement out = t;
  std::swap(out.parts[i - 1], out.parts.back());
  return out;
}

MkElement alpha(std::size_t i, const MkElement& x) {
  if (i < 1 || i > x.arity()) throw DomainError("alpha index out of range");
  const Word& gi = x.coord(i - 1);
  Word gi_inv = gi.inverse();
  std::vector<Word> c;
  c.reserve(x.arity());
  for (std::size_t l = 0; l < x.arity(); ++l) {
    c.push_back(l == i - 1 ? gi_inv : x.coord(l) * gi_inv);
  }
  return MkElement(std::move(c), inner(gi) * x.phi());
}

const Automorphism& pi(const MkElement& m) { return m.phi(); }

IntMatrix pi_bar_matrix(const MkElement& m) { return abelianization_matrix(m.phi()); }

std::vector<MkElement> centralizer_probe(std::span<const MkElement> gens,
                                         std::span<const MkElement> candidates) {
  for (const auto& g : gens) {
    if (!candidates.empty() && g.arity() != candidates.front().arity()) {
      throw DomainError("M_k arity mismatch");
    }
  }
  std::vector<MkElement> out;
  for (const auto& c : candidates) {
    if (std::all_of(gens.begin(), gens.end(), [&](const MkElement& g) { return mk_commute(c, g); })) {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MkElement> enumerate_mk(const Basis& a, std::size_t k, std::size_t coord_length,
                                    std::span<const Automorphism> phis) {
  const auto ball = enumerate_ball(a, coord_length);
  std::vector<MkElement> out;
  std::vector<std::size_t> idx(k, 0);
  for (const auto& phi : phis) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Word> c;
      c.reserve(k);
      for (auto i : idx) c.push_back(ball[i]);
      out.emplace_back(std::move(c), phi);
      std::size_t pos = 0;
      while (pos < k && ++idx[pos] == ball.size()) idx[pos++] = 0;
      if (pos == k) break;
    }
  }
  return out;
}

std::vector<Word> fix_tau_generators(const Basis& a) {
  if (a.rank() != 2) throw DomainError("Fix(tau) generators need A of rank 2");
  Word a1 = Word::generator(a, 0), a2 = Word::generator(a, 1);
  return {a1 * a2 * a1.inverse(), a2};
}

bool is_tau_fixed(const Word& w) { return generators::nielsen_tau(w.basis()).apply(w) == w; }

namespace {

std::vector<Word> a_generators(const Basis& a) {
  return {Word::generator(a, 0), Word::generator(a, 1)};
}

MkElement coordinate_element(const Word& g, std::size_t k, std::size_t i) {
  std::vector<Word> c(k, Word(g.basis()));
  c[i] = g;
  return MkElement(std::move(c), Automorphism::identity(g.basis()));
}

MkFactor coordinate_factor(const std::vector<Word>& params, std::size_t k, std::size_t i,
                           std::string label) {
  MkFactor f{std::move(label), {}, false};
  for (const auto& g : params) f.generators.push_back(coordinate_element(g, k, i));
  return f;
}

MkFactor j_factor(const std::vector<Word>& params, std::size_t k, std::string label) {
  MkFactor f{std::move(label), {}, false};
  for (const auto& g : params) f.generators.push_back(j_element(g, k));
  return f;
}

}  // namespace

std::vector<MkFactor> shape_generators(MkShape shape, const Basis& a, std::size_t k,
                                       std::size_t j) {
  if (a.rank() != 2) throw DomainError("shapes are defined for A = F_2");
  if (k == 0) throw DomainError("arity must be positive");
  if (shape == MkShape::a_tau && (j < 1 || j > k)) throw DomainError("shape index out of range");
  const auto plain = a_generators(a);
  const auto fixed = fix_tau_generators(a);
  const bool twisted = shape != MkShape::plain;
  std::vector<MkFactor> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::string label = "A_" + std::to_string(i + 1);
    if (shape == MkShape::a_tau && i + 1 == j) {
      auto f = coordinate_factor(plain, k, i, "<" + label + ",tau>");
      f.generators.push_back(tau_bar(a, k));
      out.push_back(std::move(f));
    } else {
      out.push_back(coordinate_factor(twisted ? fixed : plain, k, i, label + (twisted ? "^tau" : "")));
    }
  }
  switch (shape) {
    case MkShape::plain: out.push_back(j_factor(plain, k, "J")); break;
    case MkShape::central:
      out.push_back(j_factor(fixed, k, "J^tau"));
      out.push_back(MkFactor{"<tau>", {tau_bar(a, k)}, true});
      break;
    case MkShape::j_tau: {
      auto f = j_factor(plain, k, "<J,tau>");
      f.generators.push_back(tau_bar(a, k));
      out.push_back(std::move(f));
      break;
    }
    case MkShape::a_tau: out.push_back(j_factor(fixed, k, "J^tau")); break;
  }
  return out;
}

bool shape_membership(MkShape shape, const MkElement& m, std::size_t j) {
  const Basis& a = m.basis();
  if (a.rank() != 2) throw DomainError("shapes are defined for A = F_2");
  if (shape == MkShape::a_tau && (j < 1 || j > m.arity())) {
    throw DomainError("shape index out of range");
  }
  IntMatrix mat = abelianization_matrix(m.phi());
  if (mat.at(0, 0) != 1 || mat.at(0, 1) != 0 || mat.at(1, 1) != 1) return false;
  const int p = static_cast<int>(mat.at(1, 0));
  if (shape == MkShape::plain && p != 0) return false;
  auto x = inner_conjugator(m.phi() * power(generators::nielsen_tau(a), -p));
  if (!x) return false;
  const bool x_fixed = is_tau_fixed(*x);
  if ((shape == MkShape::central || shape == MkShape::a_tau) && !x_fixed) return false;
  if (shape == MkShape::plain) return true;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (shape == MkShape::a_tau && i + 1 == j) continue;
    if (!is_tau_fixed(m.coord(i) * *x)) return false;
  }
  return true;
}

MkElement parse_mk(const Basis& a, std::string_view text, std::size_t inverse_search_length) {
  std::size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  std::size_t e = text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (b == e || text[b] != '(') throw ParseError(b, "expected '('");
  if (text[e - 1] != ')') throw ParseError(e == 0 ? 0 : e - 1, "expected ')'");
  const std::size_t inner_begin = b + 1, inner_end = e - 1;
  std::string_view body = text.substr(inner_begin, inner_end - inner_begin);
  std::size_t semi = body.find(';');
  if (semi == std::string_view::npos) throw ParseError(inner_end, "expected ';'");
  std::vector<Word> coords;
  std::size_t start = 0;
  std::string_view cs = body.substr(0, semi);
  while (true) {
    std::size_t bar = cs.find('|', start);
    std::size_t end = bar == std::string_view::npos ? cs.size() : bar;
    try {
      coords.push_back(parse_word(a, cs.substr(start, end - start)));
    } catch (const ParseError& err) {
      throw ParseError(inner_begin + start + err.position(), err.detail());
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  try {
    return MkElement(std::move(coords),
                     parse_automorphism(a, body.substr(semi + 1), inverse_search_length));
  } catch (const ParseError& err) {
    throw ParseError(inner_begin + semi + 1 + err.position(), err.detail());
  }
}

}  // namespace fgaut
