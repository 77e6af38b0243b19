#include "fgaut/automorphisms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

namespace fgaut {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t side, std::vector<long> row_major, std::optional<long> modulus)
    : side_(side), entries_(std::move(row_major)), modulus_(modulus) {
  if (entries_.size() != side_ * side_) throw DomainError("matrix entry count mismatch");
  if (modulus_ && *modulus_ <= 0) throw DomainError("modulus must be positive");
  normalize();
}

IntMatrix IntMatrix::identity(std::size_t side, std::optional<long> modulus) {
  std::vector<long> e(side * side, 0);
  for (std::size_t i = 0; i < side; ++i) e[i * side + i] = 1;
  return IntMatrix(side, std::move(e), modulus);
}

void IntMatrix::normalize() {
  if (!modulus_) return;
  for (auto& e : entries_) e = ((e % *modulus_) + *modulus_) % *modulus_;
}

long IntMatrix::trace() const {
  long t = 0;
  for (std::size_t i = 0; i < side_; ++i) t += at(i, i);
  if (modulus_) t = ((t % *modulus_) + *modulus_) % *modulus_;
  return t;
}

long IntMatrix::determinant() const {
  // Fraction-free Bareiss elimination; exact over the integers.
  if (side_ == 0) return 1;
  std::vector<long> m = entries_;
  const std::size_t n = side_;
  long sign = 1;
  long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[swap * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
    }
    prev = m[k * n + k];
  }
  long det = sign * m[n * n - 1];
  if (modulus_) det = ((det % *modulus_) + *modulus_) % *modulus_;
  return det;
}

bool IntMatrix::is_identity() const { return *this == identity(side_, modulus_); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.side_ != b.side_) throw DomainError("matrix size mismatch");
  if (a.modulus_ != b.modulus_) throw DomainError("matrix modulus mismatch");
  const std::size_t n = a.side_;
  std::vector<long> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += a.at(i, k) * b.at(k, j);
    }
  }
  return IntMatrix(n, std::move(e), a.modulus_);
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < side_; ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < side_; ++c) {
      if (c) out += ',';
      out += std::to_string(at(r, c));
    }
    out += ']';
  }
  return out + "]";
}

// ------------------------------------------------------------- Automorphism

namespace {

Word apply_images(const Basis& basis, const std::vector<Word>& images, const Word& w) {
  std::vector<Letter> raw;
  for (auto l : w.letters()) {
    auto img = images[l.index].letters();
    if (l.sign > 0) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) raw.push_back(it->inverse());
    }
  }
  return Word(basis, raw);
}

void check_shape(const Basis& basis, const std::vector<Word>& images) {
  if (images.size() != basis.rank()) throw DomainError("image count differs from basis rank");
  for (const auto& w : images) {
    if (!(w.basis() == basis)) throw BasisMismatch();
  }
}

}  // namespace

Automorphism::Automorphism(std::vector<Word> images, std::vector<Word> inverse_images)
    : basis_(images.empty() ? throw DomainError("automorphism needs images") : images[0].basis()),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  check_shape(basis_, images_);
  check_shape(basis_, inverse_images_);
  for (std::size_t i = 0; i < basis_.rank(); ++i) {
    Word b = Word::generator(basis_, i);
    if (apply_images(basis_, images_, inverse_images_[i]) != b ||
        apply_images(basis_, inverse_images_, images_[i]) != b) {
      throw RoundTripFailure(i, basis_.name(i));
    }
  }
}

Automorphism::Automorphism(Basis basis, std::vector<Word> images,
                           std::vector<Word> inverse_images, Trusted)
    : basis_(std::move(basis)),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {}

Automorphism Automorphism::identity(const Basis& basis) {
  std::vector<Word> id;
  id.reserve(basis.rank());
  for (std::size_t i = 0; i < basis.rank(); ++i) id.push_back(Word::generator(basis, i));
  return Automorphism(basis, id, id, Trusted{});
}

Word Automorphism::apply(const Word& w) const {
  if (!(w.basis() == basis_)) throw BasisMismatch();
  return apply_images(basis_, images_, w);
}

Automorphism Automorphism::inverse() const {
  return Automorphism(basis_, inverse_images_, images_, Trusted{});
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].length() != 1 || images_[i].front() != Letter{static_cast<std::uint32_t>(i), 1}) {
      return false;
    }
  }
  return true;
}

Automorphism operator*(const Automorphism& phi, const Automorphism& psi) {
  if (!(phi.basis_ == psi.basis_)) throw BasisMismatch();
  std::vector<Word> img, inv;
  img.reserve(phi.images_.size());
  inv.reserve(phi.images_.size());
  for (std::size_t i = 0; i < phi.images_.size(); ++i) {
    img.push_back(apply_images(phi.basis_, phi.images_, psi.images_[i]));
    inv.push_back(apply_images(phi.basis_, psi.inverse_images_, phi.inverse_images_[i]));
  }
  return Automorphism(phi.basis_, std::move(img), std::move(inv), Automorphism::Trusted{});
}

std::strong_ordering operator<=>(const Automorphism& a, const Automorphism& b) noexcept {
  if (auto c = a.images_.size() <=> b.images_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.images_.size(); ++i) {
    if (auto c = a.images_[i] <=> b.images_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Automorphism::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += "; ";
    out += basis_.name(i) + " -> " + images_[i].to_string();
  }
  return out;
}

std::string Automorphism::to_compact_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == Word::generator(basis_, i)) continue;
    if (!out.empty()) out += "; ";
    out += basis_.name(i) + " -> " + images_[i].to_string();
  }
  return out.empty() ? "1" : out;
}

Automorphism make_automorphism(std::vector<Word> images, std::vector<Word> inverse_images) {
  return Automorphism(std::move(images), std::move(inverse_images));
}

Word apply(const Automorphism& phi, const Word& w) { return phi.apply(w); }

Automorphism compose(const Automorphism& phi, const Automorphism& psi) { return phi * psi; }

Automorphism inverse(const Automorphism& phi) { return phi.inverse(); }

Automorphism power(const Automorphism& phi, int exponent) {
  Automorphism base = exponent < 0 ? phi.inverse() : phi;
  Automorphism out = Automorphism::identity(phi.basis());
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = out * base;
  return out;
}

Automorphism inner(const Word& g) {
  const Basis& basis = g.basis();
  std::vector<Word> img, inv;
  Word gi = g.inverse();
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    Word b = Word::generator(basis, i);
    img.push_back(g * b * gi);
    inv.push_back(gi * b * g);
  }
  return make_automorphism(std::move(img), std::move(inv));
}

bool commute(const Automorphism& phi, const Automorphism& psi) { return phi * psi == psi * phi; }

namespace {

// For w = c b c^-1 reduced with b the given generator, returns c.
std::optional<Word> conjugator_of_letter(const Word& w, std::size_t index) {
  if (w.length() % 2 == 0) return std::nullopt;
  const std::size_t m = w.length() / 2;
  if (w.letters()[m] != Letter{static_cast<std::uint32_t>(index), 1}) return std::nullopt;
  Word c = w.slice(0, m);
  if (w.slice(m + 1, w.length()) != c.inverse()) return std::nullopt;
  return c;
}

}  // namespace

std::optional<Word> inner_conjugator(const Automorphism& phi) {
  const Basis& basis = phi.basis();
  if (basis.rank() < 2) throw DomainError("inner_conjugator needs rank >= 2");
  // If phi = ad_x and x = c a1^m with c not ending in a1^{+-1}, then phi(a1) = c a1 c^-1;
  // likewise for a2. x is c0 or c1.
  auto c0 = conjugator_of_letter(phi.image(0), 0);
  auto c1 = conjugator_of_letter(phi.image(1), 1);
  if (!c0 || !c1) return std::nullopt;
  for (const Word* cand : {&*c0, &*c1}) {
    if (inner(*cand) == phi) return *cand;
  }
  return std::nullopt;
}

IntMatrix abelianization_matrix(const Automorphism& phi, std::optional<long> modulus) {
  const std::size_t n = phi.basis().rank();
  std::vector<long> e(n * n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    auto sums = exponent_sums(phi.image(c));
    for (std::size_t r = 0; r < n; ++r) e[r * n + c] = sums[r];
  }
  return IntMatrix(n, std::move(e), modulus);
}

bool is_in_ia3(const Automorphism& phi) { return abelianization_matrix(phi, 3).is_identity(); }

std::vector<Word> fixed_words(const Automorphism& phi, std::size_t max_length) {
  std::vector<Word> out;
  for_each_in_ball(phi.basis(), max_length, [&](const Word& w) {
    if (phi.apply(w) == w) out.push_back(w);
  });
  return out;
}

std::vector<Word> subgroup_ball(std::span<const Word> gens, std::size_t max_length,
                                std::size_t max_factors) {
  if (gens.empty()) throw DomainError("subgroup_ball needs generators");
  std::vector<Word> symbols;
  for (const auto& g : gens) {
    symbols.push_back(g);
    symbols.push_back(g.inverse());
  }
  Word id(gens.front().basis());
  std::unordered_set<Word> seen{id};
  std::vector<Word> frontier{id};
  for (std::size_t step = 0; step < max_factors && !frontier.empty(); ++step) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& s : symbols) {
        Word p = w * s;
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  for (const auto& w : seen) {
    if (w.length() <= max_length) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Automorphism> complete_with_inverse(std::vector<Word> images,
                                                  std::size_t max_length) {
  if (images.empty()) throw DomainError("automorphism needs images");
  const Basis basis = images.front().basis();
  check_shape(basis, images);
  std::vector<std::optional<Word>> inv(basis.rank());
  std::size_t found = 0;
  for_each_in_ball(basis, max_length, [&](const Word& w) {
    if (found == inv.size()) return;
    Word img = apply_images(basis, images, w);
    if (img.length() != 1) return;
    Letter l = img.front();
    if (inv[l.index]) return;
    inv[l.index] = l.sign > 0 ? w : w.inverse();
    ++found;
  });
  if (found != inv.size()) return std::nullopt;
  std::vector<Word> witness;
  for (auto& w : inv) witness.push_back(std::move(*w));
  try {
    return Automorphism(std::move(images), std::move(witness));
  } catch (const RoundTripFailure&) {
    return std::nullopt;
  }
}

// --------------------------------------------------------------- generators

namespace generators {

std::size_t stable_count(const Basis& basis) { return basis.rank() > 2 ? basis.rank() - 2 : 0; }

std::size_t stable_position(const Basis& basis, std::size_t stable) {
  if (stable < 1 || stable > stable_count(basis)) {
    throw DomainError("stable letter index " + std::to_string(stable) + " out of range");
  }
  return stable + 1;
}

Factor vertex_factor(const Basis& basis) {
  return Factor::range(basis.rank(), 0, std::min<std::size_t>(2, basis.rank()));
}

namespace {

std::vector<Word> identity_images(const Basis& basis) {
  return Automorphism::identity(basis).images();
}

void require_in_a(const Basis& basis, const Word& w) {
  if (!(w.basis() == basis)) throw BasisMismatch();
  if (!in_factor(w, vertex_factor(basis))) {
    throw DomainError("transvection parameter " + w.to_string() + " is not in A");
  }
}

}  // namespace

Automorphism nielsen_tau(const Basis& basis) {
  if (basis.rank() < 2) throw DomainError("nielsen_tau needs rank >= 2");
  auto img = identity_images(basis);
  auto inv = img;
  Word a1 = Word::generator(basis, 0), a2 = Word::generator(basis, 1);
  img[0] = a1 * a2;
  inv[0] = a1 * a2.inverse();
  return make_automorphism(std::move(img), std::move(inv));
}

Automorphism left_transvection(const Basis& basis, std::size_t stable, const Word& w) {
  const std::size_t pos = stable_position(basis, stable);
  require_in_a(basis, w);
  auto img = identity_images(basis);
  auto inv = img;
  Word x = Word::generator(basis, pos);
  img[pos] = w * x;
  inv[pos] = w.inverse() * x;
  return make_automorphism(std::move(img), std::move(inv));
}

Automorphism right_transvection(const Basis& basis, std::size_t stable, const Word& w) {
  const std::size_t pos = stable_position(basis, stable);
  require_in_a(basis, w);
  auto img = identity_images(basis);
  auto inv = img;
  Word x = Word::generator(basis, pos);
  img[pos] = x * w;
  inv[pos] = x * w.inverse();
  return make_automorphism(std::move(img), std::move(inv));
}

Automorphism petal_permutation(const Basis& basis, std::span<const std::size_t> perm) {
  const std::size_t k = stable_count(basis);
  if (perm.size() != k) throw DomainError("petal permutation has wrong length");
  std::vector<bool> hit(k, false);
  for (auto p : perm) {
    if (p < 1 || p > k || hit[p - 1]) throw DomainError("not a permutation of the petals");
    hit[p - 1] = true;
  }
  auto img = identity_images(basis);
  auto inv = img;
  for (std::size_t i = 1; i <= k; ++i) {
    img[stable_position(basis, i)] = Word::generator(basis, stable_position(basis, perm[i - 1]));
    inv[stable_position(basis, perm[i - 1])] = Word::generator(basis, stable_position(basis, i));
  }
  return make_automorphism(std::move(img), std::move(inv));
}

Automorphism petal_inversion(const Basis& basis, std::size_t stable) {
  const std::size_t pos = stable_position(basis, stable);
  auto img = identity_images(basis);
  img[pos] = img[pos].inverse();
  auto inv = img;
  return make_automorphism(std::move(img), std::move(inv));
}

}  // namespace generators

// ------------------------------------------------------------------ parsing

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

// Parses a `;`-separated list of `name -> word` clauses starting at text offset `base`.
std::vector<Word> parse_map(const Basis& basis, std::string_view text, std::size_t base) {
  auto img = Automorphism::identity(basis).images();
  std::size_t off = base;
  std::string_view body = trim(text, off);
  if (body.empty() || body == "1") return img;
  std::vector<bool> assigned(basis.rank(), false);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string_view::npos) end = body.size();
    std::size_t clause_off = off + start;
    std::string_view clause = trim(body.substr(start, end - start), clause_off);
    if (!clause.empty()) {
      std::size_t arrow = clause.find("->");
      if (arrow == std::string_view::npos) throw ParseError(clause_off, "expected '->'");
      std::size_t name_off = clause_off;
      std::string_view name = trim(clause.substr(0, arrow), name_off);
      auto idx = basis.index_of(name);
      if (!idx) throw ParseError(name_off, "unknown generator '" + std::string(name) + "'");
      if (assigned[*idx]) throw ParseError(name_off, "generator assigned twice");
      assigned[*idx] = true;
      std::size_t word_off = clause_off + arrow + 2;
      try {
        img[*idx] = parse_word(basis, clause.substr(arrow + 2));
      } catch (const ParseError& e) {
        throw ParseError(word_off + e.position(), e.detail());
      }
    }
    if (end == body.size()) break;
    start = end + 1;
  }
  return img;
}

}  // namespace

Automorphism parse_automorphism(const Basis& basis, std::string_view text,
                                std::size_t inverse_search_length) {
  std::size_t bar = text.find('|');
  auto images = parse_map(basis, text.substr(0, bar), 0);
  if (bar != std::string_view::npos) {
    auto witness = parse_map(basis, text.substr(bar + 1), bar + 1);
    return make_automorphism(std::move(images), std::move(witness));
  }
  auto found = complete_with_inverse(images, inverse_search_length);
  if (!found) {
    throw ParseError(0, "no inverse witness found within length " +
                            std::to_string(inverse_search_length) + "; supply one after '|'");
  }
  return *found;
}

}  // namespace fgaut
