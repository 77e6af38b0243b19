#include "fgaut/words.hpp"

#include "fgaut/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace fgaut {

Basis::Basis(std::vector<std::string> names) {
  if (names.empty()) throw DomainError("basis must have positive rank");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || n == "1") throw DomainError("invalid basis name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate basis name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Basis Basis::standard(std::size_t rank) {
  if (rank == 0) throw DomainError("basis must have positive rank");
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t i = 0; i < std::min<std::size_t>(rank, 2); ++i) {
    names.push_back("a" + std::to_string(i + 1));
  }
  for (std::size_t i = 2; i < rank; ++i) names.push_back("x" + std::to_string(i - 1));
  return Basis(std::move(names));
}

std::optional<std::size_t> Basis::index_of(std::string_view name) const {
  const auto& ns = *names_;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == name) return i;
  }
  return std::nullopt;
}

Basis Basis::restrict(std::span<const std::size_t> indices) const {
  std::vector<std::string> names;
  names.reserve(indices.size());
  for (auto i : indices) names.push_back(name(i));
  return Basis(std::move(names));
}

Factor::Factor(std::size_t rank, std::span<const std::size_t> indices) : mask_(rank, false) {
  for (auto i : indices) {
    if (i >= rank) throw DomainError("factor index out of range");
    mask_[i] = true;
  }
}

Factor Factor::range(std::size_t rank, std::size_t begin, std::size_t end) {
  Factor f;
  f.mask_.assign(rank, false);
  for (std::size_t i = begin; i < end && i < rank; ++i) f.mask_[i] = true;
  return f;
}

std::vector<std::size_t> Factor::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(i);
  }
  return out;
}

std::size_t Factor::size() const noexcept {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

Factor Factor::united(const Factor& other) const {
  Factor f = *this;
  if (other.mask_.size() > f.mask_.size()) f.mask_.resize(other.mask_.size(), false);
  for (std::size_t i = 0; i < other.mask_.size(); ++i) {
    if (other.mask_[i]) f.mask_[i] = true;
  }
  return f;
}

Factor Factor::with(std::size_t index) const {
  Factor f = *this;
  if (index >= f.mask_.size()) throw DomainError("factor index out of range");
  f.mask_[index] = true;
  return f;
}

namespace {

void append_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void require_same(const Basis& a, const Basis& b) {
  if (!(a == b)) throw BasisMismatch();
}

}  // namespace

Word::Word(Basis basis, std::span<const Letter> raw) : basis_(std::move(basis)) {
  letters_.reserve(raw.size());
  for (auto l : raw) {
    if (l.index >= basis_.rank() || (l.sign != 1 && l.sign != -1)) {
      throw DomainError("letter outside basis");
    }
    append_reduced(letters_, l);
  }
}

Word Word::generator(const Basis& basis, std::size_t index, int sign) {
  if (index >= basis.rank()) throw DomainError("generator index out of range");
  if (sign != 1 && sign != -1) throw DomainError("generator sign must be +1 or -1");
  return Word(basis, {Letter{static_cast<std::uint32_t>(index), static_cast<std::int8_t>(sign)}},
              Trusted{});
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(basis_, std::move(out), Trusted{});
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  end = std::min(end, letters_.size());
  begin = std::min(begin, end);
  return Word(basis_, std::vector<Letter>(letters_.begin() + begin, letters_.begin() + end),
              Trusted{});
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += basis_.name(letters_[i].index);
    if (letters_[i].sign < 0) out += "^-1";
  }
  return out;
}

Word operator*(const Word& u, const Word& v) {
  require_same(u.basis_, v.basis_);
  std::size_t cancel = 0;
  const auto& a = u.letters_;
  const auto& b = v.letters_;
  while (cancel < a.size() && cancel < b.size() &&
         a[a.size() - 1 - cancel] == b[cancel].inverse()) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
  return Word(u.basis_, std::move(out), Word::Trusted{});
}

std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept {
  if (auto c = u.letters_.size() <=> v.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < u.letters_.size(); ++i) {
    if (auto c = u.letters_[i] <=> v.letters_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Word reduce(const Basis& basis, std::span<const Letter> raw) { return Word(basis, raw); }

Word multiply(const Word& u, const Word& v) { return u * v; }

Word invert(const Word& u) { return u.inverse(); }

Word conjugate(const Word& u, const Word& g) { return g * u * g.inverse(); }

Word power(const Word& u, int exponent) {
  Word base = exponent < 0 ? u.inverse() : u;
  Word out(u.basis());
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = out * base;
  return out;
}

bool in_factor(const Word& u, const Factor& factor) {
  return std::all_of(u.letters().begin(), u.letters().end(),
                     [&](Letter l) { return factor.contains(l.index); });
}

PrefixSplit strip_prefix(const Word& u, const Factor& factor) {
  auto ls = u.letters();
  std::size_t n = 0;
  while (n < ls.size() && factor.contains(ls[n].index)) ++n;
  return {u.slice(0, n), u.slice(n, ls.size())};
}

SuffixSplit strip_suffix(const Word& u, const Factor& factor) {
  auto ls = u.letters();
  std::size_t n = ls.size();
  while (n > 0 && factor.contains(ls[n - 1].index)) --n;
  return {u.slice(0, n), u.slice(n, ls.size())};
}

namespace {

void extend(const Basis& basis, std::vector<Letter>& prefix, std::size_t target,
            const std::function<void(const Word&)>& visit) {
  if (prefix.size() == target) {
    visit(Word(basis, prefix));
    return;
  }
  for (std::uint32_t i = 0; i < basis.rank(); ++i) {
    for (std::int8_t s : {std::int8_t{1}, std::int8_t{-1}}) {
      Letter l{i, s};
      if (!prefix.empty() && prefix.back() == l.inverse()) continue;
      prefix.push_back(l);
      extend(basis, prefix, target, visit);
      prefix.pop_back();
    }
  }
}

}  // namespace

void for_each_in_ball(const Basis& basis, std::size_t max_length,
                      const std::function<void(const Word&)>& visit) {
  std::vector<Letter> prefix;
  prefix.reserve(max_length);
  for (std::size_t len = 0; len <= max_length; ++len) extend(basis, prefix, len, visit);
}

std::vector<Word> enumerate_ball(const Basis& basis, std::size_t max_length) {
  std::vector<Word> out;
  for_each_in_ball(basis, max_length, [&](const Word& w) { out.push_back(w); });
  return out;
}

Word parse_word(const Basis& basis, std::string_view text) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  bool saw_one = false;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    std::string_view token = text.substr(start, pos - start);
    if (token == "1") {
      saw_one = true;
      continue;
    }
    int sign = 1;
    std::string_view name = token;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view exp = token.substr(caret + 1);
      int value = 0;
      auto [p, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), value);
      if (ec != std::errc{} || p != exp.data() + exp.size() || value == 0) {
        throw ParseError(start + caret + 1, "bad exponent '" + std::string(exp) + "'");
      }
      auto idx = basis.index_of(name);
      if (!idx) throw ParseError(start, "unknown generator '" + std::string(name) + "'");
      Letter l{static_cast<std::uint32_t>(*idx), static_cast<std::int8_t>(value < 0 ? -1 : 1)};
      for (int k = 0; k < (value < 0 ? -value : value); ++k) raw.push_back(l);
      continue;
    }
    auto idx = basis.index_of(name);
    if (!idx) throw ParseError(start, "unknown generator '" + std::string(name) + "'");
    raw.push_back(Letter{static_cast<std::uint32_t>(*idx), static_cast<std::int8_t>(sign)});
  }
  if (saw_one && !raw.empty()) throw ParseError(0, "'1' cannot be combined with letters");
  return Word(basis, raw);
}

std::vector<long> exponent_sums(const Word& u) {
  std::vector<long> sums(u.basis().rank(), 0);
  for (auto l : u.letters()) sums[l.index] += l.sign;
  return sums;
}

}  // namespace fgaut

std::size_t std::hash<fgaut::Word>::operator()(const fgaut::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto l : w.letters()) {
    h ^= l.order_key() + 1;
    h *= 1099511628211ull;
  }
  return h;
}
