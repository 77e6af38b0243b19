#include "fgaut/expression.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <optional>
#include <string>

namespace fgaut {

std::size_t infer_rank(std::string_view text) {
  std::size_t rank = 2;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool starts = i == 0 || !(std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_');
    if (!starts || text[i] != 'x') continue;
    std::size_t j = i + 1, n = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) n = n * 10 + (text[j++] - '0');
    if (j > i + 1 && n > 0) rank = std::max(rank, n + 2);
  }
  return rank;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

template <class T>
class Parser {
public:
  struct Ops {
    std::function<T(std::string_view group, std::size_t offset)> group_literal;  // "(...)" text
    std::function<bool(std::string_view inner)> is_literal;
    std::function<std::optional<T>(std::string_view name, std::size_t offset)> bare;  // name token
    std::function<T(const T&, const T&)> mul;
    std::function<T(const T&, int)> pow;
    bool juxtaposition;
  };

  Parser(std::string_view text, std::size_t base, const Ops& ops) : text_(text), base_(base), ops_(ops) {}

  T parse_all() {
    T v = expr();
    ws();
    if (pos_ != text_.size()) error(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void error(std::size_t at, const std::string& msg) const { throw ParseError(base_ + at, msg); }

  void ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  T expr() {
    T v = factor();
    while (true) {
      ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') return v;
      if (text_[pos_] == '*') {
        ++pos_;
      } else if (!ops_.juxtaposition) {
        error(pos_, "expected '*'");
      }
      v = ops_.mul(v, factor());
    }
  }

  T factor() {
    T v = atom();
    while (true) {
      ws();
      if (pos_ >= text_.size() || text_[pos_] != '^') return v;
      ++pos_;
      ws();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      int k = 0;
      std::string_view digits = text_.substr(start, pos_ - start);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec != std::errc{} || p != digits.data() + digits.size()) error(start, "expected integer exponent");
      v = ops_.pow(v, k);
    }
  }

  T atom() {
    ws();
    if (pos_ >= text_.size()) error(pos_, "unexpected end of expression");
    const std::size_t start = pos_;
    if (text_[pos_] == '(') {
      int depth = 0;
      std::size_t close = std::string_view::npos;
      for (std::size_t i = pos_; i < text_.size(); ++i) {
        if (text_[i] == '(') ++depth;
        if (text_[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      if (close == std::string_view::npos) error(start, "unbalanced '('");
      std::string_view inner = text_.substr(start + 1, close - start - 1);
      pos_ = close + 1;
      if (ops_.is_literal(inner)) return ops_.group_literal(text_.substr(start, close - start + 1), base_ + start);
      Parser sub(inner, base_ + start + 1, ops_);
      return sub.parse_all();
    }
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) error(start, "unexpected '" + std::string(1, text_[start]) + "'");
    auto v = ops_.bare(text_.substr(start, pos_ - start), base_ + start);
    if (!v) error(start, "unexpected token '" + std::string(text_.substr(start, pos_ - start)) + "'");
    return *v;
  }

  std::string_view text_;
  std::size_t base_;
  const Ops& ops_;
  std::size_t pos_ = 0;
};

// Whether `inner` holds `needle` outside nested parentheses.
bool top_level_contains(std::string_view inner, std::string_view needle) {
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    else if (inner[i] == ')') --depth;
    else if (depth == 0 && inner.substr(i, needle.size()) == needle) return true;
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

template <class F>
auto rebase(std::size_t offset, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(offset + e.position(), e.detail());
  }
}

}  // namespace

Word eval_word(const Basis& basis, std::string_view expr) {
  typename Parser<Word>::Ops ops{
      [](std::string_view, std::size_t) -> Word { throw std::logic_error("no word group literals"); },
      [](std::string_view) { return false; },
      [&basis](std::string_view name, std::size_t) -> std::optional<Word> {
        if (name == "1") return Word(basis);
        auto idx = basis.index_of(name);
        if (!idx) return std::nullopt;
        return Word::generator(basis, *idx);
      },
      [](const Word& u, const Word& v) { return u * v; },
      [](const Word& u, int k) { return power(u, k); },
      true,
  };
  if (trim(expr).empty()) return Word(basis);
  return Parser<Word>(expr, 0, ops).parse_all();
}

Automorphism eval_automorphism(const Basis& basis, std::string_view expr, std::size_t inverse_search_length) {
  auto literal = [&](std::string_view text, std::size_t offset) {
    return rebase(offset, [&] { return parse_automorphism(basis, text, inverse_search_length); });
  };
  std::string_view t = trim(expr);
  if (t.empty() || t.front() != '(') return parse_automorphism(basis, expr, inverse_search_length);
  typename Parser<Automorphism>::Ops ops{
      [&](std::string_view group, std::size_t offset) {
        return literal(group.substr(1, group.size() - 2), offset + 1);
      },
      [](std::string_view inner) { return top_level_contains(inner, "->") || trim(inner) == "1"; },
      [&basis](std::string_view name, std::size_t) -> std::optional<Automorphism> {
        if (name == "1") return Automorphism::identity(basis);
        return std::nullopt;
      },
      [](const Automorphism& f, const Automorphism& g) { return f * g; },
      [](const Automorphism& f, int k) { return power(f, k); },
      false,
  };
  return Parser<Automorphism>(expr, 0, ops).parse_all();
}

MkElement eval_mk(const Basis& a, std::string_view expr, std::size_t inverse_search_length) {
  typename Parser<MkElement>::Ops ops{
      [&](std::string_view group, std::size_t offset) {
        return rebase(offset, [&] { return parse_mk(a, group, inverse_search_length); });
      },
      [](std::string_view inner) { return top_level_contains(inner, ";"); },
      [](std::string_view, std::size_t) -> std::optional<MkElement> { return std::nullopt; },
      [](const MkElement& x, const MkElement& y) {
        if (x.arity() != y.arity()) throw DomainError("M_k arity mismatch");
        return x * y;
      },
      [](const MkElement& x, int k) { return mk_power(x, k); },
      false,
  };
  return Parser<MkElement>(expr, 0, ops).parse_all();
}

}  // namespace fgaut
