#pragma once

// Reduced words over a ranked free-group basis.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgaut {

/// A letter is a basis position together with an exponent sign.
struct Letter {
  std::uint32_t index = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const noexcept { return {index, static_cast<std::int8_t>(-sign)}; }

  /// Position in the enumeration order: a1 < a1^-1 < a2 < a2^-1 < ...
  constexpr std::uint32_t order_key() const noexcept { return 2 * index + (sign < 0 ? 1u : 0u); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    return a.order_key() <=> b.order_key();
  }
};

/// Ordered list of distinct generator names. Cheap to copy; equality compares names.
///
/// By convention the first two names generate the distinguished free factor A.
class Basis {
public:
  explicit Basis(std::vector<std::string> names);

  /// a1, a2, x1, ..., x_{rank-2}. Ranks 1 and 2 give a1 and a1, a2.
  static Basis standard(std::size_t rank);

  std::size_t rank() const noexcept { return names_->size(); }
  const std::string& name(std::size_t index) const { return (*names_)[index]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// The sub-basis on the given positions, in order.
  Basis restrict(std::span<const std::size_t> indices) const;

  friend bool operator==(const Basis& a, const Basis& b) noexcept {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// A set of basis positions; the standard free factor it generates.
class Factor {
public:
  Factor() = default;
  Factor(std::size_t rank, std::span<const std::size_t> indices);
  static Factor range(std::size_t rank, std::size_t begin, std::size_t end);

  bool contains(std::uint32_t index) const noexcept {
    return index < mask_.size() && mask_[index];
  }
  std::size_t rank() const noexcept { return mask_.size(); }
  std::vector<std::size_t> indices() const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  Factor united(const Factor& other) const;
  Factor with(std::size_t index) const;

  friend bool operator==(const Factor&, const Factor&) = default;

private:
  std::vector<bool> mask_;
};

/// Immutable, freely reduced word. The empty word is the identity.
class Word {
public:
  explicit Word(Basis basis) : basis_(std::move(basis)) {}
  /// Freely reduces `raw`.
  Word(Basis basis, std::span<const Letter> raw);
  Word(Basis basis, std::initializer_list<Letter> raw)
      : Word(std::move(basis), std::span<const Letter>(raw.begin(), raw.size())) {}

  static Word generator(const Basis& basis, std::size_t index, int sign = 1);

  const Basis& basis() const noexcept { return basis_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  /// Letters [begin, end); a factor of a reduced word is reduced.
  Word slice(std::size_t begin, std::size_t end) const;

  std::string to_string() const;

  friend Word operator*(const Word& u, const Word& v);

  friend bool operator==(const Word& u, const Word& v) noexcept {
    return u.letters_ == v.letters_ && u.basis_ == v.basis_;
  }
  /// Length-lexicographic, letters compared by Letter::order_key.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept;

private:
  struct Trusted {};
  Word(Basis basis, std::vector<Letter> reduced, Trusted)
      : basis_(std::move(basis)), letters_(std::move(reduced)) {}

  Basis basis_;
  std::vector<Letter> letters_;
};

Word reduce(const Basis& basis, std::span<const Letter> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// g u g^-1
Word conjugate(const Word& u, const Word& g);
Word power(const Word& u, int exponent);

bool in_factor(const Word& u, const Factor& factor);

/// u = prefix * remainder, prefix the longest prefix with all letters in the factor.
struct PrefixSplit {
  Word prefix;
  Word remainder;
};
/// u = remainder * suffix, suffix the longest suffix with all letters in the factor.
struct SuffixSplit {
  Word remainder;
  Word suffix;
};
PrefixSplit strip_prefix(const Word& u, const Factor& factor);
SuffixSplit strip_suffix(const Word& u, const Factor& factor);

/// Visits every reduced word of length <= max_length once, shortest first and
/// lexicographically by Letter::order_key within a length.
void for_each_in_ball(const Basis& basis, std::size_t max_length,
                      const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_ball(const Basis& basis, std::size_t max_length);

/// Parses `a1 a2^-1 x1`; `1` or blank is the identity.
Word parse_word(const Basis& basis, std::string_view text);

/// Exponent sum of each basis letter.
std::vector<long> exponent_sums(const Word& u);

}  // namespace fgaut

template <>
struct std::hash<fgaut::Word> {
  std::size_t operator()(const fgaut::Word& w) const noexcept;
};
