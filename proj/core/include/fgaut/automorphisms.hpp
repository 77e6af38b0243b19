#pragma once

// Elements of Aut(F_N) as basis-image maps carrying an inverse witness.

#include "fgaut/errors.hpp"
#include "fgaut/words.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgaut {

/// The image and witness maps do not compose to the identity on `letter()`.
class RoundTripFailure : public Error {
public:
  RoundTripFailure(std::size_t letter, const std::string& name)
      : Error("inverse witness round trip fails on basis letter " + name), letter_(letter) {}
  std::size_t letter() const noexcept { return letter_; }

private:
  std::size_t letter_;
};

/// Square integer matrix, optionally reduced modulo `modulus`.
class IntMatrix {
public:
  IntMatrix(std::size_t side, std::vector<long> row_major, std::optional<long> modulus = {});
  static IntMatrix identity(std::size_t side, std::optional<long> modulus = {});

  std::size_t side() const noexcept { return side_; }
  long at(std::size_t row, std::size_t col) const { return entries_[row * side_ + col]; }
  std::optional<long> modulus() const noexcept { return modulus_; }

  long trace() const;
  long determinant() const;
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

private:
  void normalize();

  std::size_t side_;
  std::vector<long> entries_;
  std::optional<long> modulus_;
};

class Automorphism {
public:
  /// Validates both round trips; throws RoundTripFailure naming the first bad letter.
  Automorphism(std::vector<Word> images, std::vector<Word> inverse_images);

  static Automorphism identity(const Basis& basis);

  const Basis& basis() const noexcept { return basis_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const std::vector<Word>& inverse_images() const noexcept { return inverse_images_; }
  const Word& image(std::size_t letter) const { return images_.at(letter); }

  Word apply(const Word& w) const;
  Word operator()(const Word& w) const { return apply(w); }

  Automorphism inverse() const;
  bool is_identity() const;

  /// Composition phi * psi applies psi first.
  friend Automorphism operator*(const Automorphism& phi, const Automorphism& psi);

  friend bool operator==(const Automorphism& a, const Automorphism& b) noexcept {
    return a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const Automorphism& a, const Automorphism& b) noexcept;

  /// `a1 -> a1 a2; a2 -> a2`, every letter listed.
  std::string to_string() const;
  /// Only letters that move; `1` for the identity.
  std::string to_compact_string() const;

private:
  struct Trusted {};
  Automorphism(Basis basis, std::vector<Word> images, std::vector<Word> inverse_images, Trusted);

  Basis basis_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

Automorphism make_automorphism(std::vector<Word> images, std::vector<Word> inverse_images);

Word apply(const Automorphism& phi, const Word& w);
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
Automorphism inverse(const Automorphism& phi);
Automorphism power(const Automorphism& phi, int exponent);
/// ad_g : w -> g w g^-1
Automorphism inner(const Word& g);
bool commute(const Automorphism& phi, const Automorphism& psi);

/// The unique x with phi = ad_x, when phi is inner. Requires rank >= 2.
std::optional<Word> inner_conjugator(const Automorphism& phi);

/// Entry (r, c) is the exponent sum of letter r in the image of letter c.
IntMatrix abelianization_matrix(const Automorphism& phi, std::optional<long> modulus = {});
bool is_in_ia3(const Automorphism& phi);

/// Reduced words of length <= max_length fixed by phi, in enumeration order.
std::vector<Word> fixed_words(const Automorphism& phi, std::size_t max_length);

/// Brute-force subgroup ball: every product of at most `max_factors` generators and
/// inverses, keeping the reduced results of length <= max_length. Sorted, unique.
///
/// For a Nielsen-reduced generating set (such as {a1 a2 a1^-1, a2}) every element of
/// length <= L is a product of at most L generators, so max_factors = 2L is ample.
std::vector<Word> subgroup_ball(std::span<const Word> generators, std::size_t max_length,
                                std::size_t max_factors);

/// Bounded search for an inverse witness: each basis letter must be the image of a word
/// of length <= max_length.
std::optional<Automorphism> complete_with_inverse(std::vector<Word> images,
                                                  std::size_t max_length);

/// Standard generators. The distinguished factor A is spanned by basis positions 0, 1;
/// stable letter x_i (1-based) sits at position i + 1.
namespace generators {

/// a1 -> a1 a2, everything else fixed.
Automorphism nielsen_tau(const Basis& basis);
/// x_i -> w x_i with w in A.
Automorphism left_transvection(const Basis& basis, std::size_t stable, const Word& w);
/// x_i -> x_i w with w in A.
Automorphism right_transvection(const Basis& basis, std::size_t stable, const Word& w);
/// x_i -> x_{perm[i-1]} with perm a 1-based permutation of the stable letters.
Automorphism petal_permutation(const Basis& basis, std::span<const std::size_t> perm);
/// x_i -> x_i^-1.
Automorphism petal_inversion(const Basis& basis, std::size_t stable);

std::size_t stable_count(const Basis& basis);
std::size_t stable_position(const Basis& basis, std::size_t stable);
Factor vertex_factor(const Basis& basis);

}  // namespace generators

/// Parses `a1 -> a1 a2; a2 -> a2 [| a1 -> a1 a2^-1]`. Unlisted letters are fixed. Without
/// a witness after `|` the inverse is searched up to `inverse_search_length`.
Automorphism parse_automorphism(const Basis& basis, std::string_view text,
                                std::size_t inverse_search_length = 6);

}  // namespace fgaut
