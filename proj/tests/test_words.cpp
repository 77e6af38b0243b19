#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace fgaut;
using th::w;

namespace {

const Basis b3 = Basis::standard(3);
const Factor A3 = Factor::range(3, 0, 2);

std::size_t ball_count_formula(std::size_t n, std::size_t len) {
  std::size_t total = 1, term = 2 * n;
  for (std::size_t l = 1; l <= len; ++l, term *= 2 * n - 1) total += term;
  return total;
}

}  // namespace

TEST_CASE("standard basis names") {
  CHECK(Basis::standard(2).names() == std::vector<std::string>{"a1", "a2"});
  CHECK(Basis::standard(4).names() == std::vector<std::string>{"a1", "a2", "x1", "x2"});
  CHECK_THROWS_AS(Basis({"a", "a"}), Error);
}

TEST_CASE("reduce examples") {
  const Letter a1{0, 1}, a1i{0, -1}, a2{1, 1}, a2i{1, -1}, x1{2, 1};
  CHECK(reduce(b3, std::vector<Letter>{a1, a1i}).is_identity());
  CHECK(reduce(b3, std::vector<Letter>{a1, a2, a2i, a1}) == w(b3, "a1 a1"));
  CHECK(reduce(b3, std::vector<Letter>{a1, x1, a2}).to_string() == "a1 x1 a2");
}

TEST_CASE("multiply examples") {
  CHECK(multiply(w(b3, "a1"), w(b3, "a1^-1")).is_identity());
  CHECK(multiply(w(b3, "x1 a1"), w(b3, "a1^-1 x1")) == w(b3, "x1 x1"));
  CHECK(multiply(Word(b3), w(b3, "a2 x1^-1")) == w(b3, "a2 x1^-1"));
  CHECK_THROWS_AS(multiply(w(b3, "a1"), w(Basis::standard(2), "a1")), BasisMismatch);
}

TEST_CASE("invert and conjugate examples") {
  CHECK(invert(w(b3, "a1 a2")).to_string() == "a2^-1 a1^-1");
  CHECK(conjugate(w(b3, "a2"), w(b3, "a1")).to_string() == "a1 a2 a1^-1");
  CHECK(conjugate(w(b3, "a1"), w(b3, "a1")) == w(b3, "a1"));
  CHECK(conjugate(w(b3, "a1 x1"), Word(b3)) == w(b3, "a1 x1"));
}

TEST_CASE("factor membership and stripping") {
  CHECK(in_factor(w(b3, "a1 a2^-1"), A3));
  CHECK_FALSE(in_factor(w(b3, "a1 x1"), A3));
  auto s = strip_suffix(w(b3, "x1 a1 a2"), A3);
  CHECK(s.remainder == w(b3, "x1"));
  CHECK(s.suffix == w(b3, "a1 a2"));
  s = strip_suffix(w(b3, "a1 x1"), A3);
  CHECK(s.remainder == w(b3, "a1 x1"));
  CHECK(s.suffix.is_identity());
  auto p = strip_prefix(w(b3, "a2 a1 x1 a1"), A3);
  CHECK(p.prefix == w(b3, "a2 a1"));
  CHECK(p.remainder == w(b3, "x1 a1"));
}

TEST_CASE("ball counts match the closed formula") {
  CHECK(enumerate_ball(Basis::standard(2), 0).size() == 1);
  CHECK(enumerate_ball(Basis::standard(2), 1).size() == 5);
  CHECK(enumerate_ball(Basis::standard(2), 2).size() == 17);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t len = 0; len <= 4; ++len) {
      auto ball = enumerate_ball(Basis::standard(n), len);
      CHECK(ball.size() == ball_count_formula(n, len));
      std::set<Word> distinct(ball.begin(), ball.end());
      CHECK(distinct.size() == ball.size());
    }
  }
}

TEST_CASE("ball order is shortlex with a1 < a1^-1 < a2") {
  auto ball = enumerate_ball(Basis::standard(2), 1);
  std::vector<std::string> names;
  for (const auto& x : ball) names.push_back(x.to_string());
  CHECK(names == std::vector<std::string>{"1", "a1", "a1^-1", "a2", "a2^-1"});
}

TEST_CASE("word parser") {
  CHECK(parse_word(b3, "1").is_identity());
  CHECK(parse_word(b3, "").is_identity());
  CHECK(parse_word(b3, "a1^2 a2^-1 x1") == w(b3, "a1 a1 a2^-1 x1"));
  CHECK(parse_word(b3, "a1 a1^-1").is_identity());
  try {
    (void)parse_word(b3, "a1 b7");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("power and exponent sums") {
  CHECK(power(w(b3, "a1 a2"), 2) == w(b3, "a1 a2 a1 a2"));
  CHECK(power(w(b3, "a1 a2"), -1) == w(b3, "a2^-1 a1^-1"));
  CHECK(power(w(b3, "a1"), 0).is_identity());
  CHECK(exponent_sums(w(b3, "a1 a2 a1^-1 x1 x1")) == std::vector<long>{0, 1, 2});
}

TEST_CASE("words are reduced at construction: random sequences") {
  // Rewriting oracle, independent of the library's stack reduction.
  std::uint64_t state = 12345;
  auto next = [&] { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Letter> seq;
    const int len = static_cast<int>(next() >> 60);
    for (int i = 0; i < len; ++i) {
      seq.push_back(Letter{static_cast<std::uint32_t>((next() >> 33) % 3), static_cast<std::int8_t>((next() >> 40) % 2 ? -1 : 1)});
    }
    std::vector<Letter> naive = seq;
    for (bool again = true; again;) {
      again = false;
      for (std::size_t i = 1; i < naive.size(); ++i) {
        if (naive[i] == naive[i - 1].inverse()) {
          naive.erase(naive.begin() + static_cast<long>(i) - 1, naive.begin() + static_cast<long>(i) + 1);
          again = true;
          break;
        }
      }
    }
    Word r = reduce(b3, seq);
    CHECK(std::vector<Letter>(r.letters().begin(), r.letters().end()) == naive);
  }
}
