#include "suites.hpp"

#include <set>

namespace fgaut::verify::detail {

namespace {

bool is_reduced(std::span<const Letter> ls) {
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i] == ls[i - 1].inverse()) return false;
  }
  return true;
}

// Rewriting oracle: delete the leftmost cancelling pair until none is left.
std::vector<Letter> naive_reduce(std::vector<Letter> ls) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < ls.size(); ++i) {
      if (ls[i] == ls[i - 1].inverse()) {
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i - 1), ls.begin() + static_cast<std::ptrdiff_t>(i + 1));
        changed = true;
        break;
      }
    }
  }
  return ls;
}

std::string show_letters(const Basis& b, std::span<const Letter> ls) {
  std::string s;
  for (auto l : ls) {
    if (!s.empty()) s += ' ';
    s += b.name(l.index) + (l.sign < 0 ? "^-1" : "");
  }
  return s.empty() ? "1" : s;
}

Outcome reduce_suite(const SuiteParams& p, Rng&) {
  const Basis b = Basis::standard(p.rank.value_or(3));
  const std::size_t max_len = p.length.value_or(8);
  const std::size_t alphabet = 2 * b.rank();
  Outcome o;
  for (std::size_t len = 0; len <= max_len && !o.failed(); ++len) {
    std::vector<std::size_t> idx(len, 0);
    std::vector<Letter> seq(len);
    while (true) {
      for (std::size_t i = 0; i < len; ++i) {
        seq[i] = Letter{static_cast<std::uint32_t>(idx[i] / 2), static_cast<std::int8_t>(idx[i] % 2 ? -1 : 1)};
      }
      ++o.samples;
      Word w = reduce(b, seq);
      auto ls = w.letters();
      if (!is_reduced(ls)) o.fail("unreduced output for " + show_letters(b, seq));
      else if (reduce(b, ls) != w) o.fail("reduce not idempotent on " + show_letters(b, seq));
      else if (naive_reduce(seq) != std::vector<Letter>(ls.begin(), ls.end())) {
        o.fail("reduce disagrees with rewriting on " + show_letters(b, seq));
      }
      if (o.failed()) break;
      std::size_t pos = 0;
      while (pos < len && ++idx[pos] == alphabet) idx[pos++] = 0;
      if (pos == len) break;
    }
  }
  return o;
}

Outcome axioms_suite(const SuiteParams& p, Rng& rng) {
  const Basis b = Basis::standard(p.rank.value_or(3));
  const std::size_t len = p.length.value_or(8);
  const Factor a = Factor::range(b.rank(), 0, std::min<std::size_t>(2, b.rank()));
  const Word e(b);
  Outcome o;
  for (std::size_t i = 0; i < 1000 && !o.failed(); ++i) {
    Word u = random_word(rng, b, len), v = random_word(rng, b, len), w = random_word(rng, b, len);
    ++o.samples;
    const std::string ctx = "u=" + u.to_string() + " v=" + v.to_string() + " w=" + w.to_string();
    if ((u * v) * w != u * (v * w)) o.fail("associativity: " + ctx);
    else if (u.inverse().inverse() != u) o.fail("double inverse: " + ctx);
    else if (!(u * u.inverse()).is_identity() || !(u.inverse() * u).is_identity()) o.fail("inverse: " + ctx);
    else if (e * u != u || u * e != u) o.fail("identity: " + ctx);
    else if ((u * v).length() > u.length() + v.length()) o.fail("length bound: " + ctx);
    if (o.failed()) break;
    auto suf = strip_suffix(u, a);
    if (suf.remainder * suf.suffix != u || !in_factor(suf.suffix, a) ||
        (!suf.remainder.is_identity() && a.contains(suf.remainder.back().index))) {
      o.fail("strip_suffix: " + ctx);
    }
    auto pre = strip_prefix(u, a);
    if (pre.prefix * pre.remainder != u || !in_factor(pre.prefix, a) ||
        (!pre.remainder.is_identity() && a.contains(pre.remainder.front().index))) {
      o.fail("strip_prefix: " + ctx);
    }
  }
  return o;
}

Outcome ball_suite(const SuiteParams& p, Rng&) {
  Outcome o;
  std::vector<std::size_t> ranks = p.rank ? std::vector<std::size_t>{*p.rank} : std::vector<std::size_t>{2, 3, 4};
  const std::size_t max_len = p.length.value_or(4);
  for (auto n : ranks) {
    const Basis b = Basis::standard(n);
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::size_t expected = 1, term = 2 * n;
      for (std::size_t l = 1; l <= len; ++l, term *= 2 * n - 1) expected += term;
      auto ball = enumerate_ball(b, len);
      ++o.samples;
      const std::string ctx = "N=" + std::to_string(n) + " L=" + std::to_string(len);
      if (ball.size() != expected) {
        o.fail(ctx + ": " + std::to_string(ball.size()) + " words, expected " + std::to_string(expected));
        return o;
      }
      for (std::size_t i = 0; i < ball.size(); ++i) {
        if (!is_reduced(ball[i].letters()) || ball[i].length() > len) o.fail(ctx + ": bad word " + ball[i].to_string());
        if (i > 0 && !(ball[i - 1] < ball[i])) o.fail(ctx + ": order broken at " + ball[i].to_string());
        if (o.failed()) return o;
      }
    }
  }
  return o;
}

}  // namespace

void add_word_suites(std::vector<Suite>& out) {
  out.push_back({"words.reduce", "free reduction is idempotent", reduce_suite});
  out.push_back({"words.axioms", "free group axioms", axioms_suite});
  out.push_back({"words.ball", "ball count 1 + sum 2N(2N-1)^(l-1)", ball_suite});
}

}  // namespace fgaut::verify::detail
