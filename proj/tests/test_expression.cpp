#include "fgaut/expression.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace fgaut;
using th::aut;
using th::f2;
using th::w;

TEST_CASE("rank inference") {
  CHECK(infer_rank("a1 a2") == 2);
  CHECK(infer_rank("a1") == 2);
  CHECK(infer_rank("x1 a1") == 3);
  CHECK(infer_rank("(x3 -> x3 a1) * (x1 -> x1^-1)") == 5);
}

TEST_CASE("word expressions") {
  CHECK(eval_word(f2(), "a1 a1^-1").is_identity());
  CHECK(eval_word(f2(), "a1 (a2 a1)^-1") == w(f2(), "a2^-1"));
  CHECK(eval_word(f2(), "a2 (a1 a2)^-1") == w(f2(), "a2 a2^-1 a1^-1") );
  CHECK(eval_word(f2(), "(a1 a2)^2 * a2^-1") == w(f2(), "a1 a2 a1"));
  CHECK(eval_word(f2(), "((a1))") == w(f2(), "a1"));
  CHECK_THROWS_AS((void)eval_word(f2(), "(a1"), ParseError);
  CHECK_THROWS_AS((void)eval_word(f2(), "a1 *"), ParseError);
}

TEST_CASE("automorphism expressions") {
  const auto tau = generators::nielsen_tau(f2());
  CHECK(eval_automorphism(f2(), "a1 -> a1 a2") == tau);
  CHECK(eval_automorphism(f2(), "(a1 -> a1 a2) * (a1 -> a1 a2)").to_string() == "a1 -> a1 a2 a2; a2 -> a2");
  CHECK(eval_automorphism(f2(), "(a1 -> a1 a2) * (a1 -> a1 a2)^-1").is_identity());
  CHECK(eval_automorphism(f2(), "(a1 -> a1 a2)^3") == power(tau, 3));
  CHECK(eval_automorphism(f2(), "((a1 -> a2; a2 -> a1) * (a1 -> a1 a2))^2") ==
        power(aut(f2(), "a1 -> a2; a2 -> a1") * tau, 2));
  CHECK(eval_automorphism(f2(), "(1)").is_identity());
  try {
    (void)eval_automorphism(f2(), "(a1 -> a1 a2) * (a1 -> q9)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 17);
  }
}

TEST_CASE("M_k expressions") {
  const auto x = eval_mk(f2(), "(a1 ; a1 -> a1 a2) * (a2 ; 1)");
  CHECK(x.to_string() == "(a1 a2 ; a1 -> a1 a2)");
  const auto y = eval_mk(f2(), "(a1 | a2 ; a1 -> a1 a2)^-1 * (a1 | a2 ; a1 -> a1 a2)");
  CHECK(y == mk_identity(f2(), 2));
  CHECK(eval_mk(f2(), "(a1 ; 1)^2") == MkElement({w(f2(), "a1 a1")}, Automorphism::identity(f2())));
  CHECK_THROWS_AS((void)eval_mk(f2(), "(a1 ; 1) * (a1 | a2 ; 1)"), DomainError);
}
