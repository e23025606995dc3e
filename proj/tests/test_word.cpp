#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tklwb/errors.hpp"
#include "tklwb/word.hpp"

using namespace tklwb;

namespace {

const CoxeterSpec kId3(3);
const CoxeterSpec kSwap2 = parse_spec(2, "(a b)");
const CoxeterSpec kSwap3 = parse_spec(3, "(a b)");

Word W(const CoxeterSpec& spec, const char* text) { return parse_word(spec, text); }
Word W(const char* text) { return parse_word(kId3, text); }

std::string S(const Word& w) { return to_string(w); }

}  // namespace

TEST_CASE("reduce cancels adjacent pairs") {
  CHECK(S(W("abba")) == "e");
  CHECK(S(W("aba")) == "aba");
  CHECK(S(W("abbac")) == "c");
  CHECK(W("1").is_identity());
  CHECK_THROWS_AS(W("abd"), Error);
  try {
    reduce(kId3, {0, 5});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_generator);
  }
}

TEST_CASE("multiply, inverse, star, dagger") {
  CHECK(S(multiply(W("ab"), W("ba"))) == "e");
  CHECK(S(multiply(W("ab"), W("ab"))) == "abab");
  CHECK(S(multiply(W("aba"), W("ac"))) == "abc");
  CHECK(S(inverse(W("abc"))) == "cba");
  CHECK(S(star(kSwap2, W(kSwap2, "ab"))) == "ba");
  CHECK(S(dagger(kId3, W("ab"))) == "ba");
}

TEST_CASE("descents") {
  const auto d = descents(W("abc"));
  CHECK(*d.left == 0);
  CHECK(*d.right == 2);
  CHECK_FALSE(descents(Word()).left.has_value());
  CHECK_FALSE(descents(Word()).right.has_value());
}

TEST_CASE("Bruhat order") {
  CHECK(bruhat_leq(W("ba"), W("aba")));
  CHECK_FALSE(bruhat_leq(W("bab"), W("aba")));
  CHECK(bruhat_leq(W("abc"), W("abc")));
  CHECK(bruhat_interval(W("aba")).size() == 6);
}

TEST_CASE("twist and expressions") {
  CHECK(S(twist(kId3, 0, Word())) == "a");
  CHECK(S(twist(kSwap2, 0, Word())) == "ab");
  CHECK(S(twist(kId3, 0, W("aba"))) == "b");
  CHECK(S(twist_word(kId3, W("ab"), Word())) == "aba");
  CHECK(twist_word(kId3, Word(), W("aba")) == W("aba"));
  CHECK(twist_word(kId3, W("aa"), W("aba")) == W("aba"));

  CHECK(istar_expression(kId3, Word()).empty());
  CHECK(istar_expression(kId3, W("aba")) == std::string{0, 1});
  CHECK(istar_expression(kSwap2, W(kSwap2, "ab")) == std::string{0});
  CHECK(rho(kId3, W("aba")) == 2);
  CHECK(ell_star(kId3, W("aba")) == 1);
  CHECK(rho(kSwap2, W(kSwap2, "ab")) == 1);
  CHECK(ell_star(kSwap2, W(kSwap2, "ab")) == 0);

  CHECK(bruhat_leq_twisted(kId3, Word(), W("aba")));
  CHECK(bruhat_leq_twisted(kId3, W("b"), W("aba")));
  CHECK_FALSE(bruhat_leq_twisted(kId3, W("a"), W("b")));
  CHECK_THROWS_AS(require_twisted(kId3, W("ab")), Error);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_words(kId3, 1).size() == 4);
  const auto two = enumerate_words(CoxeterSpec(2), 2);
  REQUIRE(two.size() == 5);
  CHECK(S(two[3]) == "ab");
  CHECK(S(two[4]) == "ba");
  for (int n = 2; n <= 4; ++n) {
    const auto words = enumerate_words(CoxeterSpec(n), 4);
    std::size_t expected = 1, level = n;
    for (int len = 1; len <= 4; ++len, level *= n - 1) expected += level;
    CHECK(words.size() == expected);
  }
  const auto inv = enumerate_involutions(kSwap2, 1);
  REQUIRE(inv.size() == 3);
  CHECK(S(inv[1]) == "ab");
  CHECK(S(inv[2]) == "ba");
  CHECK_THROWS_AS(enumerate_words(kId3, 10, 100), Error);
}

TEST_CASE("star literals") {
  CHECK(star_literal(kSwap3) == "(a b)");
  CHECK(star_literal(kId3) == "id");
  CHECK(parse_spec(4, "(a b)(c d)").star_fixed_point_free());
  CHECK_THROWS_AS(parse_spec(3, "(a b)(b c)"), Error);
  CHECK_THROWS_AS(parse_spec(2, "(a c)"), Error);
}

TEST_CASE("group laws on random words") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 8), gen(0, 2);
  auto random_word = [&] {
    std::vector<Generator> letters(len(rng));
    for (auto& g : letters) g = static_cast<Generator>(gen(rng));
    return reduce(kSwap3, letters);
  };
  for (int i = 0; i < 500; ++i) {
    const Word u = random_word(), v = random_word(), w = random_word();
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, inverse(u)).is_identity());
    CHECK(star(kSwap3, multiply(u, v)) == multiply(star(kSwap3, u), star(kSwap3, v)));
    CHECK(dagger(kSwap3, multiply(u, v)) == multiply(dagger(kSwap3, v), dagger(kSwap3, u)));
    CHECK((multiply(u, v).length() + u.length() + v.length()) % 2 == 0);
  }
}

TEST_CASE("twisted involution invariants") {
  for (const CoxeterSpec& spec : {kId3, kSwap2, kSwap3, parse_spec(4, "(a b)(c d)")}) {
    const auto inv = enumerate_involutions(spec, 4);
    for (const Word& w : inv) {
      CHECK(is_twisted_involution(spec, w));
      CHECK(2 * rho(spec, w) == static_cast<int>(w.length()) + ell_star(spec, w));
      CHECK(twist_sequence(spec, istar_expression(spec, w), Word()) == w);
      for (int s = 0; s < spec.gen_count(); ++s) {
        const auto g = static_cast<Generator>(s);
        const Word t = twist(spec, g, w);
        CHECK(t != w);
        CHECK(twist(spec, g, t) == w);
        const bool down = has_left_descent(w, g);
        CHECK((rho(spec, t) == rho(spec, w) - 1) == down);
      }
      for (const Word& y : inv) CHECK(bruhat_leq_twisted(spec, y, w) == bruhat_leq(y, w));
    }
  }
}
