#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tklwb/errors.hpp"
#include "tklwb/positivity.hpp"

using namespace tklwb;

namespace {

const CoxeterSpec kId3(3);
const CoxeterSpec kSwap2 = parse_spec(2, "(a b)");
const CoxeterSpec kSwap3 = parse_spec(3, "(a b)");

Word W(const CoxeterSpec& spec, const char* text) { return parse_word(spec, text); }
LaurentPoly P(const char* text) { return parse_laurent(text); }

}  // namespace

TEST_CASE("p plus minus") {
  KLTable kl(kId3);
  TKLTable tkl(kId3);
  const PlusMinusPair same = p_plus_minus(W(kId3, "aba"), W(kId3, "aba"), kl, tkl);
  CHECK(same.plus == P("1"));
  CHECK(same.minus.is_zero());
  const PlusMinusPair gen = p_plus_minus(Word(), W(kId3, "a"), kl, tkl);
  CHECK(gen.plus == P("1"));
  CHECK(gen.minus.is_zero());
  for (const Word& w : enumerate_involutions(kSwap3, 3))
    for (const Word& y : twisted_interval(kSwap3, w)) {
      KLTable k(kSwap3);
      TKLTable t(kSwap3);
      const PlusMinusPair pm = p_plus_minus(y, w, k, t);
      CHECK(pm.plus + pm.minus == k.p(y, w).laurent());
      CHECK(pm.plus - pm.minus == t.p(y, w).laurent());
    }
  CHECK_THROWS_AS(p_plus_minus(W(kSwap2, "a"), W(kSwap2, "ab"), kl, tkl), Error);
}

TEST_CASE("h plus minus") {
  KLTable kl(kId3);
  const auto e = h_plus_minus(Word(), W(kId3, "aba"), kl);
  REQUIRE(e.size() == 1);
  CHECK(e[0].first == W(kId3, "aba"));
  CHECK(e[0].second.plus == P("1"));
  CHECK(e[0].second.minus.is_zero());
  const auto a = h_plus_minus(W(kId3, "a"), Word(), kl);
  REQUIRE(a.size() == 1);
  CHECK(a[0].first == W(kId3, "a"));
  CHECK(a[0].second.plus == P("v^-1+v"));
  CHECK(a[0].second.minus.is_zero());
}

TEST_CASE("every check passes on small bounds, serial and parallel agree") {
  const Bounds small{3, 3, kDefaultElementCap};
  for (const CoxeterSpec& spec : {kId3, kSwap3, kSwap2}) {
    for (const std::string& check : check_ids()) {
      if (check == "regular-embedding" && !spec.star_fixed_point_free()) {
        CHECK_THROWS_AS(verify(check, spec, small), Error);
        continue;
      }
      const SweepReport serial = verify(check, spec, small, 1);
      const SweepReport parallel = verify(check, spec, small, 4);
      CHECK_MESSAGE(serial.passed(), check << " " << star_literal(spec) << " " << to_json(serial, false).dump());
      CHECK(serial.tuples_checked > 0);
      CHECK(to_json(serial, false) == to_json(parallel, false));
    }
  }
}

TEST_CASE("report json layout") {
  const SweepReport r = verify("rho-grading", kSwap2, Bounds{2, 2, kDefaultElementCap});
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"spec", "bounds", "check", "tuples_checked", "violations", "notes", "elapsed_ms"});
  CHECK(j["spec"]["star"] == "(a b)");
  CHECK(j["violations"].empty());
}

TEST_CASE("unknown check and cap") {
  CHECK_THROWS_AS(verify("nope", kId3, Bounds{}), Error);
  try {
    (void)verify("a", kId3, Bounds{4, 12, 100});
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource_limit);
  }
}
