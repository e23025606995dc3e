#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tklwb/diff_recursion.hpp"
#include "tklwb/errors.hpp"
#include "tklwb/module.hpp"

using namespace tklwb;

namespace {

const CoxeterSpec kId3(3);
const CoxeterSpec kSwap3 = parse_spec(3, "(a b)");

Word W(const CoxeterSpec& spec, const char* text) { return parse_word(spec, text); }

const std::vector<CoxeterSpec>& specs() {
  static const std::vector<CoxeterSpec> all = {kId3, kSwap3, CoxeterSpec(2), CoxeterSpec(4), parse_spec(4, "(a b)"),
                                               parse_spec(4, "(a b)(c d)"), parse_spec(5, "(a b)(c d)")};
  return all;
}

}  // namespace

TEST_CASE("dihedral case is an order indicator") {
  const CoxeterSpec spec(2);
  CHECK(tkl_diff_recursive(W(spec, "e"), W(spec, "aba"), W(spec, "aba"), spec) == QPoly());
  const CoxeterSpec swap = parse_spec(2, "(a b)");
  CHECK(tkl_diff_recursive(W(swap, "e"), W(swap, "ab"), W(swap, "ba"), swap) == QPoly(LaurentPoly(1)));
}

TEST_CASE("setup normalizes left descents and picks the case") {
  const DiffSetup n = diff_setup(kId3, W(kId3, "a"), W(kId3, "aba"), W(kId3, "abcba"));
  CHECK(n.kind == DiffCase::fixed_pair);
  CHECK(n.y == W(kId3, "e"));
  CHECK(n.z == W(kId3, "b"));
  const DiffSetup d = diff_setup(kId3, W(kId3, "b"), W(kId3, "bcb"), W(kId3, "abcba"));
  CHECK(d.kind == DiffCase::generic);
  CHECK(d.k == 1);
  CHECK(d.a == W(kId3, "a"));
  CHECK(d.sws == W(kId3, "bcb"));
  const DiffSetup f = diff_setup(kId3, W(kId3, "e"), W(kId3, "b"), W(kId3, "abcba"));
  CHECK(f.kind == DiffCase::fixed_pair);
  CHECK(f.us.size() == 2);
  const DiffSetup m = diff_setup(kSwap3, W(kSwap3, "e"), W(kSwap3, "c"), W(kSwap3, "cbcac"));
  CHECK(m.kind == DiffCase::fixed_moving);
}

TEST_CASE("order violations are domain errors") {
  try {
    (void)tkl_diff_recursive(W(kId3, "aba"), W(kId3, "a"), W(kId3, "abcba"), kId3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
}

TEST_CASE("recursive twisted differences match the fast table") {
  for (const auto& spec : specs()) {
    KLTable kl(spec);
    TKLTable tkl(spec, Source::fast);
    DiffEngine engine(spec, kl);
    for (const Word& w : enumerate_involutions(spec, 4)) {
      const auto interval = twisted_interval(spec, w);
      for (const Word& y : interval)
        for (const Word& z : interval) {
          if (!bruhat_leq(y, z)) continue;
          const LaurentPoly expect = tkl.p(y, w).laurent() - tkl.p(z, w).laurent();
          const QPoly got = engine.twisted(y, z, w);
          CHECK_MESSAGE(got.laurent() == expect, to_string(y) << " " << to_string(z) << " " << to_string(w) << " gens=" << spec.gen_count() << " " << star_literal(spec));
        }
    }
  }
}

TEST_CASE("untwisted companion identity with starred z sequence") {
  for (const auto& spec : specs()) {
    KLTable kl(spec);
    DiffEngine engine(spec, kl);
    for (const Word& w : enumerate_involutions(spec, 4)) {
      const auto interval = twisted_interval(spec, w);
      for (const Word& y : interval)
        for (const Word& z : interval) {
          if (!bruhat_leq(y, z)) continue;
          CHECK_MESSAGE(engine.untwisted_rhs(y, z, w, true) == engine.untwisted_direct(y, z, w),
                        to_string(y) << " " << to_string(z) << " " << to_string(w) << " gens=" << spec.gen_count() << " " << star_literal(spec));
        }
    }
  }
}

TEST_CASE("unstarred z sequence agrees when the star is trivial") {
  KLTable kl(kId3);
  DiffEngine engine(kId3, kl);
  for (const Word& w : enumerate_involutions(kId3, 4))
    for (const Word& z : twisted_interval(kId3, w))
      CHECK(engine.untwisted_rhs(Word(), z, w, false) == engine.untwisted_rhs(Word(), z, w, true));
}
