#include "tklwb/positivity.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>

#include "tklwb/diff_recursion.hpp"
#include "tklwb/errors.hpp"

namespace tklwb {

PlusMinusPair p_plus_minus(const Word& y, const Word& w, KLTable& kl, TKLTable& tkl) {
  require_twisted(kl.spec(), y);
  require_twisted(kl.spec(), w);
  const LaurentPoly& p = kl.p(y, w).laurent();
  const LaurentPoly& ps = tkl.value(y, w).laurent();
  return {halve_sum(p, ps, +1), halve_sum(p, ps, -1)};
}

std::vector<std::pair<Word, PlusMinusPair>> h_plus_minus(const Word& x, const Word& y, KLTable& kl) {
  const CoxeterSpec& spec = kl.spec();
  require_twisted(spec, y);
  const KLVector untwisted = h_tilde(x, y, kl);
  const ModuleElt twisted = h_sigma(spec, x, y);
  std::map<Word, std::pair<LaurentPoly, LaurentPoly>> merged;
  for (const auto& [z, c] : untwisted)
    if (is_twisted_involution(spec, z)) merged[z].first = c;
  for (const auto& [z, c] : twisted) merged[z].second = c;
  std::vector<std::pair<Word, PlusMinusPair>> out;
  out.reserve(merged.size());
  for (const auto& [z, pair] : merged)
    out.emplace_back(z, PlusMinusPair{halve_sum(pair.first, pair.second, +1), halve_sum(pair.first, pair.second, -1)});
  return out;
}

namespace {

/// Private memo tables of one sweep worker.
struct Worker {
  explicit Worker(const CoxeterSpec& spec)
      : spec(spec), kl(spec), tkl(spec, Source::fast), tkl_oracle(spec, Source::oracle), diff(spec, kl) {}

  CoxeterSpec spec;
  KLTable kl;
  TKLTable tkl;
  TKLTable tkl_oracle;
  DiffEngine diff;
};

/// Outcome of one sweep item.
struct ItemResult {
  std::uint64_t tuples = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
};

/// One unit of work: a tag and the words that fix the outer loop indices.
struct Item {
  int tag = 0;
  std::vector<Word> words;
};

using ItemFn = std::function<void(Worker&, const Item&, ItemResult&)>;

struct Plan {
  std::vector<Item> items;
  ItemFn run;
};

class Recorder {
 public:
  Recorder(std::string check, ItemResult& out) : check_(std::move(check)), out_(out) {}

  void count(std::uint64_t n = 1) { out_.tuples += n; }
  void fail(std::vector<Word> witness, std::string detail) {
    out_.violations.push_back({check_, std::move(witness), std::move(detail)});
  }
  void require(bool ok, std::vector<Word> witness, const std::function<std::string()>& detail) {
    if (!ok) fail(std::move(witness), detail());
  }
  void note(std::string text) { out_.notes.push_back(std::move(text)); }

 private:
  std::string check_;
  ItemResult& out_;
};

std::vector<Item> single_items(const std::vector<Word>& words, int tag = 0) {
  std::vector<Item> items;
  items.reserve(words.size());
  for (const Word& w : words) items.push_back({tag, {w}});
  return items;
}

std::string poly_text(const LaurentPoly& p) { return to_string(p); }

std::string vector_text(const BasisVector& v) {
  std::string out;
  for (const auto& [w, c] : v) {
    if (!out.empty()) out += "; ";
    out += to_string(w) + " -> " + to_string(c);
  }
  return out.empty() ? "0" : out;
}

bool all_nonnegative(const BasisVector& v) {
  for (const auto& [w, c] : v)
    if (!is_nonnegative(c)) return false;
  return true;
}

/// Runs `fn` and records an Error of a listed kind as a violation.
void guarded(Recorder& rec, const std::vector<Word>& witness, const std::function<void()>& fn,
             std::initializer_list<ErrorKind> kinds) {
  try {
    fn();
  } catch (const Error& e) {
    for (ErrorKind k : kinds)
      if (e.kind() == k) {
        rec.fail(witness, std::string(to_string(e.kind())) + ": " + e.what());
        return;
      }
    throw;
  }
}

// ---- untwisted checks --------------------------------------------------------

Plan plan_a(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_words(spec, b.max_len, b.cap)), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            for (const Word& y : bruhat_interval(w)) {
              rec.count();
              const LaurentPoly& p = wk.kl.p(y, w).laurent();
              rec.require(is_nonnegative(p), {y, w}, [&] { return poly_text(p); });
            }
          }};
}

Plan plan_b(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_words(spec, b.max_len, b.cap)), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            const auto interval = bruhat_interval(w);
            for (const Word& y : interval)
              for (const Word& z : interval) {
                if (y == z || !bruhat_leq(y, z)) continue;
                rec.count();
                const LaurentPoly d = wk.kl.p(y, w).laurent() - wk.kl.p(z, w).laurent();
                rec.require(is_nonnegative(d), {y, z, w}, [&] { return poly_text(d); });
              }
          }};
}

Plan plan_c(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  const auto words = enumerate_words(spec, b.max_len, b.cap);
  return {single_items(words), [id, words](Worker&, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& x = it.words[0];
            for (const Word& y : words) {
              rec.count();
              const KLVector h = kl_product(x, y);
              rec.require(all_nonnegative(h), {x, y}, [&] { return vector_text(h); });
            }
          }};
}

// ---- twisted checks ----------------------------------------------------------

Plan plan_a_prime(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)),
          [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            for (const Word& y : twisted_interval(wk.spec, w)) {
              rec.count();
              guarded(
                  rec, {y, w},
                  [&] {
                    const PlusMinusPair pm = p_plus_minus(y, w, wk.kl, wk.tkl);
                    const bool ok = is_q_poly(pm.plus) && is_q_poly(pm.minus) && is_nonnegative(pm.plus) &&
                                    is_nonnegative(pm.minus) && pm.plus.coefficient_of_v(0) == 1 &&
                                    pm.minus.coefficient_of_v(0) == 0;
                    rec.require(ok, {y, w}, [&] { return "plus " + poly_text(pm.plus) + ", minus " + poly_text(pm.minus); });
                  },
                  {ErrorKind::parity_violation});
            }
          }};
}

Plan plan_b_prime(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)),
          [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            const auto interval = twisted_interval(wk.spec, w);
            std::vector<PlusMinusPair> pm(interval.size());
            std::vector<bool> valid(interval.size(), false);
            for (std::size_t i = 0; i < interval.size(); ++i)
              guarded(
                  rec, {interval[i], w},
                  [&] {
                    pm[i] = p_plus_minus(interval[i], w, wk.kl, wk.tkl);
                    valid[i] = true;
                  },
                  {ErrorKind::parity_violation});
            for (std::size_t i = 0; i < interval.size(); ++i)
              for (std::size_t j = 0; j < interval.size(); ++j) {
                if (i == j || !valid[i] || !valid[j] || !bruhat_leq(interval[i], interval[j])) continue;
                rec.count();
                const LaurentPoly plus = pm[i].plus - pm[j].plus;
                const LaurentPoly minus = pm[i].minus - pm[j].minus;
                rec.require(is_nonnegative(plus) && is_nonnegative(minus), {interval[i], interval[j], w},
                            [&] { return "plus " + poly_text(plus) + ", minus " + poly_text(minus); });
              }
          }};
}

Plan plan_sigma_positivity(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)),
          [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            const auto interval = twisted_interval(wk.spec, w);
            for (const Word& y : interval) {
              rec.count();
              const LaurentPoly& p = wk.tkl.p(y, w).laurent();
              rec.require(is_nonnegative(p), {y, w}, [&] { return poly_text(p); });
              for (const Word& z : interval) {
                if (y == z || !bruhat_leq(y, z)) continue;
                rec.count();
                const LaurentPoly d = p - wk.tkl.p(z, w).laurent();
                rec.require(is_nonnegative(d), {y, z, w}, [&] { return poly_text(d); });
              }
            }
          }};
}

std::vector<Item> pair_items(const std::vector<Word>& xs, const std::vector<Word>& ys) {
  std::vector<Item> items;
  items.reserve(xs.size() * ys.size());
  for (const Word& x : xs)
    for (const Word& y : ys) items.push_back({0, {x, y}});
  return items;
}

Plan plan_c_prime(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {pair_items(enumerate_words(spec, b.max_len, b.cap), enumerate_involutions(spec, b.max_rho, b.cap)),
          [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& x = it.words[0];
            const Word& y = it.words[1];
            guarded(
                rec, {x, y},
                [&] {
                  for (const auto& [z, pm] : h_plus_minus(x, y, wk.kl)) {
                    rec.count();
                    rec.require(is_nonnegative(pm.plus) && is_nonnegative(pm.minus), {x, y, z},
                                [&] { return "plus " + poly_text(pm.plus) + ", minus " + poly_text(pm.minus); });
                  }
                },
                {ErrorKind::parity_violation});
            const KLVector h = h_tilde(x, y, wk.kl);
            for (const auto& [z, c] : h) {
              const LaurentPoly other = h.coefficient(dagger(wk.spec, z));
              rec.require(other == c, {x, y, z}, [&] { return "dagger asymmetry " + poly_text(c) + " vs " + poly_text(other); });
            }
          }};
}

// ---- parity ------------------------------------------------------------------

Plan plan_parity_p(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)),
          [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            for (const Word& y : twisted_interval(wk.spec, w)) {
              rec.count();
              const LaurentPoly& p = wk.kl.p(y, w).laurent();
              const LaurentPoly& ps = wk.tkl.p(y, w).laurent();
              rec.require(parity_equal(p, ps), {y, w}, [&] { return poly_text(p) + " vs " + poly_text(ps); });
            }
          }};
}

Plan plan_parity_h(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {pair_items(enumerate_words(spec, b.max_len, b.cap), enumerate_involutions(spec, b.max_rho, b.cap)),
          [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& x = it.words[0];
            const Word& y = it.words[1];
            const KLVector h = h_tilde(x, y, wk.kl).filtered([&](const Word& z) { return is_twisted_involution(wk.spec, z); });
            const ModuleElt hs = h_sigma(wk.spec, x, y);
            std::map<Word, bool> support;
            for (const auto& [z, c] : h) support[z] = true;
            for (const auto& [z, c] : hs) support[z] = true;
            for (const auto& [z, unused] : support) {
              rec.count();
              const LaurentPoly a = h.coefficient(z);
              const LaurentPoly s = hs.coefficient(z);
              rec.require(parity_equal(a, s), {x, y, z}, [&] { return poly_text(a) + " vs " + poly_text(s); });
            }
          }};
}

// ---- oracle and structure cross-checks ----------------------------------------

Plan plan_oracle(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  std::vector<Item> items = single_items(enumerate_words(spec, b.max_len, b.cap), 0);
  for (Item& it : single_items(enumerate_involutions(spec, b.max_rho, b.cap), 1)) items.push_back(std::move(it));
  return {std::move(items), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            if (it.tag == 0) {
              const KLRow row = kl_oracle(w, wk.spec);
              for (const auto& [y, p] : row) {
                rec.count();
                const QPoly fast = kl_fast(y, w, wk.kl);
                rec.require(fast == p, {y, w}, [&] { return "untwisted fast " + to_string(fast) + " vs oracle " + to_string(p); });
              }
            } else {
              const KLRow row = tkl_oracle(w, wk.spec);
              for (const auto& [y, p] : row) {
                rec.count();
                const QPoly fast = tkl_fast(y, w, wk.tkl);
                rec.require(fast == p, {y, w}, [&] { return "twisted fast " + to_string(fast) + " vs oracle " + to_string(p); });
              }
            }
          }};
}

Plan plan_rho_grading(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            rec.count();
            const int r = rho(wk.spec, w);
            const int ls = ell_star(wk.spec, w);
            rec.require(2 * r == static_cast<int>(w.length()) + ls, {w}, [&] {
              return "rho " + std::to_string(r) + ", length " + std::to_string(w.length()) + ", ell* " + std::to_string(ls);
            });
          }};
}

Plan plan_bruhat(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  const auto inv = enumerate_involutions(spec, b.max_rho, b.cap);
  return {single_items(inv), [id, inv](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            for (const Word& y : inv) {
              rec.count();
              const bool sub = bruhat_leq_twisted(wk.spec, y, w);
              const bool full = bruhat_leq(y, w);
              rec.require(sub == full, {y, w}, [&] {
                return std::string("twisted subword ") + (sub ? "true" : "false") + ", Bruhat " + (full ? "true" : "false");
              });
            }
          }};
}

Plan plan_regular_embedding(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  if (!spec.star_fixed_point_free())
    fail(ErrorKind::domain, "regular-embedding needs a fixed-point-free involution");
  return {single_items(enumerate_words(spec, b.max_len, b.cap)), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            const Word wt = multiply(star(wk.spec, w), inverse(w));
            for (const auto& [y, p] : wk.kl.row(w)) {
              rec.count();
              const Word yt = multiply(star(wk.spec, y), inverse(y));
              const QPoly& twisted = wk.tkl.p(yt, wt);
              const QPoly expect = substitute_q_squared(p);
              rec.require(twisted == expect, {y, w}, [&] { return to_string(twisted) + " vs " + to_string(expect); });
            }
          }};
}

Plan plan_msigma(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            if (w.is_identity()) return;
            std::vector<Word> ys = twisted_interval(wk.spec, w);
            if (w.length() == 1)
              for (int s = 0; s < wk.spec.gen_count(); ++s) {
                const Word g = Word::generator(static_cast<Generator>(s));
                if (g != w && is_twisted_involution(wk.spec, g)) ys.push_back(g);
              }
            for (const Word& y : ys) {
              if (y.is_identity() || y.front() == w.front()) continue;
              if (!bruhat_leq(y, w) && w.length() != 1) continue;
              rec.count();
              const Generator s = y.front();
              const LaurentPoly got = m_sigma(y, w, s, wk.tkl);
              const LaurentPoly closed = m_sigma_closed_form(wk.spec, y, w, s);
              rec.require(got == closed, {y, w}, [&] { return poly_text(got) + " vs closed form " + poly_text(closed); });
            }
          }};
}

Plan plan_mult(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            for (int i = 0; i < wk.spec.gen_count(); ++i) {
              const auto s = static_cast<Generator>(i);
              const Word sw = Word::generator(s);
              rec.count();
              const ModuleElt formula = cs_times_A(s, w, wk.tkl);
              const ModuleElt direct = cs_times_A_direct(s, w, wk.tkl);
              const ModuleElt closed = cs_times_A_closed(wk.spec, s, w);
              rec.require(formula == direct, {sw, w},
                          [&] { return "coefficient formula " + vector_text(formula) + " vs direct " + vector_text(direct); });
              rec.require(formula == closed, {sw, w},
                          [&] { return "coefficient formula " + vector_text(formula) + " vs closed " + vector_text(closed); });
            }
          }};
}

Plan plan_structure(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  const auto words = enumerate_words(spec, b.max_len, b.cap);
  const auto inv = enumerate_involutions(spec, b.max_rho, b.cap);
  std::vector<Item> items = pair_items(words, inv);
  for (Item& it : pair_items(words, words)) {
    it.tag = 1;
    items.push_back(std::move(it));
  }
  return {std::move(items), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& x = it.words[0];
            const Word& y = it.words[1];
            rec.count();
            if (it.tag == 0) {
              const ModuleElt formula = h_sigma(wk.spec, x, y);
              const ModuleElt direct = h_sigma_direct(x, y, wk.kl, wk.tkl);
              rec.require(formula == direct, {x, y},
                          [&] { return "C_x A_y formula " + vector_text(formula) + " vs direct " + vector_text(direct); });
              const KLVector ht = h_tilde(x, y, wk.kl);
              const KLVector htd = h_tilde_direct(x, y, wk.kl);
              rec.require(ht == htd, {x, y},
                          [&] { return "c_x c_y c_x' formula " + vector_text(ht) + " vs direct " + vector_text(htd); });
            } else {
              const KLVector formula = kl_product(x, y);
              const KLVector direct = kl_product_direct(x, y, wk.kl);
              rec.require(formula == direct, {x, y},
                          [&] { return "c_x c_y formula " + vector_text(formula) + " vs direct " + vector_text(direct); });
            }
          }};
}

Plan plan_diff(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            const auto interval = twisted_interval(wk.spec, w);
            std::uint64_t unstarred_mismatch = 0;
            for (const Word& y : interval)
              for (const Word& z : interval) {
                if (y == z || !bruhat_leq(y, z)) continue;
                rec.count();
                guarded(
                    rec, {y, z, w},
                    [&] {
                      const LaurentPoly expect = wk.tkl.p(y, w).laurent() - wk.tkl.p(z, w).laurent();
                      const LaurentPoly got = wk.diff.twisted(y, z, w).laurent();
                      rec.require(got == expect, {y, z, w},
                                  [&] { return "twisted recursion " + poly_text(got) + " vs " + poly_text(expect); });
                    },
                    {ErrorKind::internal_inconsistency});
                const LaurentPoly direct = wk.diff.untwisted_direct(y, z, w);
                const LaurentPoly rhs = wk.diff.untwisted_rhs(y, z, w, true);
                rec.require(rhs == direct, {y, z, w},
                            [&] { return "untwisted identity " + poly_text(rhs) + " vs " + poly_text(direct); });
                if (wk.diff.untwisted_rhs(y, z, w, false) != direct) ++unstarred_mismatch;
              }
            if (unstarred_mismatch > 0)
              rec.note("unstarred z_i sequence disagrees on " + std::to_string(unstarred_mismatch) + " pairs at w = " +
                       to_string(w));
          }};
}

Plan plan_recurrence(const CoxeterSpec& spec, const Bounds& b, const std::string& id) {
  return {single_items(enumerate_involutions(spec, b.max_rho, b.cap)), [id](Worker& wk, const Item& it, ItemResult& out) {
            Recorder rec(id, out);
            const Word& w = it.words[0];
            if (w.is_identity()) return;
            TKLTable& t = wk.tkl_oracle;
            const CoxeterSpec& spec = wk.spec;
            const Generator s = w.front();
            const Word w1 = twist(spec, s, w);
            const bool c = twist_is_left_multiplication(spec, s, w);
            const LaurentPoly q_plus_1 = LaurentPoly::q_power(1) + LaurentPoly(1);
            const auto interval = twisted_interval(spec, w);
            for (const Word& y : interval) {
              if (!has_left_descent(y, s)) continue;
              rec.count();
              const bool d = twist_is_left_multiplication(spec, s, y);
              LaurentPoly lhs = t.value(y, w).laurent();
              if (c) lhs = lhs * q_plus_1;
              LaurentPoly rhs = t.value(twist(spec, s, y), w1).laurent();
              if (d) rhs = rhs * q_plus_1;
              const LaurentPoly q_factor = LaurentPoly::q_power(2) - LaurentPoly::q_power(1).scaled(d ? 1 : 0);
              rhs += q_factor * t.value(y, w1).laurent();
              for (const Word& z : interval) {
                if (z == w || !has_left_descent(z, s) || !bruhat_leq(y, z)) continue;
                const LaurentPoly m = m_sigma(z, w1, s, t);
                if (m.is_zero()) continue;
                const int shift = static_cast<int>(w.length()) - static_cast<int>(z.length()) + (c ? 1 : 0);
                rhs -= (m * t.value(y, z).laurent()).shifted(shift);
              }
              rec.require(lhs == rhs, {y, w}, [&] { return poly_text(lhs) + " vs " + poly_text(rhs); });
            }
          }};
}

using Planner = Plan (*)(const CoxeterSpec&, const Bounds&, const std::string&);

const std::vector<std::pair<std::string, Planner>>& planners() {
  static const std::vector<std::pair<std::string, Planner>> all = {
      {"a", plan_a},
      {"b", plan_b},
      {"c", plan_c},
      {"a-prime", plan_a_prime},
      {"b-prime", plan_b_prime},
      {"c-prime", plan_c_prime},
      {"sigma-positivity", plan_sigma_positivity},
      {"parity-p", plan_parity_p},
      {"parity-h", plan_parity_h},
      {"oracle-equivalence", plan_oracle},
      {"rho-grading", plan_rho_grading},
      {"bruhat-agreement", plan_bruhat},
      {"regular-embedding", plan_regular_embedding},
      {"msigma-closed-form", plan_msigma},
      {"mult-formula", plan_mult},
      {"structure", plan_structure},
      {"diff-recursion", plan_diff},
      {"recurrence-identity", plan_recurrence},
  };
  return all;
}

std::vector<ItemResult> run_serial(const CoxeterSpec& spec, const Plan& plan) {
  std::vector<ItemResult> results(plan.items.size());
  Worker worker(spec);
  for (std::size_t i = 0; i < plan.items.size(); ++i) plan.run(worker, plan.items[i], results[i]);
  return results;
}

std::vector<ItemResult> run_parallel(const CoxeterSpec& spec, const Plan& plan, int threads) {
  const auto n = static_cast<std::int64_t>(plan.items.size());
  std::vector<ItemResult> results(plan.items.size());
  std::vector<std::exception_ptr> errors(plan.items.size());
#pragma omp parallel num_threads(threads)
  {
    std::unique_ptr<Worker> worker;
    try {
      worker = std::make_unique<Worker>(spec);
    } catch (...) {
    }
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        if (!worker) fail(ErrorKind::resource_limit, "could not allocate worker tables");
        plan.run(*worker, plan.items[k], results[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, planner] : planners()) out.push_back(id);
    return out;
  }();
  return ids;
}

SweepReport verify(const std::string& check, const CoxeterSpec& spec, const Bounds& bounds, int threads) {
  const auto start = std::chrono::steady_clock::now();
  Planner planner = nullptr;
  for (const auto& [id, p] : planners())
    if (id == check) planner = p;
  if (planner == nullptr) fail(ErrorKind::domain, "unknown check '" + check + "'");

  const Plan plan = planner(spec, bounds, check);
  const std::vector<ItemResult> results = threads <= 1 ? run_serial(spec, plan) : run_parallel(spec, plan, threads);

  SweepReport report;
  report.spec = spec;
  report.bounds = bounds;
  report.check = check;
  for (const ItemResult& r : results) {
    report.tuples_checked += r.tuples;
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
    report.notes.insert(report.notes.end(), r.notes.begin(), r.notes.end());
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json to_json(const SweepReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["spec"] = {{"gens", report.spec.gen_count()}, {"star", star_literal(report.spec)}};
  j["bounds"] = {{"max_rho", report.bounds.max_rho}, {"max_len", report.bounds.max_len}, {"cap", report.bounds.cap}};
  j["check"] = report.check;
  j["tuples_checked"] = report.tuples_checked;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    nlohmann::ordered_json witness = nlohmann::ordered_json::array();
    for (const Word& w : v.witness) witness.push_back(to_string(w));
    violations.push_back({{"check", v.check}, {"witness", witness}, {"poly", v.detail}});
  }
  j["violations"] = violations;
  j["notes"] = report.notes;
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

}  // namespace tklwb
