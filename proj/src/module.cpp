#include "tklwb/module.hpp"

#include <algorithm>

#include "tklwb/errors.hpp"
#include "tklwb/triangular.hpp"

namespace tklwb {

namespace {

const QPoly kZero;

void require_descent_pair(const CoxeterSpec& spec, const Word& y, const Word& w, Generator s) {
  require_twisted(spec, y);
  require_twisted(spec, w);
  if (!has_left_descent(y, s) || has_left_descent(w, s))
    fail(ErrorKind::domain, "generator must be a left descent of " + to_string(y) + " but not of " + to_string(w));
}

Word letters_word(const std::string& letters) { return Word::from_reduced(letters); }

}  // namespace

// ---- module structure -------------------------------------------------------

ModuleElt gen_action(const CoxeterSpec& spec, Generator s, const ModuleElt& m) {
  static const LaurentPoly q = LaurentPoly::q_power(1);
  static const LaurentPoly q2 = LaurentPoly::q_power(2);
  static const LaurentPoly q_plus_one = q + LaurentPoly(1);
  static const LaurentPoly q2_minus_q = q2 - q;
  static const LaurentPoly q2_minus_q_minus_one = q2 - q - LaurentPoly(1);
  static const LaurentPoly q2_minus_one = q2 - LaurentPoly(1);
  ModuleElt out;
  for (const auto& [w, c] : m) {
    const Word t = twist(spec, s, w);
    const bool left = twist_is_left_multiplication(spec, s, w);
    const bool up = t.length() > w.length();
    if (up && !left) {
      out.add(t, c);
    } else if (up) {
      out.add(t, c * q_plus_one);
      out.add(w, c * q);
    } else if (left) {
      out.add(t, c * q2_minus_q);
      out.add(w, c * q2_minus_q_minus_one);
    } else {
      out.add(t, c * q2);
      out.add(w, c * q2_minus_one);
    }
  }
  return out;
}

ModuleElt gen_inverse_action(const CoxeterSpec& spec, Generator s, const ModuleElt& m) {
  ModuleElt out = gen_action(spec, s, m).scaled(LaurentPoly::q_power(-2));
  out.add_scaled(m, LaurentPoly::q_power(-2) - LaurentPoly(1));
  return out;
}

ModuleElt hecke_action(const CoxeterSpec& spec, const HeckeElt& h, const ModuleElt& m) {
  if (h.param != HeckeParam::q2) fail(ErrorKind::domain, "the module is over the Hecke algebra with parameter q^2");
  ModuleElt out;
  for (const auto& [w, c] : h.terms) {
    ModuleElt x = m.scaled(c);
    for (std::size_t i = w.length(); i-- > 0;) x = gen_action(spec, w[i], x);
    out += x;
  }
  return out;
}

ModuleElt bar_module(const CoxeterSpec& spec, const ModuleElt& m) {
  ModuleElt out;
  for (const auto& [y, c] : m) {
    // bar(a_y) = (-1)^l(y) (T_{y^-1})^-1 a_{y^-1}; with y^-1 = t_1 ... t_k the
    // factor T_{t_1}^-1 acts first.
    const Word yi = inverse(y);
    ModuleElt x = ModuleElt::single(yi, y.length() % 2 == 0 ? LaurentPoly(1) : LaurentPoly(-1));
    for (std::size_t i = 0; i < yi.length(); ++i) x = gen_inverse_action(spec, yi[i], x);
    out.add_scaled(x, bar(c));
  }
  return out;
}

// ---- TKLTable ---------------------------------------------------------------

const QPoly& TKLTable::p(const Word& y, const Word& w) {
  const std::string key = pair_key(y, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  QPoly value = compute(y, w);
  return memo_.insert_or_assign(key, std::move(value)).first->second;
}

QPoly TKLTable::compute(const Word& y, const Word& w) {
  if (!bruhat_leq(y, w)) return QPoly();
  if (y == w) return QPoly(LaurentPoly(1));
  const Generator s = w.front();
  const Word sw = twist(spec_, s, w);
  if (sw.is_identity()) return QPoly(LaurentPoly(1));
  if (has_left_descent(y, s)) return p(twist(spec_, s, y), w);

  const Generator r = sw.front();
  const Word rsw = twist(spec_, r, sw);
  const Word sy = twist(spec_, s, y);
  const bool delta = has_left_descent(rsw, s);
  const bool delta_prime = y.is_identity() && spec_.star_fixes(s) &&
                           w != letters_word(std::string{static_cast<char>(s), static_cast<char>(r), static_cast<char>(s)});

  LaurentPoly result = p(y, sw).laurent();
  result.add_scaled_shifted(p(sy, sw).laurent(), 1, 4);
  if (delta) result.add_scaled_shifted(p(sy, rsw).laurent(), -1, 4);
  if (delta_prime) {
    result.add_scaled_shifted(p(Word(), sw).laurent(), 1, 2);
    result.add_scaled_shifted(p(Word::generator(s), sw).laurent(), -1, 2);
  }
  return QPoly(std::move(result));
}

const QPoly& TKLTable::value(const Word& y, const Word& w) {
  return source_ == Source::fast ? p(y, w) : oracle_value(y, w);
}

const QPoly& TKLTable::oracle_value(const Word& y, const Word& w) {
  const std::string key = pair_key(y, w);
  if (auto it = oracle_memo_.find(key); it != oracle_memo_.end()) return it->second;
  for (const auto& [x, poly] : oracle_row(w)) oracle_memo_.try_emplace(pair_key(x, w), poly);
  if (auto it = oracle_memo_.find(key); it != oracle_memo_.end()) return it->second;
  return kZero;
}

const KLRow& TKLTable::row(const Word& w) {
  if (auto it = rows_.find(w); it != rows_.end()) return it->second;
  KLRow row;
  for (const Word& y : twisted_interval(spec_, w)) row.emplace_back(y, p(y, w));
  return rows_.emplace(w, std::move(row)).first->second;
}

const KLRow& TKLTable::oracle_row(const Word& w) {
  if (auto it = oracle_rows_.find(w); it != oracle_rows_.end()) return it->second;
  require_twisted(spec_, w);
  KLRow row = canonical_row(
      twisted_interval(spec_, w), [this](const Word& y) { return bar_standard(y); }, true);
  return oracle_rows_.emplace(w, std::move(row)).first->second;
}

const ModuleElt& TKLTable::bar_standard(const Word& y) {
  if (auto it = bar_.find(y); it != bar_.end()) return it->second;
  ModuleElt value = bar_module(spec_, ModuleElt::single(y));
  return bar_.emplace(y, std::move(value)).first->second;
}

void TKLTable::insert(const Word& y, const Word& w, QPoly value) {
  memo_.insert_or_assign(pair_key(y, w), std::move(value));
}

std::vector<std::tuple<Word, Word, QPoly>> TKLTable::entries() const {
  std::vector<std::tuple<Word, Word, QPoly>> out;
  out.reserve(memo_.size());
  for (const auto& [key, value] : memo_) {
    if (value.is_zero()) continue;
    const auto sep = key.find('\xFF');
    out.emplace_back(Word::from_reduced(key.substr(0, sep)), Word::from_reduced(key.substr(sep + 1)), value);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<1>(a), std::get<0>(a)) < std::tie(std::get<1>(b), std::get<0>(b));
  });
  return out;
}

// ---- twisted Kazhdan-Lusztig polynomials ------------------------------------

KLRow tkl_oracle(const Word& w, const CoxeterSpec& spec) {
  TKLTable table(spec);
  return table.oracle_row(w);
}

QPoly tkl_fast(const Word& y, const Word& w, TKLTable& table) {
  require_twisted(table.spec(), y);
  require_twisted(table.spec(), w);
  return table.p(y, w);
}

ModuleElt a_element(const Word& w, TKLTable& table) {
  require_twisted(table.spec(), w);
  const int shift = -static_cast<int>(w.length());
  ModuleElt out;
  for (const Word& y : twisted_interval(table.spec(), w)) out.add(y, table.value(y, w).laurent().shifted(shift));
  return out;
}

ModuleElt to_a_basis(const ModuleElt& m, TKLTable& table) {
  return eliminate_to_canonical_basis(
      m, [&](const Word& z) { return a_element(z, table); },
      [](const Word& z) { return static_cast<int>(z.length()); });
}

// ---- coefficient system -----------------------------------------------------

Coeff mu_sigma(const Word& y, const Word& w, TKLTable& table) {
  const int gap = static_cast<int>(w.length()) - static_cast<int>(y.length());
  if (gap < 1 || gap % 2 == 0) return 0;
  return table.value(y, w).laurent().coefficient_of_v(gap - 1);
}

Coeff nu_sigma(const Word& y, const Word& w, TKLTable& table) {
  const int gap = static_cast<int>(w.length()) - static_cast<int>(y.length());
  if (gap < 2 || gap % 2 != 0) return 0;
  return table.value(y, w).laurent().coefficient_of_v(gap - 2);
}

Coeff mu_sigma_s(const Word& y, const Word& w, Generator s, TKLTable& table) {
  const CoxeterSpec& spec = table.spec();
  require_descent_pair(spec, y, w, s);
  Coeff total = nu_sigma(y, w, table);
  if (twist_is_left_multiplication(spec, s, y)) total = checked_add(total, mu_sigma(twist(spec, s, y), w, table));
  if (twist_is_left_multiplication(spec, s, w)) total = checked_sub(total, mu_sigma(y, twist(spec, s, w), table));
  for (const Word& x : twisted_interval(spec, w)) {
    if (!has_left_descent(x, s) || !bruhat_leq(y, x)) continue;
    const Coeff a = mu_sigma(y, x, table);
    if (a == 0) continue;
    total = checked_sub(total, checked_mul(a, mu_sigma(x, w, table)));
  }
  return total;
}

LaurentPoly m_sigma(const Word& y, const Word& w, Generator s, TKLTable& table) {
  require_descent_pair(table.spec(), y, w, s);
  const int gap = static_cast<int>(w.length()) - static_cast<int>(y.length());
  if (gap % 2 != 0) return LaurentPoly::v_plus_inverse().scaled(mu_sigma(y, w, table));
  return LaurentPoly(mu_sigma_s(y, w, s, table));
}

LaurentPoly m_sigma_closed_form(const CoxeterSpec& spec, const Word& y, const Word& w, Generator s) {
  require_descent_pair(spec, y, w, s);
  if (w.is_identity()) return LaurentPoly();
  const Generator r = w.front();
  const Word rwr = multiply(multiply(Word::generator(r), w), Word::generator(spec.star(r)));
  if (y == rwr) return LaurentPoly(1);
  if (y == Word::generator(s) && w == Word::generator(r)) return LaurentPoly(1);
  return LaurentPoly();
}

// ---- multiplication by C_s and C_x ------------------------------------------

ModuleElt cs_times_A(Generator s, const Word& w, TKLTable& table) {
  const CoxeterSpec& spec = table.spec();
  require_twisted(spec, w);
  if (has_left_descent(w, s)) return ModuleElt::single(w, LaurentPoly::q_plus_inverse());
  const Word t = twist(spec, s, w);
  ModuleElt out = ModuleElt::single(
      t, twist_is_left_multiplication(spec, s, w) ? LaurentPoly::v_plus_inverse() : LaurentPoly(1));
  for (const Word& y : twisted_interval(spec, t)) {
    if (y == t || !has_left_descent(y, s)) continue;
    out.add(y, m_sigma(y, w, s, table));
  }
  return out;
}

ModuleElt cs_times_A_closed(const CoxeterSpec& spec, Generator s, const Word& w) {
  require_twisted(spec, w);
  if (has_left_descent(w, s)) return ModuleElt::single(w, LaurentPoly::q_plus_inverse());
  const Word sws = multiply(multiply(Word::generator(s), w), Word::generator(spec.star(s)));
  if (w.is_identity() && spec.star_fixes(s)) return ModuleElt::single(Word::generator(s), LaurentPoly::v_plus_inverse());
  ModuleElt out = ModuleElt::single(sws);
  if (!w.is_identity()) {
    const Generator r = w.front();
    const Word rwr = multiply(multiply(Word::generator(r), w), Word::generator(spec.star(r)));
    if (has_left_descent(rwr, s)) out.add(rwr, LaurentPoly(1));
    else if (w.length() == 1 && spec.star_fixes(s)) out.add(Word::generator(s), LaurentPoly(1));
  }
  return out;
}

ModuleElt cs_times_A_direct(Generator s, const Word& w, TKLTable& table) {
  HeckeElt cs = HeckeElt::basis(HeckeParam::q2, Word::generator(s), LaurentPoly::q_power(-1));
  cs.terms.add(Word(), LaurentPoly::q_power(-1));
  return to_a_basis(hecke_action(table.spec(), cs, a_element(w, table)), table);
}

ModuleElt a_of(const CoxeterSpec& spec, const Word& w, int j) {
  require_twisted(spec, w);
  ModuleElt out;
  std::string expr = istar_expression(spec, w);
  // Unrolled tail recursion: A(w, j) = A_{w'} + A(w', j - 1).
  for (;;) {
    const int n = static_cast<int>(expr.size());
    if (j >= 2 && j <= n - 1 && expr[j - 2] == expr[j]) {
      expr.erase(static_cast<std::size_t>(j - 1), 2);
    } else if (j == n && n >= 2 && spec.star_fixes(static_cast<Generator>(expr[n - 2])) &&
               spec.star_fixes(static_cast<Generator>(expr[n - 1]))) {
      expr.pop_back();
    } else {
      return out;
    }
    out.add(twist_sequence(spec, expr, Word()), LaurentPoly(1));
    --j;
  }
}

ModuleElt h_sigma(const CoxeterSpec& spec, const Word& x, const Word& y) {
  require_twisted(spec, y);
  const int n = static_cast<int>(x.length());
  if (!x.is_identity() && y.is_identity() && spec.star_fixes(x.back())) {
    const Word z = twist_word(spec, x, Word());
    ModuleElt out = ModuleElt::single(z);
    out += a_of(spec, z, n);
    return out.scaled(LaurentPoly::v_plus_inverse());
  }
  if (!x.is_identity() && !y.is_identity() && x.back() == y.front()) {
    const Word xs = Word::from_reduced(x.raw().substr(0, x.length() - 1));
    const Word z = twist_word(spec, xs, y);
    ModuleElt out = ModuleElt::single(z);
    out += a_of(spec, z, n);
    return out.scaled(LaurentPoly::q_plus_inverse());
  }
  const Word z = twist_word(spec, x, y);
  ModuleElt out = ModuleElt::single(z);
  out += a_of(spec, z, n);
  out += a_of(spec, z, n + 1);
  return out;
}

ModuleElt h_sigma_direct(const Word& x, const Word& y, KLTable& kl, TKLTable& tkl) {
  const HeckeElt cx = kl_basis_element(x, HeckeParam::q2, kl);
  return to_a_basis(hecke_action(tkl.spec(), cx, a_element(y, tkl)), tkl);
}

}  // namespace tklwb
