#include "tklwb/hecke.hpp"

#include <algorithm>
#include <tuple>

#include "tklwb/errors.hpp"
#include "tklwb/triangular.hpp"

namespace tklwb {

namespace {

Word drop_front(const Word& w) { return Word::from_reduced(w.raw().substr(1)); }
Word drop_back(const Word& w) { return Word::from_reduced(w.raw().substr(0, w.length() - 1)); }
Word prepend(Generator s, const Word& w) { return Word::from_reduced(std::string(1, static_cast<char>(s)) + w.raw()); }

void check_param(const HeckeElt& a, const HeckeElt& b) {
  if (a.param != b.param) fail(ErrorKind::domain, "Hecke elements with different parameters");
}

/// P_{y,w} for every y <= w by the bar-triangular solve; `bar_of(y)` is bar(t_y) in H_q.
KLRow oracle_row_impl(const Word& w, const std::function<const HeckeElt&(const Word&)>& bar_of) {
  return canonical_row(bruhat_interval(w), [&](const Word& y) { return bar_of(y).terms; }, false);
}

/// Length of the maximal prefix of w alternating between w[0] and w[1].
std::size_t alternating_run(const std::string& letters) {
  if (letters.size() < 2) return letters.size();
  std::size_t m = 2;
  while (m < letters.size() && letters[m] == letters[m - 2]) ++m;
  return m;
}

}  // namespace

HeckeElt HeckeElt::basis(HeckeParam param, const Word& w, LaurentPoly coeff) {
  return HeckeElt{param, BasisVector::single(w, std::move(coeff))};
}

std::string pair_key(const Word& y, const Word& w) {
  std::string key = y.raw();
  key += '\xFF';
  key += w.raw();
  return key;
}

// ---- standard basis arithmetic ---------------------------------------------

HeckeElt gen_mul_left(Generator s, const HeckeElt& h) {
  const int e = exponent(h.param);
  const LaurentPoly qe = LaurentPoly::q_power(e);
  const LaurentPoly qe_minus_one = qe - LaurentPoly(1);
  HeckeElt out{h.param, {}};
  for (const auto& [w, c] : h.terms) {
    if (has_left_descent(w, s)) {
      out.terms.add(drop_front(w), c * qe);
      out.terms.add(w, c * qe_minus_one);
    } else {
      out.terms.add(prepend(s, w), c);
    }
  }
  return out;
}

HeckeElt gen_inverse_mul_left(Generator s, const HeckeElt& h) {
  const int e = exponent(h.param);
  HeckeElt out = gen_mul_left(s, h);
  out.terms = out.terms.scaled(LaurentPoly::q_power(-e));
  out.terms.add_scaled(h.terms, LaurentPoly::q_power(-e) - LaurentPoly(1));
  return out;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  check_param(a, b);
  HeckeElt out{a.param, {}};
  for (const auto& [w, c] : a.terms) {
    HeckeElt x{b.param, b.terms.scaled(c)};
    for (std::size_t i = w.length(); i-- > 0;) x = gen_mul_left(w[i], x);
    out.terms += x.terms;
  }
  return out;
}

HeckeElt t_inverse(HeckeParam param, const Word& w) {
  HeckeElt x = HeckeElt::identity(param);
  for (std::size_t i = 0; i < w.length(); ++i) x = gen_inverse_mul_left(w[i], x);
  return x;
}

HeckeElt bar_hecke(const HeckeElt& h) {
  HeckeElt out{h.param, {}};
  for (const auto& [w, c] : h.terms)
    out.terms.add_scaled(t_inverse(h.param, inverse(w)).terms, bar(c));
  return out;
}

HeckeElt dagger_hecke(const CoxeterSpec& spec, const HeckeElt& h) {
  HeckeElt out{h.param, {}};
  for (const auto& [w, c] : h.terms) out.terms.add(dagger(spec, w), c);
  return out;
}

// ---- KLTable ----------------------------------------------------------------

const QPoly& KLTable::p(const Word& y, const Word& w) {
  const std::string key = pair_key(y, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  QPoly value = compute(y, w);
  return memo_.insert_or_assign(key, std::move(value)).first->second;
}

QPoly KLTable::compute(const Word& y, const Word& w) {
  if (!bruhat_leq(y, w)) return QPoly();
  if (y == w || w.length() <= 1) return QPoly(LaurentPoly(1));
  // Descent reductions: P_{y,w} = P_{sy,w} for s in Des_L(w), likewise on the right.
  if (!y.is_identity() && y.front() == w.front()) return p(drop_front(y), w);
  if (!y.is_identity() && y.back() == w.back()) return p(drop_back(y), w);

  const std::size_t run_left = alternating_run(w.raw());
  std::string reversed = w.raw();
  std::reverse(reversed.begin(), reversed.end());
  const std::size_t run_right = alternating_run(reversed);
  if (run_right > run_left) return p(inverse(y), inverse(w));

  // w = (s r s ...)(k+1 letters) u, a = (... s r s)(k letters).
  const std::size_t k = run_left - 1;
  std::string a = w.raw().substr(0, k);
  std::reverse(a.begin(), a.end());
  const Word ay = Word::from_reduced(a + y.raw());
  const Word aw = Word::from_reduced(w.raw().substr(k));
  LaurentPoly result = p(y, drop_front(w)).laurent();
  result.add_scaled_shifted(p(ay, aw).laurent(), 1, 2 * static_cast<int>(k));
  return QPoly(std::move(result));
}

const KLRow& KLTable::row(const Word& w) {
  if (auto it = rows_.find(w); it != rows_.end()) return it->second;
  KLRow row;
  for (const Word& y : bruhat_interval(w)) row.emplace_back(y, p(y, w));
  return rows_.emplace(w, std::move(row)).first->second;
}

const KLRow& KLTable::oracle_row(const Word& w) {
  if (auto it = oracle_rows_.find(w); it != oracle_rows_.end()) return it->second;
  KLRow row = oracle_row_impl(w, [this](const Word& y) -> const HeckeElt& { return bar_standard(y); });
  return oracle_rows_.emplace(w, std::move(row)).first->second;
}

const HeckeElt& KLTable::bar_standard(const Word& w) {
  if (auto it = bar_.find(w); it != bar_.end()) return it->second;
  // bar(t_w) = t_{s_1}^-1 bar(t_{s_2 ... s_k})
  HeckeElt value = w.is_identity() ? HeckeElt::identity(HeckeParam::q)
                                   : gen_inverse_mul_left(w.front(), bar_standard(drop_front(w)));
  return bar_.emplace(w, std::move(value)).first->second;
}

void KLTable::insert(const Word& y, const Word& w, QPoly value) {
  memo_.insert_or_assign(pair_key(y, w), std::move(value));
}

std::vector<std::tuple<Word, Word, QPoly>> KLTable::entries() const {
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

// ---- Kazhdan-Lusztig polynomials --------------------------------------------

KLRow kl_oracle(const Word& w, const CoxeterSpec& spec) {
  spec.validate(w);
  HeckeElt scratch;
  return oracle_row_impl(w, [&scratch](const Word& y) -> const HeckeElt& {
    scratch = bar_hecke(HeckeElt::basis(HeckeParam::q, y));
    return scratch;
  });
}

QPoly kl_fast(const Word& y, const Word& w, KLTable& table) {
  table.spec().validate(y);
  table.spec().validate(w);
  return table.p(y, w);
}

QPoly kl_diff(const Word& y, const Word& z, const Word& w, KLTable& table) {
  if (!bruhat_leq(y, z)) fail(ErrorKind::order, to_string(y) + " is not below " + to_string(z));
  return QPoly(kl_fast(y, w, table).laurent() - kl_fast(z, w, table).laurent());
}

Coeff mu(const Word& y, const Word& w, KLTable& table) {
  const int gap = static_cast<int>(w.length()) - static_cast<int>(y.length());
  if (gap <= 0 || gap % 2 == 0) return 0;
  return kl_fast(y, w, table).coefficient_of_q((gap - 1) / 2);
}

HeckeElt kl_basis_element(const Word& w, HeckeParam param, KLTable& table) {
  const int e = exponent(param);
  const int shift = -e * static_cast<int>(w.length());
  HeckeElt out{param, {}};
  for (const auto& [y, poly] : table.row(w)) {
    const LaurentPoly coeff = e == 1 ? poly.laurent() : substitute_q_squared(poly).laurent();
    out.terms.add(y, coeff.shifted(shift));
  }
  return out;
}

KLVector to_kl_basis(const HeckeElt& h, KLTable& table) {
  const int e = exponent(h.param);
  return eliminate_to_canonical_basis(
      h.terms, [&](const Word& z) { return kl_basis_element(z, h.param, table).terms; },
      [e](const Word& z) { return e * static_cast<int>(z.length()); });
}

// ---- structure constants ----------------------------------------------------

KLVector c_of(const Word& w, int j) {
  KLVector out;
  Word current = w;
  // Unrolled tail recursion: c(w, j) = c_{w'} + c(w', j - 1).
  for (;;) {
    const int n = static_cast<int>(current.length());
    if (j < 2 || j > n - 1 || current[j - 2] != current[j]) return out;
    const std::string& s = current.raw();
    current = Word::from_reduced(s.substr(0, j - 1) + s.substr(j + 1));
    out.add(current, LaurentPoly(1));
    --j;
  }
}

KLVector kl_product(const Word& x, const Word& y) {
  const int n = static_cast<int>(x.length());
  KLVector out;
  if (!x.is_identity() && !y.is_identity() && x.back() == y.front()) {
    const Word xsy = Word::from_reduced(x.raw().substr(0, x.length() - 1) + y.raw());
    out.add(xsy, LaurentPoly(1));
    out += c_of(xsy, n);
    return out.scaled(LaurentPoly::v_plus_inverse());
  }
  const Word xy = Word::from_reduced(x.raw() + y.raw());
  out.add(xy, LaurentPoly(1));
  out += c_of(xy, n);
  out += c_of(xy, n + 1);
  return out;
}

KLVector kl_vector_product(const KLVector& a, const KLVector& b) {
  KLVector out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(kl_product(x, y), cx * cy);
  return out;
}

KLVector kl_product_direct(const Word& x, const Word& y, KLTable& table) {
  return to_kl_basis(mul(kl_basis_element(x, HeckeParam::q, table), kl_basis_element(y, HeckeParam::q, table)),
                     table);
}

KLVector h_tilde(const Word& x, const Word& y, KLTable& table) {
  require_twisted(table.spec(), y);
  const KLVector left = kl_product(x, y);
  return kl_vector_product(left, KLVector::single(dagger(table.spec(), x)));
}

KLVector h_tilde_direct(const Word& x, const Word& y, KLTable& table) {
  require_twisted(table.spec(), y);
  const HeckeElt cx = kl_basis_element(x, HeckeParam::q, table);
  const HeckeElt cy = kl_basis_element(y, HeckeParam::q, table);
  const HeckeElt cxd = kl_basis_element(dagger(table.spec(), x), HeckeParam::q, table);
  return to_kl_basis(mul(mul(cx, cy), cxd), table);
}

}  // namespace tklwb
