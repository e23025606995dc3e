#include "tklwb/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <ostream>

#include "tklwb/errors.hpp"

namespace tklwb {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::arithmetic_overflow, "coefficient overflow in addition");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::arithmetic_overflow, "coefficient overflow in subtraction");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::arithmetic_overflow, "coefficient overflow in multiplication");
  return r;
}

namespace {

void canonicalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.exp < b.exp; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    int e = terms[i].exp;
    Coeff c = 0;
    for (; i < terms.size() && terms[i].exp == e; ++i) c = checked_add(c, terms[i].coeff);
    if (c != 0) terms[out++] = {e, c};
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms) : terms_(terms) { canonicalize(terms_); }

LaurentPoly LaurentPoly::monomial(Coeff coeff, int v_exp) {
  if (coeff == 0) return {};
  return LaurentPoly(std::vector<Term>{{v_exp, coeff}});
}

LaurentPoly LaurentPoly::v_plus_inverse() { return LaurentPoly(std::vector<Term>{{-1, 1}, {1, 1}}); }

LaurentPoly LaurentPoly::q_plus_inverse() { return LaurentPoly(std::vector<Term>{{-2, 1}, {2, 1}}); }

Coeff LaurentPoly::coefficient_of_v(int k) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, int e) { return t.exp < e; });
  return (it != terms_.end() && it->exp == k) ? it->coeff : 0;
}

void LaurentPoly::merge(const LaurentPoly& other, Coeff sign, int shift) {
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exp < b->exp + shift)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->exp + shift < a->exp) {
      out.push_back({b->exp + shift, checked_mul(sign, b->coeff)});
      ++b;
    } else {
      Coeff c = checked_add(a->coeff, checked_mul(sign, b->coeff));
      if (c != 0) out.push_back({a->exp, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  merge(other, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  merge(other, -1, 0);
  return *this;
}

void LaurentPoly::add_scaled_shifted(const LaurentPoly& other, Coeff factor, int shift) {
  if (factor == 0) return;
  merge(other, factor, shift);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].exp);
  if (b.terms_.size() == 1 && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].exp);
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.exp + y.exp, checked_mul(x.coeff, y.coeff)});
  canonicalize(out);
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(Coeff factor) const {
  if (factor == 0) return {};
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = checked_mul(t.coeff, factor);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int v_exp) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exp += v_exp;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::negative_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.exp < 0) out.push_back(t);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::positive_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.exp > 0) out.push_back(t);
  return LaurentPoly(std::move(out));
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly subtract(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly scale(const LaurentPoly& p, Coeff factor) { return p.scaled(factor); }
LaurentPoly negate(const LaurentPoly& p) { return -p; }
LaurentPoly shift_by_v_power(const LaurentPoly& p, int k) { return p.shifted(k); }

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& t : p.terms()) out.add_scaled_shifted(LaurentPoly(1), t.coeff, -t.exp);
  return out;
}

bool is_q_poly(const LaurentPoly& p) noexcept {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.exp >= 0 && t.exp % 2 == 0; });
}

QPoly::QPoly(LaurentPoly p) : poly_(std::move(p)) {
  if (!is_q_poly(poly_)) fail(ErrorKind::not_q_polynomial, "not a polynomial in q: " + to_string(poly_));
}

int QPoly::degree() const noexcept { return poly_.is_zero() ? -1 : poly_.max_exp() / 2; }

QPoly as_q_poly(const LaurentPoly& p) { return QPoly(p); }

QPoly substitute_q_squared(const QPoly& p) {
  LaurentPoly out;
  for (const auto& t : p.laurent().terms()) out.add_scaled_shifted(LaurentPoly(1), t.coeff, 2 * t.exp);
  return QPoly(std::move(out));
}

bool parity_equal(const LaurentPoly& f, const LaurentPoly& g) {
  const LaurentPoly d = f - g;
  return std::all_of(d.terms().begin(), d.terms().end(), [](const auto& t) { return t.coeff % 2 == 0; });
}

LaurentPoly halve_sum(const LaurentPoly& f, const LaurentPoly& g, int sign) {
  const LaurentPoly s = sign > 0 ? f + g : f - g;
  LaurentPoly out;
  for (const auto& t : s.terms()) {
    if (t.coeff % 2 != 0)
      fail(ErrorKind::parity_violation, "odd coefficient in (" + to_string(f) + (sign > 0 ? ") + (" : ") - (") +
                                            to_string(g) + ")");
    out.add_scaled_shifted(LaurentPoly(1), t.coeff / 2, t.exp);
  }
  return out;
}

bool is_nonnegative(const LaurentPoly& p) noexcept {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.coeff > 0; });
}

Coeff coefficient_of_v(const LaurentPoly& p, int k) noexcept { return p.coefficient_of_v(k); }

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const bool q_form = is_q_poly(p);
  const char var = q_form ? 'q' : 'v';
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const int e = q_form ? t.exp / 2 : t.exp;
    Coeff c = t.coeff;
    if (c < 0) {
      out += '-';
      // Magnitude printed via unsigned to survive INT64_MIN.
    } else if (!first) {
      out += '+';
    }
    const auto mag = c < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (e == 0 || mag != 1) out += std::to_string(mag);
    if (e != 0) {
      out += var;
      if (e != 1) out += '^' + std::to_string(e);
    }
    first = false;
  }
  return out;
}

std::string to_string(const QPoly& p) { return to_string(p.laurent()); }

LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&](const std::string& why) -> void { fail(ErrorKind::parse, "bad polynomial '" + std::string(text) + "': " + why); };
  if (s.empty()) bad("empty");

  std::vector<LaurentPoly::Term> terms;
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& out) -> bool {
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    std::size_t digits = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits) return false;
    auto [ptr, ec] = std::from_chars(s.data() + (s[i] == '+' ? i + 1 : i), s.data() + j, out);
    if (ec != std::errc() || ptr != s.data() + j) bad("integer out of range");
    i = j;
    return true;
  };

  bool first = true;
  while (i < s.size()) {
    Coeff sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      bad("expected '+' or '-'");
    }
    first = false;

    Coeff coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::int64_t c = 0;
      read_int(c);
      coeff = c;
      have_coeff = true;
    }
    int exp = 0;
    if (i < s.size() && (s[i] == 'v' || s[i] == 'q')) {
      const int unit = s[i] == 'q' ? 2 : 1;
      ++i;
      std::int64_t e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_int(e)) bad("missing exponent");
      }
      if (e > std::numeric_limits<int>::max() / 2 || e < std::numeric_limits<int>::min() / 2) bad("exponent out of range");
      exp = static_cast<int>(e) * unit;
    } else if (!have_coeff) {
      bad("empty term");
    }
    terms.push_back({exp, checked_mul(sign, coeff)});
  }
  LaurentPoly out;
  for (const auto& t : terms) out.add_scaled_shifted(LaurentPoly(1), t.coeff, t.exp);
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }

}  // namespace tklwb
