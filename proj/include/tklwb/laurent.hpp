#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tklwb {

// Coefficient ring element. Every arithmetic path goes through the checked
// helpers below, so swapping in a big-integer type only touches this alias
// and those helpers.
using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Integer Laurent polynomial in v, with q = v^2.
///
/// Stored sparsely as (exponent, coefficient) pairs sorted by ascending
/// exponent with no zero coefficients, so structural equality is equality
/// of polynomials.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<Term> terms);

  static LaurentPoly monomial(Coeff coeff, int v_exp);
  static LaurentPoly v_power(int v_exp) { return monomial(1, v_exp); }
  static LaurentPoly q_power(int q_exp) { return monomial(1, 2 * q_exp); }
  /// v + v^-1
  static LaurentPoly v_plus_inverse();
  /// q + q^-1
  static LaurentPoly q_plus_inverse();

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Lowest / highest v-exponent. Undefined on zero.
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }

  Coeff coefficient_of_v(int k) const noexcept;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly scaled(Coeff factor) const;
  LaurentPoly shifted(int v_exp) const;

  /// this += factor * v^shift * other, without temporaries.
  void add_scaled_shifted(const LaurentPoly& other, Coeff factor, int shift);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Terms with exponent < 0 / > 0.
  LaurentPoly negative_part() const;
  LaurentPoly positive_part() const;

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  void merge(const LaurentPoly& other, Coeff sign, int shift);

  std::vector<Term> terms_;
};

// Ring operations in free-function form.
LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly subtract(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly scale(const LaurentPoly& p, Coeff factor);
LaurentPoly negate(const LaurentPoly& p);
LaurentPoly shift_by_v_power(const LaurentPoly& p, int k);

/// v^n -> v^-n.
LaurentPoly bar(const LaurentPoly& p);

/// A polynomial in q: a LaurentPoly supported on even, nonnegative
/// v-exponents. Construction validates.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(LaurentPoly p);

  const LaurentPoly& laurent() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  Coeff coefficient_of_q(int k) const noexcept { return poly_.coefficient_of_v(2 * k); }

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  LaurentPoly poly_;
};

bool is_q_poly(const LaurentPoly& p) noexcept;
QPoly as_q_poly(const LaurentPoly& p);
/// P(q) -> P(q^2).
QPoly substitute_q_squared(const QPoly& p);

/// f == g mod 2, coefficientwise.
bool parity_equal(const LaurentPoly& f, const LaurentPoly& g);
/// (f + g)/2 for sign > 0, (f - g)/2 otherwise; throws parity_violation
/// when a coefficient of f +- g is odd.
LaurentPoly halve_sum(const LaurentPoly& f, const LaurentPoly& g, int sign);

bool is_nonnegative(const LaurentPoly& p) noexcept;
Coeff coefficient_of_v(const LaurentPoly& p, int k) noexcept;

/// Text form. q-sugar is used iff the support is even and nonnegative.
std::string to_string(const LaurentPoly& p);
std::string to_string(const QPoly& p);
/// Accepts both v- and q-forms, e.g. "1+q^2", "v^-1+v", "-3v^2+2", "0".
LaurentPoly parse_laurent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace tklwb
