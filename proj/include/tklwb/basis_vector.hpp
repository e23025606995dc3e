#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "tklwb/laurent.hpp"
#include "tklwb/word.hpp"

namespace tklwb {

/// Finite A-linear combination of basis elements indexed by words, kept in
/// canonical word order with no zero coefficients. Used for the t/T, c/C
/// and a/A bases alike; which basis is meant is up to the caller.
class BasisVector {
 public:
  using Map = std::map<Word, LaurentPoly>;

  BasisVector() = default;
  static BasisVector single(const Word& w, LaurentPoly coeff = LaurentPoly(1));

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of w (zero if absent).
  LaurentPoly coefficient(const Word& w) const;

  void add(const Word& w, const LaurentPoly& coeff);
  /// this += factor * v^shift * other
  void add_scaled(const BasisVector& other, const LaurentPoly& factor);
  void add_shifted(const BasisVector& other, Coeff factor, int v_shift);
  void erase(const Word& w) { terms_.erase(w); }

  BasisVector& operator+=(const BasisVector& other);
  BasisVector& operator-=(const BasisVector& other);
  friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
  friend BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }
  BasisVector scaled(const LaurentPoly& factor) const;

  friend bool operator==(const BasisVector&, const BasisVector&) = default;

  /// Drops every term whose index fails `keep`.
  BasisVector filtered(const std::function<bool(const Word&)>& keep) const;

 private:
  Map terms_;
};

/// "word<TAB>poly" lines in canonical order; "0" alone for the zero vector.
std::string to_text(const BasisVector& v);

}  // namespace tklwb
