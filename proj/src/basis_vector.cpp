#include "tklwb/basis_vector.hpp"

namespace tklwb {

BasisVector BasisVector::single(const Word& w, LaurentPoly coeff) {
  BasisVector out;
  out.add(w, coeff);
  return out;
}

LaurentPoly BasisVector::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void BasisVector::add(const Word& w, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void BasisVector::add_scaled(const BasisVector& other, const LaurentPoly& factor) {
  if (factor.is_zero()) return;
  for (const auto& [w, c] : other.terms_) add(w, c * factor);
}

void BasisVector::add_shifted(const BasisVector& other, Coeff factor, int v_shift) {
  if (factor == 0) return;
  for (const auto& [w, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(w);
    it->second.add_scaled_shifted(c, factor, v_shift);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BasisVector& BasisVector::operator+=(const BasisVector& other) {
  add_shifted(other, 1, 0);
  return *this;
}

BasisVector& BasisVector::operator-=(const BasisVector& other) {
  add_shifted(other, -1, 0);
  return *this;
}

BasisVector BasisVector::scaled(const LaurentPoly& factor) const {
  BasisVector out;
  out.add_scaled(*this, factor);
  return out;
}

BasisVector BasisVector::filtered(const std::function<bool(const Word&)>& keep) const {
  BasisVector out;
  for (const auto& [w, c] : terms_)
    if (keep(w)) out.terms_.emplace(w, c);
  return out;
}

std::string to_text(const BasisVector& v) {
  if (v.is_zero()) return "0\n";
  std::string out;
  for (const auto& [w, c] : v) {
    out += to_string(w);
    out += '\t';
    out += to_string(c);
    out += '\n';
  }
  return out;
}

}  // namespace tklwb
