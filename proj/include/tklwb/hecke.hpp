#pragma once

#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tklwb/basis_vector.hpp"
#include "tklwb/laurent.hpp"
#include "tklwb/word.hpp"

namespace tklwb {

/// Parameter exponent e: H_q (basis t) for e = 1, H_{q^2} (basis T) for e = 2.
enum class HeckeParam : int { q = 1, q2 = 2 };

inline int exponent(HeckeParam p) noexcept { return static_cast<int>(p); }

/// Element of H_q or H_{q^2} in the standard basis.
struct HeckeElt {
  HeckeParam param = HeckeParam::q;
  BasisVector terms;

  static HeckeElt basis(HeckeParam param, const Word& w, LaurentPoly coeff = LaurentPoly(1));
  static HeckeElt identity(HeckeParam param) { return basis(param, Word()); }

  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;
};

/// Coefficients in the KL basis (c for H_q, C for H_{q^2}).
using KLVector = BasisVector;

/// Row of P_{., w}: every y <= w with its polynomial, canonical order.
using KLRow = std::vector<std::pair<Word, QPoly>>;

/// Memo of Kazhdan-Lusztig polynomials for one Coxeter system.
///
/// Not thread-safe: one writer at a time. Parallel sweeps give every worker
/// its own table.
class KLTable {
 public:
  explicit KLTable(CoxeterSpec spec) : spec_(std::move(spec)) {}

  const CoxeterSpec& spec() const noexcept { return spec_; }

  /// P_{y,w} via the universal recurrences; memoized.
  const QPoly& p(const Word& y, const Word& w);
  /// Every P_{y,w} for y <= w via the fast path.
  const KLRow& row(const Word& w);
  /// Every P_{y,w} for y <= w via the bar-triangular oracle.
  const KLRow& oracle_row(const Word& w);
  /// bar(t_w) in H_q.
  const HeckeElt& bar_standard(const Word& w);

  /// Seeds the memo (cache loading). Entries must be correct values.
  void insert(const Word& y, const Word& w, QPoly value);
  /// Memoized (y, w, P) in canonical (w, y) order, nonzero entries only.
  std::vector<std::tuple<Word, Word, QPoly>> entries() const;
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  QPoly compute(const Word& y, const Word& w);

  CoxeterSpec spec_;
  std::unordered_map<std::string, QPoly> memo_;
  std::unordered_map<Word, KLRow, WordHash> rows_;
  std::unordered_map<Word, KLRow, WordHash> oracle_rows_;
  std::unordered_map<Word, HeckeElt, WordHash> bar_;
};

/// Key for (y, w) memo tables.
std::string pair_key(const Word& y, const Word& w);

// ---- standard basis arithmetic ---------------------------------------------

/// t_s * h.
HeckeElt gen_mul_left(Generator s, const HeckeElt& h);
/// t_s^-1 * h, with t_s^-1 = q^-e t_s + (q^-e - 1).
HeckeElt gen_inverse_mul_left(Generator s, const HeckeElt& h);
HeckeElt mul(const HeckeElt& a, const HeckeElt& b);
/// (t_w)^-1.
HeckeElt t_inverse(HeckeParam param, const Word& w);
HeckeElt bar_hecke(const HeckeElt& h);
/// A-linear anti-automorphism with t_w -> t_{w^dagger}.
HeckeElt dagger_hecke(const CoxeterSpec& spec, const HeckeElt& h);

// ---- Kazhdan-Lusztig polynomials --------------------------------------------

/// Bar-triangular solve for c_w: returns P_{y,w} for every y <= w and checks
/// bar-invariance, membership in Z[q] and the degree bound.
KLRow kl_oracle(const Word& w, const CoxeterSpec& spec);
inline const KLRow& kl_oracle(const Word& w, KLTable& table) { return table.oracle_row(w); }
/// P_{y,w} via descent reductions and the alternating-prefix recurrence.
QPoly kl_fast(const Word& y, const Word& w, KLTable& table);
/// P_{y,w} - P_{z,w}; requires y <= z.
QPoly kl_diff(const Word& y, const Word& z, const Word& w, KLTable& table);
/// Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}, or 0.
Coeff mu(const Word& y, const Word& w, KLTable& table);

/// c_w (e = 1) or C_w (e = 2) in the standard basis.
HeckeElt kl_basis_element(const Word& w, HeckeParam param, KLTable& table);
/// Writes a standard-basis element in the KL basis.
KLVector to_kl_basis(const HeckeElt& h, KLTable& table);

// ---- structure constants ----------------------------------------------------

/// c(w, j): the correction term recursion over the reduced word of w.
KLVector c_of(const Word& w, int j);
/// c_x c_y in the c basis by the universal product formula.
KLVector kl_product(const Word& x, const Word& y);
/// c_x c_y by standard-basis multiplication and change of basis.
KLVector kl_product_direct(const Word& x, const Word& y, KLTable& table);
/// c_x c_y c_{x^dagger} in the c basis, via two kl_product steps.
KLVector h_tilde(const Word& x, const Word& y, KLTable& table);
/// Same triple product through the standard basis.
KLVector h_tilde_direct(const Word& x, const Word& y, KLTable& table);

/// Multiplies two c-basis vectors using kl_product termwise.
KLVector kl_vector_product(const KLVector& a, const KLVector& b);

}  // namespace tklwb
