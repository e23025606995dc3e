#pragma once

#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "tklwb/basis_vector.hpp"
#include "tklwb/hecke.hpp"
#include "tklwb/laurent.hpp"
#include "tklwb/word.hpp"

namespace tklwb {

/// Element of M_{q^2} in the standard basis a_w, or an A-basis coefficient
/// vector; indices are twisted involutions.
using ModuleElt = BasisVector;

/// Which path supplies P^sigma to the derived coefficient functions.
enum class Source { fast, oracle };

/// Memo of twisted Kazhdan-Lusztig polynomials for one Coxeter system.
/// Single-writer, like KLTable.
class TKLTable {
 public:
  explicit TKLTable(CoxeterSpec spec, Source source = Source::fast)
      : spec_(std::move(spec)), source_(source) {}

  const CoxeterSpec& spec() const noexcept { return spec_; }
  Source source() const noexcept { return source_; }
  void set_source(Source source) noexcept { source_ = source; }

  /// P^sigma_{y,w} by the universal recurrence; memoized.
  const QPoly& p(const Word& y, const Word& w);
  /// P^sigma_{y,w} from the selected source.
  const QPoly& value(const Word& y, const Word& w);
  /// P^sigma_{y,w} read off the oracle row of w.
  const QPoly& oracle_value(const Word& y, const Word& w);

  /// Every twisted y <= w with P^sigma_{y,w}, fast path.
  const KLRow& row(const Word& w);
  /// Same row by the bar-triangular solve.
  const KLRow& oracle_row(const Word& w);
  /// bar(a_y) in the standard basis.
  const ModuleElt& bar_standard(const Word& y);

  void insert(const Word& y, const Word& w, QPoly value);
  /// Memoized fast-path entries in canonical (w, y) order, nonzero only.
  std::vector<std::tuple<Word, Word, QPoly>> entries() const;

 private:
  QPoly compute(const Word& y, const Word& w);

  CoxeterSpec spec_;
  Source source_;
  std::unordered_map<std::string, QPoly> memo_;
  std::unordered_map<std::string, QPoly> oracle_memo_;
  std::unordered_map<Word, KLRow, WordHash> rows_;
  std::unordered_map<Word, KLRow, WordHash> oracle_rows_;
  std::unordered_map<Word, ModuleElt, WordHash> bar_;
};

// ---- module structure -------------------------------------------------------

/// T_s * m.
ModuleElt gen_action(const CoxeterSpec& spec, Generator s, const ModuleElt& m);
/// T_s^-1 * m = q^-2 T_s m + (q^-2 - 1) m.
ModuleElt gen_inverse_action(const CoxeterSpec& spec, Generator s, const ModuleElt& m);
/// h * m for h in H_{q^2}; domain error for any other parameter.
ModuleElt hecke_action(const CoxeterSpec& spec, const HeckeElt& h, const ModuleElt& m);
ModuleElt bar_module(const CoxeterSpec& spec, const ModuleElt& m);

// ---- twisted Kazhdan-Lusztig polynomials ------------------------------------

/// Bar-triangular solve for A_w; verifies bar-invariance, Z[q] membership,
/// the degree bound and constant coefficient 1.
KLRow tkl_oracle(const Word& w, const CoxeterSpec& spec);
inline const KLRow& tkl_oracle(const Word& w, TKLTable& table) { return table.oracle_row(w); }
/// P^sigma_{y,w} by descent reduction and the universal recurrence.
QPoly tkl_fast(const Word& y, const Word& w, TKLTable& table);

/// A_w (e = 2) in the standard basis.
ModuleElt a_element(const Word& w, TKLTable& table);
/// Writes a standard-basis element in the A basis.
ModuleElt to_a_basis(const ModuleElt& m, TKLTable& table);

// ---- coefficient system -----------------------------------------------------

Coeff mu_sigma(const Word& y, const Word& w, TKLTable& table);
Coeff nu_sigma(const Word& y, const Word& w, TKLTable& table);
/// Requires s in Des_L(y) \ Des_L(w).
Coeff mu_sigma_s(const Word& y, const Word& w, Generator s, TKLTable& table);
/// m^sigma(y -s-> w); requires s in Des_L(y) \ Des_L(w).
LaurentPoly m_sigma(const Word& y, const Word& w, Generator s, TKLTable& table);
/// Universal closed form: 1 if y = r w r* or (y, w) = (s, r) with {r} = Des_L(w), else 0.
LaurentPoly m_sigma_closed_form(const CoxeterSpec& spec, const Word& y, const Word& w, Generator s);

// ---- multiplication by C_s and C_x ------------------------------------------

/// C_s A_w in the A basis from the m^sigma expansion.
ModuleElt cs_times_A(Generator s, const Word& w, TKLTable& table);
/// Universal closed form of C_s A_w.
ModuleElt cs_times_A_closed(const CoxeterSpec& spec, Generator s, const Word& w);
/// C_s A_w via the standard basis and triangular re-expansion.
ModuleElt cs_times_A_direct(Generator s, const Word& w, TKLTable& table);

/// A(w, j): the correction recursion over the I_*-expression of w.
ModuleElt a_of(const CoxeterSpec& spec, const Word& w, int j);
/// C_x A_y in the A basis by the universal product formula.
ModuleElt h_sigma(const CoxeterSpec& spec, const Word& x, const Word& y);
/// C_x A_y through the T basis action and triangular re-expansion.
ModuleElt h_sigma_direct(const Word& x, const Word& y, KLTable& kl, TKLTable& tkl);

}  // namespace tklwb
