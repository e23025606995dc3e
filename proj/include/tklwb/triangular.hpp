#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tklwb/basis_vector.hpp"

namespace tklwb {

/// Bar-triangular fixed-point solve shared by the two oracles.
///
/// `index` lists the standard-basis indices below the top element in
/// canonical ascending order, ending with the top. `normalized_bar(i)` is the
/// bar image of the normalized basis element b~_y = v^-l(y) b_y written in the
/// same normalized basis; it must be unitriangular.
///
/// Returns g_y for each index with g_top = 1, g_y in v^-1 Z[v^-1], such that
/// sum_y g_y b~_y is bar-invariant. Throws internal_inconsistency when the
/// input is not unitriangular or when the solved element is not bar-invariant.
std::vector<LaurentPoly> solve_bar_invariant(const std::vector<Word>& index,
                                             const std::function<const BasisVector&(std::size_t)>& normalized_bar);

/// Polynomials of a canonical basis element over an interval.
///
/// `index` is the interval below the top element in canonical order, ending
/// with the top; `bar_of(y)` is the bar image of the standard basis element
/// y. Returns (y, P_y) with the top element normalized by v^-l(top), and
/// checks Z[q] membership and the degree bound (plus constant coefficient 1
/// when `unit_constant`), raising internal_inconsistency otherwise.
std::vector<std::pair<Word, QPoly>> canonical_row(const std::vector<Word>& index,
                                                  const std::function<BasisVector(const Word&)>& bar_of,
                                                  bool unit_constant);

/// Re-expresses `x` in a unitriangular basis (c, C or A) by top-down
/// elimination in (length desc, lex) order. `expansion(z)` is the basis
/// element indexed by z written in the standard basis; its top coefficient
/// must be v^-leading_shift(z).
BasisVector eliminate_to_canonical_basis(BasisVector x, const std::function<BasisVector(const Word&)>& expansion,
                                         const std::function<int(const Word&)>& leading_shift);

}  // namespace tklwb
