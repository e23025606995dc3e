#include "tklwb/triangular.hpp"

#include "tklwb/errors.hpp"

namespace tklwb {

std::vector<LaurentPoly> solve_bar_invariant(const std::vector<Word>& index,
                                             const std::function<const BasisVector&(std::size_t)>& normalized_bar) {
  const std::size_t n = index.size();
  if (n == 0) fail(ErrorKind::internal_inconsistency, "empty index for bar-invariant solve");
  std::vector<LaurentPoly> g(n);
  std::vector<LaurentPoly> g_bar(n);
  g[n - 1] = LaurentPoly(1);
  g_bar[n - 1] = LaurentPoly(1);

  for (std::size_t i = n - 1; i-- > 0;) {
    const Word& x = index[i];
    if (normalized_bar(i).coefficient(x) != LaurentPoly(1))
      fail(ErrorKind::internal_inconsistency, "bar image is not unitriangular at " + to_string(x));
    LaurentPoly rhs;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g_bar[j].is_zero()) continue;
      const auto& terms = normalized_bar(j).terms();
      auto it = terms.find(x);
      if (it != terms.end()) rhs += g_bar[j] * it->second;
    }
    // g - bar(g) = rhs with g supported in negative degrees.
    g[i] = rhs.negative_part();
    g_bar[i] = bar(g[i]);
    if (rhs.coefficient_of_v(0) != 0 || rhs.positive_part() != -g_bar[i])
      fail(ErrorKind::internal_inconsistency, "right-hand side is not skew-symmetric at " + to_string(x));
  }

  // Full check: applying bar to the solved element reproduces it.
  std::vector<LaurentPoly> image(n);
  std::map<Word, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position.emplace(index[i], i);
  for (std::size_t j = 0; j < n; ++j) {
    if (g_bar[j].is_zero()) continue;
    for (const auto& [x, r] : normalized_bar(j)) {
      auto it = position.find(x);
      if (it == position.end())
        fail(ErrorKind::internal_inconsistency, "bar image leaves the interval at " + to_string(x));
      image[it->second] += g_bar[j] * r;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (image[i] != g[i]) fail(ErrorKind::internal_inconsistency, "solved element is not bar-invariant at " + to_string(index[i]));
  return g;
}

std::vector<std::pair<Word, QPoly>> canonical_row(const std::vector<Word>& index,
                                                  const std::function<BasisVector(const Word&)>& bar_of,
                                                  bool unit_constant) {
  // Normalized basis b~_y = v^-l(y) b_y, so bar(b~_y) = sum_x v^{l(x)+l(y)} r_{x,y} b~_x.
  std::vector<BasisVector> normalized(index.size());
  for (std::size_t j = 0; j < index.size(); ++j) {
    const int ly = static_cast<int>(index[j].length());
    for (const auto& [x, r] : bar_of(index[j])) normalized[j].add(x, r.shifted(ly + static_cast<int>(x.length())));
  }
  const std::vector<LaurentPoly> g =
      solve_bar_invariant(index, [&](std::size_t j) -> const BasisVector& { return normalized[j]; });

  const int lw = static_cast<int>(index.back().length());
  std::vector<std::pair<Word, QPoly>> row;
  row.reserve(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    const int ly = static_cast<int>(index[i].length());
    const LaurentPoly p = g[i].shifted(lw - ly);
    if (!is_q_poly(p))
      fail(ErrorKind::internal_inconsistency, "solved coefficient is not in Z[q] at " + to_string(index[i]));
    QPoly qp(p);
    if (ly < lw && 2 * qp.degree() > lw - ly - 1)
      fail(ErrorKind::internal_inconsistency, "degree bound fails at " + to_string(index[i]));
    if (unit_constant && qp.coefficient_of_q(0) != 1)
      fail(ErrorKind::internal_inconsistency, "constant coefficient is not 1 at " + to_string(index[i]));
    row.emplace_back(index[i], std::move(qp));
  }
  return row;
}

BasisVector eliminate_to_canonical_basis(BasisVector x, const std::function<BasisVector(const Word&)>& expansion,
                                         const std::function<int(const Word&)>& leading_shift) {
  BasisVector out;
  while (!x.is_zero()) {
    const auto top = std::prev(x.terms().end());
    const Word z = top->first;
    const LaurentPoly coeff = top->second.shifted(leading_shift(z));
    out.add(z, coeff);
    x.add_scaled(expansion(z), -coeff);
    if (x.terms().count(z) != 0)
      fail(ErrorKind::internal_inconsistency, "basis element " + to_string(z) + " is not unitriangular");
  }
  return out;
}

}  // namespace tklwb
