#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "tklwb/hecke.hpp"
#include "tklwb/laurent.hpp"
#include "tklwb/word.hpp"

namespace tklwb {

/// Which of the four difference recurrences applies to (y, z, w).
enum class DiffCase { dihedral, generic, fixed_pair, fixed_moving };

/// Auxiliary data of one recurrence step, after descent normalization.
/// Exposed read-only for tests and reports.
struct DiffSetup {
  DiffCase kind = DiffCase::dihedral;
  Word y, z, w;          // normalized: s is not a left descent of y or z
  Generator s = 0, r = 0;
  int k = 0;             // w = (s r s ...)(k+1 factors) ⋉ u
  Word a;                // (... s r s), k factors
  Word u;
  Word y1, z1, w1;       // a ⋉ y, a ⋉ z, a ⋉ w
  Word sws;              // s ⋉ w
  std::vector<Word> us;  // u_0 ... u_k
  std::vector<Word> z_tilde;     // index 1 .. k+1 (slot 0 unused)
  std::vector<Word> z_starred;   // index 1 .. k
  std::vector<Word> z_unstarred; // index 1 .. k
  Word y2, z2, w2;       // a, a z r* or a z, a w s r*
};

/// Normalizes (y, z) at w and builds the recurrence data. Requires y <= z
/// (domain error otherwise) and twisted involutions throughout.
DiffSetup diff_setup(const CoxeterSpec& spec, const Word& y, const Word& z, const Word& w);

/// P^sigma_{y,w} - P^sigma_{z,w} by the difference recurrences, and the
/// companion identities for P_{y,w} - P_{z,w} evaluated on untwisted leaves.
class DiffEngine {
 public:
  DiffEngine(const CoxeterSpec& spec, KLTable& kl) : spec_(spec), kl_(kl) {}

  /// Recursive twisted difference; every intermediate value is checked to lie in N[q].
  const QPoly& twisted(const Word& y, const Word& z, const Word& w);
  /// One step of the untwisted companion: right-hand side built from
  /// P_{.,.} leaves, using the starred or unstarred z_i sequence.
  LaurentPoly untwisted_rhs(const Word& y, const Word& z, const Word& w, bool starred);
  /// P_{y,w} - P_{z,w} directly.
  LaurentPoly untwisted_direct(const Word& y, const Word& z, const Word& w);

 private:
  LaurentPoly kl_difference(const Word& y, const Word& z, const Word& w);

  CoxeterSpec spec_;
  KLTable& kl_;
  std::unordered_map<std::string, QPoly> memo_;
};

/// Convenience wrapper around DiffEngine::twisted.
QPoly tkl_diff_recursive(const Word& y, const Word& z, const Word& w, const CoxeterSpec& spec);

}  // namespace tklwb
