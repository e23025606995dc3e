#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tklwb/hecke.hpp"
#include "tklwb/laurent.hpp"
#include "tklwb/module.hpp"
#include "tklwb/word.hpp"

namespace tklwb {

/// Half-sum and half-difference of an untwisted and a twisted quantity.
struct PlusMinusPair {
  LaurentPoly plus;
  LaurentPoly minus;

  friend bool operator==(const PlusMinusPair&, const PlusMinusPair&) = default;
};

/// (P_{y,w} +- P^sigma_{y,w}) / 2. Throws parity_violation if P and P^sigma
/// differ mod 2.
PlusMinusPair p_plus_minus(const Word& y, const Word& w, KLTable& kl, TKLTable& tkl);

/// z -> (h~_{x,y;z} +- h^sigma_{x,y;z}) / 2 over z in I_*, canonical order.
std::vector<std::pair<Word, PlusMinusPair>> h_plus_minus(const Word& x, const Word& y, KLTable& kl);

/// Sweep bounds: max rho for I_* indices, max length for free W indices.
struct Bounds {
  int max_rho = 4;
  int max_len = 4;
  std::size_t cap = kDefaultElementCap;
};

struct Violation {
  std::string check;
  std::vector<Word> witness;
  std::string detail;
};

struct SweepReport {
  CoxeterSpec spec{1};
  Bounds bounds;
  std::string check;
  std::uint64_t tuples_checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool passed() const noexcept { return violations.empty(); }
};

/// Recognized check ids, in a fixed order.
const std::vector<std::string>& check_ids();

/// Runs one check exhaustively within bounds. threads <= 1 runs the serial
/// reference; otherwise items are split across OpenMP workers, each with
/// private tables, and merged in canonical item order. Throws domain for an
/// unknown check and resource_limit when an enumeration exceeds the cap.
SweepReport verify(const std::string& check, const CoxeterSpec& spec, const Bounds& bounds, int threads = 1);

/// Report JSON with stable key order. Timing is omitted when include_timing is false.
nlohmann::ordered_json to_json(const SweepReport& report, bool include_timing = true);

}  // namespace tklwb
