#pragma once

#include <string>

#include "json.hpp"
#include "tklwb/basis_vector.hpp"
#include "tklwb/hecke.hpp"
#include "tklwb/module.hpp"
#include "tklwb/positivity.hpp"

namespace tklwb {

/// "tklwb-cache v1 gens=<n> star=<perm>".
std::string cache_header(const CoxeterSpec& spec);

/// Outcome of reading a cache file.
struct CacheLoad {
  bool found = false;     // the file exists
  bool valid = false;     // header matches the spec
  std::size_t loaded = 0; // P and Psig lines inserted
};

/// Reads P and Psig lines into the tables; other line kinds are skipped.
/// A missing file or a header for another system loads nothing. Malformed
/// lines under a matching header raise a parse error.
CacheLoad load_cache(const std::string& path, KLTable& kl, TKLTable& tkl);

/// Writes every nonzero memoized P and P^sigma value, canonical order.
void save_cache(const std::string& path, const KLTable& kl, const TKLTable& tkl);

/// Full tables in cache format: P for l(w) <= max_len; Psig for rho(w) <= max_rho;
/// h for l(x), l(y) <= max_len; htilde and hsig for l(x) <= max_len, rho(y) <= max_rho.
/// Output is identical for every thread count.
std::string dump_tables(const CoxeterSpec& spec, const Bounds& bounds, int threads = 1);

/// {"basis": basis, "terms": [[word, poly], ...]}.
nlohmann::ordered_json vector_json(const BasisVector& v, const std::string& basis);

}  // namespace tklwb
