#include "tklwb/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "tklwb/errors.hpp"

namespace tklwb {

std::string cache_header(const CoxeterSpec& spec) {
  return "tklwb-cache v1 gens=" + std::to_string(spec.gen_count()) + " star=" + star_literal(spec);
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

void append_line(std::string& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const std::string& f : fields) {
    if (!first) out += '\t';
    out += f;
    first = false;
  }
  out += '\n';
}

void append_entries(std::string& out, const char* tag, const std::vector<std::tuple<Word, Word, QPoly>>& entries) {
  for (const auto& [y, w, p] : entries) append_line(out, {tag, to_string(y), to_string(w), to_string(p)});
}

void append_vector(std::string& out, const char* tag, const Word& x, const Word& y, const BasisVector& v) {
  for (const auto& [z, c] : v) append_line(out, {tag, to_string(x), to_string(y), to_string(z), to_string(c)});
}

/// Builds one text block per item, in parallel when threads > 1, and joins them in item order.
template <typename Fn>
std::string ordered_blocks(std::size_t count, int threads, const CoxeterSpec& spec, Fn block) {
  std::vector<std::string> blocks(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(threads > 1 ? threads : 1)
  {
    KLTable kl(spec);
    TKLTable tkl(spec);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        blocks[k] = block(k, kl, tkl);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::string out;
  for (const std::string& b : blocks) out += b;
  return out;
}

}  // namespace

CacheLoad load_cache(const std::string& path, KLTable& kl, TKLTable& tkl) {
  CacheLoad result;
  std::ifstream in(path);
  if (!in) return result;
  result.found = true;
  std::string line;
  if (!std::getline(in, line) || line != cache_header(kl.spec())) return result;
  result.valid = true;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    const bool untwisted = fields[0] == "P";
    if (!untwisted && fields[0] != "Psig") continue;
    if (fields.size() != 4) fail(ErrorKind::parse, path + ":" + std::to_string(line_no) + ": expected 4 fields");
    const Word y = parse_word(kl.spec(), fields[1]);
    const Word w = parse_word(kl.spec(), fields[2]);
    QPoly p = as_q_poly(parse_laurent(fields[3]));
    if (untwisted) kl.insert(y, w, std::move(p));
    else tkl.insert(y, w, std::move(p));
    ++result.loaded;
  }
  return result;
}

void save_cache(const std::string& path, const KLTable& kl, const TKLTable& tkl) {
  std::string out = cache_header(kl.spec()) + '\n';
  append_entries(out, "P", kl.entries());
  append_entries(out, "Psig", tkl.entries());
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) fail(ErrorKind::domain, "cannot write cache file " + path);
  file << out;
}

std::string dump_tables(const CoxeterSpec& spec, const Bounds& bounds, int threads) {
  const auto words = enumerate_words(spec, bounds.max_len, bounds.cap);
  const auto inv = enumerate_involutions(spec, bounds.max_rho, bounds.cap);
  std::string out = cache_header(spec) + '\n';

  out += ordered_blocks(words.size(), threads, spec, [&](std::size_t i, KLTable& kl, TKLTable&) {
    std::string block;
    for (const auto& [y, p] : kl.row(words[i])) append_line(block, {"P", to_string(y), to_string(words[i]), to_string(p)});
    return block;
  });
  out += ordered_blocks(inv.size(), threads, spec, [&](std::size_t i, KLTable&, TKLTable& tkl) {
    std::string block;
    for (const auto& [y, p] : tkl.row(inv[i])) append_line(block, {"Psig", to_string(y), to_string(inv[i]), to_string(p)});
    return block;
  });
  out += ordered_blocks(words.size(), threads, spec, [&](std::size_t i, KLTable&, TKLTable&) {
    std::string block;
    for (const Word& y : words) append_vector(block, "h", words[i], y, kl_product(words[i], y));
    return block;
  });
  out += ordered_blocks(words.size(), threads, spec, [&](std::size_t i, KLTable& kl, TKLTable&) {
    std::string block;
    for (const Word& y : inv) append_vector(block, "htilde", words[i], y, h_tilde(words[i], y, kl));
    return block;
  });
  out += ordered_blocks(words.size(), threads, spec, [&](std::size_t i, KLTable&, TKLTable&) {
    std::string block;
    for (const Word& y : inv) append_vector(block, "hsig", words[i], y, h_sigma(spec, words[i], y));
    return block;
  });
  return out;
}

nlohmann::ordered_json vector_json(const BasisVector& v, const std::string& basis) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : v) terms.push_back({to_string(w), to_string(c)});
  nlohmann::ordered_json j;
  j["basis"] = basis;
  j["terms"] = terms;
  return j;
}

}  // namespace tklwb
