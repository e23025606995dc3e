// tklwb: command-line front end for KL and twisted KL computations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "tklwb/errors.hpp"
#include "tklwb/hecke.hpp"
#include "tklwb/io.hpp"
#include "tklwb/module.hpp"
#include "tklwb/positivity.hpp"
#include "tklwb/word.hpp"

using namespace tklwb;
using Json = nlohmann::ordered_json;

namespace {

enum Exit : int { ok = 0, violations = 1, usage = 2, inconsistent = 3, resource = 4 };

struct Config {
  int gens = 3;
  std::string star = "id";
  std::string format = "text";
  std::string cache;
  Bounds bounds;
  int threads = 0;
  bool untwisted = false;
  std::string out;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::internal_inconsistency:
    case ErrorKind::arithmetic_overflow:
    case ErrorKind::parity_violation:
      return inconsistent;
    case ErrorKind::resource_limit:
      return resource;
    default:
      return usage;
  }
}

/// Tables for single queries, backed by the optional cache file.
class Session {
 public:
  Session(const Config& cfg, const CoxeterSpec& spec) : cfg_(cfg), kl_(spec), tkl_(spec) {
    if (cfg_.cache.empty()) return;
    const CacheLoad load = load_cache(cfg_.cache, kl_, tkl_);
    if (load.found && !load.valid) std::cerr << "tklwb: cache header does not match this system; rebuilding\n";
  }
  ~Session() {
    if (cfg_.cache.empty()) return;
    try {
      save_cache(cfg_.cache, kl_, tkl_);
    } catch (const Error& e) {
      std::cerr << "tklwb: " << e.what() << '\n';
    }
  }
  KLTable& kl() { return kl_; }
  TKLTable& tkl() { return tkl_; }

 private:
  const Config& cfg_;
  KLTable kl_;
  TKLTable tkl_;
};

std::string poly_output(const Config& cfg, const Word& y, const Word& w, const std::string& poly) {
  if (cfg.format == "json") return Json{{"y", to_string(y)}, {"w", to_string(w)}, {"poly", poly}}.dump() + '\n';
  if (cfg.format == "tsv") return to_string(y) + '\t' + to_string(w) + '\t' + poly + '\n';
  return poly + '\n';
}

std::string vectors_output(const Config& cfg, const std::vector<std::pair<std::string, BasisVector>>& parts) {
  if (cfg.format == "json") {
    if (parts.size() == 1) return vector_json(parts[0].second, parts[0].first).dump() + '\n';
    Json all = Json::array();
    for (const auto& [basis, v] : parts) all.push_back(vector_json(v, basis));
    return all.dump() + '\n';
  }
  if (parts.size() == 1) return to_text(parts[0].second);
  std::string out;
  for (const auto& [basis, v] : parts) out += "# " + basis + '\n' + to_text(v);
  return out;
}

int emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return ok;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) fail(ErrorKind::domain, "cannot write " + cfg.out);
  file << text;
  return ok;
}

int threads_of(const Config& cfg) { return cfg.threads > 0 ? cfg.threads : omp_get_max_threads(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig and twisted Kazhdan-Lusztig polynomials for universal Coxeter systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--gens", cfg.gens, "Number of generators (1..26)")->capture_default_str();
  app.add_option("--star", cfg.star, "Diagram involution: id or disjoint transpositions like \"(a b)(c d)\"")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}))->capture_default_str();
  app.add_option("--cache", cfg.cache, "Table cache file (read before, written after single queries)");
  app.add_option("--max-rho", cfg.bounds.max_rho, "Bound on rho for twisted-involution indices")->capture_default_str();
  app.add_option("--max-len", cfg.bounds.max_len, "Bound on length for free group-element indices")->capture_default_str();
  app.add_option("--cap", cfg.bounds.cap, "Element cap for enumerations")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads for sweeps and dumps (0 = all cores)")->capture_default_str();
  app.add_flag("--untwisted", cfg.untwisted, "structure/mult: also print the untwisted c-basis expansion");
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  std::string y_text, w_text, check;
  int enum_rho = 0;
  auto* kl_cmd = app.add_subcommand("kl", "P_{y,w}");
  auto* tkl_cmd = app.add_subcommand("tkl", "P^sigma_{y,w}");
  auto* pm_cmd = app.add_subcommand("pm", "P^+_{y,w} and P^-_{y,w}");
  auto* structure_cmd = app.add_subcommand("structure", "C_x A_y in the A basis");
  auto* mult_cmd = app.add_subcommand("mult", "C_s A_w in the A basis");
  for (auto* cmd : {kl_cmd, tkl_cmd, pm_cmd, structure_cmd, mult_cmd}) {
    cmd->add_option("first", y_text, "First word")->required();
    cmd->add_option("second", w_text, "Second word")->required();
  }
  auto* enum_cmd = app.add_subcommand("enum", "List twisted involutions with rho, length and ell*");
  enum_cmd->add_option("max_rho", enum_rho, "Largest rho")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep and print its report");
  verify_cmd->add_option("check", check, "Check id")->required()->check(CLI::IsMember(check_ids()));
  auto* dump_cmd = app.add_subcommand("dump", "Write P, Psig, h, htilde and hsig tables in cache format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    const CoxeterSpec spec = parse_spec(cfg.gens, cfg.star);
    auto word = [&](const std::string& text) { return parse_word(spec, text); };

    if (kl_cmd->parsed()) {
      Session s(cfg, spec);
      const Word y = word(y_text), w = word(w_text);
      return emit(cfg, poly_output(cfg, y, w, to_string(kl_fast(y, w, s.kl()))));
    }
    if (tkl_cmd->parsed()) {
      Session s(cfg, spec);
      const Word y = word(y_text), w = word(w_text);
      return emit(cfg, poly_output(cfg, y, w, to_string(tkl_fast(y, w, s.tkl()))));
    }
    if (pm_cmd->parsed()) {
      Session s(cfg, spec);
      const Word y = word(y_text), w = word(w_text);
      const PlusMinusPair pm = p_plus_minus(y, w, s.kl(), s.tkl());
      const std::string plus = to_string(pm.plus), minus = to_string(pm.minus);
      if (cfg.format == "json")
        return emit(cfg, Json{{"y", to_string(y)}, {"w", to_string(w)}, {"plus", plus}, {"minus", minus}}.dump() + '\n');
      if (cfg.format == "tsv") return emit(cfg, to_string(y) + '\t' + to_string(w) + '\t' + plus + '\t' + minus + '\n');
      return emit(cfg, "plus: " + plus + "  minus: " + minus + '\n');
    }
    if (structure_cmd->parsed()) {
      Session s(cfg, spec);
      const Word x = word(y_text), y = word(w_text);
      std::vector<std::pair<std::string, BasisVector>> parts = {{"A", h_sigma(spec, x, y)}};
      if (cfg.untwisted) parts.emplace_back("c", h_tilde(x, y, s.kl()));
      return emit(cfg, vectors_output(cfg, parts));
    }
    if (mult_cmd->parsed()) {
      Session s(cfg, spec);
      const Word sw = word(y_text), w = word(w_text);
      if (sw.length() != 1) fail(ErrorKind::parse, "mult expects a single generator, got " + y_text);
      std::vector<std::pair<std::string, BasisVector>> parts = {{"A", cs_times_A(sw.front(), w, s.tkl())}};
      if (cfg.untwisted) parts.emplace_back("c", kl_product(sw, w));
      return emit(cfg, vectors_output(cfg, parts));
    }
    if (enum_cmd->parsed()) {
      const auto inv = enumerate_involutions(spec, enum_rho, cfg.bounds.cap);
      std::string text;
      Json rows = Json::array();
      for (const Word& w : inv) {
        const int r = rho(spec, w), l = static_cast<int>(w.length()), ls = ell_star(spec, w);
        if (cfg.format == "json") rows.push_back({{"w", to_string(w)}, {"rho", r}, {"length", l}, {"ell_star", ls}});
        else text += to_string(w) + '\t' + std::to_string(r) + '\t' + std::to_string(l) + '\t' + std::to_string(ls) + '\n';
      }
      return emit(cfg, cfg.format == "json" ? rows.dump() + '\n' : text);
    }
    if (verify_cmd->parsed()) {
      const SweepReport report = verify(check, spec, cfg.bounds, threads_of(cfg));
      emit(cfg, to_json(report).dump(2) + '\n');
      return report.passed() ? ok : violations;
    }
    if (dump_cmd->parsed()) return emit(cfg, dump_tables(spec, cfg.bounds, threads_of(cfg)));
  } catch (const Error& e) {
    std::cerr << "tklwb: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "tklwb: resource-limit: out of memory\n";
    return resource;
  }
  return usage;
}
