#include "tklwb/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "tklwb/errors.hpp"

namespace tklwb {

Word Word::from_reduced(std::string letters) { return Word(std::move(letters)); }

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  const int c = a.letters_.compare(b.letters_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// ---- CoxeterSpec ------------------------------------------------------------

CoxeterSpec::CoxeterSpec(int gen_count) : CoxeterSpec(gen_count, {}) {}

CoxeterSpec::CoxeterSpec(int gen_count, std::vector<Generator> star) : gen_count_(gen_count), star_(std::move(star)) {
  if (gen_count < 1 || gen_count > kMaxGenerators)
    fail(ErrorKind::domain, "generator count must be in 1.." + std::to_string(kMaxGenerators));
  if (star_.empty()) {
    for (int s = 0; s < gen_count; ++s) star_.push_back(static_cast<Generator>(s));
  }
  if (star_.size() != static_cast<std::size_t>(gen_count)) fail(ErrorKind::domain, "star must permute every generator");
  for (int s = 0; s < gen_count; ++s) {
    if (star_[s] >= gen_count) fail(ErrorKind::invalid_generator, "star maps outside the generating set");
    if (star_[star_[s]] != s) fail(ErrorKind::domain, "star is not an involution");
  }
}

bool CoxeterSpec::star_is_identity() const noexcept {
  for (int s = 0; s < gen_count_; ++s)
    if (star_[s] != s) return false;
  return true;
}

bool CoxeterSpec::star_fixed_point_free() const noexcept {
  for (int s = 0; s < gen_count_; ++s)
    if (star_[s] == s) return false;
  return true;
}

void CoxeterSpec::validate(const Word& w) const {
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w[i] >= gen_count_) fail(ErrorKind::invalid_generator, "generator out of range in " + to_string(w));
}

namespace {

int letter_index(char ch) {
  if (ch < 'a' || ch > 'z') return -1;
  return ch - 'a';
}

}  // namespace

CoxeterSpec parse_spec(int gen_count, std::string_view text) {
  if (gen_count < 1 || gen_count > kMaxGenerators)
    fail(ErrorKind::parse, "generator count must be in 1.." + std::to_string(kMaxGenerators));
  std::vector<Generator> star(gen_count);
  for (int s = 0; s < gen_count; ++s) star[s] = static_cast<Generator>(s);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) || !s.empty()) s += ch;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s == "id" || s.empty()) return CoxeterSpec(gen_count, star);

  std::vector<bool> used(gen_count, false);
  std::size_t i = 0;
  auto bad = [&](const std::string& why) { fail(ErrorKind::parse, "bad star literal '" + std::string(text) + "': " + why); };
  auto skip_space = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  while (i < s.size()) {
    skip_space();
    if (i >= s.size()) break;
    if (s[i] != '(') bad("expected '('");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i >= s.size()) bad("unterminated cycle");
      if (s[i] == ')') {
        ++i;
        break;
      }
      const int g = letter_index(s[i]);
      if (g < 0) bad("expected a generator letter");
      if (g >= gen_count) fail(ErrorKind::invalid_generator, "star literal names generator outside range");
      cycle.push_back(g);
      ++i;
    }
    if (cycle.size() != 2) bad("each cycle must be a transposition");
    if (cycle[0] == cycle[1]) bad("degenerate transposition");
    for (int g : cycle) {
      if (used[g]) bad("transpositions must be disjoint");
      used[g] = true;
    }
    star[cycle[0]] = static_cast<Generator>(cycle[1]);
    star[cycle[1]] = static_cast<Generator>(cycle[0]);
  }
  return CoxeterSpec(gen_count, star);
}

std::string star_literal(const CoxeterSpec& spec) {
  if (spec.star_is_identity()) return "id";
  std::string out;
  for (int s = 0; s < spec.gen_count(); ++s) {
    const int t = spec.star(static_cast<Generator>(s));
    if (t > s) {
      out += '(';
      out += static_cast<char>('a' + s);
      out += ' ';
      out += static_cast<char>('a' + t);
      out += ')';
    }
  }
  return out;
}

// ---- group arithmetic -------------------------------------------------------

Word reduce(const CoxeterSpec& spec, const std::vector<Generator>& letters) {
  std::string out;
  for (Generator g : letters) {
    if (g >= spec.gen_count()) fail(ErrorKind::invalid_generator, "generator index " + std::to_string(g) + " out of range");
    if (!out.empty() && static_cast<Generator>(out.back()) == g)
      out.pop_back();
    else
      out += static_cast<char>(g);
  }
  return Word::from_reduced(std::move(out));
}

Word multiply(const Word& u, const Word& w) {
  const std::string& a = u.raw();
  const std::string& b = w.raw();
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() && a[a.size() - 1 - cancel] == b[cancel]) ++cancel;
  std::string out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.append(a, 0, a.size() - cancel);
  out.append(b, cancel, std::string::npos);
  return Word::from_reduced(std::move(out));
}

Word inverse(const Word& w) { return Word::from_reduced(std::string(w.raw().rbegin(), w.raw().rend())); }

Word star(const CoxeterSpec& spec, const Word& w) {
  std::string out = w.raw();
  for (char& ch : out) ch = static_cast<char>(spec.star(static_cast<Generator>(ch)));
  return Word::from_reduced(std::move(out));
}

Word dagger(const CoxeterSpec& spec, const Word& w) {
  std::string out(w.raw().rbegin(), w.raw().rend());
  for (char& ch : out) ch = static_cast<char>(spec.star(static_cast<Generator>(ch)));
  return Word::from_reduced(std::move(out));
}

Descents descents(const Word& w) {
  if (w.is_identity()) return {};
  return {w.front(), w.back()};
}

bool bruhat_leq(const Word& y, const Word& w) {
  const std::string& a = y.raw();
  const std::string& b = w.raw();
  if (a.size() > b.size()) return false;
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j)
    if (a[i] == b[j]) ++i;
  return i == a.size();
}

std::vector<Word> bruhat_interval(const Word& w) {
  // Distinct reduced subwords; a subword with a repeated adjacent letter is
  // never needed since its product is a shorter subword already present.
  std::vector<std::string> found{std::string()};
  std::unordered_set<std::string> seen{std::string()};
  for (char c : w.raw()) {
    const std::size_t n = found.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& u = found[i];
      if (!u.empty() && u.back() == c) continue;
      std::string next = u + c;
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  std::vector<Word> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Word::from_reduced(std::move(s)));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- twisted involutions ----------------------------------------------------

bool is_twisted_involution(const CoxeterSpec& spec, const Word& w) { return dagger(spec, w) == w; }

void require_twisted(const CoxeterSpec& spec, const Word& w) {
  if (!is_twisted_involution(spec, w)) fail(ErrorKind::domain, to_string(w) + " is not a twisted involution");
}

bool twist_is_left_multiplication(const CoxeterSpec& spec, Generator s, const Word& w) {
  return multiply(Word::generator(s), w) == multiply(w, Word::generator(spec.star(s)));
}

Word twist(const CoxeterSpec& spec, Generator s, const Word& w) {
  Word sw = multiply(Word::generator(s), w);
  if (sw == multiply(w, Word::generator(spec.star(s)))) return sw;
  return multiply(sw, Word::generator(spec.star(s)));
}

Word twist_sequence(const CoxeterSpec& spec, std::string_view seq, const Word& w) {
  Word out = w;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out = twist(spec, static_cast<Generator>(*it), out);
  return out;
}

Word twist_word(const CoxeterSpec& spec, const Word& x, const Word& w) { return twist_sequence(spec, x.raw(), w); }

std::string istar_expression(const CoxeterSpec& spec, const Word& w) {
  std::string expr;
  Word cur = w;
  while (!cur.is_identity()) {
    const Generator s = cur.front();
    expr += static_cast<char>(s);
    cur = twist(spec, s, cur);
  }
  return expr;
}

int rho(const CoxeterSpec& spec, const Word& w) { return static_cast<int>(istar_expression(spec, w).size()); }

int ell_star(const CoxeterSpec& spec, const Word& w) {
  int count = 0;
  Word cur = w;
  while (!cur.is_identity()) {
    const Generator s = cur.front();
    if (twist_is_left_multiplication(spec, s, cur)) ++count;
    cur = twist(spec, s, cur);
  }
  return count;
}

bool bruhat_leq_twisted(const CoxeterSpec& spec, const Word& y, const Word& w) {
  const std::string a = istar_expression(spec, y);
  const std::string b = istar_expression(spec, w);
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j)
    if (a[i] == b[j]) ++i;
  return i == a.size();
}

std::vector<Word> twisted_interval(const CoxeterSpec& spec, const Word& w) {
  std::vector<Word> out;
  for (auto& y : bruhat_interval(w))
    if (is_twisted_involution(spec, y)) out.push_back(std::move(y));
  return out;
}

// ---- enumeration ------------------------------------------------------------

std::vector<Word> enumerate_words(const CoxeterSpec& spec, int max_len, std::size_t cap) {
  if (max_len < 0) fail(ErrorKind::domain, "negative length bound");
  std::vector<Word> out{Word()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int s = 0; s < spec.gen_count(); ++s) {
        const Word& u = out[i];
        if (!u.is_identity() && u.back() == s) continue;
        if (out.size() >= cap)
          fail(ErrorKind::resource_limit, "word enumeration exceeds element cap " + std::to_string(cap));
        out.push_back(Word::from_reduced(u.raw() + static_cast<char>(s)));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Word> enumerate_involutions(const CoxeterSpec& spec, int max_rho, std::size_t cap) {
  if (max_rho < 0) fail(ErrorKind::domain, "negative rank bound");
  std::vector<Word> out{Word()};
  std::vector<Word> level{Word()};
  for (int r = 1; r <= max_rho; ++r) {
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int s = 0; s < spec.gen_count(); ++s) {
        if (has_left_descent(w, static_cast<Generator>(s))) continue;
        Word t = twist(spec, static_cast<Generator>(s), w);
        if (seen.insert(t).second) {
          if (out.size() + next.size() >= cap)
            fail(ErrorKind::resource_limit, "involution enumeration exceeds element cap " + std::to_string(cap));
          next.push_back(std::move(t));
        }
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

// ---- text -------------------------------------------------------------------

std::string to_string(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out = w.raw();
  for (char& ch : out) ch = static_cast<char>('a' + ch);
  return out;
}

Word parse_word(const CoxeterSpec& spec, std::string_view text) {
  if (text == "e" || text == "1") return Word();
  if (text.empty()) fail(ErrorKind::parse, "empty word literal");
  std::vector<Generator> letters;
  for (char ch : text) {
    const int g = letter_index(ch);
    if (g < 0) fail(ErrorKind::parse, "bad word literal '" + std::string(text) + "'");
    if (g >= spec.gen_count())
      fail(ErrorKind::invalid_generator, "generator '" + std::string(1, ch) + "' outside the declared generators");
    letters.push_back(static_cast<Generator>(g));
  }
  return reduce(spec, letters);
}

}  // namespace tklwb
