#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tklwb {

using Generator = std::uint8_t;

inline constexpr int kMaxGenerators = 26;
inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Element of a universal Coxeter group, stored as its unique reduced word.
///
/// Letters are raw generator indices (0 = 'a'). The invariant "no two equal
/// adjacent letters" is established by reduce() and preserved by every
/// operation here. Ordering is the canonical (length, lexicographic) order
/// used for all tables and reports.
class Word {
 public:
  Word() = default;

  /// Wraps letters already known to be reduced. Use reduce() otherwise.
  static Word from_reduced(std::string letters);

  static Word generator(Generator s) { return from_reduced(std::string(1, static_cast<char>(s))); }

  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Generator operator[](std::size_t i) const noexcept { return static_cast<Generator>(letters_[i]); }
  Generator front() const noexcept { return static_cast<Generator>(letters_.front()); }
  Generator back() const noexcept { return static_cast<Generator>(letters_.back()); }

  /// Raw letter bytes; also serves as a hash key.
  const std::string& raw() const noexcept { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.raw()); }
};

/// Number of generators plus the diagram involution on them.
class CoxeterSpec {
 public:
  /// Identity involution on `gen_count` generators.
  explicit CoxeterSpec(int gen_count);
  CoxeterSpec(int gen_count, std::vector<Generator> star);

  int gen_count() const noexcept { return gen_count_; }
  Generator star(Generator s) const noexcept { return star_[s]; }
  const std::vector<Generator>& star_map() const noexcept { return star_; }
  bool star_is_identity() const noexcept;
  bool star_fixes(Generator s) const noexcept { return star_[s] == s; }
  bool star_fixed_point_free() const noexcept;

  /// Throws invalid_generator unless every letter of w is < gen_count.
  void validate(const Word& w) const;

  friend bool operator==(const CoxeterSpec&, const CoxeterSpec&) = default;

 private:
  int gen_count_;
  std::vector<Generator> star_;
};

/// "id" or disjoint transpositions such as "(a b)(c d)".
CoxeterSpec parse_spec(int gen_count, std::string_view star_literal);
/// Inverse of the star parser: "id" or "(a b)(c d)" in ascending order.
std::string star_literal(const CoxeterSpec& spec);

// ---- group arithmetic -------------------------------------------------------

/// Reduced form of a raw generator sequence; rejects indices >= gen_count.
Word reduce(const CoxeterSpec& spec, const std::vector<Generator>& letters);
Word multiply(const Word& u, const Word& w);
Word inverse(const Word& w);
Word star(const CoxeterSpec& spec, const Word& w);
/// w -> (w*)^-1
Word dagger(const CoxeterSpec& spec, const Word& w);

struct Descents {
  std::optional<Generator> left;
  std::optional<Generator> right;
};
Descents descents(const Word& w);
inline bool has_left_descent(const Word& w, Generator s) { return !w.is_identity() && w.front() == s; }
inline bool has_right_descent(const Word& w, Generator s) { return !w.is_identity() && w.back() == s; }

/// Bruhat order: subsequence test on the unique reduced words.
bool bruhat_leq(const Word& y, const Word& w);

/// All y <= w, in canonical order.
std::vector<Word> bruhat_interval(const Word& w);

// ---- twisted involutions ----------------------------------------------------

bool is_twisted_involution(const CoxeterSpec& spec, const Word& w);
/// Throws domain error unless w is a twisted involution.
void require_twisted(const CoxeterSpec& spec, const Word& w);

/// s ⋉ w: sw when sw = ws*, else sws*.
Word twist(const CoxeterSpec& spec, Generator s, const Word& w);
/// True iff s ⋉ w = sw (the "sw = ws*" case).
bool twist_is_left_multiplication(const CoxeterSpec& spec, Generator s, const Word& w);
/// x ⋉ w, folding twist over the letters of x from the right.
Word twist_word(const CoxeterSpec& spec, const Word& x, const Word& w);
/// Folds an arbitrary generator sequence (s_1, ..., s_k) onto w.
Word twist_sequence(const CoxeterSpec& spec, std::string_view seq, const Word& w);

/// Unique reduced I_*-expression, as raw letters (s_1, ..., s_k) with
/// w = s_1 ⋉ (s_2 ⋉ (... ⋉ (s_k ⋉ 1))).
std::string istar_expression(const CoxeterSpec& spec, const Word& w);
int rho(const CoxeterSpec& spec, const Word& w);
int ell_star(const CoxeterSpec& spec, const Word& w);
bool bruhat_leq_twisted(const CoxeterSpec& spec, const Word& y, const Word& w);

/// All twisted involutions y <= w, in canonical order.
std::vector<Word> twisted_interval(const CoxeterSpec& spec, const Word& w);

// ---- enumeration ------------------------------------------------------------

/// All reduced words of length <= max_len in (length, lex) order.
std::vector<Word> enumerate_words(const CoxeterSpec& spec, int max_len, std::size_t cap = kDefaultElementCap);
/// All twisted involutions with rho <= max_rho, ordered by (rho, length, lex).
std::vector<Word> enumerate_involutions(const CoxeterSpec& spec, int max_rho,
                                        std::size_t cap = kDefaultElementCap);

// ---- text -------------------------------------------------------------------

std::string to_string(const Word& w);
/// "e" or letters; raw sequences are reduced.
Word parse_word(const CoxeterSpec& spec, std::string_view text);

}  // namespace tklwb
