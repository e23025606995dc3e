#include "tklwb/diff_recursion.hpp"

#include <set>

#include "tklwb/errors.hpp"

namespace tklwb {

namespace {

Word gen(Generator s) { return Word::generator(s); }

/// Alternating word of `count` letters ending in `last`, the letter before it
/// being `other`: (... other last other last).
Word alternating_ending(Generator last, Generator other, int count) {
  std::string letters(static_cast<std::size_t>(count), '\0');
  for (int m = 0; m < count; ++m)
    letters[static_cast<std::size_t>(m)] = static_cast<char>((count - 1 - m) % 2 == 0 ? last : other);
  return Word::from_reduced(letters);
}

/// Alternating word of `count` letters starting with `first`: (first other first ...).
Word alternating_starting(Generator first, Generator other, int count) {
  std::string letters(static_cast<std::size_t>(count), '\0');
  for (int m = 0; m < count; ++m) letters[static_cast<std::size_t>(m)] = static_cast<char>(m % 2 == 0 ? first : other);
  return Word::from_reduced(letters);
}

std::string triple_key(const Word& y, const Word& z, const Word& w) {
  std::string key = y.raw();
  key += '\xFF';
  key += z.raw();
  key += '\xFF';
  key += w.raw();
  return key;
}

LaurentPoly indicator(bool value) { return value ? LaurentPoly(1) : LaurentPoly(); }

}  // namespace

DiffSetup diff_setup(const CoxeterSpec& spec, const Word& y, const Word& z, const Word& w) {
  require_twisted(spec, y);
  require_twisted(spec, z);
  require_twisted(spec, w);
  if (!bruhat_leq(y, z)) fail(ErrorKind::domain, to_string(y) + " is not below " + to_string(z));

  DiffSetup d;
  d.y = y;
  d.z = z;
  d.w = w;
  const std::set<char> letters(w.raw().begin(), w.raw().end());
  if (letters.size() <= 2) return d;

  const std::string expr = istar_expression(spec, w);
  d.s = static_cast<Generator>(expr[0]);
  d.r = static_cast<Generator>(expr[1]);
  const Generator s = d.s, r = d.r;
  if (has_left_descent(d.y, s)) d.y = twist(spec, s, d.y);
  if (has_left_descent(d.z, s)) d.z = twist(spec, s, d.z);
  if (!bruhat_leq(d.y, d.z))
    fail(ErrorKind::internal_inconsistency, "descent normalization broke the order at " + to_string(w));

  std::size_t run = 2;
  while (run < expr.size() && expr[run] == expr[run - 2]) ++run;
  d.k = static_cast<int>(run) - 1;
  const int k = d.k;
  d.a = alternating_ending(s, r, k);
  d.u = twist_sequence(spec, std::string_view(expr).substr(run), Word());
  d.y1 = twist_word(spec, d.a, d.y);
  d.z1 = twist_word(spec, d.a, d.z);
  d.w1 = twist_word(spec, d.a, w);
  d.sws = twist(spec, s, w);

  for (int i = 0; i <= k; ++i) {
    const Word prefix = (k - i) % 2 == 0 ? alternating_ending(s, r, i) : alternating_ending(r, s, i);
    d.us.push_back(twist_word(spec, prefix, Word()));
  }

  d.z_tilde.assign(static_cast<std::size_t>(k) + 2, Word());
  d.z_tilde[static_cast<std::size_t>(k) + 1] = multiply(d.a, d.z);
  for (int i = k; i >= 1; --i) {
    const Word& next = d.z_tilde[static_cast<std::size_t>(i) + 1];
    const Generator g = spec.star((k - i) % 2 == 0 ? r : s);
    const Word cand = multiply(next, gen(g));
    d.z_tilde[static_cast<std::size_t>(i)] = cand.length() < next.length() ? cand : next;
  }
  d.z_starred.assign(static_cast<std::size_t>(k) + 1, Word());
  d.z_unstarred.assign(static_cast<std::size_t>(k) + 1, Word());
  for (int i = 1; i <= k; ++i) {
    const Word tail = (k - i) % 2 == 0 ? alternating_starting(r, s, i - 1) : alternating_starting(s, r, i - 1);
    d.z_starred[static_cast<std::size_t>(i)] = multiply(d.z_tilde[static_cast<std::size_t>(i)], star(spec, tail));
    d.z_unstarred[static_cast<std::size_t>(i)] = multiply(d.z_tilde[static_cast<std::size_t>(i)], tail);
  }

  const Generator r_star = spec.star(r);
  d.y2 = d.a;
  d.z2 = multiply(d.a, d.z);
  if (has_right_descent(d.z, r_star)) d.z2 = multiply(d.z2, gen(r_star));
  d.w2 = multiply(multiply(multiply(d.a, w), gen(s)), gen(r_star));

  if (!d.y.is_identity() || !spec.star_fixes(s)) d.kind = DiffCase::generic;
  else if (spec.star_fixes(r)) d.kind = DiffCase::fixed_pair;
  else d.kind = DiffCase::fixed_moving;
  return d;
}

const QPoly& DiffEngine::twisted(const Word& y, const Word& z, const Word& w) {
  const std::string key = triple_key(y, z, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LaurentPoly value;
  if (y != z) {
    const DiffSetup d = diff_setup(spec_, y, z, w);
    auto step = [&](const Word& a, const Word& b, const Word& c) -> const LaurentPoly& {
      if (!bruhat_leq(a, b))
        fail(ErrorKind::internal_inconsistency,
             "recurrence produced an unordered pair " + to_string(a) + ", " + to_string(b));
      return twisted(a, b, c).laurent();
    };
    if (d.kind == DiffCase::dihedral) {
      value = indicator(bruhat_leq(y, w) && !bruhat_leq(z, w));
    } else if (d.y != d.z) {
      const int k = d.k;
      value = step(d.y, d.z, d.sws);
      value.add_scaled_shifted(step(d.y1, d.z1, d.w1), 1, 4 * k);
      if (d.kind == DiffCase::fixed_pair) {
        for (int i = 0; i < k; ++i)
          value.add_scaled_shifted(step(d.us[i], d.us[i + 1], d.w1), 1, 2 * (i + k));
      } else if (d.kind == DiffCase::fixed_moving) {
        value.add_scaled_shifted(step(d.us[k - 1], d.us[k], d.w1), 1, 2 * (2 * k - 1));
      }
    }
  }
  if (!is_nonnegative(value))
    fail(ErrorKind::internal_inconsistency, "negative difference at (" + to_string(y) + ", " + to_string(z) + ", " +
                                                to_string(w) + "): " + to_string(value));
  return memo_.emplace(key, QPoly(std::move(value))).first->second;
}

LaurentPoly DiffEngine::kl_difference(const Word& y, const Word& z, const Word& w) {
  return kl_.p(y, w).laurent() - kl_.p(z, w).laurent();
}

LaurentPoly DiffEngine::untwisted_direct(const Word& y, const Word& z, const Word& w) {
  return kl_difference(y, z, w);
}

LaurentPoly DiffEngine::untwisted_rhs(const Word& y, const Word& z, const Word& w, bool starred) {
  if (y == z) return LaurentPoly();
  const DiffSetup d = diff_setup(spec_, y, z, w);
  if (d.kind == DiffCase::dihedral) return indicator(bruhat_leq(y, w) && !bruhat_leq(z, w));
  if (d.y == d.z) return LaurentPoly();
  const int k = d.k;
  const auto& zs = starred ? d.z_starred : d.z_unstarred;
  LaurentPoly value = kl_difference(d.y, d.z, d.sws);
  value.add_scaled_shifted(kl_difference(d.y1, d.z1, d.w1), 1, 4 * k);
  switch (d.kind) {
    case DiffCase::generic: {
      const Word aws = multiply(multiply(d.a, w), gen(spec_.star(d.s)));
      value.add_scaled_shifted(kl_difference(multiply(d.a, d.y), multiply(d.a, d.z), aws), 2, 2 * k);
      break;
    }
    case DiffCase::fixed_pair:
      for (int i = 0; i < k; ++i) {
        value.add_scaled_shifted(kl_difference(d.us[i], d.us[i + 1], d.w1), 1, 2 * (i + k));
        value.add_scaled_shifted(kl_difference(d.us[i + 1], zs[i + 1], d.w1), 2, 2 * (i + k));
      }
      break;
    case DiffCase::fixed_moving:
      value.add_scaled_shifted(kl_difference(d.us[k - 1], d.us[k], d.w1), 1, 2 * (2 * k - 1));
      value.add_scaled_shifted(kl_difference(d.us[k], zs[k], d.w1), 2, 2 * (2 * k - 1));
      if (k > 1) value.add_scaled_shifted(kl_difference(d.y2, d.z2, d.w2), 2, 2 * k);
      break;
    case DiffCase::dihedral:
      break;
  }
  return value;
}

QPoly tkl_diff_recursive(const Word& y, const Word& z, const Word& w, const CoxeterSpec& spec) {
  KLTable kl(spec);
  DiffEngine engine(spec, kl);
  return engine.twisted(y, z, w);
}

}  // namespace tklwb
