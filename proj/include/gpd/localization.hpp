#pragma once

#include "gpd/category.hpp"
#include "gpd/error.hpp"

namespace gpd {

// One step of a path in the localization: an arrow used forward, or the
// formal inverse of a member of the inverted class.
struct WordStep {
  int arrow = -1;
  bool inverted = false;
  bool operator==(const WordStep&) const = default;
  auto operator<=>(const WordStep&) const = default;
};

// A composable path; steps[0] is applied first.  The empty word at x stands
// for the identity of x.
struct Word {
  int src = -1, tgt = -1;
  std::vector<WordStep> steps;
  bool operator==(const Word&) const = default;
};

// The category of formal fractions, presented by rewriting: arrows are words
// in the original arrows and the formal inverses of the chosen class, modulo
// composing adjacent originals, dropping identities, and cancelling adjacent
// inverse pairs.  equal() compares normal forms; it never claims equality
// wrongly, but the rewriting is not confluent in general, so it may miss one.
class Localization {
public:
  CategoryRef category;
  std::vector<int> inverted_list;       // ascending
  std::vector<bool> inverted;           // per arrow
  std::vector<int> categorical_inverse; // per arrow, -1 if none exists

  Word identity_word(int object) const;
  Word arrow_word(int arrow) const;    // image of an original arrow
  Word inverse_word(int arrow) const;  // formal inverse; arrow must be inverted

  // Endpoints of a single step.
  int step_src(const WordStep& s) const;
  int step_tgt(const WordStep& s) const;

  // Path composition, first then second.  Throws boundary_mismatch.
  Word concat(const Word& first, const Word& second) const;

  // Checks arrow indices, inverse eligibility, and composability.
  // Throws unknown_arrow or boundary_mismatch.
  void check(const Word& w) const;

  // Rewrites to a fixed point, leftmost-first by rule: cancel an adjacent
  // inverse pair, drop an identity step, compose two adjacent original
  // steps, compose two adjacent formal-inverse steps whose composite is
  // itself in the inverted class, replace a formal inverse by a two-sided
  // inverse the category already owns.  The first four shorten the word and
  // the last trades an inverted step for an original one, so this stops.
  Word normalize(Word w) const;

  bool equal(const Word& a, const Word& b) const;

  // Distinct normal forms of all words from x to y of length at most
  // max_len, ordered by length then stepwise.
  std::vector<Word> hom_class_words(int x, int y, size_t max_len) const;
};

// Throws unknown_arrow on a bad index in the inverted class.
Localization localize_symbolic(CategoryRef c, std::vector<int> inverted);

// The functor out of the localization induced by a functor that inverts the
// chosen class: original arrows go through base, formal inverses to the
// unique two-sided inverses of their images.
struct InducedFunctor {
  CategoryFunctor base;
  Localization loc;
  std::vector<int> inverse_image;  // per source arrow, -1 unless inverted

  int apply_object(int x) const { return base.obj_map[x]; }
  int apply(const Word& w) const;  // arrow of the target category
};

struct UniversalCheck {
  InducedFunctor induced;
  bool factors = false;       // induced ∘ embedding = base on every arrow
  bool well_defined = true;   // constant on sampled rewrite-equal word pairs
  int sampled_pairs = 0;
  std::optional<std::pair<Word, Word>> violation;
};

// Builds the induced functor and verifies the factorization property on a
// bounded sample of words (all words up to sample_len, within a budget).
// Throws not_inverted if some image of the inverted class has no two-sided
// inverse, mismatch if phi is not a functor out of the localized category.
UniversalCheck check_universal_property(const Localization& loc, const CategoryFunctor& phi,
                                        size_t sample_len = 5, size_t budget = 20000);

}  // namespace gpd
