#include "gpd/localization.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace gpd {

namespace {

bool word_less(const Word& a, const Word& b) {
  if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
  return std::tie(a.src, a.tgt, a.steps) < std::tie(b.src, b.tgt, b.steps);
}

}  // namespace

Word Localization::identity_word(int object) const { return Word{object, object, {}}; }

Word Localization::arrow_word(int arrow) const {
  return Word{category->src[arrow], category->tgt[arrow], {{arrow, false}}};
}

Word Localization::inverse_word(int arrow) const {
  require(arrow >= 0 && arrow < category->num_arrows() && inverted[arrow],
          errc::unknown_arrow, "no formal inverse for this arrow");
  return Word{category->tgt[arrow], category->src[arrow], {{arrow, true}}};
}

int Localization::step_src(const WordStep& s) const {
  return s.inverted ? category->tgt[s.arrow] : category->src[s.arrow];
}

int Localization::step_tgt(const WordStep& s) const {
  return s.inverted ? category->src[s.arrow] : category->tgt[s.arrow];
}

Word Localization::concat(const Word& first, const Word& second) const {
  check(first);
  check(second);
  require(first.tgt == second.src, errc::boundary_mismatch,
          "concatenated words must meet at a common object");
  Word out{first.src, second.tgt, first.steps};
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return out;
}

void Localization::check(const Word& w) const {
  require(w.src >= 0 && w.src < category->num_objects() && w.tgt >= 0 &&
              w.tgt < category->num_objects(),
          errc::unknown_object, "word endpoints out of range");
  int at = w.src;
  for (const auto& s : w.steps) {
    require(s.arrow >= 0 && s.arrow < category->num_arrows(), errc::unknown_arrow,
            "word uses an arrow out of range");
    require(!s.inverted || inverted[s.arrow], errc::unknown_arrow,
            "word inverts " + category->arrows[s.arrow] + " which is not in the class");
    require(step_src(s) == at, errc::boundary_mismatch,
            "word breaks at " + category->arrows[s.arrow]);
    at = step_tgt(s);
  }
  require(at == w.tgt, errc::boundary_mismatch, "word ends at the wrong object");
}

Word Localization::normalize(Word w) const {
  check(w);
  auto& st = w.steps;
  while (true) {
    bool changed = false;
    for (size_t i = 0; i + 1 < st.size(); ++i)
      if (st[i].arrow == st[i + 1].arrow && st[i].inverted != st[i + 1].inverted) {
        st.erase(st.begin() + i, st.begin() + i + 2);
        changed = true;
        break;
      }
    if (changed) continue;
    for (size_t i = 0; i < st.size(); ++i)
      if (category->is_unit(st[i].arrow)) {
        st.erase(st.begin() + i);
        changed = true;
        break;
      }
    if (changed) continue;
    for (size_t i = 0; i + 1 < st.size(); ++i)
      if (!st[i].inverted && !st[i + 1].inverted) {
        st[i] = {category->compose(st[i + 1].arrow, st[i].arrow), false};
        st.erase(st.begin() + i + 1);
        changed = true;
        break;
      }
    if (changed) continue;
    for (size_t i = 0; i + 1 < st.size(); ++i)
      if (st[i].inverted && st[i + 1].inverted) {
        // (a^-1 then b^-1) = (b then a)^-1, legal once that composite is
        // itself inverted
        int ab = category->compose(st[i].arrow, st[i + 1].arrow);
        if (!inverted[ab]) continue;
        st[i] = {ab, true};
        st.erase(st.begin() + i + 1);
        changed = true;
        break;
      }
    if (changed) continue;
    for (auto& s : st)
      if (s.inverted && categorical_inverse[s.arrow] >= 0) {
        s = {categorical_inverse[s.arrow], false};
        changed = true;
        break;
      }
    if (!changed) return w;
  }
}

bool Localization::equal(const Word& a, const Word& b) const {
  return normalize(a) == normalize(b);
}

std::vector<Word> Localization::hom_class_words(int x, int y, size_t max_len) const {
  std::vector<WordStep> gens;
  for (int a = 0; a < category->num_arrows(); ++a) gens.push_back({a, false});
  for (int a : inverted_list) gens.push_back({a, true});

  std::vector<Word> found;
  auto record = [&](const Word& w) {
    auto n = normalize(w);
    if (std::find(found.begin(), found.end(), n) == found.end()) found.push_back(n);
  };
  Word cur{x, x, {}};
  auto extend = [&](auto&& self, int at) -> void {
    if (at == y) record(cur);
    if (cur.steps.size() == max_len) return;
    for (const auto& s : gens) {
      if (step_src(s) != at) continue;
      cur.steps.push_back(s);
      cur.tgt = step_tgt(s);
      self(self, cur.tgt);
      cur.steps.pop_back();
    }
    cur.tgt = at;
  };
  extend(extend, x);
  std::sort(found.begin(), found.end(), word_less);
  return found;
}

Localization localize_symbolic(CategoryRef c, std::vector<int> inverted) {
  Localization loc;
  loc.category = std::move(c);
  for (int a : inverted)
    require(a >= 0 && a < loc.category->num_arrows(), errc::unknown_arrow,
            "inverted class lists an arrow out of range");
  std::sort(inverted.begin(), inverted.end());
  inverted.erase(std::unique(inverted.begin(), inverted.end()), inverted.end());
  loc.inverted_list = std::move(inverted);
  loc.inverted.assign(loc.category->num_arrows(), false);
  for (int a : loc.inverted_list) loc.inverted[a] = true;
  const FiniteCategory& C = *loc.category;
  loc.categorical_inverse.assign(C.num_arrows(), -1);
  for (int a = 0; a < C.num_arrows(); ++a)
    for (int e = 0; e < C.num_arrows(); ++e) {
      if (C.src[e] != C.tgt[a] || C.tgt[e] != C.src[a]) continue;
      if (C.compose(e, a) == C.unit[C.src[a]] && C.compose(a, e) == C.unit[C.tgt[a]]) {
        loc.categorical_inverse[a] = e;
        break;
      }
    }
  return loc;
}

int InducedFunctor::apply(const Word& w) const {
  loc.check(w);
  const FiniteCategory& E = *base.target;
  int val = E.unit[base.obj_map[w.src]];
  for (const auto& s : w.steps) {
    int e = s.inverted ? inverse_image[s.arrow] : base.arr_map[s.arrow];
    val = E.compose(e, val);
  }
  return val;
}

UniversalCheck check_universal_property(const Localization& loc, const CategoryFunctor& phi,
                                        size_t sample_len, size_t budget) {
  require(phi.source && *phi.source == *loc.category, errc::mismatch,
          "functor must start from the localized category");
  {
    auto rep = validate_category_functor(phi);
    require(rep.ok(), errc::mismatch, "not a functor:\n" + rep.to_string());
  }
  const FiniteCategory& C = *loc.category;
  const FiniteCategory& E = *phi.target;
  UniversalCheck out{{phi, loc, std::vector<int>(C.num_arrows(), -1)}, false, true, 0, {}};
  for (int w : loc.inverted_list) {
    int img = phi.arr_map[w];
    int found = -1;
    for (int e = 0; e < E.num_arrows(); ++e) {
      if (E.src[e] != E.tgt[img] || E.tgt[e] != E.src[img]) continue;
      if (E.compose(e, img) == E.unit[E.src[img]] && E.compose(img, e) == E.unit[E.tgt[img]]) {
        found = e;
        break;
      }
    }
    require(found >= 0, errc::not_inverted,
            C.arrows[w] + " maps to " + E.arrows[img] + " which has no two-sided inverse");
    out.induced.inverse_image[w] = found;
  }

  out.factors = true;
  for (int a = 0; a < C.num_arrows(); ++a)
    if (out.induced.apply(loc.arrow_word(a)) != phi.arr_map[a]) out.factors = false;

  // sample: all words up to sample_len (within budget), grouped by normal
  // form; the induced functor must be constant on each group
  std::vector<WordStep> gens;
  for (int a = 0; a < C.num_arrows(); ++a) gens.push_back({a, false});
  for (int a : loc.inverted_list) gens.push_back({a, true});
  std::map<std::tuple<int, int, std::vector<WordStep>>, std::pair<int, Word>> groups;
  size_t left = budget;
  Word cur;
  auto visit = [&](const Word& w) {
    if (left == 0) return;
    --left;
    auto n = loc.normalize(w);
    int v = out.induced.apply(w);
    auto key = std::make_tuple(n.src, n.tgt, n.steps);
    auto it = groups.find(key);
    if (it == groups.end()) {
      groups.emplace(key, std::make_pair(v, w));
      return;
    }
    ++out.sampled_pairs;
    if (it->second.first != v && out.well_defined) {
      out.well_defined = false;
      out.violation = {it->second.second, w};
    }
  };
  auto extend = [&](auto&& self, int at) -> void {
    if (left == 0) return;
    visit(cur);
    if (cur.steps.size() == sample_len) return;
    for (const auto& s : gens) {
      if (loc.step_src(s) != at) continue;
      cur.steps.push_back(s);
      cur.tgt = loc.step_tgt(s);
      self(self, cur.tgt);
      cur.steps.pop_back();
    }
    cur.tgt = at;
  };
  for (int x = 0; x < C.num_objects() && left > 0; ++x) {
    cur = Word{x, x, {}};
    extend(extend, x);
  }
  return out;
}

}  // namespace gpd
