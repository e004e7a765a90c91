#pragma once

#include <utility>
#include <vector>

#include "lattice_loom/completion.hpp"
#include "lattice_loom/morphisms.hpp"
#include "lattice_loom/poset.hpp"

namespace loom {

enum class ShapeKind { Chain, KDiamond, Other };

// Shape of the intervals [x,y] in the completion, taken over comparable
// pairs x < y of original elements (x minimal, y maximal in a 2-level order).
// param: chain length for Chain, middle count for KDiamond, size for Other.
struct IntervalShape {
  ShapeKind kind = ShapeKind::Other;
  int param = 0;
  bool uniform = false;
  SubPoset witness;                        // one realizing interval, completion ids
  std::pair<int, int> counterexample{-1, -1};  // completion pair with a second shape
};

namespace detail {

// Chain: all pairs comparable. KDiamond(k): least and greatest element with
// k >= 2 pairwise incomparable middles. Everything else is Other.
inline std::pair<ShapeKind, int> shape_of(const Poset& p) {
  bool chain = true;
  for (int a = 0; a < p.n && chain; ++a)
    for (int b = a + 1; b < p.n; ++b)
      if (!p.comparable(a, b)) {
        chain = false;
        break;
      }
  if (chain) return {ShapeKind::Chain, p.n};
  if (p.n >= 4 && p.minimals().size() == 1 && p.maximals().size() == 1) {
    int bot = p.minimals()[0], top = p.maximals()[0];
    bool diamond = true;
    for (int a = 0; a < p.n && diamond; ++a) {
      if (a == bot || a == top) continue;
      for (int b = a + 1; b < p.n; ++b) {
        if (b == bot || b == top) continue;
        if (p.comparable(a, b)) {
          diamond = false;
          break;
        }
      }
    }
    if (diamond) return {ShapeKind::KDiamond, p.n - 2};
  }
  return {ShapeKind::Other, p.n};
}

}  // namespace detail

inline IntervalShape classify_interval(const Poset& m) {
  if (!m.is_two_level()) throw BadParams("classify_interval: poset is not 2-level");
  CompletedPoset c = dm_completion(m);
  const Poset& comp = c.completion;

  std::vector<std::pair<int, int>> pairs;  // completion ids of embedded x < y
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y)
      if (m.less(x, y)) pairs.emplace_back(c.embed[x], c.embed[y]);
  if (pairs.empty()) throw NoComparablePair("classify_interval: no comparable pair");

  IntervalShape out;
  std::vector<SubPoset> others;  // kept only while every shape is Other
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    SubPoset iv = interval(comp, pairs[i].first, pairs[i].second);
    auto [kind, param] = detail::shape_of(iv.poset);
    if (i == 0) {
      out.kind = kind;
      out.param = param;
      out.uniform = true;
      out.witness = iv;
      if (kind == ShapeKind::Other) others.push_back(iv);
      continue;
    }
    if (kind != out.kind || param != out.param) {
      out.kind = ShapeKind::Other;
      out.param = 0;
      out.uniform = false;
      out.counterexample = pairs[i];
      return out;
    }
    // Equal chain lengths and equal diamond widths are isomorphic outright;
    // Other needs a real isomorphism check against the first interval.
    if (kind == ShapeKind::Other) {
      if (!poset_isomorphic(others[0].poset, iv.poset)) {
        out.param = 0;
        out.uniform = false;
        out.counterexample = pairs[i];
        return out;
      }
      others.push_back(iv);
    }
  }
  return out;
}

}  // namespace loom
