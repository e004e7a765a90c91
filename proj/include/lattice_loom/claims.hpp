#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lattice_loom/completion.hpp"
#include "lattice_loom/dl.hpp"
#include "lattice_loom/families.hpp"
#include "lattice_loom/graph.hpp"
#include "lattice_loom/intervals.hpp"
#include "lattice_loom/morphisms.hpp"
#include "lattice_loom/poset.hpp"
#include "lattice_loom/reach.hpp"
#include "lattice_loom/transitivity.hpp"

namespace loom {

struct ClaimOutcome {
  std::string expected, computed;
  bool pass = false;
};

struct Claim {
  std::string id;
  std::string description;
  std::string source;  // where the expected value comes from; required
  bool window_relative = false;
  std::function<ClaimOutcome()> run;
};

struct ClaimReport {
  std::string id, expected, computed, status;  // pass | fail | window-relative
  double ms = 0;
  bool ok() const { return status != "fail"; }
};

inline bool glob_match(const std::string& pat, const std::string& s) {
  std::size_t p = 0, i = 0, star = std::string::npos, mark = 0;
  while (i < s.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == s[i])) {
      ++p, ++i;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

class ClaimRegistry {
 public:
  void add(Claim c) {
    if (c.source.empty())
      throw BadParams("claim " + c.id + " has no provenance note");
    claims_.push_back(std::move(c));
  }

  const std::vector<Claim>& claims() const { return claims_; }

  std::vector<ClaimReport> run(const std::string& pattern = "*") const {
    std::vector<const Claim*> picked;
    for (const Claim& c : claims_)
      if (glob_match(pattern, c.id)) picked.push_back(&c);
    std::sort(picked.begin(), picked.end(),
              [](const Claim* a, const Claim* b) { return a->id < b->id; });
    std::vector<ClaimReport> out;
    for (const Claim* c : picked) {
      ClaimReport r;
      r.id = c->id;
      auto t0 = std::chrono::steady_clock::now();
      try {
        ClaimOutcome o = c->run();
        r.expected = o.expected;
        r.computed = o.computed;
        r.status = !o.pass ? "fail" : c->window_relative ? "window-relative" : "pass";
      } catch (const std::exception& e) {
        r.computed = std::string("exception: ") + e.what();
        r.status = "fail";
      }
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::vector<Claim> claims_;
};

// ---------------------------------------------------------------------------
// Shared corpus of small 2-level structures.

struct CorpusEntry {
  std::string name;
  BipartiteGraph graph;
};

inline const std::vector<CorpusEntry>& standard_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    for (int n = 2; n <= 6; ++n)
      c.push_back({"crown-" + std::to_string(n), crown(n)});
    for (int n = 3; n <= 5; ++n)
      c.push_back({"cube-" + std::to_string(n), cube(n)});
    c.push_back({"fano-incidence", fano_incidence()});
    c.push_back({"fano-complement", fano_complement()});
    c.push_back({"vs-f2-n4", subspace_incidence(4, 2)});
    for (int n = 3; n <= 5; ++n)
      c.push_back({"cpm-" + std::to_string(n), complement_matching(n)});
    c.push_back({"k-2-3", complete_bipartite(2, 3)});
    c.push_back({"k-3-3", complete_bipartite(3, 3)});
    c.push_back({"random-4-4-60", random_bipartite(4, 4, 60, 1)});
    c.push_back({"random-5-3-50", random_bipartite(5, 3, 50, 2)});
    c.push_back({"random-4-5-40", random_bipartite(4, 5, 40, 3)});
    c.push_back({"random-3-3-70", random_bipartite(3, 3, 70, 4)});
    return c;
  }();
  return corpus;
}

/// Six-point running example: three points x,y,z below three points u,v,w,
/// with y under all three tops and u,w seeing two bottoms each.
inline Poset fig1_poset() {
  return build_poset(6,
                     {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}},
                     PairMode::Relations, {"x", "y", "z", "u", "v", "w"});
}

// ---------------------------------------------------------------------------
// Small helpers shared by claims and tests.

inline std::vector<int> completion_level_counts(const CompletedPoset& c) {
  auto h = c.completion.heights();
  std::vector<int> counts(h.empty() ? 0 : *std::max_element(h.begin(), h.end()) + 1, 0);
  for (int v : h) ++counts[v];
  return counts;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string shape_str(const IntervalShape& s) {
  if (!s.uniform) return "Other(mixed)";
  switch (s.kind) {
    case ShapeKind::Chain: return "Chain(" + std::to_string(s.param) + ")";
    case ShapeKind::KDiamond: return "KDiamond(" + std::to_string(s.param) + ")";
    default: return "Other(" + std::to_string(s.param) + ")";
  }
}

inline std::vector<int> midlevel_elements(const Poset& p) {
  std::vector<int> out;
  for (int v = 0; v < p.n; ++v)
    if (!p.is_minimal(v) && !p.is_maximal(v)) out.push_back(v);
  return out;
}

/// Every midlevel completion element has the given number of cones both ways.
inline bool mid_ram_orders_equal(const CompletedPoset& c, int k) {
  for (int v : midlevel_elements(c.completion))
    if (cones(c.completion, v, Direction::Up).ro != k ||
        cones(c.completion, v, Direction::Down).ro != k)
      return false;
  return true;
}

/// Up-set split of an embedded minimal: midlevel count and maximal count.
inline std::pair<int, int> upset_split(const CompletedPoset& c, int original_min) {
  const Poset& q = c.completion;
  int e = c.embed[original_min];
  int mid = 0, top = 0;
  for (int w = q.up[e].first(); w >= 0; w = q.up[e].next(w)) {
    if (w == e) continue;
    if (q.is_maximal(w)) ++top;
    else if (!q.is_minimal(w)) ++mid;
  }
  return {mid, top};
}

/// Point-block incidence forms a design: v points, every block k points,
/// every point pair in exactly lambda blocks.
inline bool is_design(const BipartiteGraph& g, int v, int k, int lambda) {
  auto pts = g.part(0), blocks = g.part(1);
  if (int(pts.size()) != v) return false;
  for (int b : blocks)
    if (g.degree(b) != k) return false;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Bitset common = g.adj[pts[i]];
      common &= g.adj[pts[j]];
      if (common.count() != lambda) return false;
    }
  return true;
}

inline bool has_cover(const Poset& p, int lo, int hi) {
  return std::binary_search(p.covers.begin(), p.covers.end(), std::make_pair(lo, hi));
}

/// Both directions of the meet-cover law for embedded maximals: a meet of
/// two maximals is covered by both, and a point doubly covered by maximals
/// is their meet.
inline int meet_cover_violations(const Poset& p) {
  CompletedPoset c = dm_completion(p);
  const Poset& q = c.completion;
  std::vector<int> maxes;
  for (int v = 0; v < p.n; ++v)
    if (p.is_maximal(v)) maxes.push_back(c.embed[v]);
  std::vector<char> is_max(q.n, 0);
  for (int b : maxes) is_max[b] = 1;
  int bad = 0;
  for (std::size_t i = 0; i < maxes.size(); ++i)
    for (std::size_t j = i + 1; j < maxes.size(); ++j) {
      int b = maxes[i], d = maxes[j];
      if (auto y = inf_in(q, b, d))
        if (!has_cover(q, *y, b) || !has_cover(q, *y, d)) ++bad;
    }
  for (int y = 0; y < q.n; ++y) {
    std::vector<int> above;
    for (int b : q.covers_above(y))
      if (is_max[b]) above.push_back(b);
    for (std::size_t i = 0; i < above.size(); ++i)
      for (std::size_t j = i + 1; j < above.size(); ++j) {
        auto m = inf_in(q, above[i], above[j]);
        if (!m || *m != y) ++bad;
      }
  }
  return bad;
}

/// Gate for the meet-cover law: uniform chain or diamond intervals plus 2-
/// and 3-CS-transitivity.
inline bool meet_cover_gate(const Poset& p) {
  try {
    IntervalShape s = classify_interval(p);
    if (!s.uniform || s.kind == ShapeKind::Other) return false;
  } catch (const NoComparablePair&) {
    return false;
  }
  return is_k_cs_transitive(p, 2) && is_k_cs_transitive(p, 3);
}

namespace detail {

inline ClaimOutcome expect_bool(bool expected, bool got) {
  ClaimOutcome o;
  o.expected = expected ? "true" : "false";
  o.computed = got ? "true" : "false";
  o.pass = expected == got;
  return o;
}

inline ClaimOutcome expect_str(const std::string& expected, const std::string& got) {
  ClaimOutcome o;
  o.expected = expected;
  o.computed = got;
  o.pass = expected == got;
  return o;
}

inline int hamming(const std::string& a, const std::string& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Registered claims. Expected values were frozen from hand derivations and
// brute-force enumerations before the library code existed; sources say
// which.

inline const ClaimRegistry& standard_claims() {
  static const ClaimRegistry reg = [] {
    ClaimRegistry r;
    auto add = [&r](std::string id, std::string desc, std::string src,
                    std::function<ClaimOutcome()> run, bool window = false) {
      r.add(Claim{std::move(id), std::move(desc), std::move(src), window, std::move(run)});
    };

    add("fig1-completion-size", "completion of the six-point example has 8 elements",
        "hand drawing of the example's cut lattice", [] {
          auto c = dm_completion(fig1_poset());
          return detail::expect_str("8", std::to_string(c.completion.n));
        });

    add("fig1-added-both-ram", "both added cuts ramify upward and downward",
        "hand check: each cut is sup of two bottoms and inf of two tops", [] {
          auto c = dm_completion(fig1_poset());
          bool ok = c.added.size() == 2;
          for (int a : c.added) {
            bool up = std::count(c.up_ram.begin(), c.up_ram.end(), a) > 0;
            bool down = std::count(c.down_ram.begin(), c.down_ram.end(), a) > 0;
            ok = ok && up && down;
          }
          return detail::expect_bool(true, ok);
        });

    add("fig1-cycle-free", "the example's completion is not cycle-free",
        "hand count: eight vertices carry eight covers, one too many for a forest", [] {
          auto c = dm_completion(fig1_poset());
          return detail::expect_bool(false, is_cycle_free(c));
        });

    add("fig1-aut-order", "the example poset has exactly one non-trivial symmetry",
        "hand check: the left-right reflection is the only one", [] {
          auto g = automorphism_group(fig1_poset());
          return detail::expect_str("2", g.order.str());
        });

    add("kmn-one-added", "complete bipartite completions add exactly one element",
        "hand derivation: the unique cut between the two sides", [] {
          int good = 0, total = 0;
          for (int m = 2; m <= 5; ++m)
            for (int n = 2; n <= 5; ++n) {
              ++total;
              auto c = dm_completion(poset_of(complete_bipartite(m, n)));
              if (int(c.added.size()) == 1) ++good;
            }
          return detail::expect_str("16/16", std::to_string(good) + "/" + std::to_string(total));
        });

    add("kmn-interval-chain3", "complete bipartite intervals are 3-chains",
        "hand derivation: bottom, the single cut, top", [] {
          int good = 0, total = 0;
          for (int m = 2; m <= 5; ++m)
            for (int n = 2; n <= 5; ++n) {
              ++total;
              IntervalShape s = classify_interval(poset_of(complete_bipartite(m, n)));
              if (s.uniform && s.kind == ShapeKind::Chain && s.param == 3) ++good;
            }
          return detail::expect_str("16/16", std::to_string(good) + "/" + std::to_string(total));
        });

    add("semilinear-agreement",
        "completeness coincides with the semilinear-space reading on gated corpus entries",
        "two-level completeness criterion, checked structure by structure", [] {
          int gated = 0, disagree = 0;
          for (const auto& e : standard_corpus()) {
            Poset p = poset_of(e.graph);
            bool gate = true;
            for (int v = 0; v < p.n; ++v)
              if (p.is_maximal(v) && !p.is_minimal(v) && int(p.covers_below(v).size()) < 2)
                gate = false;
            if (!gate) continue;
            ++gated;
            if (is_dm_complete(p) != semilinear_check(p)) ++disagree;
          }
          ClaimOutcome o = detail::expect_str("0", std::to_string(disagree));
          o.computed += " disagreements over " + std::to_string(gated) + " gated structures";
          o.pass = disagree == 0 && gated > 0;
          return o;
        });

    add("fanoc-local-2at", "the complement of the seven-point plane is locally 2-arc-transitive",
        "symmetry of the complement design under the plane's collineations", [] {
          return detail::expect_bool(true, is_locally_s_arc_transitive(fano_complement(), 2).verdict);
        });

    add("fanoc-levels", "complement-of-plane completion levels count 7,21,7",
        "brute-force ideal enumeration, frozen beforehand", [] {
          auto c = dm_completion(poset_of(fano_complement()));
          return detail::expect_str("7,21,7", join_ints(completion_level_counts(c)));
        });

    add("fanoc-interval", "complement-of-plane intervals are 3-diamonds",
        "hand derivation: a point pair lies in exactly two complement blocks", [] {
          return detail::expect_str("KDiamond(3)",
                                    shape_str(classify_interval(poset_of(fano_complement()))));
        });

    add("fanoc-mid-ram", "complement-of-plane midlevel ramification orders are all 2",
        "hand derivation: the two blocks over a point pair share nothing in between", [] {
          auto c = dm_completion(poset_of(fano_complement()));
          return detail::expect_bool(true, mid_ram_orders_equal(c, 2));
        });

    add("fanoc-upset-split", "each point sees 6 midlevel cuts and 4 blocks above",
        "hand count in the complement design: six point pairs, four blocks", [] {
          Poset base = poset_of(fano_complement());
          auto c = dm_completion(base);
          bool ok = true;
          for (int v = 0; v < base.n; ++v) {
            if (!base.is_minimal(v)) continue;
            auto [mid, top] = upset_split(c, v);
            if (mid != 6 || top != 4) ok = false;
          }
          return detail::expect_bool(true, ok);
        });

    add("m42-2at", "the rank-4 binary point-hyperplane graph is 2-arc-transitive",
        "linear symmetry of the underlying space plus the inverse-transpose flip", [] {
          return detail::expect_bool(true, is_s_arc_transitive(subspace_incidence(4, 2), 2).verdict);
        });

    add("m42-interval", "rank-4 binary intervals are 3-diamonds",
        "hand derivation: a point below a hyperplane lies on q+1 lines inside it", [] {
          return detail::expect_str(
              "KDiamond(3)", shape_str(classify_interval(poset_of(subspace_incidence(4, 2)))));
        });

    add("m42-mid-ram", "rank-4 binary midlevel ramification orders are all 3",
        "cone count over a line: its residue is a projective line with q+1 points", [] {
          auto c = dm_completion(poset_of(subspace_incidence(4, 2)));
          return detail::expect_bool(true, mid_ram_orders_equal(c, 3));
        });

    add("m42-upset-split", "each rank-4 binary point sees 7 lines and 7 hyperplanes above",
        "count r(r-1)+1 with replication r = 3 over the line residue", [] {
          Poset base = poset_of(subspace_incidence(4, 2));
          auto c = dm_completion(base);
          bool ok = true;
          for (int v = 0; v < base.n; ++v) {
            if (!base.is_minimal(v)) continue;
            auto [mid, top] = upset_split(c, v);
            if (mid != 7 || top != 7) ok = false;
          }
          return detail::expect_bool(true, ok);
        });

    add("m42-design", "rank-4 binary blocks form a (15,7,3)-design",
        "hyperplane counts of the rank-4 binary space", [] {
          return detail::expect_bool(true, is_design(subspace_incidence(4, 2), 15, 7, 3));
        });

    add("m43-interval", "rank-4 ternary intervals are 4-diamonds",
        "line residue over the ternary field has q+1 = 4 points", [] {
          return detail::expect_str(
              "KDiamond(4)", shape_str(classify_interval(poset_of(subspace_incidence(4, 3)))));
        });

    add("m43-mid-ram", "rank-4 ternary midlevel ramification orders are all 4",
        "cone count over a ternary line residue", [] {
          auto c = dm_completion(poset_of(subspace_incidence(4, 3)));
          return detail::expect_bool(true, mid_ram_orders_equal(c, 4));
        });

    add("vs-f2-n3", "binary rank-3 non-incidence completion levels count 7,21,7",
        "brute-force ideal enumeration, frozen beforehand", [] {
          auto c = dm_completion(poset_of(non_incidence(3, 2)));
          return detail::expect_str("7,21,7", join_ints(completion_level_counts(c)));
        });

    add("vs-f2-n4", "binary rank-4 non-incidence completion levels count 15,105,105,15",
        "brute-force ideal enumeration, frozen beforehand", [] {
          auto c = dm_completion(poset_of(non_incidence(4, 2)));
          return detail::expect_str("15,105,105,15", join_ints(completion_level_counts(c)));
        });

    for (int n = 3; n <= 5; ++n) {
      std::string nn = std::to_string(n);
      add("cube-" + nn + "-transitive", "the " + nn + "-cube layers are 1- and 2-arc-transitive",
          "hypercube symmetries: coordinate permutations and translations", [n] {
            auto g = cube(n);
            bool ok = is_s_arc_transitive(g, 1).verdict && is_s_arc_transitive(g, 2).verdict;
            return detail::expect_bool(true, ok);
          });
      add("cube-" + nn + "-interval",
          "intervals of the " + nn + "-cube layers are " + std::to_string(n - 1) + "-diamonds",
          "hand derivation: the n-1 double flips sit between two strings one flip apart", [n] {
            IntervalShape s = classify_interval(poset_of(cube(n)));
            return detail::expect_str("KDiamond(" + std::to_string(n - 1) + ")", shape_str(s));
          });
      int expected_added = (1 << (n - 2)) * (n * (n - 1) / 2);
      add("cube-" + nn + "-added",
          "the " + nn + "-cube completion adds exactly the double-flip pairs",
          "brute-force ideal enumeration plus the double-flip count formula", [n, expected_added] {
            auto g = cube(n);
            auto c = dm_completion(poset_of(g));
            bool shape_ok = true;
            for (int a : c.added) {
              const Bitset& mem = c.member_sets[a];
              if (mem.count() != 2) {
                shape_ok = false;
                break;
              }
              int u = mem.first(), v = mem.next(u);
              if (detail::hamming(g.label(u), g.label(v)) != 2) shape_ok = false;
            }
            ClaimOutcome o = detail::expect_str(std::to_string(expected_added),
                                                std::to_string(c.added.size()));
            o.pass = o.pass && shape_ok;
            if (!shape_ok) o.computed += " (non-pair element added)";
            return o;
          });
    }

    add("cpm4-completion", "the 4x4 matching-complement completes to the cube of proper subsets",
        "identification of cuts with proper nonempty subsets of a 4-set", [] {
          auto c = dm_completion(poset_of(complement_matching(4)));
          std::vector<std::pair<int, int>> rel;
          for (int a = 1; a < 15; ++a)
            for (int b = 1; b < 15; ++b)
              if (a != b && (a & b) == a) rel.emplace_back(a - 1, b - 1);
          Poset cube4 = build_poset(14, rel, PairMode::Relations);
          bool ok = c.completion.n == 14 && poset_isomorphic(c.completion, cube4);
          return detail::expect_bool(true, ok);
        });

    add("cpm4-2at", "the 4x4 matching-complement is 2-arc-transitive",
        "symmetries permuting the four matched pairs plus the side swap", [] {
          return detail::expect_bool(true, is_s_arc_transitive(complement_matching(4), 2).verdict);
        });

    add("cpm4-interval", "4x4 matching-complement intervals are 2-diamonds",
        "hand derivation: two 2-subsets sit between a point and a top over it", [] {
          return detail::expect_str(
              "KDiamond(2)", shape_str(classify_interval(poset_of(complement_matching(4)))));
        });

    add("dlc6-window", "the hexagon window at radius 3 has 311 vertices, 372 arcs, 61 interior",
        "window counts derived by brute enumeration, frozen beforehand", [] {
          auto d = dl_construction(crown(3), 3);
          int interior = 0;
          for (int v = 0; v < d.dl.n; ++v)
            if (!d.dl.is_boundary(v)) ++interior;
          std::string got = std::to_string(d.dl.n) + "," + std::to_string(d.dl.arcs.size()) +
                            "," + std::to_string(interior);
          return detail::expect_str("311,372,61", got);
        });

    add("dlc6-class-copies", "every interior arc's alternation class reads as the hexagon",
        "the class of an arc collects exactly the arcs through one tree vertex",
        [] {
          auto d = dl_construction(crown(3), 3);
          auto delta = crown(3);
          auto classes = alternation_classes(d.dl);
          std::vector<int> cls(d.dl.arcs.size());
          for (int c = 0; c < int(classes.size()); ++c)
            for (int e : classes[c].arcs) cls[e] = c;
          bool ok = true;
          std::map<int, bool> cache;
          for (int e = 0; e < int(d.dl.arcs.size()) && ok; ++e) {
            auto [t, h] = d.dl.arcs[e];
            if (d.dl.is_boundary(t) || d.dl.is_boundary(h)) continue;
            int c = cls[e];
            auto it = cache.find(c);
            if (it == cache.end()) {
              auto g = class_graph(d.dl, classes[c]);
              it = cache.emplace(c, g && bipartite_isomorphic(*g, delta, true)).first;
            }
            ok = it->second;
          }
          return detail::expect_bool(true, ok);
        },
        true);

    add("dlc6-desc-tree", "interior descendant sets of the hexagon window induce trees",
        "descending paths follow the underlying tree, which branches without merging",
        [] {
          auto d = dl_construction(crown(3), 3);
          bool ok = true;
          for (int v = 0; v < d.dl.n && ok; ++v)
            if (!d.dl.is_boundary(v)) ok = is_descendant_tree(d.dl, v);
          return detail::expect_bool(true, ok);
        },
        true);

    add("dlc6-intersection", "interior descendant intersections are descendant sets",
        "two descendant cones meet along the cone of a deeper window vertex",
        [] {
          auto d = dl_construction(crown(3), 3);
          return detail::expect_bool(true, intersection_property(d.dl).holds);
        },
        true);

    add("dlc6-p-properties", "hexagon window passes the four local structure laws",
        "alternating cycles, single-class cycles, full stars, unique copies: checked on the window",
        [] {
          auto d = dl_construction(crown(3), 3);
          auto rep = check_p_properties(d.dl, crown(3));
          std::string got = std::string(rep.p2 ? "P2" : "p2!") + (rep.p3 ? ",P3" : ",p3!") +
                            (rep.p4 ? ",P4" : ",p4!") + (rep.p5 ? ",P5" : ",p5!");
          return detail::expect_str("P2,P3,P4,P5", got);
        },
        true);

    add("dlc6-y-transitive", "depth-2 Y-configurations of the hexagon window fall in one class each way",
        "every interior junction deep enough for both limbs sits on the base arc",
        [] {
          auto d = dl_construction(crown(3), 3);
          return detail::expect_bool(true, y_transitive(d.dl, 2).verdict);
        },
        true);

    add("equiv-corpus-size", "at least 15 corpus structures are connected",
        "corpus construction: sixteen named families are connected by design", [] {
          int connected = 0;
          for (const auto& e : standard_corpus())
            if (is_connected(e.graph)) ++connected;
          ClaimOutcome o;
          o.expected = ">=15";
          o.computed = std::to_string(connected);
          o.pass = connected >= 15;
          return o;
        });

    add("equiv-3cs-2at",
        "3-CS-homogeneity equals local 2-arc-transitivity on every connected corpus entry",
        "the two predicates express the same extension property on two levels", [] {
          int checked = 0, disagree = 0;
          for (const auto& e : standard_corpus()) {
            if (!is_connected(e.graph)) continue;
            bool twoarcs = false;
            for (int v = 0; v < e.graph.n; ++v)
              if (e.graph.degree(v) >= 2) twoarcs = true;
            if (!twoarcs) continue;
            ++checked;
            bool h = is_k_cs_homogeneous(poset_of(e.graph), 3);
            bool l = is_locally_s_arc_transitive(e.graph, 2).verdict;
            if (h != l) ++disagree;
          }
          ClaimOutcome o = detail::expect_str("0", std::to_string(disagree));
          o.computed += " disagreements over " + std::to_string(checked) + " structures";
          o.pass = disagree == 0 && checked >= 15;
          return o;
        });

    add("meet-cover", "meets of maximal pairs are doubly covered, and conversely, on gated entries",
        "with chain or diamond intervals the meet sits directly under both tops", [] {
          int gated = 0, bad = 0;
          for (const auto& e : standard_corpus()) {
            Poset p = poset_of(e.graph);
            if (!meet_cover_gate(p)) continue;
            ++gated;
            bad += meet_cover_violations(p);
          }
          ClaimOutcome o = detail::expect_str("0", std::to_string(bad));
          o.computed += " violations over " + std::to_string(gated) + " gated structures";
          o.pass = bad == 0 && gated > 0;
          return o;
        });

    add("suite-density", "between any two comparable completion points sit good witnesses",
        "density of the two-sided extension, gated on chain intervals", [] {
          int gated = 0, violations = 0;
          for (const auto& e : standard_corpus()) {
            DensityReport r = density_check(poset_of(e.graph));
            if (r.hypothesis) ++gated, violations += r.violations;
          }
          ClaimOutcome o = detail::expect_str("0", std::to_string(violations));
          o.computed += " violations over " + std::to_string(gated) + " gated structures";
          o.pass = violations == 0 && gated > 0;
          return o;
        });

    add("suite-chain-lift", "chain intervals of the extended base lift to chain intervals above",
        "interval shape transfer between a base and its completion", [] {
          int gated = 0, bad = 0;
          for (const auto& e : standard_corpus()) {
            CompletedPoset c = dm_completion(poset_of(e.graph));
            if (!all_intervals_chains(m_plus(c).poset)) continue;
            ++gated;
            if (!all_intervals_chains(c.completion)) ++bad;
          }
          ClaimOutcome o = detail::expect_str("0", std::to_string(bad));
          o.computed += " violations over " + std::to_string(gated) + " gated structures";
          o.pass = bad == 0 && gated > 0;
          return o;
        });

    add("suite-ram-stability", "diamond-free completions keep their ramification points",
        "ramifying a completed order again finds the same branch points", [] {
          int gated = 0, bad = 0;
          for (const auto& e : standard_corpus()) {
            CompletedPoset c = dm_completion(poset_of(e.graph));
            if (!all_intervals_chains(c.completion)) continue;
            ++gated;
            auto [u1, d1] = ramification_points(poset_of(e.graph));
            CompletedPoset c2 = dm_completion(c.completion);
            std::vector<int> inv(c2.completion.n, -1);
            for (int v = 0; v < c.completion.n; ++v) inv[c2.embed[v]] = v;
            std::vector<int> u2, d2;
            for (int x : c2.up_ram) u2.push_back(inv[x]);
            for (int x : c2.down_ram) d2.push_back(inv[x]);
            std::sort(u2.begin(), u2.end());
            std::sort(d2.begin(), d2.end());
            if (u1 != u2 || d1 != d2) ++bad;
          }
          ClaimOutcome o = detail::expect_str("0", std::to_string(bad));
          o.computed += " violations over " + std::to_string(gated) + " gated structures";
          o.pass = bad == 0 && gated > 0;
          return o;
        });

    add("suite-two-level-added", "added elements sit over two bottoms and under two tops",
        "cuts of a two-level order need two elements on each side to exist", [] {
          int violations = 0;
          for (const auto& e : standard_corpus()) {
            Poset p = poset_of(e.graph);
            CompletedPoset c = dm_completion(p);
            for (int a : c.added) {
              int below = 0, above = 0;
              for (int v = 0; v < p.n; ++v) {
                if (p.is_minimal(v) && c.completion.leq(c.embed[v], a)) ++below;
                if (p.is_maximal(v) && c.completion.leq(a, c.embed[v])) ++above;
              }
              if (below < 2 || above < 2) ++violations;
            }
          }
          ClaimOutcome o = detail::expect_str("0", std::to_string(violations));
          o.computed += " violations over the corpus";
          o.pass = violations == 0;
          return o;
        });

    return r;
  }();
  return reg;
}

}  // namespace loom
