// Command line front end: generate corpus structures, complete and inspect
// orders, run symmetry and reachability checks, and replay the claim table.
// Exit codes: 0 success / property holds, 1 failure or runtime error, 2 usage.

#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "lattice_loom/claims.hpp"
#include "lattice_loom/completion.hpp"
#include "lattice_loom/dl.hpp"
#include "lattice_loom/families.hpp"
#include "lattice_loom/intervals.hpp"
#include "lattice_loom/io.hpp"
#include "lattice_loom/morphisms.hpp"
#include "lattice_loom/reach.hpp"
#include "lattice_loom/transitivity.hpp"

namespace {

using loom::Structure;

loom::Poset as_poset(const Structure& s) {
  if (const loom::Poset* p = std::get_if<loom::Poset>(&s)) return *p;
  if (const loom::BipartiteGraph* g = std::get_if<loom::BipartiteGraph>(&s))
    return loom::poset_of(*g);
  return loom::poset_of(std::get<loom::Digraph>(s));
}

const loom::BipartiteGraph& as_bipartite(const Structure& s) {
  if (const loom::BipartiteGraph* g = std::get_if<loom::BipartiteGraph>(&s)) return *g;
  throw loom::BadParams("this command needs a bipartite graph file");
}

const loom::Digraph& as_digraph(const Structure& s) {
  if (const loom::Digraph* d = std::get_if<loom::Digraph>(&s)) return *d;
  throw loom::BadParams("this command needs a digraph file");
}

void emit(const Structure& s, const std::string& out) {
  if (out.empty())
    std::cout << loom::to_text(s);
  else
    loom::save_structure(s, out);
}

std::string label_list(const loom::Poset& p, const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += " ";
    s += p.label(ids[i]);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice-loom: completions, ramification, symmetry and"
               " reachability for finite orders"};
  app.require_subcommand(1);
  int rc = 0;

  // gen ----------------------------------------------------------------
  std::string family, gen_out;
  int gn = 3, gm = 2, gq = 2, gradius = 2, grounds = 2, gpercent = 50;
  unsigned gseed = 1;
  bool gnon = false;
  CLI::App* gen = app.add_subcommand("gen", "generate a named structure");
  gen->add_option("family", family, "crown complete matching-complement cube"
                                    " subspaces fano random generic dtree fig1")
      ->required()
      ->check(CLI::IsMember({"crown", "complete", "matching-complement", "cube",
                             "subspaces", "fano", "random", "generic", "dtree",
                             "fig1"}));
  gen->add_option("--n", gn, "size parameter");
  gen->add_option("--m", gm, "second size parameter");
  gen->add_option("--q", gq, "field order");
  gen->add_option("--radius", gradius, "window radius");
  gen->add_option("--rounds", grounds, "extension rounds");
  gen->add_option("--percent", gpercent, "edge probability");
  gen->add_option("--seed", gseed, "random seed");
  gen->add_flag("--non", gnon, "take the non-incidence complement");
  gen->add_option("-o,--out", gen_out, "output file (stdout when absent)");
  gen->callback([&] {
    Structure s;
    if (family == "crown") s = loom::crown(gn);
    else if (family == "complete") s = loom::complete_bipartite(gm, gn);
    else if (family == "matching-complement") s = loom::complement_matching(gn);
    else if (family == "cube") s = loom::cube(gn);
    else if (family == "subspaces") s = loom::subspace_incidence(gn, gq, !gnon);
    else if (family == "fano") s = gnon ? loom::fano_complement() : loom::fano_incidence();
    else if (family == "random") s = loom::random_bipartite(gm, gn, gpercent, gseed);
    else if (family == "generic") s = loom::generic_bipartite(grounds, gseed);
    else if (family == "dtree") s = loom::directed_tree(gm, gn, gradius);
    else s = loom::fig1_poset();
    emit(s, gen_out);
  });

  // complete -----------------------------------------------------------
  std::string in_complete;
  CLI::App* complete = app.add_subcommand("complete", "completion summary");
  complete->add_option("file", in_complete)->required();
  complete->callback([&] {
    loom::Poset p = as_poset(loom::load_structure(in_complete));
    loom::CompletedPoset c = loom::dm_completion(p);
    std::cout << "elements: " << p.n << "\n"
              << "completion: " << c.completion.n << "\n"
              << "added: " << c.added.size() << "\n"
              << "levels: " << loom::join_ints(loom::completion_level_counts(c)) << "\n"
              << "up-ramification: " << c.up_ram.size() << "\n"
              << "down-ramification: " << c.down_ram.size() << "\n"
              << "complete-order: " << (loom::is_dm_complete(c.completion) ? "yes" : "no")
              << "\n"
              << "cycle-free: " << (loom::is_cycle_free(c) ? "yes" : "no") << "\n";
  });

  // interval -----------------------------------------------------------
  std::string in_interval;
  int iva = 0, ivb = 0;
  CLI::App* ival = app.add_subcommand("interval", "completion interval between"
                                                  " two original elements");
  ival->add_option("file", in_interval)->required();
  ival->add_option("a", iva)->required();
  ival->add_option("b", ivb)->required();
  ival->callback([&] {
    loom::Poset p = as_poset(loom::load_structure(in_interval));
    if (iva < 0 || iva >= p.n || ivb < 0 || ivb >= p.n)
      throw loom::BadParams("interval: element out of range");
    loom::CompletedPoset c = loom::dm_completion(p);
    loom::SubPoset iv = loom::interval(c.completion, c.embed[iva], c.embed[ivb]);
    auto [kind, param] = loom::detail::shape_of(iv.poset);
    const char* name = kind == loom::ShapeKind::Chain      ? "Chain"
                       : kind == loom::ShapeKind::KDiamond ? "KDiamond"
                                                           : "Other";
    std::cout << "size: " << iv.poset.n << "\n"
              << "members: " << label_list(c.completion, iv.ids) << "\n"
              << "shape: " << name << "(" << param << ")\n";
  });

  // ram ----------------------------------------------------------------
  std::string in_ram;
  CLI::App* ram = app.add_subcommand("ram", "ramification points");
  ram->add_option("file", in_ram)->required();
  ram->callback([&] {
    loom::Poset p = as_poset(loom::load_structure(in_ram));
    loom::CompletedPoset c = loom::dm_completion(p);
    std::cout << "up: " << label_list(c.completion, c.up_ram) << "\n"
              << "down: " << label_list(c.completion, c.down_ram) << "\n"
              << "union-with-original: " << loom::m_plus(c).poset.n << "\n";
  });

  // check ----------------------------------------------------------------
  std::string in_check, property;
  int cs = 2, ck = 3, cdepth = 1;
  std::string delta_file;
  CLI::App* check = app.add_subcommand("check", "test one property, exit 0/1");
  check->add_option("file", in_check)->required();
  check
      ->add_option("--property", property,
                   "s-arc-transitive locally-s-arc-transitive k-cs-transitive"
                   " k-cs-homogeneous one-arc-transitive dm-complete cycle-free"
                   " semilinear density intersection y-transitive p-properties"
                   " connected")
      ->required()
      ->check(CLI::IsMember({"s-arc-transitive", "locally-s-arc-transitive",
                             "k-cs-transitive", "k-cs-homogeneous",
                             "one-arc-transitive", "dm-complete", "cycle-free",
                             "semilinear", "density", "intersection",
                             "y-transitive", "p-properties", "connected"}));
  check->add_option("--s", cs, "arc length");
  check->add_option("--k", ck, "set size");
  check->add_option("--depth", cdepth, "context depth");
  check->add_option("--delta", delta_file, "bipartite file for p-properties");
  check->callback([&] {
    Structure s = loom::load_structure(in_check);
    bool holds = false;
    if (property == "s-arc-transitive") {
      holds = loom::is_s_arc_transitive(as_bipartite(s), cs).verdict;
    } else if (property == "locally-s-arc-transitive") {
      holds = loom::is_locally_s_arc_transitive(as_bipartite(s), cs).verdict;
    } else if (property == "k-cs-transitive") {
      holds = loom::is_k_cs_transitive(as_poset(s), ck);
    } else if (property == "k-cs-homogeneous") {
      holds = loom::is_k_cs_homogeneous(as_poset(s), ck);
    } else if (property == "one-arc-transitive") {
      holds = loom::is_one_arc_transitive(as_digraph(s));
    } else if (property == "dm-complete") {
      holds = loom::is_dm_complete(as_poset(s));
    } else if (property == "cycle-free") {
      holds = loom::is_cycle_free(as_poset(s));
    } else if (property == "semilinear") {
      holds = loom::semilinear_check(as_poset(s));
    } else if (property == "density") {
      holds = loom::density_check(as_poset(s)).holds();
    } else if (property == "intersection") {
      holds = loom::intersection_property(as_digraph(s)).holds;
    } else if (property == "y-transitive") {
      holds = loom::y_transitive(as_digraph(s), cdepth).verdict;
    } else if (property == "p-properties") {
      if (delta_file.empty())
        throw loom::BadParams("p-properties needs --delta <bipartite file>");
      loom::BipartiteGraph delta =
          as_bipartite(loom::load_structure(delta_file));
      loom::PReport r = loom::check_p_properties(as_digraph(s), delta);
      holds = r.p2 && r.p3 && r.p4 && r.p5;
    } else {
      const Structure& t = s;
      if (const loom::Poset* p = std::get_if<loom::Poset>(&t))
        holds = loom::is_connected(*p);
      else if (const loom::BipartiteGraph* g = std::get_if<loom::BipartiteGraph>(&t))
        holds = loom::is_connected(*g);
      else
        holds = loom::is_connected_underlying(std::get<loom::Digraph>(t));
    }
    std::cout << property << ": " << (holds ? "holds" : "fails") << "\n";
    rc = holds ? 0 : 1;
  });

  // reach ----------------------------------------------------------------
  std::string in_reach;
  int arc = -1;
  CLI::App* reach = app.add_subcommand("reach", "alternation classes and"
                                                " reachability digraph");
  reach->add_option("file", in_reach)->required();
  reach->add_option("--arc", arc, "show the class of one arc id");
  reach->callback([&] {
    loom::Digraph d = as_digraph(loom::load_structure(in_reach));
    if (arc >= 0) {
      if (arc >= int(d.arcs.size())) throw loom::BadParams("reach: no such arc");
      loom::AltClass c = loom::alternating_class(d, d.arcs[arc].first, d.arcs[arc].second);
      std::cout << "class-size: " << c.arcs.size() << "\n"
                << "tails: " << c.tails.count() << "\n"
                << "heads: " << c.heads.count() << "\n"
                << "touches-boundary: " << (c.touches_boundary ? "yes" : "no") << "\n";
      return;
    }
    loom::ReachabilityReport r = loom::reachability_graph(d);
    std::cout << "classes: " << r.classes.size() << "\n"
              << "universal: " << (r.universal ? "yes" : "no") << "\n"
              << "arc-transitive: " << (r.arc_transitive ? "yes" : "no") << "\n"
              << "bipartite-classes: " << (r.all_bipartite ? "yes" : "no") << "\n";
    if (r.delta)
      std::cout << "reachability-graph: " << r.delta->n << " vertices, "
                << r.delta->edges.size() << " edges\n";
    loom::IntersectionReport ir = loom::intersection_property(d);
    std::cout << "intersection-property: " << (ir.holds ? "holds" : "fails") << "\n";
  });

  // dl ----------------------------------------------------------------
  std::string in_dl, dl_out, policy = "sorted";
  int radius = 1;
  CLI::App* dl = app.add_subcommand("dl", "window of the tree arc digraph"
                                          " over a bipartite graph");
  dl->add_option("file", in_dl)->required();
  dl->add_option("--radius", radius)->required();
  dl->add_option("--policy", policy)->check(CLI::IsMember({"sorted", "rotated"}));
  dl->add_option("-o,--out", dl_out, "save the window digraph");
  dl->callback([&] {
    loom::BipartiteGraph delta = as_bipartite(loom::load_structure(in_dl));
    loom::DlResult r = loom::dl_construction(
        delta, radius,
        policy == "sorted" ? loom::DlPolicy::Sorted : loom::DlPolicy::Rotated);
    int interior = 0;
    for (int v = 0; v < r.dl.n; ++v)
      if (!r.dl.is_boundary(v)) ++interior;
    std::cout << "vertices: " << r.dl.n << "\n"
              << "arcs: " << r.dl.arcs.size() << "\n"
              << "interior: " << interior << "\n"
              << "tree-vertices: " << r.tree.n << "\n";
    if (!dl_out.empty()) loom::save_structure(Structure(r.dl), dl_out);
  });

  // claims ----------------------------------------------------------------
  std::string filter = "*";
  CLI::App* claims = app.add_subcommand("claims", "replay the recorded claim"
                                                  " table");
  claims->add_option("--filter", filter, "claim id glob");
  claims->callback([&] {
    auto reports = loom::standard_claims().run(filter);
    if (reports.empty()) {
      std::cerr << "no claims match " << filter << "\n";
      rc = 2;
      return;
    }
    int failed = 0;
    for (const loom::ClaimReport& r : reports) {
      if (!r.ok()) ++failed;
      std::printf("%-28s %-15s expected %-18s got %-18s %7.1fms\n", r.id.c_str(),
                  r.status.c_str(), r.expected.c_str(), r.computed.c_str(), r.ms);
    }
    std::printf("%zu claims, %d failed\n", reports.size(), failed);
    rc = failed ? 1 : 0;
  });

  // export-dot -----------------------------------------------------------
  std::string in_dot, dot_out;
  bool with_completion = false;
  CLI::App* dot = app.add_subcommand("export-dot", "DOT drawing");
  dot->add_option("file", in_dot)->required();
  dot->add_flag("--completion", with_completion,
                "draw the completion, added points as open circles");
  dot->add_option("-o,--out", dot_out, "output file (stdout when absent)");
  dot->callback([&] {
    Structure s = loom::load_structure(in_dot);
    std::string text = with_completion
                           ? loom::export_dot(loom::dm_completion(as_poset(s)))
                           : loom::export_dot(s);
    if (dot_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(dot_out);
      if (!out) throw loom::Error("cannot write " + dot_out);
      out << text;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const loom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
