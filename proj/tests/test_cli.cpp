// End-to-end exercise of the command line tool. Takes the binary path as
// argv[1], spawns it per scenario, and checks exit codes and key output
// lines. Exit codes under test: 0 success, 1 failure, 2 usage.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& cmd) {
  Result r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  if (WIFEXITED(st)) r.code = WEXITSTATUS(st);
  return r;
}

int failures = 0;

void expect(const std::string& what, bool ok, const Result& r) {
  if (ok) {
    std::printf("[ok]   %s\n", what.c_str());
  } else {
    ++failures;
    std::printf("[FAIL] %s\n  exit=%d output:\n%s\n", what.c_str(), r.code,
                r.out.c_str());
  }
}

bool has(const Result& r, const std::string& needle) {
  return r.out.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <loom-binary>\n", argv[0]);
    return 2;
  }
  const std::string loom = argv[1];

  Result r = run(loom);
  expect("no arguments is a usage error", r.code == 2, r);

  r = run(loom + " gen frobnicate");
  expect("unknown family is a usage error", r.code == 2, r);

  r = run(loom + " gen crown --n 2");
  expect("gen writes a bipartite structure to stdout",
         r.code == 0 && has(r, "\"kind\": \"bipartite\""), r);

  r = run(loom + " gen crown --n 3 -o tmp_crown.json");
  expect("gen crown to file", r.code == 0, r);
  r = run("test -f tmp_crown.json");
  expect("gen created the file", r.code == 0, r);

  r = run(loom + " gen fig1 -o tmp_fig1.json");
  expect("gen fig1 to file", r.code == 0, r);
  r = run(loom + " gen complete --m 2 --n 2 -o tmp_k22.json");
  expect("gen complete bipartite to file", r.code == 0, r);
  r = run(loom + " gen complete --m 2 --n 3 -o tmp_k23.json");
  expect("gen K23 to file", r.code == 0, r);
  r = run(loom + " gen dtree --m 2 --n 2 --radius 1 -o tmp_tree.json");
  expect("gen directed tree to file", r.code == 0, r);

  r = run(loom + " gen subspaces --n 3 --q 4");
  expect("non-prime field order fails", r.code == 1, r);

  r = run(loom + " complete tmp_fig1.json");
  expect("completion summary of the running example",
         r.code == 0 && has(r, "elements: 6") && has(r, "completion: 8") &&
             has(r, "added: 2") && has(r, "cycle-free: no"),
         r);

  r = run(loom + " complete tmp_crown.json");
  expect("hexagon order is already complete",
         r.code == 0 && has(r, "added: 0") && has(r, "complete-order: yes"), r);

  r = run(loom + " complete no_such_file.json");
  expect("missing input file fails", r.code == 1, r);

  r = run("LATTICE_LOOM_MAX_IDEALS=4 " + loom + " complete tmp_fig1.json");
  expect("ideal cap from the environment stops completion", r.code == 1, r);

  r = run(loom + " interval tmp_k22.json 0 2");
  expect("completion interval in a complete bipartite order",
         r.code == 0 && has(r, "shape: Chain(3)"), r);

  r = run(loom + " interval tmp_k22.json 0 1");
  expect("interval of an incomparable pair fails", r.code == 1, r);

  r = run(loom + " ram tmp_fig1.json");
  expect("ramification summary", r.code == 0 && has(r, "union-with-original: 8"), r);

  r = run(loom + " check tmp_crown.json --property s-arc-transitive --s 2");
  expect("hexagon is 2-arc-transitive", r.code == 0 && has(r, "holds"), r);

  r = run(loom + " check tmp_fig1.json --property cycle-free");
  expect("running example is not cycle-free", r.code == 1 && has(r, "fails"), r);

  r = run(loom + " check tmp_crown.json --property dm-complete");
  expect("hexagon order is complete", r.code == 0, r);

  r = run(loom + " check tmp_crown.json --property k-cs-homogeneous --k 3");
  expect("hexagon is 3-set homogeneous", r.code == 0, r);

  r = run(loom + " check tmp_tree.json --property intersection");
  expect("tree window has the intersection property", r.code == 0, r);

  r = run(loom + " check tmp_crown.json --property frobnicate");
  expect("unknown property is a usage error", r.code == 2, r);

  r = run(loom + " reach tmp_tree.json");
  expect("reachability report on the tree window",
         r.code == 0 && has(r, "classes: 3") && has(r, "universal: no"), r);

  r = run(loom + " reach tmp_tree.json --arc 0");
  expect("single alternation class", r.code == 0 && has(r, "class-size: 3"), r);

  r = run(loom + " reach tmp_crown.json");
  expect("reach rejects non-digraph input", r.code == 1, r);

  r = run(loom + " dl tmp_k22.json --radius 1");
  expect("window construction over the 4-cycle",
         r.code == 0 && has(r, "vertices: 7") && has(r, "arcs: 8") &&
             has(r, "interior: 1"),
         r);

  r = run(loom + " dl tmp_k23.json --radius 1");
  expect("window construction needs arc-transitivity", r.code == 1, r);

  r = run(loom + " claims --filter 'fig1-*'");
  expect("claims table for the running example",
         r.code == 0 && has(r, "fig1-completion-size") && has(r, "0 failed"), r);

  r = run(loom + " claims --filter 'zzz-*'");
  expect("claims filter with no match is a usage error", r.code == 2, r);

  r = run(loom + " export-dot tmp_fig1.json");
  expect("poset DOT export", r.code == 0 && r.out.rfind("digraph H {", 0) == 0, r);

  r = run(loom + " export-dot tmp_fig1.json --completion");
  expect("completion DOT export marks added points",
         r.code == 0 && has(r, "fillcolor=white"), r);

  r = run(loom + " export-dot tmp_crown.json");
  expect("graph DOT export", r.code == 0 && r.out.rfind("graph H {", 0) == 0, r);

  for (const char* f : {"tmp_crown.json", "tmp_fig1.json", "tmp_k22.json",
                        "tmp_k23.json", "tmp_tree.json"})
    std::remove(f);

  if (failures) std::printf("%d scenario(s) failed\n", failures);
  else std::printf("all scenarios passed\n");
  return failures ? 1 : 0;
}
