// Acceptance suite: one PASS/FAIL line per criterion. Every check is
// integer-exact; runtime limits are in seconds of wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <chainsym/chainsym.hpp>

#include "chainsym_cli.hpp"
#include "support/oracles.hpp"

using namespace chainsym;

namespace {

struct Outcome
{
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string &what)
  {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &title, double time_limit,
               const std::function<void(Outcome &)> &body)
{
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0)
    o.check(secs < time_limit, "runtime " + std::to_string(secs) + " s >= " +
                                 std::to_string(time_limit) + " s");
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << " (" << timing
            << ")";
  if (!o.pass)
    std::cout << " -- " << o.detail;
  std::cout << std::endl;
  failures += o.pass ? 0 : 1;
}

std::string str(long v)
{ return std::to_string(v); }

// Every swap set that criteria 1-5 touch, for the automorphism oracles.
std::vector<SwapSet> graphs_in_criteria()
{
  std::set<SwapSet> all;
  for (int n = 2; n <= 25; ++n)
    all.insert(SwapSet(ChainSize::quadruple(n)));
  for (int n = 6; n <= 25; ++n)
    all.insert(paper_asymmetric_set(n));
  for (int n = 2; n <= 15; ++n)
    for (int k = 1; k <= n; ++k)
      if ((4 * n) % k == 0)
        all.insert(evenly_spaced_set(n, k));
  OracleOptions o;
  for (int m = 8; m <= 32; m += 2)
    for (auto &s : oracle_cases(ChainSize(m), o))
      all.insert(s);
  return {all.begin(), all.end()};
}

} // namespace

int main()
{
  criterion(1, "baseline: |Aut(G(C4n))| = 8n, |Sym(S3,C4n)| = 32n, index 1 for 2<=n<=25", 10,
            [](Outcome &o) {
              for (int n = 2; n <= 25; ++n) {
                const SwapSet empty(ChainSize::quadruple(n));
                const auto aut = automorphism_group(cycle_graph(4 * n));
                o.check(static_cast<long>(aut.order()) == 8L * n,
                        "n=" + str(n) + " |Aut| = " + str(aut.order()));
                const auto r = symmetry_report(n, empty);
                o.check(r.sym_link_order == 32L * n, "n=" + str(n) + " sym = " + str(r.sym_link_order));
                o.check(r.sym_complement_order == 32L * n, "n=" + str(n) + " complement");
                o.check(r.index == 1, "n=" + str(n) + " index = " + str(r.index));
              }
            });

  criterion(2, "asymmetric: swaps {2,8,16} give |Aut| = 1, |Sym| = 4, index 8n for 6<=n<=25", 10,
            [](Outcome &o) {
              for (int n = 6; n <= 25; ++n) {
                const auto r = symmetry_report(n, validate_swap_set(ChainSize::quadruple(n), {2, 8, 16}));
                o.check(r.aut_order == 1, "n=" + str(n) + " |Aut| = " + str(r.aut_order));
                o.check(r.sym_link_order == 4, "n=" + str(n) + " |Sym| = " + str(r.sym_link_order));
                o.check(r.index == 8L * n, "n=" + str(n) + " index = " + str(r.index));
              }
            });

  criterion(3, "dihedral: evenly spaced k swaps give Aut = D_k, |Sym| = 4|D_k| for 2<=n<=15", 30,
            [](Outcome &o) {
              for (int n = 2; n <= 15; ++n)
                for (int k = 1; k <= n; ++k) {
                  if ((4 * n) % k != 0)
                    continue;
                  const auto r = symmetry_report(n, evenly_spaced_set(n, k));
                  const std::string tag = "n=" + str(n) + " k=" + str(k);
                  const std::string want = k == 1 ? "Z2" : k == 2 ? "Z2xZ2" : "D" + str(k);
                  o.check(r.aut_descriptor.to_string() == want,
                          tag + " Aut = " + r.aut_descriptor.to_string());
                  o.check(r.aut_order == 2L * k, tag + " |Aut| = " + str(r.aut_order));
                  o.check(r.sym_link_order == 4L * 2 * k, tag + " |Sym| = " + str(r.sym_link_order));
                }
            });

  criterion(4, "divisor family: n = 6 = 2*3 has links with Aut D2 and D3 on C24", 0,
            [](Outcome &o) {
              const auto d2 = symmetry_report(6, evenly_spaced_set(6, 2));
              const auto d3 = symmetry_report(6, evenly_spaced_set(6, 3));
              o.check(d2.aut_descriptor == GroupDescriptor::dihedral(2), "first link not D2");
              o.check(d3.aut_descriptor == GroupDescriptor::dihedral(3), "second link not D3");
              o.check(d2.sym_link_order == 16, "|Sym| D2 link = " + str(d2.sym_link_order));
              o.check(d3.sym_link_order == 24, "|Sym| D3 link = " + str(d3.sym_link_order));
              o.check(d2.sym_complement_order == 192 && d3.sym_complement_order == 192,
                      "complement orders differ from 192");
              o.check(d2.swaps.size() == d3.swaps.size(), "links on different chains");
            });

  criterion(5, "oracle: diagram-derived and rewrite-derived linking graphs agree, sizes 8..32", 0,
            [](Outcome &o) {
              OracleOptions opts;
              opts.seed = 42;
              for (int m = 8; m <= 32; m += 2) {
                const auto cases = oracle_cases(ChainSize(m), opts);
                if (m <= 16)
                  o.check(cases.size() == oracle::subset_filter_swap_sets(m).size(),
                          "size " + str(m) + " not exhaustive");
                else
                  o.check(cases.size() >= 50, "size " + str(m) + " has < 50 samples");
                for (const auto &s : cases)
                  o.check(diagram_graph(s) == rewrite_graph(s),
                          "size " + str(m) + " mismatch at " + to_json(s).dump());
              }
            });

  criterion(6, "automorphism oracle: pruned = brute force (<=16 vertices), = dihedral-restricted", 0,
            [](Outcome &o) {
              for (const auto &s : graphs_in_criteria()) {
                const auto g = rewrite_graph(s);
                const auto full = automorphism_group(g);
                if (g.vertex_count() <= 16)
                  o.check(full.elements() == oracle::exhaustive_automorphisms(g),
                          "brute force differs at " + to_json(s).dump());
                o.check(full == dihedral_automorphisms(g, rewrite_cycle_order(s)),
                        "dihedral-restricted differs at " + to_json(s).dump());
              }
            });

  criterion(7, "census: C8 has 13 raw sets and 3 classes; spectra contain 8n exactly once", 0,
            [](Outcome &o) {
              const auto raw = enumerate_swap_sets(ChainSize(8), false);
              const auto classes = enumerate_swap_sets(ChainSize(8), true);
              const auto brute = oracle::subset_filter_swap_sets(8);
              o.check(raw.size() == 13 && brute.size() == 13, "raw count " + str(raw.size()));
              o.check(classes.size() == 3 && oracle::count_orbits(8, brute) == 3,
                      "class count " + str(classes.size()));
              for (int n = 2; 4 * n <= default_census_budget; ++n) {
                const auto table = spectrum(n);
                auto it = table.find(8L * n);
                o.check(it != table.end() && it->second == 1,
                        "spectrum n=" + str(n) + " lacks a unique 8n entry");
              }
            });

  criterion(8, "determinism: verify --suite all --seed 42 twice gives identical JSON", 0,
            [](Outcome &o) {
              std::ostringstream a, b, err;
              const int sa = cli::run({"verify", "--suite", "all", "--seed", "42"}, a, err);
              const int sb = cli::run({"verify", "--suite", "all", "--seed", "42"}, b, err);
              o.check(sa == 0 && sb == 0, "verify exited " + str(sa) + "/" + str(sb) + ": " + err.str());
              o.check(!a.str().empty() && a.str() == b.str(), "reports differ");
            });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : str(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
