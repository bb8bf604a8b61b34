#ifndef CHAINSYM_VERIFY_HPP
#define CHAINSYM_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "census.hpp"
#include "core_model.hpp"
#include "diagrams.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "linkgraph.hpp"
#include "parallel.hpp"
#include "symmetry.hpp"

namespace chainsym {

/// Outcome of one integer-exact check.
struct ClaimResult
{
  std::string id;
  Json params;
  Json expected;
  Json computed;
  bool pass = false;
};

inline ClaimResult make_claim(std::string id, Json params, Json expected, Json computed)
{
  bool pass = expected == computed;
  return {std::move(id), std::move(params), std::move(expected), std::move(computed), pass};
}

inline constexpr std::uint64_t default_seed = 42;
inline constexpr int max_divisor_family_size = 400;

namespace detail {

inline std::string padded(long v, int width = 2)
{
  std::ostringstream s;
  s << std::setw(width) << std::setfill('0') << v;
  return s.str();
}

inline std::vector<int> int_range(int lo, int hi)
{
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    out.push_back(v);
  return out;
}

inline std::vector<ClaimResult> flatten_sorted(std::vector<std::vector<ClaimResult>> parts)
{
  std::vector<ClaimResult> out;
  for (auto &p : parts)
    for (auto &c : p)
      out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(),
                   [](const ClaimResult &a, const ClaimResult &b) { return a.id < b.id; });
  return out;
}

// Claims shared by every family member: Aut, link and complement orders.
inline void report_claims(std::vector<ClaimResult> &out, const std::string &prefix,
                          const Json &params, const SymReport &r,
                          const GroupDescriptor &expected_aut, long expected_index)
{
  out.push_back(make_claim(prefix + "/aut_order", params, expected_aut.order, r.aut_order));
  out.push_back(make_claim(prefix + "/aut_structure", params, expected_aut.to_string(),
                           r.aut_descriptor.to_string()));
  out.push_back(make_claim(prefix + "/sym_link_order", params,
                           fixed_subgroup_order * expected_aut.order, r.sym_link_order));
  out.push_back(make_claim(prefix + "/sym_complement_order", params, 32L * r.n,
                           r.sym_complement_order));
  out.push_back(make_claim(prefix + "/index", params, expected_index, r.index));
}

} // namespace detail

/// C_{4n} itself: Aut of the 4n-cycle is D_{4n} (order 8n), the link and its
/// complement share the symmetry group of order 32n, index 1.
inline std::vector<ClaimResult> verify_baseline(int n_lo, int n_hi, int jobs = 1)
{
  if (n_lo < 2)
    throw RangeError("baseline needs n >= 2, got " + std::to_string(n_lo));
  auto parts = parallel_map(
    detail::int_range(n_lo, n_hi),
    [](int n) {
      std::vector<ClaimResult> out;
      const SwapSet empty(ChainSize::quadruple(n));
      const auto r = symmetry_report(n, empty);
      detail::report_claims(out, "baseline/n=" + detail::padded(n),
                            Json{{"n", n}, {"swaps", Json::array()}}, r,
                            GroupDescriptor::dihedral(4 * n), 1);
      return out;
    },
    jobs);
  return detail::flatten_sorted(std::move(parts));
}

/// The {2, 8, 16} family: trivial Aut, link symmetry Z2xZ2, index 8n.
inline std::vector<ClaimResult> verify_asymmetric_family(int n_lo, int n_hi, int jobs = 1)
{
  if (n_lo < 6)
    throw RangeError("the asymmetric family needs n >= 6, got " + std::to_string(n_lo));
  auto parts = parallel_map(
    detail::int_range(n_lo, n_hi),
    [](int n) {
      std::vector<ClaimResult> out;
      const auto swaps = paper_asymmetric_set(n);
      const auto r = symmetry_report(n, swaps);
      detail::report_claims(out, "asymmetric/n=" + detail::padded(n),
                            Json{{"n", n}, {"swaps", swaps.labels()}}, r,
                            GroupDescriptor::trivial(), 8L * n);
      return out;
    },
    jobs);
  return detail::flatten_sorted(std::move(parts));
}

/// Evenly spaced swaps: Aut is D_k for every k | 4n with 1 <= k <= n.
inline std::vector<ClaimResult> verify_dihedral_family(int n_lo, int n_hi, int jobs = 1)
{
  if (n_lo < 2)
    throw RangeError("the dihedral family needs n >= 2, got " + std::to_string(n_lo));
  std::vector<std::pair<int, int>> cases;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int k = 1; k <= n; ++k)
      if ((4 * n) % k == 0)
        cases.emplace_back(n, k);
  auto parts = parallel_map(
    cases,
    [](const std::pair<int, int> &c) {
      auto [n, k] = c;
      std::vector<ClaimResult> out;
      const auto swaps = evenly_spaced_set(n, k);
      const auto r = symmetry_report(n, swaps);
      detail::report_claims(out,
                            "dihedral/n=" + detail::padded(n) + "/k=" + detail::padded(k),
                            Json{{"n", n}, {"k", k}, {"swaps", swaps.labels()}}, r,
                            GroupDescriptor::dihedral(k), 32L * n / (8L * k));
      return out;
    },
    jobs);
  return detail::flatten_sorted(std::move(parts));
}

/// For n = k1 * ... * kp: one link per factor on the same C_{4n}, with Aut
/// D_{ki}, all sharing the complement symmetry order 32n.
inline std::vector<ClaimResult> verify_divisor_family(const std::vector<int> &factors,
                                                      int jobs = 1)
{
  if (factors.empty())
    throw RangeError("the divisor family needs at least one factor");
  long n = 1;
  std::string tag;
  for (int k : factors) {
    if (k < 2)
      throw RangeError("divisor family factors must be >= 2, got " + std::to_string(k));
    n *= k;
    if (4 * n > max_divisor_family_size)
      throw BudgetExceeded("4n exceeds the divisor family budget of " +
                           std::to_string(max_divisor_family_size));
    tag += (tag.empty() ? "" : "x") + std::to_string(k);
  }
  std::vector<std::pair<int, int>> members; // (position, factor)
  for (std::size_t i = 0; i < factors.size(); ++i)
    members.emplace_back(static_cast<int>(i), factors[i]);

  auto parts = parallel_map(
    members,
    [&](const std::pair<int, int> &m) {
      auto [pos, k] = m;
      std::vector<ClaimResult> out;
      const auto swaps = evenly_spaced_set(static_cast<int>(n), k);
      const auto r = symmetry_report(static_cast<int>(n), swaps);
      detail::report_claims(out,
                            "divisor/" + tag + "/link" + std::to_string(pos + 1) +
                              "_k=" + detail::padded(k),
                            Json{{"n", n}, {"k", k}, {"swaps", swaps.labels()}}, r,
                            GroupDescriptor::dihedral(k), 32L * n / (8L * k));
      return out;
    },
    jobs);
  return detail::flatten_sorted(std::move(parts));
}

/// Seeded random non-overlapping swap set: a uniformly drawn target count,
/// then indices taken greedily from a shuffled residue order.
inline SwapSet random_swap_set(ChainSize size, std::mt19937_64 &rng)
{
  const int m = size.components();
  const int max_count = m / min_swap_distance;
  const int target = static_cast<int>(rng() % static_cast<std::uint64_t>(max_count + 1));
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int i = m - 1; i > 0; --i)
    std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);

  std::vector<int> chosen;
  for (int r : order) {
    if (static_cast<int>(chosen.size()) == target)
      break;
    bool ok = std::all_of(chosen.begin(), chosen.end(), [&](int c) {
      return circular_distance(c, r, size) >= min_swap_distance;
    });
    if (ok)
      chosen.push_back(r);
  }
  return swap_set_from_residues(size, std::move(chosen));
}

struct OracleOptions
{
  int size_lo = 8;
  int size_hi = 32;
  int exhaustive_up_to = 16;
  int samples = 50;
  std::uint64_t seed = default_seed;
};

/// The swap sets the oracle suite checks for one size: every set up to
/// `exhaustive_up_to`, otherwise `samples` seeded random sets.
inline std::vector<SwapSet> oracle_cases(ChainSize size, const OracleOptions &opts)
{
  if (size.components() <= opts.exhaustive_up_to)
    return enumerate_swap_sets(size, false);
  std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(size.components())));
  std::vector<SwapSet> out;
  for (int s = 0; s < opts.samples; ++s)
    out.push_back(random_swap_set(size, rng));
  return out;
}

/// Diagram-derived vs rewrite-derived linking graphs, and full vs
/// dihedral-restricted automorphism search, over the oracle cases.
inline std::vector<ClaimResult> verify_oracle(const OracleOptions &opts = {}, int jobs = 1)
{
  if (opts.size_lo < 8)
    throw ChainSizeError("oracle sizes must be >= 8", "(" + std::to_string(opts.size_lo) + ")");
  std::vector<int> sizes;
  for (int m = opts.size_lo + opts.size_lo % 2; m <= opts.size_hi; m += 2)
    sizes.push_back(m);

  auto parts = parallel_map(
    sizes,
    [&](int m) {
      const ChainSize size(m);
      const auto cases = oracle_cases(size, opts);
      long graphs_equal = 0, auts_equal = 0;
      Json graph_mismatches = Json::array(), aut_mismatches = Json::array();
      for (const auto &s : cases) {
        const LinkingGraph rewritten = rewrite_graph(s);
        if (diagram_graph(s) == rewritten)
          ++graphs_equal;
        else
          graph_mismatches.push_back(s.labels());
        if (automorphism_group(rewritten) ==
            dihedral_automorphisms(rewritten, rewrite_cycle_order(s)))
          ++auts_equal;
        else
          aut_mismatches.push_back(s.labels());
      }
      const long total = static_cast<long>(cases.size());
      Json params{{"size", m},
                  {"mode", m <= opts.exhaustive_up_to ? "exhaustive" : "sampled"},
                  {"cases", total}};
      if (m > opts.exhaustive_up_to)
        params["seed"] = opts.seed;
      std::vector<ClaimResult> out;
      Json p1 = params, p2 = params;
      if (!graph_mismatches.empty())
        p1["mismatches"] = graph_mismatches;
      if (!aut_mismatches.empty())
        p2["mismatches"] = aut_mismatches;
      const std::string prefix = "oracle/size=" + detail::padded(m);
      out.push_back(make_claim(prefix + "/diagram_vs_rewrite", p1, total, graphs_equal));
      out.push_back(make_claim(prefix + "/backtrack_vs_dihedral_aut", p2, total, auts_equal));
      return out;
    },
    jobs);

  std::vector<ClaimResult> named;
  if (opts.size_lo <= 24 && 24 <= opts.size_hi) {
    // L24 from {2, 8, 16}: 24-cycle plus chords v1v4, v7v10, v15v18.
    const auto swaps = paper_asymmetric_set(6);
    const auto g = rewrite_graph(swaps);
    Json chords = Json::array();
    for (auto [a, b] : g.edges())
      if (circular_distance(a, b, swaps.size()) == 3)
        chords.push_back(Json::array({a + 1, b + 1}));
    Json params{{"size", 24}, {"swaps", swaps.labels()}};
    named.push_back(make_claim("oracle/size=24/L24_chords", params,
                               Json::array({Json::array({1, 4}), Json::array({7, 10}),
                                            Json::array({15, 18})}),
                               chords));
    named.push_back(make_claim("oracle/size=24/L24_diagram_vs_rewrite", params, true,
                               diagram_graph(swaps) == g));
  }
  parts.push_back(std::move(named));
  return detail::flatten_sorted(std::move(parts));
}

enum class Suite { all, baseline, asymmetric, dihedral, divisor, oracle };

struct VerifyOptions
{
  std::uint64_t seed = default_seed;
  int jobs = 1;
};

/// Run a named suite with its standard parameter ranges.
inline std::vector<ClaimResult> run_suite(Suite suite, const VerifyOptions &opts = {})
{
  std::vector<std::vector<ClaimResult>> parts;
  auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::baseline))
    parts.push_back(verify_baseline(2, 25, opts.jobs));
  if (want(Suite::asymmetric))
    parts.push_back(verify_asymmetric_family(6, 25, opts.jobs));
  if (want(Suite::dihedral))
    parts.push_back(verify_dihedral_family(2, 15, opts.jobs));
  if (want(Suite::divisor)) {
    parts.push_back(verify_divisor_family({2, 3}, opts.jobs));
    parts.push_back(verify_divisor_family({2, 2}, opts.jobs));
    parts.push_back(verify_divisor_family({2, 2, 3}, opts.jobs));
  }
  if (want(Suite::oracle)) {
    OracleOptions o;
    o.seed = opts.seed;
    parts.push_back(verify_oracle(o, opts.jobs));
  }
  return detail::flatten_sorted(std::move(parts));
}

inline Json claims_to_json(const std::vector<ClaimResult> &claims, std::uint64_t seed)
{
  Json list = Json::array();
  long passed = 0;
  for (const auto &c : claims) {
    list.push_back(Json{{"id", c.id},
                        {"params", c.params},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"pass", c.pass}});
    passed += c.pass ? 1 : 0;
  }
  return Json{{"seed", seed},
              {"total", claims.size()},
              {"passed", passed},
              {"claims", std::move(list)}};
}

inline std::string claims_to_table(const std::vector<ClaimResult> &claims)
{
  std::size_t width = 5;
  for (const auto &c : claims)
    width = std::max(width, c.id.size());
  std::ostringstream out;
  long passed = 0;
  out << "status  " << std::left << std::setw(static_cast<int>(width)) << "claim"
      << "  expected -> computed\n";
  for (const auto &c : claims) {
    out << (c.pass ? "PASS    " : "FAIL    ") << std::left
        << std::setw(static_cast<int>(width)) << c.id << "  " << c.expected.dump()
        << " -> " << c.computed.dump() << "\n";
    passed += c.pass ? 1 : 0;
  }
  out << passed << "/" << claims.size() << " claims passed\n";
  return out.str();
}

} // namespace chainsym

#endif // CHAINSYM_VERIFY_HPP
