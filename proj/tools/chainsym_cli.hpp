#ifndef CHAINSYM_TOOLS_CLI_HPP
#define CHAINSYM_TOOLS_CLI_HPP

// Command-line front end. `run` is kept separate from main() so tests can
// drive it in-process.
//
// Exit status: 0 on success, 1 on a domain error (the error name is printed
// verbatim), 2 on a usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <chainsym/chainsym.hpp>

namespace chainsym::cli {

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Flags that select a link: C_{4n} or C_m plus a swap set, or a JSON file.
struct LinkSource
{
  std::optional<int> n;
  std::optional<int> size;
  std::string indices;
  std::optional<int> evenly_spaced;
  bool paper_asymmetric = false;
  std::string input;

  void add_to(CLI::App &cmd)
  {
    cmd.add_option("--n", n, "Use the chain C_{4n}");
    cmd.add_option("--size", size, "Use the chain C_m with m components");
    cmd.add_option("--indices", indices, "Comma-separated 1-based swap indices");
    cmd.add_option("--evenly-spaced", evenly_spaced,
                   "Swaps s1, s(g+1), ..., with k evenly spaced swaps (needs --n)");
    cmd.add_flag("--paper-asymmetric", paper_asymmetric,
                 "Swaps {2, 8, 16} (needs --n >= 6)");
    cmd.add_option("--input", input, "Read a JSON descriptor, diagram or graph ('-' = stdin)");
  }
};

namespace detail {

inline Json read_json(const std::string &path, std::istream &in)
{
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(path);
    if (!file)
      throw FormatError("cannot open input file " + path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::vector<int> parse_indices(const std::string &text)
{
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw UsageError("--indices: not an integer: '" + item + "'");
    }
  }
  return out;
}

inline ChainSize chain_size(const LinkSource &src)
{
  if (src.n && src.size)
    throw UsageError("--n and --size are mutually exclusive");
  if (src.n)
    return ChainSize::quadruple(*src.n);
  if (src.size)
    return ChainSize(*src.size);
  throw UsageError("one of --n, --size or --input is required");
}

/// Parsed link input; exactly one of the members is set.
struct LinkInput
{
  std::optional<SwapSet> swaps;
  std::optional<Diagram> diagram;
  std::optional<LinkingGraph> graph;
};

inline LinkInput resolve(const LinkSource &src, std::istream &in)
{
  LinkInput out;
  if (!src.input.empty()) {
    if (src.n || src.size || !src.indices.empty() || src.evenly_spaced ||
        src.paper_asymmetric)
      throw UsageError("--input cannot be combined with --n/--size/--indices");
    Json j = read_json(src.input, in);
    if (j.contains("crossings"))
      out.diagram = diagram_from_json(j);
    else if (j.contains("vertices"))
      out.graph = graph_from_json(j);
    else
      out.swaps = swap_set_from_json(j);
    return out;
  }

  const int selectors = (!src.indices.empty() ? 1 : 0) + (src.evenly_spaced ? 1 : 0) +
                        (src.paper_asymmetric ? 1 : 0);
  if (selectors > 1)
    throw UsageError("--indices, --evenly-spaced and --paper-asymmetric are exclusive");
  if (src.evenly_spaced || src.paper_asymmetric) {
    if (!src.n)
      throw UsageError(std::string(src.evenly_spaced ? "--evenly-spaced" : "--paper-asymmetric") +
                       " requires --n");
    if (src.size)
      throw UsageError("--n and --size are mutually exclusive");
    out.swaps = src.evenly_spaced ? evenly_spaced_set(*src.n, *src.evenly_spaced)
                                  : paper_asymmetric_set(*src.n);
    return out;
  }
  out.swaps = validate_swap_set(chain_size(src), parse_indices(src.indices));
  return out;
}

inline SwapSet require_swaps(const LinkInput &li, const char *command)
{
  if (!li.swaps)
    throw UsageError(std::string(command) + " needs a swap-set descriptor, not a " +
                     (li.diagram ? "diagram" : "graph"));
  return *li.swaps;
}

inline LinkingGraph graph_of(const LinkInput &li, bool via_diagram)
{
  if (li.graph)
    return *li.graph;
  if (li.diagram)
    return graph_from_matrix(linking_matrix(*li.diagram));
  return via_diagram ? diagram_graph(*li.swaps) : rewrite_graph(*li.swaps);
}

inline AutMethod parse_method(const std::string &name)
{
  if (name == "backtrack")
    return AutMethod::backtrack;
  return AutMethod::dihedral;
}

inline Suite parse_suite(const std::string &name)
{
  if (name == "baseline")
    return Suite::baseline;
  if (name == "asymmetric")
    return Suite::asymmetric;
  if (name == "dihedral")
    return Suite::dihedral;
  if (name == "divisor")
    return Suite::divisor;
  if (name == "oracle")
    return Suite::oracle;
  return Suite::all;
}

inline std::string dumped(const Json &j)
{ return j.dump(2) + "\n"; }

} // namespace detail

/// Run one command line. `args` excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
               std::istream &in = std::cin)
{
  CLI::App app{"Chain-link symmetry engine: swapped chain links, linking graphs, "
               "automorphism groups and symmetry indices",
               "chainsym"};
  app.require_subcommand(1);

  int jobs = default_jobs();

  // gen-chain
  auto *gen = app.add_subcommand("gen-chain", "Emit the chain link C_{4n} (or C_m)");
  std::optional<int> gen_n, gen_size;
  bool gen_diagram = false;
  gen->add_option("--n", gen_n, "Use C_{4n}");
  gen->add_option("--size", gen_size, "Use C_m");
  gen->add_flag("--diagram", gen_diagram, "Emit the crossing diagram instead of the descriptor");

  // swap
  auto *swap = app.add_subcommand("swap", "Validate a swap set and emit its descriptor");
  LinkSource swap_src;
  bool swap_diagram = false;
  swap_src.add_to(*swap);
  swap->add_flag("--diagram", swap_diagram, "Emit the swapped crossing diagram");

  // graph
  auto *graph = app.add_subcommand("graph", "Linking graph of a link");
  LinkSource graph_src;
  std::string graph_format = "json";
  bool graph_dot = false, graph_json = false, graph_via_diagram = false;
  graph_src.add_to(*graph);
  graph->add_flag("--dot", graph_dot, "DOT output");
  graph->add_flag("--json", graph_json, "JSON output (default)");
  graph->add_option("--format", graph_format, "json|dot")
    ->check(CLI::IsMember({"json", "dot"}));
  graph->add_flag("--via-diagram", graph_via_diagram,
                  "Derive the graph from crossing linking numbers instead of the rewrite");

  // aut
  auto *aut = app.add_subcommand("aut", "Automorphism group of a linking graph");
  LinkSource aut_src;
  std::string aut_method = "backtrack";
  bool aut_elements = false;
  aut_src.add_to(*aut);
  aut->add_option("--method", aut_method, "backtrack|dihedral")
    ->check(CLI::IsMember({"backtrack", "dihedral"}));
  aut->add_flag("--elements", aut_elements, "List every group element");

  // sym-report
  auto *sym = app.add_subcommand("sym-report", "Symmetry report for a swapped C_{4n}");
  LinkSource sym_src;
  std::string sym_method = "backtrack";
  sym_src.add_to(*sym);
  sym->add_option("--method", sym_method, "backtrack|dihedral")
    ->check(CLI::IsMember({"backtrack", "dihedral"}));

  // census
  auto *cen = app.add_subcommand("census", "Enumerate swap sets and their symmetry data");
  std::optional<int> cen_n, cen_size;
  bool cen_raw = false, cen_modulo = false, cen_spectrum = false;
  std::string cen_format = "csv";
  int cen_budget = default_census_budget;
  cen->add_option("--size", cen_size, "Chain size m");
  cen->add_option("--n", cen_n, "Use C_{4n}");
  cen->add_flag("--modulo-relabeling", cen_modulo, "One row per index class (default)");
  cen->add_flag("--raw", cen_raw, "One row per swap set");
  cen->add_flag("--spectrum", cen_spectrum, "Only the aut_order -> class count table");
  cen->add_option("--format", cen_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  cen->add_option("--budget", cen_budget, "Largest chain size to enumerate");
  cen->add_option("--jobs", jobs, "Worker threads (default $CHAINSYM_JOBS or 1)")
    ->check(CLI::PositiveNumber);

  // verify
  auto *ver = app.add_subcommand("verify", "Reproduce the symmetry claims");
  std::string ver_suite = "all", ver_format = "json";
  std::uint64_t ver_seed = default_seed;
  ver->add_option("--suite", ver_suite, "all|baseline|asymmetric|dihedral|divisor|oracle")
    ->check(CLI::IsMember({"all", "baseline", "asymmetric", "dihedral", "divisor", "oracle"}));
  ver->add_option("--seed", ver_seed, "64-bit seed for sampled oracle cases");
  ver->add_option("--format", ver_format, "json|table")->check(CLI::IsMember({"json", "table"}));
  ver->add_option("--jobs", jobs, "Worker threads (default $CHAINSYM_JOBS or 1)")
    ->check(CLI::PositiveNumber);

  // export-matrix
  auto *exm = app.add_subcommand("export-matrix", "Linking matrix as CSV");
  LinkSource exm_src;
  bool exm_csv = false;
  exm_src.add_to(*exm);
  exm->add_flag("--csv", exm_csv, "CSV output (the only format)");

  std::vector<const char *> argv{"chainsym"};
  for (const auto &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      LinkSource src;
      src.n = gen_n;
      src.size = gen_size;
      const SwapSet empty(detail::chain_size(src));
      out << detail::dumped(gen_diagram ? to_json(chain_diagram(empty.size())) : to_json(empty));
    } else if (swap->parsed()) {
      const SwapSet s = detail::require_swaps(detail::resolve(swap_src, in), "swap");
      out << detail::dumped(swap_diagram ? to_json(swapped_diagram(s)) : to_json(s));
    } else if (graph->parsed()) {
      if (graph_dot && graph_json)
        throw UsageError("--dot and --json are exclusive");
      const bool dot = graph_dot || (!graph_json && graph_format == "dot");
      const LinkingGraph g = detail::graph_of(detail::resolve(graph_src, in), graph_via_diagram);
      out << (dot ? to_dot(g) : detail::dumped(to_json(g)));
    } else if (aut->parsed()) {
      const auto li = detail::resolve(aut_src, in);
      const auto method = detail::parse_method(aut_method);
      PermGroup group = [&] {
        if (li.swaps)
          return link_automorphisms(*li.swaps, method);
        if (method == AutMethod::dihedral)
          throw UsageError("--method dihedral needs a swap-set descriptor");
        return automorphism_group(detail::graph_of(li, false));
      }();
      Json j = to_json(group, aut_elements);
      j["method"] = aut_method;
      out << detail::dumped(j);
    } else if (sym->parsed()) {
      const SwapSet s = detail::require_swaps(detail::resolve(sym_src, in), "sym-report");
      out << detail::dumped(to_json(symmetry_report(s, detail::parse_method(sym_method))));
    } else if (cen->parsed()) {
      if (cen_raw && cen_modulo)
        throw UsageError("--raw and --modulo-relabeling are exclusive");
      LinkSource src;
      src.n = cen_n;
      src.size = cen_size;
      const ChainSize size = detail::chain_size(src);
      CensusOptions opts;
      opts.budget = cen_budget;
      opts.jobs = jobs;
      opts.modulo_relabeling = !cen_raw;
      if (cen_spectrum) {
        if (!size.multiple_of_four())
          throw SizeNotMultipleOf4("the spectrum is defined for C_{4n} only",
                                   "(" + std::to_string(size.components()) + ")");
        const auto table = spectrum(size.components() / 4, opts);
        if (cen_format == "json") {
          Json rows = Json::array();
          for (auto [order, count] : table)
            rows.push_back(Json{{"aut_order", order}, {"classes", count}});
          out << detail::dumped(Json{{"size", size.components()}, {"spectrum", rows}});
        } else {
          out << "aut_order,classes\n";
          for (auto [order, count] : table)
            out << order << "," << count << "\n";
        }
      } else {
        const auto rows = census(size, opts);
        if (cen_format == "json") {
          Json list = Json::array();
          for (const auto &r : rows) {
            Json row{{"size", size.components()},
                     {"class_representative", r.representative.labels()},
                     {"class_size", r.class_size},
                     {"aut_order", r.aut_order},
                     {"aut_structure", r.aut_descriptor.to_string()}};
            row["sym_link_order"] = r.sym_link_order ? Json(*r.sym_link_order) : Json();
            row["index"] = r.index ? Json(*r.index) : Json();
            list.push_back(std::move(row));
          }
          out << detail::dumped(Json{{"rows", list}});
        } else {
          out << census_to_csv(rows);
        }
      }
    } else if (ver->parsed()) {
      VerifyOptions opts;
      opts.seed = ver_seed;
      opts.jobs = jobs;
      const auto claims = run_suite(detail::parse_suite(ver_suite), opts);
      out << (ver_format == "table" ? claims_to_table(claims)
                                    : detail::dumped(claims_to_json(claims, ver_seed)));
      for (const auto &c : claims)
        if (!c.pass)
          return 1;
    } else if (exm->parsed()) {
      const auto li = detail::resolve(exm_src, in);
      if (li.graph)
        throw UsageError("export-matrix needs a descriptor or diagram, not a graph");
      const Diagram d = li.diagram ? *li.diagram : swapped_diagram(*li.swaps);
      out << matrix_to_csv(linking_matrix(d));
    }
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace chainsym::cli

#endif // CHAINSYM_TOOLS_CLI_HPP
