#ifndef CHAINSYM_IO_HPP
#define CHAINSYM_IO_HPP

// JSON wire formats. All component and vertex ids are 1-based on the wire.

#include <string>
#include <vector>

#include <json.hpp>

#include "automorphism.hpp"
#include "core_model.hpp"
#include "diagrams.hpp"
#include "errors.hpp"
#include "groups.hpp"
#include "linkgraph.hpp"
#include "symmetry.hpp"

namespace chainsym {

using Json = nlohmann::ordered_json;

namespace detail {

template<typename T>
T field(const Json &j, const char *key)
{
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

} // namespace detail

/// {"components": m, "swaps": [i1, ...]}
inline Json to_json(const SwapSet &s)
{
  return Json{{"components", s.size().components()}, {"swaps", s.labels()}};
}

inline SwapSet swap_set_from_json(const Json &j)
{
  ChainSize size(detail::field<int>(j, "components"));
  auto swaps = j.contains("swaps") ? detail::field<std::vector<int>>(j, "swaps")
                                   : std::vector<int>{};
  return validate_swap_set(size, swaps);
}

/// {"components": m, "crossings": [{"over": a, "under": b, "sign": +-1}, ...]}
inline Json to_json(const Diagram &d)
{
  Json crossings = Json::array();
  for (const auto &c : d.crossings())
    crossings.push_back(Json{{"over", c.over + 1}, {"under", c.under + 1}, {"sign", c.sign}});
  return Json{{"components", d.size().components()}, {"crossings", std::move(crossings)}};
}

inline Diagram diagram_from_json(const Json &j)
{
  ChainSize size(detail::field<int>(j, "components"));
  std::vector<Crossing> crossings;
  const auto list = detail::field<Json>(j, "crossings");
  if (!list.is_array())
    throw FormatError("\"crossings\" must be an array");
  for (const auto &c : list)
    crossings.push_back({detail::field<int>(c, "over") - 1,
                         detail::field<int>(c, "under") - 1,
                         detail::field<int>(c, "sign")});
  return Diagram(size, std::move(crossings));
}

/// {"vertices": m, "edges": [[a, b], ...]} with a < b, sorted.
inline Json to_json(const LinkingGraph &g)
{
  Json edges = Json::array();
  for (auto [a, b] : g.edges())
    edges.push_back(Json::array({a + 1, b + 1}));
  return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline LinkingGraph graph_from_json(const Json &j)
{
  const int m = detail::field<int>(j, "vertices");
  std::vector<Edge> edges;
  for (const auto &e : detail::field<std::vector<std::vector<int>>>(j, "edges")) {
    if (e.size() != 2)
      throw FormatError("each edge must be a pair");
    edges.emplace_back(e[0] - 1, e[1] - 1);
  }
  return LinkingGraph(m, std::move(edges));
}

inline Json to_json(const GroupDescriptor &d)
{ return d.to_string(); }

inline Json to_json(const PermGroup &g, bool with_elements = false)
{
  Json gens = Json::array();
  for (const auto &p : g.generators())
    gens.push_back(p.labels());
  Json out{{"degree", g.degree()},
           {"order", g.order()},
           {"structure", recognize(g).to_string()},
           {"generators", std::move(gens)}};
  if (with_elements) {
    Json elems = Json::array();
    for (const auto &p : g.elements())
      elems.push_back(p.labels());
    out["elements"] = std::move(elems);
  }
  return out;
}

inline Json to_json(const SymReport &r)
{
  return Json{{"n", r.n},
              {"swaps", r.swaps.labels()},
              {"aut_order", r.aut_order},
              {"aut_structure", r.aut_descriptor.to_string()},
              {"fixed_subgroup", r.fixed_subgroup.to_string()},
              {"sym_link_order", r.sym_link_order},
              {"sym_complement_order", r.sym_complement_order},
              {"complement_structure", complement_structure(r.n)},
              {"index", r.index},
              {"structure", r.structure()}};
}

} // namespace chainsym

#endif // CHAINSYM_IO_HPP
