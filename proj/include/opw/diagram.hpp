#pragma once

#include <string>
#include <vector>

#include "opw/poset.hpp"

namespace opw {

enum class EdgeKind { Solid, Dotted, Dashed };

struct CatalogEdge {
  int lo;
  int hi;
  EdgeKind kind;
  bool operator==(const CatalogEdge&) const = default;
};

/// Hand-checked Hasse diagram: named nodes, covering edges (lower, upper),
/// per-edge annotation as read from a figure. The order it presents is the
/// reflexive-transitive closure of the solid edges, per connected component;
/// dotted and dashed edges are incomparability annotations, not order.
struct DiagramCatalog {
  std::vector<std::string> nodes;
  std::vector<CatalogEdge> edges;

  int node_index(const std::string& name) const;  // -1 if absent
};

DiagramCatalog catalog_from_json(const std::string& text);
std::string catalog_to_json(const DiagramCatalog& c);

/// Component id per node, connecting across all edge kinds.
std::vector<int> catalog_components(const DiagramCatalog& c);

/// Order matrix of the solid-edge reachability; throws NotAHasseDiagram-like
/// NotAPartialOrder when a component's closure is cyclic.
std::vector<std::vector<uint8_t>> catalog_order(const DiagramCatalog& c);

/// Join-irreducible nodes, computed exactly from the component order: x is
/// join-irreducible iff x is not the join of the set of elements strictly
/// below it within its component (empty set included, so a component bottom
/// is excluded). meet_irreducibles is the dual computation.
std::vector<int> join_irreducibles(const DiagramCatalog& c);
std::vector<int> meet_irreducibles(const DiagramCatalog& c);

/// The shortcut used when eyeballing a figure: nodes with exactly one
/// descending solid edge (plus isolated-in-component bottoms excluded).
/// Kept as a cross-check; must agree with join_irreducibles on the
/// checked-in catalogs.
std::vector<int> one_descending_edge_nodes(const DiagramCatalog& c);
std::vector<int> one_ascending_edge_nodes(const DiagramCatalog& c);

/// Critical pairs per component: (x, y) incomparable with x join-irreducible,
/// y meet-irreducible, x minimal in J minus down(y), y maximal in M minus
/// up(x). A total order has none.
std::vector<std::pair<int, int>> critical_pairs(const DiagramCatalog& c);

struct CatalogDiff {
  std::vector<std::pair<int, int>> missing;     // expected but not computed
  std::vector<std::pair<int, int>> unexpected;  // computed but not expected
  bool empty() const { return missing.empty() && unexpected.empty(); }
};

/// Diffs computed critical pairs against an expected annotated pair list.
CatalogDiff verify_catalog(const DiagramCatalog& c,
                           const std::vector<std::pair<int, int>>& expected);

std::string diff_to_json(const DiagramCatalog& c, const CatalogDiff& d);

}  // namespace opw
