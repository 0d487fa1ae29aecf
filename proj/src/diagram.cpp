#include "opw/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace opw {

int DiagramCatalog::node_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[i] == name) return i;
  return -1;
}

DiagramCatalog catalog_from_json(const std::string& text) try {
  nlohmann::json j = nlohmann::json::parse(text);
  DiagramCatalog c;
  for (const auto& name : j.at("nodes")) c.nodes.push_back(name.get<std::string>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw Error(Err::BadInput, "catalog edge wants [lo, hi, kind]");
    const std::string kind = e[2].get<std::string>();
    EdgeKind k;
    if (kind == "solid")
      k = EdgeKind::Solid;
    else if (kind == "dotted")
      k = EdgeKind::Dotted;
    else if (kind == "dashed")
      k = EdgeKind::Dashed;
    else
      throw Error(Err::BadInput, "catalog edge kind must be solid|dotted|dashed");
    int lo, hi;
    if (e[0].is_string()) {
      lo = c.node_index(e[0].get<std::string>());
      hi = c.node_index(e[1].get<std::string>());
      if (lo < 0 || hi < 0) throw Error(Err::BadInput, "catalog edge names an unknown node");
    } else {
      lo = e[0].get<int>();
      hi = e[1].get<int>();
    }
    const int n = static_cast<int>(c.nodes.size());
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw Error(Err::BadRange, "catalog edge index out of range", lo, hi);
    c.edges.push_back({lo, hi, k});
  }
  return c;
} catch (const nlohmann::json::exception& e) {
  throw Error(Err::BadInput, std::string("catalog json: ") + e.what());
}

std::string catalog_to_json(const DiagramCatalog& c) {
  nlohmann::json j;
  j["nodes"] = c.nodes;
  auto edges = nlohmann::json::array();
  for (const auto& e : c.edges) {
    const char* kind = e.kind == EdgeKind::Solid    ? "solid"
                       : e.kind == EdgeKind::Dotted ? "dotted"
                                                    : "dashed";
    edges.push_back({c.nodes[e.lo], c.nodes[e.hi], kind});
  }
  j["edges"] = edges;
  return j.dump();
}

std::vector<int> catalog_components(const DiagramCatalog& c) {
  const int n = static_cast<int>(c.nodes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : c.edges)
    if (e.kind == EdgeKind::Solid) parent[find(e.lo)] = find(e.hi);
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int root = find(x);
    if (comp[root] < 0) comp[root] = next++;
    comp[x] = comp[root];
  }
  return comp;
}

std::vector<std::vector<uint8_t>> catalog_order(const DiagramCatalog& c) {
  const int n = static_cast<int>(c.nodes.size());
  std::vector<std::vector<uint8_t>> leq(n, std::vector<uint8_t>(n, 0));
  for (int x = 0; x < n; ++x) leq[x][x] = 1;
  for (const auto& e : c.edges)
    if (e.kind == EdgeKind::Solid) leq[e.lo][e.hi] = 1;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x) {
      if (!leq[x][k]) continue;
      for (int y = 0; y < n; ++y)
        if (leq[k][y]) leq[x][y] = 1;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && leq[x][y] && leq[y][x])
        throw Error(Err::NotAPartialOrder, "catalog solid edges form a cycle", x, y);
  return leq;
}

namespace {

struct Analysis {
  std::vector<int> comp;
  std::vector<std::vector<uint8_t>> leq;

  explicit Analysis(const DiagramCatalog& c)
      : comp(catalog_components(c)), leq(catalog_order(c)) {}

  // x == lub of its strict down-set within its component?
  bool is_join_of_below(int x) const {
    const int n = static_cast<int>(comp.size());
    std::vector<int> below;
    for (int z = 0; z < n; ++z)
      if (z != x && comp[z] == comp[x] && leq[z][x]) below.push_back(z);
    int least_ub = -1;
    for (int u = 0; u < n; ++u) {
      if (comp[u] != comp[x]) continue;
      bool ub = true;
      for (int z : below)
        if (!leq[z][u]) {
          ub = false;
          break;
        }
      if (!ub) continue;
      if (least_ub < 0 || leq[u][least_ub]) least_ub = u;
    }
    if (least_ub < 0) return false;
    for (int u = 0; u < n; ++u) {
      if (comp[u] != comp[x]) continue;
      bool ub = true;
      for (int z : below)
        if (!leq[z][u]) {
          ub = false;
          break;
        }
      if (ub && !leq[least_ub][u]) return false;
    }
    return least_ub == x;
  }

  bool is_meet_of_above(int x) const {
    const int n = static_cast<int>(comp.size());
    std::vector<int> above;
    for (int z = 0; z < n; ++z)
      if (z != x && comp[z] == comp[x] && leq[x][z]) above.push_back(z);
    int greatest_lb = -1;
    for (int u = 0; u < n; ++u) {
      if (comp[u] != comp[x]) continue;
      bool lb = true;
      for (int z : above)
        if (!leq[u][z]) {
          lb = false;
          break;
        }
      if (!lb) continue;
      if (greatest_lb < 0 || leq[greatest_lb][u]) greatest_lb = u;
    }
    if (greatest_lb < 0) return false;
    for (int u = 0; u < n; ++u) {
      if (comp[u] != comp[x]) continue;
      bool lb = true;
      for (int z : above)
        if (!leq[u][z]) {
          lb = false;
          break;
        }
      if (lb && !leq[u][greatest_lb]) return false;
    }
    return greatest_lb == x;
  }
};

}  // namespace

std::vector<int> join_irreducibles(const DiagramCatalog& c) {
  Analysis a(c);
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(c.nodes.size()); ++x)
    if (!a.is_join_of_below(x)) out.push_back(x);
  return out;
}

std::vector<int> meet_irreducibles(const DiagramCatalog& c) {
  Analysis a(c);
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(c.nodes.size()); ++x)
    if (!a.is_meet_of_above(x)) out.push_back(x);
  return out;
}

std::vector<int> one_descending_edge_nodes(const DiagramCatalog& c) {
  std::vector<int> down(c.nodes.size(), 0);
  for (const auto& e : c.edges)
    if (e.kind == EdgeKind::Solid) ++down[e.hi];
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(c.nodes.size()); ++x)
    if (down[x] == 1) out.push_back(x);
  return out;
}

std::vector<int> one_ascending_edge_nodes(const DiagramCatalog& c) {
  std::vector<int> up(c.nodes.size(), 0);
  for (const auto& e : c.edges)
    if (e.kind == EdgeKind::Solid) ++up[e.lo];
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(c.nodes.size()); ++x)
    if (up[x] == 1) out.push_back(x);
  return out;
}

std::vector<std::pair<int, int>> critical_pairs(const DiagramCatalog& c) {
  Analysis a(c);
  const int n = static_cast<int>(c.nodes.size());
  std::vector<uint8_t> in_j(n, 0), in_m(n, 0);
  for (int x : join_irreducibles(c)) in_j[x] = 1;
  for (int x : meet_irreducibles(c)) in_m[x] = 1;

  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    if (!in_j[x]) continue;
    for (int y = 0; y < n; ++y) {
      if (!in_m[y] || a.comp[x] != a.comp[y] || a.leq[x][y] || a.leq[y][x]) continue;
      // x minimal in J minus down(y): no smaller join-irreducible also not<= y.
      bool x_min = true;
      for (int z = 0; z < n && x_min; ++z)
        if (z != x && in_j[z] && a.comp[z] == a.comp[x] && a.leq[z][x] && !a.leq[z][y]) x_min = false;
      if (!x_min) continue;
      // y maximal in M minus up(x): no larger meet-irreducible also not>= x.
      bool y_max = true;
      for (int z = 0; z < n && y_max; ++z)
        if (z != y && in_m[z] && a.comp[z] == a.comp[y] && a.leq[y][z] && !a.leq[x][z]) y_max = false;
      if (y_max) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CatalogDiff verify_catalog(const DiagramCatalog& c,
                           const std::vector<std::pair<int, int>>& expected) {
  auto computed = critical_pairs(c);
  std::vector<std::pair<int, int>> want = expected;
  std::sort(want.begin(), want.end());
  CatalogDiff d;
  std::set_difference(want.begin(), want.end(), computed.begin(), computed.end(),
                      std::back_inserter(d.missing));
  std::set_difference(computed.begin(), computed.end(), want.begin(), want.end(),
                      std::back_inserter(d.unexpected));
  return d;
}

std::string diff_to_json(const DiagramCatalog& c, const CatalogDiff& d) {
  nlohmann::json j;
  auto name_pairs = [&](const std::vector<std::pair<int, int>>& pairs) {
    auto arr = nlohmann::json::array();
    for (auto [x, y] : pairs) arr.push_back({c.nodes[x], c.nodes[y]});
    return arr;
  };
  j["missing"] = name_pairs(d.missing);
  j["unexpected"] = name_pairs(d.unexpected);
  j["verified"] = d.empty();
  return j.dump();
}

}  // namespace opw
