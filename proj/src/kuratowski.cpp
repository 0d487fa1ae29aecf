#include "opw/kuratowski.hpp"

#include <algorithm>
#include <cstring>
#include <map>

#include "json.hpp"
#include "opw/monoid.hpp"

namespace opw {

const std::array<std::string, 7>& k_words() {
  static const std::array<std::string, 7> words = {"id", "i", "c", "ic", "ci", "ici", "cic"};
  return words;
}

namespace {

// Reduction by the identities valid for every closure c and interior i:
// ii = i, cc = c, icic = ic, cici = ci. Every {i,c}-word lands on a k_word.
std::string reduce_word(std::string w) {
  for (;;) {
    bool changed = false;
    for (const auto& [from, to] : std::initializer_list<std::pair<const char*, const char*>>{
             {"ii", "i"}, {"cc", "c"}, {"icic", "ic"}, {"cici", "ci"}}) {
      size_t at = w.find(from);
      if (at != std::string::npos) {
        w.replace(at, strlen(from), to);
        changed = true;
      }
    }
    if (!changed) return w;
  }
}

int k_index(const std::string& w) {
  const auto& words = k_words();
  const std::string key = w.empty() ? "id" : w;
  for (int x = 0; x < 7; ++x)
    if (words[x] == key) return x;
  throw Error(Err::UnknownLetter, "not a k-word: " + w);
}

std::string k_letters(int x) { return x == 0 ? "" : k_words()[x]; }

KPartition normalize(std::array<int, 7> raw) {
  KPartition out{};
  std::array<int, 7> rename;
  rename.fill(-1);
  int next = 0;
  for (int x = 0; x < 7; ++x) {
    if (rename[raw[x]] < 0) rename[raw[x]] = next++;
    out[x] = rename[raw[x]];
  }
  return out;
}

struct UnionFind {
  std::array<int, 7> parent;
  UnionFind() {
    for (int x = 0; x < 7; ++x) parent[x] = x;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Congruence of the 7-element table generated by the given equations, also
// collapsing every word between two identified comparable words (pointwise
// order squeezes the interval once the endpoints agree).
KPartition close_equations(const std::vector<std::pair<int, int>>& equations) {
  const auto& table = k_table();
  const auto& ord = k_order();
  UnionFind uf;
  for (auto [a, b] : equations) uf.unite(a, b);
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (int x = 0; x < 7; ++x) {
          changed |= uf.unite(table[x][a], table[x][b]);
          changed |= uf.unite(table[a][x], table[b][x]);
        }
        if (ord[a][b])
          for (int y = 0; y < 7; ++y)
            if (ord[a][y] && ord[y][b]) changed |= uf.unite(a, y);
      }
  }
  std::array<int, 7> raw;
  for (int x = 0; x < 7; ++x) raw[x] = uf.find(x);
  return normalize(raw);
}

std::string dual_word(const std::string& w) {
  if (w == "id") return w;
  std::string out;
  for (char ch : w) out.push_back(ch == 'i' ? 'c' : 'i');
  return out;
}

KPartition dual_partition(const KPartition& part) {
  std::array<int, 7> raw;
  for (int x = 0; x < 7; ++x) raw[x] = part[k_index(dual_word(k_words()[x]))];
  return normalize(raw);
}

std::vector<KuratowskiLabel> build_catalog() {
  auto eq = [](const char* a, const char* b) {
    return std::pair<int, int>(k_index(a), k_index(b));
  };
  std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> boxes = {
      {"1", {}},
      {"2", {eq("ici", "i")}},
      {"2d", {eq("c", "cic")}},
      {"3", {eq("ic", "ici")}},
      {"4", {eq("ci", "ici")}},
      {"5", {eq("ic", "i")}},
      {"5d", {eq("c", "ci")}},
      {"6", {eq("ci", "i")}},
      {"6d", {eq("c", "ic")}},
      {"7", {eq("cic", "ici")}},
      {"8", {eq("cic", "i")}},
      {"8d", {eq("c", "ici")}},
      {"9", {eq("ici", "i"), eq("c", "cic")}},
      {"10", {eq("c", "id")}},
      {"10d", {eq("id", "i")}},
      {"11", {eq("ic", "i"), eq("c", "ci")}},
      {"12", {eq("ci", "i"), eq("c", "ic")}},
      {"13", {eq("c", "i")}},
  };
  std::vector<KuratowskiLabel> catalog;
  for (const auto& [name, equations] : boxes) {
    KuratowskiLabel label;
    label.name = name;
    label.partition = close_equations(equations);
    label.cardinality = 1 + *std::max_element(label.partition.begin(), label.partition.end());
    catalog.push_back(std::move(label));
  }
  for (size_t a = 0; a < catalog.size(); ++a)
    for (size_t b = a + 1; b < catalog.size(); ++b)
      if (catalog[a].partition == catalog[b].partition)
        throw Error(Err::InvalidInstance,
                    "catalog labels " + catalog[a].name + " and " + catalog[b].name +
                        " share a partition");
  for (auto& label : catalog) {
    const KPartition dual = dual_partition(label.partition);
    for (const auto& other : catalog)
      if (other.partition == dual) label.dual_name = other.name;
    if (label.dual_name.empty())
      throw Error(Err::InvalidInstance, "label " + label.name + " has no dual in the catalog");
  }
  return catalog;
}

}  // namespace

const std::array<std::array<int, 7>, 7>& k_table() {
  static const auto table = [] {
    std::array<std::array<int, 7>, 7> t{};
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) t[a][b] = k_index(reduce_word(k_letters(a) + k_letters(b)));
    return t;
  }();
  return table;
}

const std::array<std::array<uint8_t, 7>, 7>& k_order() {
  static const auto order = [] {
    std::array<std::array<uint8_t, 7>, 7> leq{};
    for (int x = 0; x < 7; ++x) leq[x][x] = 1;
    auto edge = [&](const char* lo, const char* hi) { leq[k_index(lo)][k_index(hi)] = 1; };
    edge("i", "id");
    edge("id", "c");
    edge("i", "ici");
    edge("ici", "ic");
    edge("ici", "ci");
    edge("ic", "cic");
    edge("ci", "cic");
    edge("cic", "c");
    for (int k = 0; k < 7; ++k)
      for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y)
          if (leq[x][k] && leq[k][y]) leq[x][y] = 1;
    return leq;
  }();
  return order;
}

const std::vector<KuratowskiLabel>& kuratowski_catalog() {
  static const std::vector<KuratowskiLabel> catalog = build_catalog();
  return catalog;
}

KPartition k_partition(const Poset& p, const EndoMap& c, const EndoMap& i) {
  const std::vector<Generator> gens = {{'i', i}, {'c', c}};
  std::array<EndoMap, 7> maps;
  for (int x = 0; x < 7; ++x) maps[x] = eval_word(k_letters(x), gens, p.n);
  std::array<int, 7> raw;
  for (int x = 0; x < 7; ++x) {
    raw[x] = x;
    for (int y = 0; y < x; ++y)
      if (maps[y] == maps[x]) {
        raw[x] = raw[y];
        break;
      }
  }
  return normalize(raw);
}

const KuratowskiLabel& classify(const Poset& p, const EndoMap& c, const EndoMap& i) {
  if (!is_closure(c, p)) throw Error(Err::NotAClosure, "c is not a closure operator");
  if (!is_interior(i, p)) throw Error(Err::NotAnInterior, "i is not an interior operator");
  const KPartition part = k_partition(p, c, i);
  for (const auto& label : kuratowski_catalog())
    if (label.partition == part) return label;
  throw Error(Err::Unclassified, "instance partition matches no catalog label");
}

std::vector<EndoMap> closure_operators(const Poset& p) {
  const int n = p.n;
  std::vector<EndoMap> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    EndoMap c(std::vector<uint8_t>(n, 0));
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      int least = -1;
      for (int y = 0; y < n; ++y) {
        if (!(mask >> y & 1) || !p.leq(x, y)) continue;
        if (least < 0 || p.leq(y, least)) least = y;
      }
      if (least < 0) {
        ok = false;
        break;
      }
      for (int y = 0; y < n; ++y)
        if ((mask >> y & 1) && p.leq(x, y) && !p.leq(least, y)) ok = false;
      c.img[x] = static_cast<uint8_t>(least);
    }
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

std::vector<EndoMap> interior_operators(const Poset& p) {
  const int n = p.n;
  std::vector<EndoMap> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    EndoMap i(std::vector<uint8_t>(n, 0));
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      int greatest = -1;
      for (int y = 0; y < n; ++y) {
        if (!(mask >> y & 1) || !p.leq(y, x)) continue;
        if (greatest < 0 || p.leq(greatest, y)) greatest = y;
      }
      if (greatest < 0) {
        ok = false;
        break;
      }
      for (int y = 0; y < n; ++y)
        if ((mask >> y & 1) && p.leq(y, x) && !p.leq(y, greatest)) ok = false;
      i.img[x] = static_cast<uint8_t>(greatest);
    }
    if (ok) out.push_back(std::move(i));
  }
  return out;
}

RealizeReport realize_labels(int max_points, long long max_instances) {
  const auto& catalog = kuratowski_catalog();
  std::map<std::string, LabelWitness> found;
  long long seen = 0;
  for (int n = 1; n <= max_points && found.size() < catalog.size(); ++n) {
    for (const Poset& p : poset_classes(n)) {
      const auto closures = closure_operators(p);
      const auto interiors = interior_operators(p);
      for (const auto& c : closures) {
        for (const auto& i : interiors) {
          if (max_instances >= 0 && ++seen > max_instances) goto done;
          const KuratowskiLabel& label = classify(p, c, i);
          if (!found.contains(label.name)) found.emplace(label.name, LabelWitness{label.name, p, c, i});
        }
      }
      if (found.size() == catalog.size()) break;
    }
  }
done:
  RealizeReport report;
  for (const auto& label : catalog) {
    auto it = found.find(label.name);
    if (it == found.end())
      report.unrealized.push_back(label.name);
    else
      report.found.push_back(it->second);
  }
  return report;
}

std::string realize_report_to_json(const RealizeReport& r) {
  nlohmann::json j;
  auto found = nlohmann::json::array();
  for (const auto& w : r.found) {
    nlohmann::json e;
    e["label"] = w.label;
    e["points"] = w.poset.n;
    e["poset"] = nlohmann::json::parse(poset_to_json(w.poset));
    e["c"] = nlohmann::json::parse(endomap_to_json(w.c));
    e["i"] = nlohmann::json::parse(endomap_to_json(w.i));
    found.push_back(e);
  }
  j["found"] = found;
  j["unrealized"] = r.unrealized;
  return j.dump();
}

}  // namespace opw
