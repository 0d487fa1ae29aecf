#include "opw/monoid.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace opw {

int OperatorMonoid::find(const EndoMap& f) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == f) return i;
  return -1;
}

OperatorMonoid generate_monoid(const Poset& p, const std::vector<Generator>& generators,
                               bool include_identity) {
  for (const auto& g : generators)
    if (g.map.size() != p.n) throw Error(Err::SizeMismatch, "generator size != poset size");

  OperatorMonoid m;
  std::map<EndoMap, int> index;
  auto add = [&](const EndoMap& f, const std::string& word) -> bool {
    if (index.contains(f)) return false;
    index.emplace(f, m.size());
    m.elements.push_back(f);
    m.witness.push_back(word);
    return true;
  };

  std::vector<int> frontier;
  if (include_identity) {
    add(identity_map(p.n), "");
    frontier.push_back(0);
  } else {
    for (const auto& g : generators)
      if (add(g.map, std::string(1, g.name))) frontier.push_back(m.size() - 1);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int i : frontier)
      for (const auto& g : generators) {
        EndoMap f = compose(m.elements[i], g.map);
        if (add(f, m.witness[i] + g.name)) next.push_back(m.size() - 1);
      }
    frontier = std::move(next);
  }

  const int k = m.size();
  m.table.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto it = index.find(compose(m.elements[i], m.elements[j]));
      if (it == index.end()) throw Error(Err::InvalidInstance, "composition escaped the closure");
      m.table[i][j] = it->second;
    }
  m.order.assign(k, std::vector<uint8_t>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m.order[i][j] = pointwise_leq(m.elements[i], m.elements[j], p);
  return m;
}

EndoMap eval_word(const std::string& word, const std::vector<Generator>& generators, int n) {
  EndoMap acc = identity_map(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Generator* gen = nullptr;
    for (const auto& g : generators)
      if (g.name == *it) gen = &g;
    if (!gen) throw Error(Err::UnknownLetter, std::string("unknown letter '") + *it + "'");
    acc = compose(gen->map, acc);
  }
  return acc;
}

std::vector<std::vector<std::string>> element_partition(const Poset& p,
                                                        const std::vector<Generator>& generators,
                                                        const std::vector<std::string>& words) {
  auto length_lex = [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  std::map<EndoMap, std::vector<std::string>> blocks;
  for (const auto& w : words) blocks[eval_word(w, generators, p.n)].push_back(w);
  std::vector<std::vector<std::string>> out;
  for (auto& [map, block] : blocks) {
    std::sort(block.begin(), block.end(), length_lex);
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return length_lex(a[0], b[0]); });
  return out;
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<std::vector<uint8_t>>& order) {
  const int k = static_cast<int>(order.size());
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(order[i].size()) != k || !order[i][i])
      throw Error(Err::NotAPartialOrder, "order matrix not square-reflexive", i, i);
    for (int j = 0; j < k; ++j) {
      if (i != j && order[i][j] && order[j][i])
        throw Error(Err::NotAPartialOrder, "order matrix not antisymmetric", i, j);
      if (!order[i][j]) continue;
      for (int l = 0; l < k; ++l)
        if (order[j][l] && !order[i][l])
          throw Error(Err::NotAPartialOrder, "order matrix not transitive", i, l);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !order[i][j]) continue;
      bool covering = true;
      for (int l = 0; l < k && covering; ++l)
        if (l != i && l != j && order[i][l] && order[l][j]) covering = false;
      if (covering) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

static std::string display_witness(const std::string& w) { return w.empty() ? "id" : w; }

std::string monoid_to_dot(const OperatorMonoid& m) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < m.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + display_witness(m.witness[i]) + "\"];\n";
  for (auto [a, b] : hasse_edges(m.order))
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

std::string monoid_to_json(const OperatorMonoid& m) {
  nlohmann::json j;
  auto elements = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    nlohmann::json e;
    e["witness"] = display_witness(m.witness[i]);
    auto img = nlohmann::json::array();
    for (uint8_t v : m.elements[i].img) img.push_back(static_cast<int>(v));
    e["img"] = img;
    elements.push_back(e);
  }
  j["elements"] = elements;
  auto edges = nlohmann::json::array();
  for (auto [a, b] : hasse_edges(m.order)) edges.push_back({a, b});
  j["edges"] = edges;
  return j.dump();
}

}  // namespace opw
