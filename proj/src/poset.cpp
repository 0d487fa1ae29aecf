#include "opw/poset.hpp"

#include <algorithm>

#include "json.hpp"

namespace opw {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotReflexive: return "NotReflexive";
    case Err::NotAntisymmetric: return "NotAntisymmetric";
    case Err::NotTransitive: return "NotTransitive";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::BadRange: return "BadRange";
    case Err::NotAPartialOrder: return "NotAPartialOrder";
    case Err::UnknownLetter: return "UnknownLetter";
    case Err::NotAClosure: return "NotAClosure";
    case Err::NotAnInterior: return "NotAnInterior";
    case Err::Unclassified: return "Unclassified";
    case Err::ParamMismatch: return "ParamMismatch";
    case Err::EmptyWord: return "EmptyWord";
    case Err::NotMonotone: return "NotMonotone";
    case Err::NotDominated: return "NotDominated";
    case Err::NotPeriodic: return "NotPeriodic";
    case Err::InvalidInstance: return "InvalidInstance";
    case Err::NotALattice: return "NotALattice";
    case Err::NotDistributive: return "NotDistributive";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::BadInput: return "BadInput";
    case Err::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

EndoMap identity_map(int n) {
  std::vector<uint8_t> img(n);
  for (int x = 0; x < n; ++x) img[x] = static_cast<uint8_t>(x);
  return EndoMap(std::move(img));
}

EndoMap constant_map(int n, int value) {
  return EndoMap(std::vector<uint8_t>(n, static_cast<uint8_t>(value)));
}

void check_poset(const Poset& p) {
  const int n = p.n;
  for (int x = 0; x < n; ++x)
    if (!p.leq(x, x))
      throw Error(Err::NotReflexive, "missing " + std::to_string(x) + " <= " + std::to_string(x), x, x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && p.leq(x, y) && p.leq(y, x))
        throw Error(Err::NotAntisymmetric,
                    "both " + std::to_string(x) + " <= " + std::to_string(y) + " and its converse", x, y);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (p.leq(y, z) && !p.leq(x, z))
          throw Error(Err::NotTransitive,
                      "missing " + std::to_string(x) + " <= " + std::to_string(z), x, z);
    }
}

Poset validate_poset(const std::vector<std::vector<bool>>& relation) {
  const int n = static_cast<int>(relation.size());
  Poset p(n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(relation[x].size()) != n)
      throw Error(Err::SizeMismatch, "relation is not square");
    for (int y = 0; y < n; ++y) {
      if (relation[x][y])
        p.set(x, y);
      else
        p.clear(x, y);
    }
  }
  check_poset(p);
  return p;
}

Poset dual(const Poset& p) {
  Poset d(p.n);
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.leq(x, y)) d.set(y, x);
  return d;
}

bool is_monotone(const EndoMap& f, const Poset& p) {
  if (f.size() != p.n) throw Error(Err::SizeMismatch, "map size != poset size");
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.leq(x, y) && !p.leq(f(x), f(y))) return false;
  return true;
}

bool pointwise_leq(const EndoMap& f, const EndoMap& g, const Poset& p) {
  if (f.size() != p.n || g.size() != p.n) throw Error(Err::SizeMismatch, "map size != poset size");
  for (int x = 0; x < p.n; ++x)
    if (!p.leq(f(x), g(x))) return false;
  return true;
}

EndoMap compose(const EndoMap& f, const EndoMap& g) {
  if (f.size() != g.size()) throw Error(Err::SizeMismatch, "composing maps of different sizes");
  std::vector<uint8_t> img(g.img.size());
  for (size_t x = 0; x < img.size(); ++x) img[x] = f.img[g.img[x]];
  return EndoMap(std::move(img));
}

EndoMap power(const EndoMap& f, int k) {
  if (k < 1) throw Error(Err::BadRange, "power wants k >= 1");
  EndoMap acc = f;
  for (int i = 1; i < k; ++i) acc = compose(f, acc);
  return acc;
}

bool is_closure(const EndoMap& f, const Poset& p) {
  if (f.size() != p.n) throw Error(Err::SizeMismatch, "map size != poset size");
  for (int x = 0; x < p.n; ++x)
    if (!p.leq(x, f(x))) return false;
  return is_monotone(f, p) && compose(f, f) == f;
}

bool is_interior(const EndoMap& f, const Poset& p) {
  if (f.size() != p.n) throw Error(Err::SizeMismatch, "map size != poset size");
  for (int x = 0; x < p.n; ++x)
    if (!p.leq(f(x), x)) return false;
  return is_monotone(f, p) && compose(f, f) == f;
}

EndoMap circular_shift(int u, int v) {
  if (!(0 <= u && u < v)) throw Error(Err::BadRange, "circular_shift wants 0 <= u < v");
  EndoMap f = identity_map(v + 1);
  for (int k = u; k < v; ++k) f.img[k] = static_cast<uint8_t>(k + 1);
  f.img[v] = static_cast<uint8_t>(u);
  return f;
}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (x == y || !p.leq(x, y)) continue;
      bool covering = true;
      for (int z = 0; z < p.n; ++z)
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) {
          covering = false;
          break;
        }
      if (covering) covers.emplace_back(x, y);
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

Poset poset_from_json(const std::string& text) try {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw Error(Err::BadInput, "poset json wants an integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1) throw Error(Err::BadInput, "poset json wants n >= 1");
  Poset p(n);
  for (const auto& pair : j.value("covers", nlohmann::json::array())) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(Err::BadInput, "poset json covers entries are pairs");
    const int a = pair[0].get<int>();
    const int b = pair[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(Err::BadRange, "cover index out of range", a, b);
    p.set(a, b);
  }
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x) {
      if (!p.leq(x, k)) continue;
      for (int y = 0; y < n; ++y)
        if (p.leq(k, y)) p.set(x, y);
    }
  check_poset(p);
  return p;
} catch (const nlohmann::json::exception& e) {
  throw Error(Err::BadInput, std::string("poset json: ") + e.what());
}

std::string poset_to_json(const Poset& p) {
  nlohmann::json j;
  j["n"] = p.n;
  auto covers = nlohmann::json::array();
  for (auto [a, b] : cover_pairs(p)) covers.push_back({a, b});
  j["covers"] = covers;
  return j.dump();
}

EndoMap endomap_from_json(const std::string& text) try {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("img") || !j["img"].is_array())
    throw Error(Err::BadInput, "endomap json wants an array field \"img\"");
  std::vector<uint8_t> img;
  const int n = static_cast<int>(j["img"].size());
  for (const auto& e : j["img"]) {
    const int v = e.get<int>();
    if (v < 0 || v >= n) throw Error(Err::BadRange, "image point out of range", v);
    img.push_back(static_cast<uint8_t>(v));
  }
  return EndoMap(std::move(img));
} catch (const nlohmann::json::exception& e) {
  throw Error(Err::BadInput, std::string("endomap json: ") + e.what());
}

std::string endomap_to_json(const EndoMap& f) {
  nlohmann::json j;
  auto img = nlohmann::json::array();
  for (uint8_t v : f.img) img.push_back(static_cast<int>(v));
  j["img"] = img;
  return j.dump();
}

}  // namespace opw
