#include "opw/collapse.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "opw/enumerate.hpp"
#include "opw/monoid.hpp"

namespace opw {

Instance make_instance(const Poset& p, const EndoMap& s, const EndoMap& t, const Params& params) {
  if (s.size() != p.n || t.size() != p.n)
    throw Error(Err::SizeMismatch, "maps and poset carrier disagree", s.size(), t.size());
  if (!is_monotone(s, p)) throw Error(Err::NotMonotone, "s is not order-preserving");
  if (!is_monotone(t, p)) throw Error(Err::NotMonotone, "t is not order-preserving");
  if (!pointwise_leq(s, t, p)) throw Error(Err::NotDominated, "s is not pointwise below t");
  if (power(s, params.m) != s) throw Error(Err::NotPeriodic, "s^m differs from s", params.m);
  if (power(t, params.n) != t) throw Error(Err::NotPeriodic, "t^n differs from t", params.n);
  return Instance{p, s, t, params};
}

std::vector<EndoMap> induced_maps(const Instance& inst) {
  const auto ws = wset(inst.params);
  std::vector<EndoMap> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(eval_st_word(w.word(), inst.s, inst.t));
  return out;
}

Collapse satisfied_collapse(const Instance& inst) {
  const auto maps = induced_maps(inst);
  Collapse c;
  for (size_t i = 0; i < maps.size(); ++i)
    for (size_t j = i + 1; j < maps.size(); ++j)
      if (maps[i] == maps[j]) c.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return c;
}

std::vector<std::pair<int, int>> satisfied_order(const Instance& inst) {
  const auto maps = induced_maps(inst);
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < maps.size(); ++i)
    for (size_t j = 0; j < maps.size(); ++j)
      if (pointwise_leq(maps[i], maps[j], inst.poset))
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::string collapse_to_string(const Collapse& c, const Params& p) {
  const auto ws = wset(p);
  std::string out = "{";
  for (size_t k = 0; k < c.pairs.size(); ++k) {
    if (k) out += ", ";
    out += ws[c.pairs[k].first].word();
    out += "=";
    out += ws[c.pairs[k].second].word();
  }
  out += "}";
  return out;
}

bool satisfies_c22(const Collapse& c, const Params& p) {
  for (const char* eq : {"ss", "tt"}) {
    const std::string one(1, eq[0]);
    int a = wset_index(normal_form(one, p), p);
    int b = wset_index(normal_form(eq, p), p);
    if (a == b) continue;
    std::pair<int, int> want{std::min(a, b), std::max(a, b)};
    if (!std::binary_search(c.pairs.begin(), c.pairs.end(), want)) return false;
  }
  return true;
}

int ClassCatalog33::class_index(const std::string& label) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].label == label) return static_cast<int>(i);
  return -1;
}

ClassCatalog33 classcat33_from_json(const std::string& text) try {
  const Params p33(3, 3);
  nlohmann::json j = nlohmann::json::parse(text);
  ClassCatalog33 cat;
  for (const auto& jc : j.at("classes")) {
    CollapseClass cls;
    cls.label = jc.at("label").get<std::string>();
    bool even = true;
    for (const auto& je : jc.at("equations")) {
      const std::string lhs = je.at(0).get<std::string>();
      const std::string rhs = je.at(1).get<std::string>();
      int a = wset_index(normal_form(lhs, p33), p33);
      int b = wset_index(normal_form(rhs, p33), p33);
      if (a == b) throw Error(Err::BadInput, "equation sides coincide: " + lhs + "=" + rhs);
      if ((static_cast<int>(lhs.size()) - static_cast<int>(rhs.size())) % 2 != 0) even = false;
      cls.equations.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(cls.equations.begin(), cls.equations.end());
    cls.even = jc.at("even").get<bool>();
    if (cls.even != even)
      throw Error(Err::PreconditionFailed, "parity tag contradicts equation lengths for class " + cls.label);
    cat.classes.push_back(std::move(cls));
  }
  auto require_label = [&](const std::string& label, const char* where) {
    if (cat.class_index(label) < 0)
      throw Error(Err::BadInput, std::string(where) + " names unknown class " + label);
  };
  for (const auto& ja : j.at("arrows")) {
    std::string from = ja.at(0).get<std::string>();
    std::string to = ja.at(1).get<std::string>();
    require_label(from, "arrow");
    require_label(to, "arrow");
    cat.arrows.emplace_back(std::move(from), std::move(to));
  }
  for (const auto& jt : j.at("table")) {
    TableCell cell;
    cell.row = jt.at("row").get<std::string>();
    cell.col = jt.at("col").get<std::string>();
    require_label(cell.row, "table cell");
    require_label(cell.col, "table cell");
    const std::string kind = jt.at("kind").get<std::string>();
    if (kind == "gray") cell.kind = CellKind::Gray;
    else if (kind == "plain") cell.kind = CellKind::Plain;
    else if (kind == "italic") cell.kind = CellKind::Italic;
    else if (kind == "bold") cell.kind = CellKind::Bold;
    else if (kind == "blank") cell.kind = CellKind::Blank;
    else throw Error(Err::BadInput, "unknown cell kind " + kind);
    if (cell.kind != CellKind::Gray && cell.kind != CellKind::Blank) {
      cell.value = jt.at("value").get<std::string>();
      require_label(cell.value, "table cell value");
    }
    cat.table.push_back(std::move(cell));
  }
  return cat;
} catch (const nlohmann::json::exception& e) {
  throw Error(Err::BadInput, std::string("class catalog: ") + e.what());
}

namespace {

constexpr int kMaxCarrier = kMaxEnumPoints;
constexpr int kMaxWords = 32;

/// Per-thread scratch for the induced maps of every wset element and their
/// equality classes, allocation-free.
struct EvalScratch {
  int nw = 0;
  int n = 0;
  int m = 0, nn = 0, d = 0;
  uint8_t maps[kMaxWords][kMaxCarrier];
  uint8_t ids[kMaxWords];

  void configure(const Params& p, int carrier) {
    m = p.m;
    nn = p.n;
    d = p.d;
    n = carrier;
    nw = (p.m - 1) + (p.n - 1) + 4 * p.d;
  }

  void compute(const uint8_t* s, const uint8_t* t) {
    // wset order: s-powers, t-powers, then per j: s^j t, s^j t s, t^j s, t^j s t.
    uint8_t* sp = maps[0];
    std::memcpy(sp, s, n);
    for (int a = 2; a <= m - 1; ++a) {
      const uint8_t* prev = maps[a - 2];
      uint8_t* cur = maps[a - 1];
      for (int x = 0; x < n; ++x) cur[x] = s[prev[x]];
    }
    uint8_t* tp = maps[m - 1];
    std::memcpy(tp, t, n);
    for (int a = 2; a <= nn - 1; ++a) {
      const uint8_t* prev = maps[m - 1 + a - 2];
      uint8_t* cur = maps[m - 1 + a - 1];
      for (int x = 0; x < n; ++x) cur[x] = t[prev[x]];
    }
    const int base = (m - 1) + (nn - 1);
    for (int jj = 1; jj <= d; ++jj) {
      const uint8_t* sj = maps[jj - 1];
      const uint8_t* tj = maps[m - 1 + jj - 1];
      uint8_t* st = maps[base + 4 * (jj - 1)];
      uint8_t* sts = maps[base + 4 * (jj - 1) + 1];
      uint8_t* ts = maps[base + 4 * (jj - 1) + 2];
      uint8_t* tst = maps[base + 4 * (jj - 1) + 3];
      for (int x = 0; x < n; ++x) {
        st[x] = sj[t[x]];
        ts[x] = tj[s[x]];
      }
      for (int x = 0; x < n; ++x) {
        sts[x] = st[s[x]];
        tst[x] = ts[t[x]];
      }
    }
    for (int i = 0; i < nw; ++i) {
      uint8_t id = static_cast<uint8_t>(i);
      for (int k = 0; k < i; ++k)
        if (std::memcmp(maps[k], maps[i], n) == 0) {
          id = ids[k];
          break;
        }
      ids[i] = id;
    }
  }
};

using FpKey = std::array<uint64_t, 4>;

struct FpHash {
  size_t operator()(const FpKey& k) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : k) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

FpKey make_key(const EvalScratch& sc) {
  FpKey key{};
  auto* bytes = reinterpret_cast<uint8_t*>(key.data());
  for (int i = 0; i < sc.nw; ++i) bytes[i] = sc.ids[i];
  return key;
}

Collapse key_to_collapse(const FpKey& key, int nw) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(key.data());
  Collapse c;
  for (int i = 0; i < nw; ++i)
    for (int j = i + 1; j < nw; ++j)
      if (bytes[i] == bytes[j]) c.pairs.emplace_back(i, j);
  return c;
}

/// Depth-first (t, s) enumeration on one poset: t monotone with t^n = t,
/// then s monotone with s <= t pointwise and s^m = s.
struct InstanceWalker {
  const Poset* p = nullptr;
  int n = 0;
  int m = 2, nn = 2;
  uint8_t t[kMaxCarrier];
  uint8_t s[kMaxCarrier];
  const std::function<void(const uint8_t*, const uint8_t*)>* emit = nullptr;

  bool monotone_consistent(const uint8_t* f, int x, int v) const {
    for (int y = 0; y < x; ++y) {
      if (p->leq(y, x) && !p->leq(f[y], v)) return false;
      if (p->leq(x, y) && !p->leq(v, f[y])) return false;
    }
    return true;
  }

  bool power_fixes(const uint8_t* f, int k) const {
    uint8_t cur[kMaxCarrier];
    std::memcpy(cur, f, n);
    for (int step = 1; step < k; ++step) {
      uint8_t next[kMaxCarrier];
      for (int x = 0; x < n; ++x) next[x] = f[cur[x]];
      std::memcpy(cur, next, n);
    }
    return std::memcmp(cur, f, n) == 0;
  }

  void walk_s(int x) {
    if (x == n) {
      if (power_fixes(s, m)) (*emit)(s, t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!p->leq(v, t[x])) continue;
      if (!monotone_consistent(s, x, v)) continue;
      s[x] = static_cast<uint8_t>(v);
      walk_s(x + 1);
    }
  }

  void walk_t(int x) {
    if (x == n) {
      if (power_fixes(t, nn)) walk_s(0);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!monotone_consistent(t, x, v)) continue;
      t[x] = static_cast<uint8_t>(v);
      walk_t(x + 1);
    }
  }

  void run(const Poset& poset, const Params& params,
           const std::function<void(const uint8_t*, const uint8_t*)>& fn) {
    p = &poset;
    n = poset.n;
    m = params.m;
    nn = params.n;
    emit = &fn;
    walk_t(0);
  }
};

}  // namespace

void for_each_instance(const Params& params, const Poset& p,
                       const std::function<void(const Instance&)>& fn) {
  if (p.n > kMaxCarrier) throw Error(Err::BudgetExceeded, "carrier exceeds the search cap", p.n);
  Instance inst{p, EndoMap(std::vector<uint8_t>(p.n)), EndoMap(std::vector<uint8_t>(p.n)), params};
  InstanceWalker walker;
  walker.run(p, params, [&](const uint8_t* s, const uint8_t* t) {
    std::memcpy(inst.s.img.data(), s, p.n);
    std::memcpy(inst.t.img.data(), t, p.n);
    fn(inst);
  });
}

namespace {

struct PosetHarvest {
  std::vector<std::pair<FpKey, SearchWitness>> found;  // first occurrence order
  long long instances = 0;
};

void harvest_poset(const Poset& p, const Params& params, EvalScratch& scratch,
                   std::unordered_map<FpKey, int, FpHash>& seen, PosetHarvest& out) {
  scratch.configure(params, p.n);
  InstanceWalker walker;
  walker.run(p, params, [&](const uint8_t* s, const uint8_t* t) {
    ++out.instances;
    scratch.compute(s, t);
    const FpKey key = make_key(scratch);
    if (seen.find(key) != seen.end()) return;
    seen.emplace(key, 1);
    SearchWitness w;
    w.poset = p;
    w.s = EndoMap(std::vector<uint8_t>(s, s + p.n));
    w.t = EndoMap(std::vector<uint8_t>(t, t + p.n));
    out.found.emplace_back(key, std::move(w));
  });
}

}  // namespace

SearchReport search_collapses(const Params& params, int max_points, SearchMode mode, int jobs,
                              int expect_count) {
  if (max_points < 1 || max_points > kMaxEnumPoints)
    throw Error(Err::BudgetExceeded, "max_points outside the supported range", max_points);
  if (jobs < 1) throw Error(Err::BadRange, "jobs must be at least 1", jobs);

  const int nw = (params.m - 1) + (params.n - 1) + 4 * params.d;
  if (nw > kMaxWords) throw Error(Err::BudgetExceeded, "word set too large for the search", nw);
  const int floor_points = std::min(5, max_points);
  const bool early_stop = mode == SearchMode::Witness && expect_count >= 0;
  constexpr int kChunk = 64;

  std::unordered_map<FpKey, SearchWitness, FpHash> global;
  long long instances = 0;
  bool stopped = false;

  for (int n = 1; n <= max_points && !stopped; ++n) {
    const auto& classes = poset_classes(n);
    const int total = static_cast<int>(classes.size());
    for (int chunk = 0; chunk < total && !stopped; chunk += kChunk) {
      if (early_stop && n > floor_points &&
        static_cast<int>(global.size()) >= expect_count) {
        stopped = true;
        break;
      }
      const int hi = std::min(chunk + kChunk, total);
      const int width = hi - chunk;
      const int nthreads = std::min(jobs, width);
      std::vector<PosetHarvest> slices(nthreads);
      auto work = [&](int tid) {
        const int lo_i = chunk + width * tid / nthreads;
        const int hi_i = chunk + width * (tid + 1) / nthreads;
        EvalScratch scratch;
        std::unordered_map<FpKey, int, FpHash> seen;
        for (int i = lo_i; i < hi_i; ++i)
          harvest_poset(classes[i], params, scratch, seen, slices[tid]);
      };
      if (nthreads == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < nthreads; ++tid) pool.emplace_back(work, tid);
        for (auto& th : pool) th.join();
      }
      for (auto& slice : slices) {
        instances += slice.instances;
        for (auto& [key, witness] : slice.found)
          global.emplace(key, std::move(witness));
      }
    }
  }

  SearchReport report;
  report.params = params;
  report.instances = instances;
  report.max_points = max_points;
  for (auto& [key, witness] : global) {
    CollapseEntry entry;
    entry.collapse = key_to_collapse(key, nw);
    entry.witness = std::move(witness);
    report.collapses.push_back(std::move(entry));
  }
  std::sort(report.collapses.begin(), report.collapses.end(),
            [](const CollapseEntry& a, const CollapseEntry& b) { return a.collapse < b.collapse; });
  report.complete = expect_count < 0 || static_cast<int>(report.collapses.size()) == expect_count;
  return report;
}

CoherenceReport check_class_coherence(const Instance& inst, const ClassCatalog33& catalog) {
  if (inst.params.m != 3 || inst.params.n != 3)
    throw Error(Err::ParamMismatch, "class coherence is defined for (3,3)", inst.params.m,
          inst.params.n);
  EvalScratch scratch;
  scratch.configure(inst.params, inst.poset.n);
  scratch.compute(inst.s.img.data(), inst.t.img.data());

  auto identified = [&](const std::pair<int, int>& pr) {
    return scratch.ids[pr.first] == scratch.ids[pr.second];
  };

  CoherenceReport report;
  std::vector<uint8_t> sat(catalog.classes.size(), 0);
  for (size_t k = 0; k < catalog.classes.size(); ++k) {
    const auto& cls = catalog.classes[k];
    int holds = 0;
    for (const auto& eq : cls.equations) holds += identified(eq) ? 1 : 0;
    if (holds != 0 && holds != static_cast<int>(cls.equations.size()))
      report.flags.push_back("class " + cls.label + " split: " + std::to_string(holds) + " of " +
                             std::to_string(cls.equations.size()) + " equations hold");
    sat[k] = holds == static_cast<int>(cls.equations.size()) ? 1 : 0;
  }
  for (const auto& [from, to] : catalog.arrows) {
    if (sat[catalog.class_index(from)] && !sat[catalog.class_index(to)])
      report.flags.push_back("arrow " + from + "->" + to + " violated");
  }
  for (const auto& cell : catalog.table) {
    if (cell.kind == CellKind::Blank) continue;
    const bool r = sat[catalog.class_index(cell.row)] != 0;
    const bool c = sat[catalog.class_index(cell.col)] != 0;
    bool ok = true;
    switch (cell.kind) {
      case CellKind::Gray: ok = !c || r; break;
      case CellKind::Plain: ok = (r && c) == (sat[catalog.class_index(cell.value)] != 0); break;
      case CellKind::Italic:
        ok = (r && c) == (r && sat[catalog.class_index(cell.value)] != 0);
        break;
      case CellKind::Bold:
        ok = (r && c) == (sat[catalog.class_index(cell.value)] != 0 && c);
        break;
      case CellKind::Blank: break;
    }
    if (!ok)
      report.flags.push_back("cell (" + cell.row + "," + cell.col + ") violated" +
                             (cell.value.empty() ? "" : " for value " + cell.value));
  }
  return report;
}

std::string search_report_to_json(const SearchReport& r) {
  nlohmann::json j;
  j["params"] = {{"m", r.params.m}, {"n", r.params.n}};
  j["count"] = r.collapses.size();
  j["complete"] = r.complete;
  j["instances"] = r.instances;
  j["max_points"] = r.max_points;
  auto arr = nlohmann::json::array();
  for (const auto& entry : r.collapses) {
    nlohmann::json je;
    je["pairs"] = entry.collapse.pairs;
    je["witness"] = {{"poset", nlohmann::json::parse(poset_to_json(entry.witness.poset))},
                     {"s", entry.witness.s.img},
                     {"t", entry.witness.t.img}};
    arr.push_back(std::move(je));
  }
  j["collapses"] = std::move(arr);
  return j.dump(2);
}

SearchReport search_report_from_json(const std::string& text) try {
  nlohmann::json j = nlohmann::json::parse(text);
  SearchReport r;
  r.params = Params(j.at("params").at("m").get<int>(), j.at("params").at("n").get<int>());
  r.complete = j.at("complete").get<bool>();
  r.instances = j.at("instances").get<long long>();
  r.max_points = j.at("max_points").get<int>();
  for (const auto& je : j.at("collapses")) {
    CollapseEntry entry;
    for (const auto& jp : je.at("pairs"))
      entry.collapse.pairs.emplace_back(jp.at(0).get<int>(), jp.at(1).get<int>());
    entry.witness.poset = poset_from_json(je.at("witness").at("poset").dump());
    entry.witness.s = EndoMap(je.at("witness").at("s").get<std::vector<uint8_t>>());
    entry.witness.t = EndoMap(je.at("witness").at("t").get<std::vector<uint8_t>>());
    r.collapses.push_back(std::move(entry));
  }
  return r;
} catch (const nlohmann::json::exception& e) {
  throw Error(Err::BadInput, std::string("search report: ") + e.what());
}

DiagramCatalog containment_order(const std::vector<Collapse>& collapses, const Params& p) {
  const int k = static_cast<int>(collapses.size());
  std::vector<std::vector<uint8_t>> rel(k, std::vector<uint8_t>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      rel[i][j] = std::includes(collapses[j].pairs.begin(), collapses[j].pairs.end(),
                                collapses[i].pairs.begin(), collapses[i].pairs.end())
                       ? 1
                       : 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && rel[i][j] && rel[j][i])
        throw Error(Err::NotAPartialOrder, "duplicate collapse in containment order", i, j);
  DiagramCatalog cat;
  for (const auto& c : collapses) cat.nodes.push_back(collapse_to_string(c, p));
  for (const auto& [lo, hi] : hasse_edges(rel)) cat.edges.push_back({lo, hi, EdgeKind::Solid});
  return cat;
}

}  // namespace opw
