#include "opw/pseudo.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "opw/enumerate.hpp"
#include "opw/kuratowski.hpp"

namespace opw {

namespace {

const char* kUpperWords[] = {"i",  "i--i",   "i--", "ibi",  "--i", "ibi--",  "-b-", "--ibi", "ib",
                             "--ibi--", "bi", "--ib", "bi--", "bib", "b", "id", "--"};
const char* kLowerWords[] = {"i-", "-b",  "-",    "-bib", "ibi-", "ib-", "-ib",
                             "-bi--",    "i-i", "bib-", "-bi",  "b-",   "-ibi", "-i"};

bool galois_holds(const Poset& p, const EndoMap& f, int* bad_a, int* bad_x) {
  for (int a = 0; a < p.n; ++a) {
    for (int x = 0; x < p.n; ++x) {
      if (p.leq(a, f(x)) != p.leq(x, f(a))) {
        if (bad_a) *bad_a = a;
        if (bad_x) *bad_x = x;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_pseudocomplement_op(const Poset& p, const EndoMap& f) {
  if (static_cast<int>(f.size()) != p.n)
    throw Error(Err::SizeMismatch, "pseudocomplement candidate has wrong carrier size");
  if (!galois_holds(p, f, nullptr, nullptr)) return false;
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.leq(x, y) && !p.leq(f(y), f(x)))
        throw Error(Err::PreconditionFailed, "galois adjunction held but antitonicity failed", x, y);
  return true;
}

PseudoInstance make_pseudo_instance(const Poset& p, const EndoMap& i, const EndoMap& neg) {
  if (static_cast<int>(i.size()) != p.n || static_cast<int>(neg.size()) != p.n)
    throw Error(Err::SizeMismatch, "operator size does not match carrier");
  if (!is_interior(i, p)) throw Error(Err::NotAnInterior, "interior laws fail");
  int a = -1, x = -1;
  if (!galois_holds(p, neg, &a, &x))
    throw Error(Err::InvalidInstance, "pseudocomplement adjunction fails", a, x);
  return PseudoInstance{p, i, neg};
}

const std::vector<std::string>& m_words() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> w;
    for (const char* s : kUpperWords) w.push_back(s);
    for (const char* s : kLowerWords) w.push_back(s);
    return w;
  }();
  return words;
}

std::string expand_b(const std::string& word) {
  if (word == "id") return "";
  std::string out;
  for (char ch : word) {
    switch (ch) {
      case 'b': out += "-i-"; break;
      case 'i': out += 'i'; break;
      case '-': out += '-'; break;
      default: throw Error(Err::UnknownLetter, std::string("unknown operator letter: ") + ch);
    }
  }
  return out;
}

EndoMap eval_m_word(const std::string& word, const EndoMap& i, const EndoMap& neg) {
  if (i.size() != neg.size())
    throw Error(Err::SizeMismatch, "operator carriers differ");
  std::vector<Generator> gens = {{'i', i}, {'-', neg}};
  return eval_word(expand_b(word), gens, static_cast<int>(i.size()));
}

OperatorMonoid generate_m(const PseudoInstance& inst) {
  if (static_cast<int>(inst.i.size()) != inst.poset.n ||
      static_cast<int>(inst.neg.size()) != inst.poset.n)
    throw Error(Err::InvalidInstance, "operator size does not match carrier");
  if (!is_interior(inst.i, inst.poset))
    throw Error(Err::InvalidInstance, "interior laws fail");
  if (!galois_holds(inst.poset, inst.neg, nullptr, nullptr))
    throw Error(Err::InvalidInstance, "pseudocomplement adjunction fails");
  std::vector<Generator> gens = {{'i', inst.i}, {'-', inst.neg}};
  return generate_monoid(inst.poset, gens, true);
}

CheckReport verify_edges(const PseudoInstance& inst, const DiagramCatalog& fig2) {
  CheckReport report;
  const int n = inst.poset.n;
  std::vector<EndoMap> ops;
  ops.reserve(fig2.nodes.size());
  for (const std::string& w : fig2.nodes) ops.push_back(eval_m_word(w, inst.i, inst.neg));
  for (const CatalogEdge& e : fig2.edges) {
    if (e.kind != EdgeKind::Solid) continue;
    for (int x = 0; x < n; ++x) {
      if (!inst.poset.leq(ops[e.lo](x), ops[e.hi](x))) {
        report.violations.push_back("solid edge " + fig2.nodes[e.lo] + " <= " + fig2.nodes[e.hi] +
                                    " fails at point " + std::to_string(x));
        break;
      }
    }
  }
  EndoMap single = eval_m_word("-", inst.i, inst.neg);
  EndoMap triple = eval_m_word("---", inst.i, inst.neg);
  if (!(single == triple)) report.violations.push_back("--- differs from -");
  if (!is_closure(eval_m_word("--", inst.i, inst.neg), inst.poset))
    report.violations.push_back("-- is not a closure operator");
  if (!is_closure(eval_m_word("b", inst.i, inst.neg), inst.poset))
    report.violations.push_back("b is not a closure operator");
  return report;
}

const std::vector<std::pair<std::string, std::string>>& dashed_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"i--i", "id"}, {"-b", "i-i"}, {"-ib", "-bi"}, {"i-i", "b-"}, {"ibi-", "-"}, {"ib-", "-ib"}};
  return pairs;
}

const std::vector<std::pair<std::string, std::string>>& localic_identities() {
  static const std::vector<std::pair<std::string, std::string>> ids = {
      {"i", "i--i"},     {"i-", "-b"},         {"i--", "-b-"},   {"ib", "--ib"},
      {"ibi", "--ibi"},  {"ibi--", "--ibi--"}, {"i-i", "-bi"},   {"ibi-", "-bib"},
      {"ib-", "-bi--"}};
  return ids;
}

CheckReport localic_quotient_check(const PseudoInstance& inst,
                                   const std::vector<std::string>& quotient_words) {
  CheckReport report;
  EndoMap i_op = eval_m_word("i", inst.i, inst.neg);
  EndoMap nni = eval_m_word("--i", inst.i, inst.neg);
  if (!(i_op == nni))
    throw Error(Err::PreconditionFailed, "instance does not satisfy i = --i");
  for (const auto& [lhs, rhs] : localic_identities()) {
    if (!(eval_m_word(lhs, inst.i, inst.neg) == eval_m_word(rhs, inst.i, inst.neg)))
      report.violations.push_back("identity " + lhs + " = " + rhs + " fails");
  }
  std::set<std::vector<uint8_t>> blocks;
  std::vector<EndoMap> word_ops;
  for (const std::string& w : m_words()) {
    EndoMap f = eval_m_word(w, inst.i, inst.neg);
    blocks.insert(f.img);
    word_ops.push_back(std::move(f));
  }
  if (blocks.size() > 21)
    report.violations.push_back("operator partition has " + std::to_string(blocks.size()) +
                                " blocks, expected at most 21");
  if (!quotient_words.empty()) {
    std::set<std::vector<uint8_t>> reps;
    for (const std::string& w : quotient_words)
      reps.insert(eval_m_word(w, inst.i, inst.neg).img);
    for (size_t k = 0; k < word_ops.size(); ++k) {
      if (!reps.count(word_ops[k].img))
        report.violations.push_back("word " + m_words()[k] +
                                    " is not realized by any quotient representative");
    }
  }
  return report;
}

std::vector<EndoMap> pseudocomplement_ops(const Poset& p) {
  std::vector<EndoMap> out;
  const int n = p.n;
  if (n == 0) return out;
  std::vector<uint8_t> img(n, 0);
  std::vector<bool> assigned(n, false);

  auto consistent = [&](int x, int v) {
    for (int y = 0; y < n; ++y) {
      if (!assigned[y]) continue;
      if (p.leq(x, y) && !p.leq(img[y], v)) return false;
      if (p.leq(y, x) && !p.leq(v, img[y])) return false;
      if (p.leq(y, v) != p.leq(x, img[y])) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, int x) -> void {
    if (x == n) {
      EndoMap f{img};
      if (is_pseudocomplement_op(p, f)) out.push_back(std::move(f));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!consistent(x, v)) continue;
      img[x] = static_cast<uint8_t>(v);
      assigned[x] = true;
      self(self, x + 1);
      assigned[x] = false;
    }
  };
  dfs(dfs, 0);
  return out;
}

namespace {

/// Streams instances in deterministic order; fn returns false to stop.
/// Returns false when stopped early.
bool stream_instances(int max_points, long long* instances,
                      const std::function<bool(const PseudoInstance&)>& fn) {
  for (int n = 1; n <= max_points; ++n) {
    for (const Poset& p : poset_classes(n)) {
      std::vector<EndoMap> interiors = interior_operators(p);
      std::vector<EndoMap> negs = pseudocomplement_ops(p);
      for (const EndoMap& i : interiors) {
        for (const EndoMap& neg : negs) {
          ++*instances;
          if (!fn(PseudoInstance{p, i, neg})) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

void for_each_pseudo_instance(int max_points,
                              const std::function<void(const PseudoInstance&)>& fn) {
  long long count = 0;
  stream_instances(max_points, &count, [&](const PseudoInstance& inst) {
    fn(inst);
    return true;
  });
}

DashedReport search_dashed_counterexamples(const SearchBudget& budget) {
  DashedReport report;
  const auto& pairs = dashed_pairs();
  for (const auto& [lo, hi] : pairs) report.results.push_back(DashedWitness{lo, hi});
  int remaining = static_cast<int>(pairs.size());
  stream_instances(budget.max_points, &report.instances, [&](const PseudoInstance& inst) {
    for (size_t k = 0; k < pairs.size(); ++k) {
      DashedWitness& w = report.results[k];
      if (w.found) continue;
      EndoMap lo = eval_m_word(w.lower, inst.i, inst.neg);
      EndoMap hi = eval_m_word(w.upper, inst.i, inst.neg);
      for (int x = 0; x < inst.poset.n; ++x) {
        if (!inst.poset.leq(lo(x), hi(x))) {
          w.found = true;
          w.poset = inst.poset;
          w.i = inst.i;
          w.neg = inst.neg;
          w.point = x;
          --remaining;
          break;
        }
      }
    }
    if (remaining == 0) return false;
    return budget.max_instances < 0 || report.instances < budget.max_instances;
  });
  report.complete = remaining == 0;
  return report;
}

RedundancyReport implication_redundancy_check(int max_points) {
  RedundancyReport report;
  const auto& pairs = dashed_pairs();
  const int count = static_cast<int>(pairs.size());
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      if (a != b) report.items.push_back(RedundancyItem{a, b});
  int remaining = static_cast<int>(report.items.size());
  std::vector<bool> holds(count);
  stream_instances(max_points, &report.instances, [&](const PseudoInstance& inst) {
    for (int k = 0; k < count; ++k) {
      EndoMap lo = eval_m_word(pairs[k].first, inst.i, inst.neg);
      EndoMap hi = eval_m_word(pairs[k].second, inst.i, inst.neg);
      holds[k] = true;
      for (int x = 0; x < inst.poset.n && holds[k]; ++x)
        if (!inst.poset.leq(lo(x), hi(x))) holds[k] = false;
    }
    for (RedundancyItem& item : report.items) {
      if (item.found) continue;
      if (holds[item.lhs] && !holds[item.rhs]) {
        item.found = true;
        item.poset = inst.poset;
        item.i = inst.i;
        item.neg = inst.neg;
        --remaining;
      }
    }
    return remaining != 0;
  });
  report.complete = remaining == 0;
  return report;
}

namespace {

nlohmann::json endomap_json(const EndoMap& f) {
  return nlohmann::json::parse(endomap_to_json(f));
}

nlohmann::json instance_json(const Poset& p, const EndoMap& i, const EndoMap& neg) {
  nlohmann::json j;
  j["poset"] = nlohmann::json::parse(poset_to_json(p));
  j["i"] = endomap_json(i);
  j["neg"] = endomap_json(neg);
  return j;
}

}  // namespace

std::string dashed_report_to_json(const DashedReport& r) {
  nlohmann::json j;
  j["complete"] = r.complete;
  j["instances"] = r.instances;
  j["results"] = nlohmann::json::array();
  for (const DashedWitness& w : r.results) {
    nlohmann::json e;
    e["lower"] = w.lower;
    e["upper"] = w.upper;
    e["found"] = w.found;
    if (w.found) {
      e["witness"] = instance_json(w.poset, w.i, w.neg);
      e["point"] = w.point;
    }
    j["results"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string redundancy_report_to_json(const RedundancyReport& r) {
  const auto& pairs = dashed_pairs();
  nlohmann::json j;
  j["complete"] = r.complete;
  j["instances"] = r.instances;
  j["items"] = nlohmann::json::array();
  for (const RedundancyItem& item : r.items) {
    nlohmann::json e;
    e["assumed"] = {pairs[item.lhs].first, pairs[item.lhs].second};
    e["refuted"] = {pairs[item.rhs].first, pairs[item.rhs].second};
    e["found"] = item.found;
    if (item.found) e["witness"] = instance_json(item.poset, item.i, item.neg);
    j["items"].push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace opw
