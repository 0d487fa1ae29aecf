#include "helpers.hpp"

#include <map>

namespace opw::testutil {

namespace {

bool valid_relation(const std::vector<uint8_t>& rel, int n) {
  auto at = [&](int x, int y) { return rel[static_cast<size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x)
    if (!at(x, x)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && at(x, y) && at(y, x)) return false;
      if (!at(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (at(y, z) && !at(x, z)) return false;
    }
  return true;
}

std::vector<uint8_t> least_relabeling(const std::vector<uint8_t>& rel, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint8_t> best;
  do {
    std::vector<uint8_t> cand(rel.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        cand[static_cast<size_t>(perm[x]) * n + perm[y]] =
            rel[static_cast<size_t>(x) * n + y];
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

int naive_poset_class_count(int n) {
  std::set<std::vector<uint8_t>> seen;
  const int off_diag = n * n - n;
  std::vector<int> cells;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) cells.push_back(x * n + y);
  for (uint64_t mask = 0; mask < (uint64_t{1} << off_diag); ++mask) {
    std::vector<uint8_t> rel(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) rel[static_cast<size_t>(x) * n + x] = 1;
    for (int i = 0; i < off_diag; ++i)
      if (mask >> i & 1) rel[cells[i]] = 1;
    if (valid_relation(rel, n)) seen.insert(least_relabeling(rel, n));
  }
  return static_cast<int>(seen.size());
}

std::string oracle_normal_form(const std::string& input, const Params& p) {
  std::vector<std::string> members;
  for (const auto& nf : wset(p)) members.push_back(nf.word());
  std::set<std::string> wmember(members.begin(), members.end());
  if (wmember.count(input)) return input;

  const size_t cap = input.size() + static_cast<size_t>(p.ell) + 2;
  std::vector<std::pair<std::string, std::string>> two_way = {
      {std::string(p.m, 's'), "s"},
      {std::string(p.n, 't'), "t"},
      {"sst", "stt"},
      {"tss", "tts"},
      {std::string(p.d + 1, 's') + "t", "st"},
      {std::string(p.d + 1, 't') + "s", "ts"},
  };
  std::vector<std::pair<std::string, std::string>> rules;
  for (const auto& [a, b] : two_way) {
    rules.emplace_back(a, b);
    rules.emplace_back(b, a);
  }

  const size_t span = static_cast<size_t>(p.ell) + 3;
  std::set<std::string> seen{input};
  std::deque<std::string> frontier{input};
  while (!frontier.empty()) {
    std::string u = std::move(frontier.front());
    frontier.pop_front();
    std::vector<std::string> next;
    for (const auto& [a, b] : rules) {
      for (size_t i = u.find(a); i != std::string::npos; i = u.find(a, i + 1)) {
        std::string v = u.substr(0, i) + b + u.substr(i + a.size());
        if (v.size() <= cap) next.push_back(std::move(v));
      }
    }
    if (u.size() >= span) {
      for (size_t i = 0; i + span <= u.size(); ++i) {
        if (u[i] == 's' && u[i + span - 1] == 't')
          next.push_back(u.substr(0, i) + "stt" + u.substr(i + span));
        if (u[i] == 't' && u[i + span - 1] == 's')
          next.push_back(u.substr(0, i) + "tts" + u.substr(i + span));
      }
    }
    for (auto& v : next) {
      if (seen.count(v)) continue;
      if (wmember.count(v)) return v;
      seen.insert(v);
      frontier.push_back(std::move(v));
    }
  }
  return "";
}

}  // namespace opw::testutil
