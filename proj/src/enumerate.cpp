#include "opw/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace opw {

namespace {

// Staircase reading of the relation matrix: for each k, row k over columns
// 0..k, then column k over rows 0..k-1. Appending a point appends 2k+1 bits,
// so branch-and-bound can compare against the incumbent incrementally.
void append_staircase_bits(const Poset& p, const std::vector<uint8_t>& perm, int k,
                           std::vector<uint8_t>& bits) {
  for (int j = 0; j <= k; ++j) bits.push_back(p.leq(perm[k], perm[j]));
  for (int j = 0; j < k; ++j) bits.push_back(p.leq(perm[j], perm[k]));
}

// Iterated invariant refinement: colors points by (down-set size, up-set
// size), then re-colors by the multiset of (leq, geq, color) profiles until
// the partition stops splitting. Colors are label-invariant by construction.
std::vector<int> refine_colors(const Poset& p) {
  const int n = p.n;
  std::vector<int> color(n, 0);
  {
    std::vector<std::pair<std::pair<int, int>, int>> sig(n);
    for (int x = 0; x < n; ++x) {
      int down = 0, up = 0;
      for (int y = 0; y < n; ++y) {
        down += p.leq(y, x);
        up += p.leq(x, y);
      }
      sig[x] = {{down, up}, x};
    }
    std::sort(sig.begin(), sig.end());
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      color[sig[i].second] = c;
    }
  }
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> profile;
      profile.push_back(color[x]);
      std::vector<int> entries;
      for (int y = 0; y < n; ++y)
        entries.push_back((p.leq(x, y) << 1 | p.leq(y, x)) * (n + 1) + color[y]);
      std::sort(entries.begin(), entries.end());
      profile.insert(profile.end(), entries.begin(), entries.end());
      sig[x] = {std::move(profile), x};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      next[sig[i].second] = c;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct LexminSearch {
  const Poset& p;
  std::vector<uint8_t> best_perm;
  std::vector<uint8_t> best_bits;
  bool have_best = false;

  std::vector<uint8_t> perm;
  std::vector<uint8_t> used;
  std::vector<uint8_t> bits;

  explicit LexminSearch(const Poset& p) : p(p), used(p.n, 0) {}

  void run() {
    perm.clear();
    bits.clear();
    std::fill(used.begin(), used.end(), 0);
    descend();
  }

  // The incumbent can change anywhere below, so every comparison reads the
  // current best from scratch; a prefix is pruned only once it is strictly
  // above the incumbent, which no completion can repair.
  void descend() {
    const int n = p.n;
    const int k = static_cast<int>(perm.size());
    if (k == n) {
      if (!have_best || bits < best_bits) {
        best_bits = bits;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      const size_t mark = bits.size();
      perm.push_back(static_cast<uint8_t>(x));
      append_staircase_bits(p, perm, k, bits);
      bool viable = true;
      if (have_best) {
        auto [bi, gi] = std::mismatch(bits.begin(), bits.end(), best_bits.begin());
        viable = bi == bits.end() || *bi < *gi;
      }
      if (viable) {
        used[x] = 1;
        descend();
        used[x] = 0;
      }
      bits.resize(mark);
      perm.pop_back();
    }
  }
};

std::string pack_code(int n, const std::vector<uint8_t>& bits) {
  std::string out;
  out.push_back(static_cast<char>(n));
  uint8_t acc = 0;
  int fill = 0;
  for (uint8_t b : bits) {
    acc = static_cast<uint8_t>(acc << 1 | b);
    if (++fill == 8) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
      fill = 0;
    }
  }
  if (fill) out.push_back(static_cast<char>(acc << (8 - fill)));
  return out;
}

Poset apply_perm(const Poset& p, const std::vector<uint8_t>& perm) {
  Poset q(p.n);
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.leq(perm[x], perm[y])) q.set(x, y);
  return q;
}

LexminSearch solved_lexmin(const Poset& p) {
  LexminSearch search(p);
  search.run();
  return search;
}

}  // namespace

CanonicalCode canonical_code(const Poset& p) {
  auto search = solved_lexmin(p);
  return CanonicalCode{pack_code(p.n, search.best_bits)};
}

CanonicalCode canonical_code_by_search(const Poset& p) {
  const int n = p.n;
  std::vector<uint8_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<uint8_t> perm, bits, best;
  bool have = false;
  do {
    perm.clear();
    bits.clear();
    for (int k = 0; k < n; ++k) {
      perm.push_back(order[k]);
      append_staircase_bits(p, perm, k, bits);
    }
    if (!have || bits < best) {
      best = bits;
      have = true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return CanonicalCode{pack_code(n, best)};
}

Poset canonical_form(const Poset& p) {
  auto search = solved_lexmin(p);
  return apply_perm(p, search.best_perm);
}

std::vector<std::vector<uint8_t>> automorphisms(const Poset& p) {
  const int n = p.n;
  std::vector<int> color = refine_colors(p);
  std::vector<std::vector<uint8_t>> out;
  std::vector<uint8_t> perm;
  std::vector<uint8_t> used(n, 0);
  auto descend = [&](auto&& self) -> void {
    const int k = static_cast<int>(perm.size());
    if (k == n) {
      out.push_back(perm);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || color[y] != color[k]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        ok = p.leq(k, j) == p.leq(y, perm[j]) && p.leq(j, k) == p.leq(perm[j], y);
      if (!ok) continue;
      used[y] = 1;
      perm.push_back(static_cast<uint8_t>(y));
      self(self);
      perm.pop_back();
      used[y] = 0;
    }
  };
  descend(descend);
  return out;
}

namespace {

std::vector<std::vector<int>> order_ideals(const Poset& p) {
  const int n = p.n;
  std::vector<std::vector<int>> ideals;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      for (int y = 0; y < n && closed; ++y)
        if (p.leq(y, x) && !(mask >> y & 1)) closed = false;
    }
    if (!closed) continue;
    std::vector<int> ideal;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1) ideal.push_back(x);
    ideals.push_back(std::move(ideal));
  }
  return ideals;
}

// Every poset arises from a smaller one by adding a maximal point whose
// strict down-set is an order ideal, so extending canonical representatives
// by all ideals and deduplicating reaches every isomorphism class.
std::vector<Poset> extend_classes(const std::vector<Poset>& smaller) {
  std::map<CanonicalCode, Poset> found;
  for (const Poset& p : smaller) {
    const int n = p.n;
    for (const auto& ideal : order_ideals(p)) {
      Poset q(n + 1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (p.leq(x, y)) q.set(x, y);
      for (int x : ideal) q.set(x, n);
      Poset canon = canonical_form(q);
      found.emplace(canonical_code(canon), std::move(canon));
    }
  }
  std::vector<Poset> out;
  out.reserve(found.size());
  for (auto& [code, poset] : found) out.push_back(std::move(poset));
  return out;
}

}  // namespace

const std::vector<Poset>& poset_classes(int n) {
  if (n < 1 || n > kMaxEnumPoints)
    throw Error(Err::BadRange, "poset_classes wants 1 <= n <= " + std::to_string(kMaxEnumPoints));
  static std::mutex mu;
  static std::vector<std::vector<Poset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back({Poset(1)});
  while (static_cast<int>(cache.size()) < n) cache.push_back(extend_classes(cache.back()));
  return cache[n - 1];
}

void for_each_poset(int max_points, const std::function<void(const Poset&)>& fn) {
  for (int n = 1; n <= max_points; ++n)
    for (const Poset& p : poset_classes(n)) fn(p);
}

void enumerate_monotone_endomaps(const Poset& p,
                                 const std::function<bool(const EndoMap&)>& pred,
                                 const std::function<void(const EndoMap&)>& fn) {
  const int n = p.n;
  EndoMap f(std::vector<uint8_t>(n, 0));
  auto descend = [&](auto&& self, int x) -> void {
    if (x == n) {
      if (!pred || pred(f)) fn(f);
      return;
    }
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      for (int j = 0; j < x && ok; ++j) {
        if (p.leq(j, x) && !p.leq(f.img[j], y)) ok = false;
        if (p.leq(x, j) && !p.leq(y, f.img[j])) ok = false;
      }
      if (!ok) continue;
      f.img[x] = static_cast<uint8_t>(y);
      self(self, x + 1);
    }
  };
  descend(descend, 0);
}

std::vector<EndoMap> monotone_endomaps(const Poset& p) {
  std::vector<EndoMap> out;
  enumerate_monotone_endomaps(p, nullptr, [&](const EndoMap& f) { out.push_back(f); });
  return out;
}

}  // namespace opw
