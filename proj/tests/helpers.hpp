#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "opw/chittenden.hpp"
#include "opw/poset.hpp"

namespace opw::testutil {

inline Poset chain(int n) {
  Poset p(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) p.set(x, y);
  return p;
}

inline Poset antichain(int n) { return Poset(n); }

/// 0 bottom, 1 and 2 incomparable, 3 top.
inline Poset diamond() {
  Poset p(4);
  p.set(0, 1);
  p.set(0, 2);
  p.set(0, 3);
  p.set(1, 3);
  p.set(2, 3);
  return p;
}

/// 0 bottom, atoms 1..3, 4 top: a lattice that is not distributive.
inline Poset m3() {
  Poset p(5);
  for (int a = 1; a <= 3; ++a) {
    p.set(0, a);
    p.set(a, 4);
  }
  p.set(0, 4);
  return p;
}

inline EndoMap map_of(std::initializer_list<int> img) {
  std::vector<uint8_t> v;
  for (int x : img) v.push_back(static_cast<uint8_t>(x));
  return EndoMap(std::move(v));
}

/// All self-maps of an n-point carrier, monotone or not.
inline std::vector<EndoMap> all_maps(int n) {
  std::vector<EndoMap> out;
  std::vector<uint8_t> img(n, 0);
  while (true) {
    out.emplace_back(img);
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) img[i--] = 0;
    if (i < 0) return out;
    ++img[i];
  }
}

/// Isomorphism-class count by brute force: every reflexive relation matrix
/// on n labeled points, validity check, dedup by the least matrix over all
/// permutations. Only usable for n <= 4.
int naive_poset_class_count(int n);

/// Normal form by breadth-first rewriting, independent of multiply: applies
/// the defining power identities, the adjacent exchanges sst=stt / tss=tts,
/// the gcd-step absorption s^{d+1}t=st / t^{d+1}s=ts (all both ways), and
/// the length-(l+3) collapses swt->stt / tws->tts, over words no longer
/// than |input|+l+2. Every rule is an identity of the semigroup, so the
/// first representative reached is the normal form; returns "" when none is
/// reached within the cap.
std::string oracle_normal_form(const std::string& input, const Params& p);

}  // namespace opw::testutil
