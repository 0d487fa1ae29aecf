#include "opw/locale.hpp"

#include <map>

#include "opw/enumerate.hpp"

namespace opw {

namespace {

/// Extremum of the common bounds of (a, b): greatest lower or least upper.
/// Returns -1 when no extremum exists.
int bound_of_pair(const Poset& p, int a, int b, bool below) {
  auto in_set = [&](int z) {
    return below ? (p.leq(z, a) && p.leq(z, b)) : (p.leq(a, z) && p.leq(b, z));
  };
  int best = -1;
  for (int z = 0; z < p.n; ++z) {
    if (!in_set(z)) continue;
    if (best < 0 || (below ? p.leq(best, z) : p.leq(z, best))) best = z;
  }
  if (best < 0) return -1;
  for (int z = 0; z < p.n; ++z)
    if (in_set(z) && !(below ? p.leq(z, best) : p.leq(best, z))) return -1;
  return best;
}

}  // namespace

FiniteFrame check_frame(const Poset& p) {
  check_poset(p);
  const int n = p.n;
  if (n == 0) throw Error(Err::NotALattice, "empty carrier has no bounds");
  FiniteFrame f;
  f.poset = p;
  f.meet.assign(n, std::vector<int>(n, -1));
  f.join.assign(n, std::vector<int>(n, -1));
  f.impl.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      f.meet[a][b] = bound_of_pair(p, a, b, true);
      if (f.meet[a][b] < 0) throw Error(Err::NotALattice, "pair has no meet", a, b);
      f.join[a][b] = bound_of_pair(p, a, b, false);
      if (f.join[a][b] < 0) throw Error(Err::NotALattice, "pair has no join", a, b);
    }
  }
  f.bottom = 0;
  f.top = 0;
  for (int x = 0; x < n; ++x) {
    f.bottom = f.meet[f.bottom][x];
    f.top = f.join[f.top][x];
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f.meet[a][f.join[b][c]] != f.join[f.meet[a][b]][f.meet[a][c]])
          throw Error(Err::NotDistributive, "distributivity fails", a, b);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int acc = f.bottom;
      for (int z = 0; z < n; ++z)
        if (p.leq(f.meet[a][z], b)) acc = f.join[acc][z];
      if (!p.leq(f.meet[a][acc], b))
        throw Error(Err::PreconditionFailed, "implication candidate escapes its bound", a, b);
      f.impl[a][b] = acc;
    }
  }
  return f;
}

std::vector<EndoMap> nuclei(const FiniteFrame& f) {
  const Poset& p = f.poset;
  const int n = p.n;
  std::vector<EndoMap> out;
  std::vector<uint8_t> img(n, 0);

  auto monotone_so_far = [&](int x, int v) {
    for (int y = 0; y < x; ++y) {
      if (p.leq(x, y) && !p.leq(v, img[y])) return false;
      if (p.leq(y, x) && !p.leq(img[y], v)) return false;
    }
    return true;
  };
  auto laws_hold = [&] {
    for (int x = 0; x < n; ++x)
      if (img[img[x]] != img[x]) return false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (img[f.meet[a][b]] != f.meet[img[a]][img[b]]) return false;
    return true;
  };
  auto dfs = [&](auto&& self, int x) -> void {
    if (x == n) {
      if (laws_hold()) out.push_back(EndoMap{img});
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!p.leq(x, v)) continue;
      if (!monotone_so_far(x, v)) continue;
      img[x] = static_cast<uint8_t>(v);
      self(self, x + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

SublocaleLattice sublocale_lattice(const FiniteFrame& f) {
  SublocaleLattice lat;
  lat.frame = f;
  lat.maps = nuclei(f);
  const int k = static_cast<int>(lat.maps.size());
  lat.order = Poset(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (pointwise_leq(lat.maps[b], lat.maps[a], f.poset)) lat.order.set(a, b);
  check_poset(lat.order);
  check_frame(dual(lat.order));
  EndoMap id = identity_map(f.poset.n);
  EndoMap all_top = constant_map(f.poset.n, f.top);
  for (int a = 0; a < k; ++a) {
    if (lat.maps[a] == id) lat.whole = a;
    if (lat.maps[a] == all_top) lat.empty = a;
  }
  if (lat.whole < 0 || lat.empty < 0)
    throw Error(Err::PreconditionFailed, "identity or constant-top nucleus missing");
  return lat;
}

namespace {

/// Pointwise meet of two nuclei, the join of their sublocales.
std::vector<uint8_t> nucleus_meet(const FiniteFrame& f, const EndoMap& a, const EndoMap& b) {
  std::vector<uint8_t> m(f.poset.n);
  for (int x = 0; x < f.poset.n; ++x)
    m[x] = static_cast<uint8_t>(f.meet[a(x)][b(x)]);
  return m;
}

/// Pointwise-greatest (want_greatest) or pointwise-least map among the
/// candidate indices; the extremum must exist and be unique.
int extreme_candidate(const SublocaleLattice& lat, const std::vector<int>& candidates,
                      bool want_greatest, const char* what) {
  if (candidates.empty()) throw Error(Err::PreconditionFailed, std::string(what) + ": no candidate");
  int best = candidates[0];
  for (int t : candidates) {
    bool replace = want_greatest ? pointwise_leq(lat.maps[best], lat.maps[t], lat.frame.poset)
                                 : pointwise_leq(lat.maps[t], lat.maps[best], lat.frame.poset);
    if (replace) best = t;
  }
  for (int t : candidates) {
    bool ok = want_greatest ? pointwise_leq(lat.maps[t], lat.maps[best], lat.frame.poset)
                            : pointwise_leq(lat.maps[best], lat.maps[t], lat.frame.poset);
    if (!ok) throw Error(Err::PreconditionFailed, std::string(what) + ": extremum is not unique");
  }
  return best;
}

}  // namespace

LocalicOps localic_operators(const FiniteFrame& f) {
  LocalicOps ops;
  ops.lat = sublocale_lattice(f);
  const SublocaleLattice& lat = ops.lat;
  const int n = f.poset.n;
  const int k = static_cast<int>(lat.maps.size());

  std::map<std::vector<uint8_t>, int> index;
  for (int t = 0; t < k; ++t) index[lat.maps[t].img] = t;
  auto lookup = [&](const std::vector<uint8_t>& img, const char* what) {
    auto it = index.find(img);
    if (it == index.end())
      throw Error(Err::PreconditionFailed, std::string(what) + " is not a nucleus");
    return it->second;
  };

  for (int a = 0; a < n; ++a) {
    std::vector<uint8_t> open_img(n), closed_img(n);
    for (int x = 0; x < n; ++x) {
      open_img[x] = static_cast<uint8_t>(f.impl[a][x]);
      closed_img[x] = static_cast<uint8_t>(f.join[a][x]);
    }
    ops.opens.push_back(lookup(open_img, "open map"));
    ops.closeds.push_back(lookup(closed_img, "closed map"));
  }

  std::vector<uint8_t> c_img(k), i_img(k), neg_img(k);
  const std::vector<uint8_t>& id_img = lat.maps[lat.whole].img;
  for (int j = 0; j < k; ++j) {
    std::vector<int> closed_above, open_below, complements;
    for (int t : ops.closeds)
      if (pointwise_leq(lat.maps[t], lat.maps[j], f.poset)) closed_above.push_back(t);
    for (int t : ops.opens)
      if (pointwise_leq(lat.maps[j], lat.maps[t], f.poset)) open_below.push_back(t);
    for (int t = 0; t < k; ++t)
      if (nucleus_meet(f, lat.maps[j], lat.maps[t]) == id_img) complements.push_back(t);
    c_img[j] = static_cast<uint8_t>(extreme_candidate(lat, closed_above, true, "closure"));
    i_img[j] = static_cast<uint8_t>(extreme_candidate(lat, open_below, false, "interior"));
    neg_img[j] = static_cast<uint8_t>(extreme_candidate(lat, complements, true, "supplement"));
  }
  ops.c = EndoMap{std::move(c_img)};
  ops.i = EndoMap{std::move(i_img)};
  ops.neg = EndoMap{std::move(neg_img)};
  return ops;
}

OperatorMonoid localic_monoid(const FiniteFrame& f) {
  LocalicOps ops = localic_operators(f);
  std::vector<Generator> gens = {{'c', ops.c}, {'i', ops.i}, {'-', ops.neg}};
  return generate_monoid(ops.lat.order, gens, true);
}

PseudoInstance sublocale_pseudo_instance(const FiniteFrame& f) {
  LocalicOps ops = localic_operators(f);
  return make_pseudo_instance(ops.lat.order, ops.i, ops.neg);
}

void for_each_frame(int max_points, const std::function<void(const FiniteFrame&)>& fn) {
  for (int n = 1; n <= max_points; ++n) {
    for (const Poset& p : poset_classes(n)) {
      FiniteFrame f;
      try {
        f = check_frame(p);
      } catch (const Error& e) {
        if (e.code == Err::NotALattice || e.code == Err::NotDistributive) continue;
        throw;
      }
      fn(f);
    }
  }
}

}  // namespace opw
