#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opw {

enum class Err {
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  SizeMismatch,
  BadRange,
  NotAPartialOrder,
  UnknownLetter,
  NotAClosure,
  NotAnInterior,
  Unclassified,
  ParamMismatch,
  EmptyWord,
  NotMonotone,
  NotDominated,
  NotPeriodic,
  InvalidInstance,
  NotALattice,
  NotDistributive,
  PreconditionFailed,
  BadInput,
  BudgetExceeded,
};

const char* err_name(Err e);

/// Typed failure with an optional witness pair (point indices, -1 if unused).
struct Error : std::runtime_error {
  Err code;
  int a;
  int b;
  Error(Err code, const std::string& what, int a = -1, int b = -1)
      : std::runtime_error(what), code(code), a(a), b(b) {}
};

/// Finite poset: carrier {0..n-1} with a reflexive, antisymmetric,
/// transitive relation stored as a full n*n boolean matrix.
struct Poset {
  int n = 0;
  std::vector<uint8_t> rel;  // rel[x*n + y] == 1  iff  x <= y

  Poset() = default;
  explicit Poset(int n) : n(n), rel(static_cast<size_t>(n) * n, 0) {
    for (int x = 0; x < n; ++x) set(x, x);
  }

  bool leq(int x, int y) const { return rel[static_cast<size_t>(x) * n + y] != 0; }
  void set(int x, int y) { rel[static_cast<size_t>(x) * n + y] = 1; }
  void clear(int x, int y) { rel[static_cast<size_t>(x) * n + y] = 0; }

  bool operator==(const Poset& o) const = default;
};

/// Total self-map on a poset's carrier. Monotonicity is a checked
/// predicate, not a structural invariant.
struct EndoMap {
  std::vector<uint8_t> img;

  EndoMap() = default;
  explicit EndoMap(std::vector<uint8_t> img) : img(std::move(img)) {}

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }

  bool operator==(const EndoMap& o) const = default;
  auto operator<=>(const EndoMap& o) const = default;
};

EndoMap identity_map(int n);
EndoMap constant_map(int n, int value);

/// Checks the three order axioms and returns the poset; throws
/// NotReflexive / NotAntisymmetric / NotTransitive naming a witness pair.
Poset validate_poset(const std::vector<std::vector<bool>>& relation);

/// Same checks on an already-packed Poset value.
void check_poset(const Poset& p);

Poset dual(const Poset& p);

bool is_monotone(const EndoMap& f, const Poset& p);
bool pointwise_leq(const EndoMap& f, const EndoMap& g, const Poset& p);

/// compose(f, g)(x) = f(g(x)): the word "fg" applies g first.
EndoMap compose(const EndoMap& f, const EndoMap& g);

/// k-fold composition, k >= 1.
EndoMap power(const EndoMap& f, int k);

/// Monotone, idempotent, and id <= f pointwise.
bool is_closure(const EndoMap& f, const Poset& p);
/// Monotone, idempotent, and f <= id pointwise.
bool is_interior(const EndoMap& f, const Poset& p);

/// Shift on the carrier {u..v} (0-based indices into a map of size v+1):
/// k -> k+1 for u <= k < v, and v -> u; everything below u is fixed.
EndoMap circular_shift(int u, int v);

/// Poset JSON: {"n": <int>, "covers": [[a,b], ...]}; covers generate the
/// order by reflexive-transitive closure; a cycle is NotAntisymmetric.
Poset poset_from_json(const std::string& text);
std::string poset_to_json(const Poset& p);

/// EndoMap JSON: {"img": [<int>, ...]}.
EndoMap endomap_from_json(const std::string& text);
std::string endomap_to_json(const EndoMap& f);

/// Covering pairs (x, y): x < y with nothing strictly between.
std::vector<std::pair<int, int>> cover_pairs(const Poset& p);

}  // namespace opw
