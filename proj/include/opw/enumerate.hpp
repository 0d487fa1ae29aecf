#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opw/poset.hpp"

namespace opw {

/// Byte string identifying a poset up to isomorphism: equal codes iff
/// isomorphic. Totally ordered; enumeration output is sorted by it.
struct CanonicalCode {
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

/// Lexicographically least relation matrix over all relabelings, found by
/// branch-and-bound over permutation prefixes.
CanonicalCode canonical_code(const Poset& p);

/// Same value computed by walking every permutation and keeping the least
/// matrix. Test-side cross-check for canonical_code; factorial cost.
CanonicalCode canonical_code_by_search(const Poset& p);

/// The relabeling of p whose relation matrix is the canonical one.
Poset canonical_form(const Poset& p);

/// Automorphism group of p, as permutations of the carrier.
std::vector<std::vector<uint8_t>> automorphisms(const Poset& p);

inline constexpr int kMaxEnumPoints = 10;

/// All n-point posets, one canonical representative per isomorphism class,
/// sorted by CanonicalCode. Cached after the first call.
const std::vector<Poset>& poset_classes(int n);

/// Streams poset_classes(1..max_points) in size-major order. The index
/// range per size is exposed by poset_classes for parallel splitting.
void for_each_poset(int max_points, const std::function<void(const Poset&)>& fn);

/// All monotone self-maps of p satisfying pred, in ascending image order.
/// Enumeration assigns points in index order, pruning each point's
/// candidates against already-assigned comparable points.
void enumerate_monotone_endomaps(const Poset& p,
                                 const std::function<bool(const EndoMap&)>& pred,
                                 const std::function<void(const EndoMap&)>& fn);

/// Convenience: materialized list, no predicate.
std::vector<EndoMap> monotone_endomaps(const Poset& p);

}  // namespace opw
