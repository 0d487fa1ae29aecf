#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "opw/enumerate.hpp"
#include "opw/poset.hpp"

namespace opw {

/// The seven closure/interior words, fixed order id < i < c < ic < ci < ici < cic.
const std::array<std::string, 7>& k_words();

/// Partition of the seven K-words as block ids in first-occurrence order
/// (block[0] == 0 always). Equal partitions iff equal vectors.
using KPartition = std::array<int, 7>;

struct KuratowskiLabel {
  std::string name;      // one of 1, 2, 2d, 3, 4, 5, 5d, 6, 6d, 7, 8, 8d, 9, 10, 10d, 11, 12, 13
  std::string dual_name;
  KPartition partition;
  int cardinality;       // block count
};

/// The 18-entry catalog: each label's defining equations closed into a
/// congruence of the abstract 7-element composition table, with comparable
/// identified words also collapsing everything between them. Built once at
/// startup; pairwise distinctness of the partitions is asserted then.
const std::vector<KuratowskiLabel>& kuratowski_catalog();

/// Composition table of the abstract 7-element monoid, table[a][b] = a o b.
const std::array<std::array<int, 7>, 7>& k_table();

/// Abstract order among the seven words (holds pointwise in every instance).
const std::array<std::array<uint8_t, 7>, 7>& k_order();

/// Partition of the seven words by pointwise equality on the instance.
KPartition k_partition(const Poset& p, const EndoMap& c, const EndoMap& i);

/// Matches the instance's partition against the catalog. Throws NotAClosure
/// / NotAnInterior on bad maps and Unclassified when the partition is not in
/// the catalog (a bug signal, never swallowed).
const KuratowskiLabel& classify(const Poset& p, const EndoMap& c, const EndoMap& i);

/// All closure operators on p, each determined by its fixpoint set; ascending
/// fixpoint-mask order. Interiors dually.
std::vector<EndoMap> closure_operators(const Poset& p);
std::vector<EndoMap> interior_operators(const Poset& p);

struct LabelWitness {
  std::string label;
  Poset poset;
  EndoMap c;
  EndoMap i;
};

struct RealizeReport {
  std::vector<LabelWitness> found;      // sorted by label catalog order
  std::vector<std::string> unrealized;  // labels with no witness within budget
};

/// Searches posets of 1..max_points points (canonical order) for the least
/// witness of every catalog label; stops early once all 18 are found.
RealizeReport realize_labels(int max_points, long long max_instances = -1);

std::string realize_report_to_json(const RealizeReport& r);

}  // namespace opw
