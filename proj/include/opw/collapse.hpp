#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "opw/chittenden.hpp"
#include "opw/diagram.hpp"
#include "opw/poset.hpp"

namespace opw {

/// Monotone pair s <= t with s^m = s and t^n = t on a finite poset.
struct Instance {
  Poset poset;
  EndoMap s;
  EndoMap t;
  Params params;
};

Instance make_instance(const Poset& p, const EndoMap& s, const EndoMap& t, const Params& params);

/// Set of unordered wset-index pairs identified pointwise by some instance,
/// stored sorted as (lo, hi) with lo < hi.
struct Collapse {
  std::vector<std::pair<int, int>> pairs;
  bool operator==(const Collapse&) const = default;
  auto operator<=>(const Collapse&) const = default;
};

/// Induced map of every wset element on the instance, in wset order.
std::vector<EndoMap> induced_maps(const Instance& inst);

Collapse satisfied_collapse(const Instance& inst);

/// Ordered wset-index pairs (a, b) with the induced map of a pointwise
/// below the induced map of b. Reflexive; always contains (s, t).
std::vector<std::pair<int, int>> satisfied_order(const Instance& inst);

/// "s=ss" notation over wset words; pairs joined by ", " inside braces.
std::string collapse_to_string(const Collapse& c, const Params& p);

/// Contains both the s=ss and t=tt identifications.
bool satisfies_c22(const Collapse& c, const Params& p);

enum class CellKind { Gray, Plain, Italic, Bold, Blank };

/// One equation class of the 27-class diagram: a label, the identified
/// wset(3,3) pairs, and the parity of the class per the length rule.
struct CollapseClass {
  std::string label;
  std::vector<std::pair<int, int>> equations;
  bool even = false;
};

/// Cell of the conjunction table at (row, col). Gray: the column class
/// implies the row class. Plain v: row and col together are equivalent to
/// v. Italic v: row and col are equivalent to row and v. Bold v: row and
/// col are equivalent to v and col. Blank cells carry no claim.
struct TableCell {
  std::string row;
  std::string col;
  CellKind kind;
  std::string value;
};

struct ClassCatalog33 {
  std::vector<CollapseClass> classes;
  std::vector<std::pair<std::string, std::string>> arrows;  // source implies target
  std::vector<TableCell> table;

  int class_index(const std::string& label) const;  // -1 if absent
};

/// Parses the checked-in class catalog; equations arrive as word pairs and
/// are mapped to wset(3,3) indices. Throws BadInput on malformed data and
/// PreconditionFailed when a stored parity tag contradicts the length rule.
ClassCatalog33 classcat33_from_json(const std::string& text);

struct CoherenceReport {
  std::vector<std::string> flags;
  bool empty() const { return flags.empty(); }
};

/// Flags (a) a class with a strict subset of its equations holding, (b) an
/// arrow whose source holds and target fails, (c) a table cell whose stated
/// equivalence fails on this instance. Expected empty on valid instances.
CoherenceReport check_class_coherence(const Instance& inst, const ClassCatalog33& catalog);

struct SearchWitness {
  Poset poset;
  EndoMap s;
  EndoMap t;
};

struct CollapseEntry {
  Collapse collapse;
  SearchWitness witness;
};

enum class SearchMode { Witness, Exhaustive };

struct SearchReport {
  Params params;
  std::vector<CollapseEntry> collapses;  // sorted by collapse
  bool complete = true;
  long long instances = 0;
  int max_points = 0;
};

/// Sweeps canonical posets of 1..max_points points. The witness kept per
/// collapse is the first in (size, canonical code, t, s) order, which the
/// chunked merge makes independent of the number of workers. Witness mode
/// stops at a chunk boundary once expect_count distinct collapses exist and
/// the exhaustive floor of min(5, max_points) points has been swept.
SearchReport search_collapses(const Params& params, int max_points, SearchMode mode,
                              int jobs = 1, int expect_count = -1);

std::string search_report_to_json(const SearchReport& r);
SearchReport search_report_from_json(const std::string& text);

/// Containment order of the pair-sets as a diagram; node names come from
/// collapse_to_string.
DiagramCatalog containment_order(const std::vector<Collapse>& collapses, const Params& p);

/// All valid instances on one poset, t enumerated before s; deterministic
/// order (t ascending, then s ascending).
void for_each_instance(const Params& params, const Poset& p,
                       const std::function<void(const Instance&)>& fn);

}  // namespace opw
