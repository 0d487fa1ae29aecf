#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "opw/diagram.hpp"
#include "opw/monoid.hpp"
#include "opw/poset.hpp"

namespace opw {

/// Interior operator plus a Galois pseudocomplement on one poset. The
/// derived closure b abbreviates -i- everywhere.
struct PseudoInstance {
  Poset poset;
  EndoMap i;
  EndoMap neg;
};

/// Checks leq(a, f(x)) iff leq(x, f(a)) for all pairs; a passing map is
/// also asserted antitone, which the biconditional forces.
bool is_pseudocomplement_op(const Poset& p, const EndoMap& f);

/// Throws NotAnInterior / InvalidInstance (Galois violated) / SizeMismatch.
PseudoInstance make_pseudo_instance(const Poset& p, const EndoMap& i, const EndoMap& neg);

/// The 31 reduced operator words over {i, -} with b kept as a label; "id"
/// names the identity. Upper component first (17), then lower (14).
const std::vector<std::string>& m_words();

/// "id" becomes the empty word, each b becomes -i-.
std::string expand_b(const std::string& word);

/// Rightmost letter applied first after b-expansion.
EndoMap eval_m_word(const std::string& word, const EndoMap& i, const EndoMap& neg);

/// Composition closure of {i, -} with identity; at most 31 elements.
OperatorMonoid generate_m(const PseudoInstance& inst);

struct CheckReport {
  std::vector<std::string> violations;
  bool empty() const { return violations.empty(); }
};

/// Every solid catalog edge must hold pointwise; also asserts --- = - and
/// that -- and b are closures. Violations are theorems failing, so the
/// report is expected empty.
CheckReport verify_edges(const PseudoInstance& inst, const DiagramCatalog& fig2);

/// The six inequality pairs drawn dashed: (lower-alleged, upper-alleged),
/// refutable only by a counterexample instance.
const std::vector<std::pair<std::string, std::string>>& dashed_pairs();

struct SearchBudget {
  int max_points = 4;
  long long max_instances = -1;  // negative: unbounded
};

struct DashedWitness {
  std::string lower;
  std::string upper;
  bool found = false;
  Poset poset;
  EndoMap i;
  EndoMap neg;
  int point = -1;
};

struct DashedReport {
  std::vector<DashedWitness> results;  // one per dashed pair, catalog order
  bool complete = false;
  long long instances = 0;
};

/// Finds, per dashed pair, the first instance in (size, interior,
/// pseudocomplement) order where the lower word exceeds the upper word at
/// some point. Partial results when the budget runs out.
DashedReport search_dashed_counterexamples(const SearchBudget& budget);

struct RedundancyItem {
  int lhs;  // index into dashed_pairs(): the inequality assumed to hold
  int rhs;  // the inequality that must fail
  bool found = false;
  Poset poset;
  EndoMap i;
  EndoMap neg;
};

struct RedundancyReport {
  std::vector<RedundancyItem> items;  // all 30 ordered pairs
  bool complete = false;
  long long instances = 0;
};

/// Disproves every implication between distinct dashed inequalities: an
/// instance where the left side holds pointwise everywhere and the right
/// side fails somewhere.
RedundancyReport implication_redundancy_check(int max_points = 4);

/// The nine multiplications that collapse the catalog under i = --i.
const std::vector<std::pair<std::string, std::string>>& localic_identities();

/// Requires i = --i pointwise (PreconditionFailed otherwise), then checks
/// the nine identities, the 21-block bound on the m_words partition, and
/// that every m_word's operator is realized by some quotient_words entry.
CheckReport localic_quotient_check(const PseudoInstance& inst,
                                   const std::vector<std::string>& quotient_words);

/// All Galois pseudocomplement operators on p, ascending image order.
std::vector<EndoMap> pseudocomplement_ops(const Poset& p);

/// Streams every valid instance on canonical posets of 1..max_points
/// points: poset order, then interiors, then pseudocomplements.
void for_each_pseudo_instance(int max_points, const std::function<void(const PseudoInstance&)>& fn);

std::string dashed_report_to_json(const DashedReport& r);
std::string redundancy_report_to_json(const RedundancyReport& r);

}  // namespace opw
