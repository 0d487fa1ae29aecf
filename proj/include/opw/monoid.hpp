#pragma once

#include <string>
#include <vector>

#include "opw/poset.hpp"

namespace opw {

/// Named generator for monoid generation; names are single letters drawn
/// from one alphabet whose listed order is the lexicographic tie-break.
struct Generator {
  char name;
  EndoMap map;
};

/// Composition closure of generator maps on a poset: distinct element maps,
/// length-lex-least witness words, full composition table, pointwise order.
struct OperatorMonoid {
  std::vector<EndoMap> elements;
  std::vector<std::string> witness;
  std::vector<std::vector<int>> table;    // table[i][j] = index of elements[i] o elements[j]
  std::vector<std::vector<uint8_t>> order;  // order[i][j] = elements[i] <= elements[j] pointwise

  int size() const { return static_cast<int>(elements.size()); }
  int find(const EndoMap& f) const;  // -1 if absent
};

/// Breadth-first closure by word length with length-lex tie-break. With
/// include_identity, id is element 0 with empty witness.
OperatorMonoid generate_monoid(const Poset& p, const std::vector<Generator>& generators,
                               bool include_identity);

/// Evaluates a word over the monoid's generator alphabet on poset p,
/// rightmost letter applied first. Empty word is the identity.
EndoMap eval_word(const std::string& word, const std::vector<Generator>& generators, int n);

/// Groups words by pointwise equality of their induced maps; blocks and
/// their contents are sorted canonically (length-lex inside each block,
/// blocks by their least word).
std::vector<std::vector<std::string>> element_partition(const Poset& p,
                                                        const std::vector<Generator>& generators,
                                                        const std::vector<std::string>& words);

/// Covering pairs of a partial order given as a boolean matrix; throws
/// NotAPartialOrder if the matrix is not reflexive/antisymmetric/transitive.
std::vector<std::pair<int, int>> hasse_edges(const std::vector<std::vector<uint8_t>>& order);

std::string monoid_to_dot(const OperatorMonoid& m);
std::string monoid_to_json(const OperatorMonoid& m);

}  // namespace opw
