#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opw/monoid.hpp"
#include "opw/poset.hpp"
#include "opw/pseudo.hpp"

namespace opw {

/// A finite distributive lattice with its operation tables and Heyting
/// implication. Finite means bounded, so top and bottom always exist.
struct FiniteFrame {
  Poset poset;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> impl;
  int bottom = -1;
  int top = -1;
};

/// Builds the tables, throwing NotALattice when a pair lacks a meet or
/// join and NotDistributive on a failing triple.
FiniteFrame check_frame(const Poset& p);

/// All nuclei: inflationary, idempotent, meet-preserving self-maps.
/// Ascending image order.
std::vector<EndoMap> nuclei(const FiniteFrame& f);

/// Sublocales ordered by inclusion; element k is the sublocale of
/// fixpoints of maps[k], and inclusion reverses the pointwise nucleus
/// order. The dual order is verified to be a frame.
struct SublocaleLattice {
  FiniteFrame frame;
  std::vector<EndoMap> maps;
  Poset order;
  int whole = -1;  // identity nucleus, the top sublocale
  int empty = -1;  // constant-top nucleus, the bottom sublocale
};

SublocaleLattice sublocale_lattice(const FiniteFrame& f);

/// Closure, interior, and supplement on the sublocale lattice: smallest
/// closed sublocale above, largest open sublocale below, and the smallest
/// complement under sublocale join.
struct LocalicOps {
  SublocaleLattice lat;
  EndoMap c;
  EndoMap i;
  EndoMap neg;
  std::vector<int> opens;    // indices of the open sublocales, one per frame element
  std::vector<int> closeds;  // indices of the closed sublocales, one per frame element
};

LocalicOps localic_operators(const FiniteFrame& f);

/// Composition closure of {c, i, -} with identity on the sublocale order.
OperatorMonoid localic_monoid(const FiniteFrame& f);

/// The sublocale lattice as a pseudocomplement instance: interior from the
/// open sublocales, negation from the supplement. Validation runs in
/// make_pseudo_instance, so a throw here refutes the construction.
PseudoInstance sublocale_pseudo_instance(const FiniteFrame& f);

/// Streams every frame on canonical posets of 1..max_points points,
/// skipping posets that fail the lattice or distributivity test.
void for_each_frame(int max_points, const std::function<void(const FiniteFrame&)>& fn);

}  // namespace opw
