#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "opw/kuratowski.hpp"
#include "opw/monoid.hpp"

using namespace opw;
using namespace opw::testutil;

namespace {

/// The canonical seven operator words, with "" standing for the identity.
std::vector<std::string> seven_words() {
  return {"", "c", "i", "ic", "ci", "ici", "cic"};
}

int block_of(const std::vector<std::vector<std::string>>& blocks,
             const std::string& w) {
  for (size_t b = 0; b < blocks.size(); ++b)
    for (const auto& x : blocks[b])
      if (x == w) return static_cast<int>(b);
  return -1;
}

}  // namespace

TEST_SUITE("monoid") {
  TEST_CASE("identity generators collapse to a single element") {
    Poset two = chain(2);
    std::vector<Generator> gens = {{'c', identity_map(2)}, {'i', identity_map(2)}};
    OperatorMonoid m = generate_monoid(two, gens, true);
    CHECK(m.size() == 1);
    CHECK(m.elements[0] == identity_map(2));
    CHECK(m.witness[0] == "");
  }

  TEST_CASE("constant generators on the 2-chain give three elements") {
    Poset two = chain(2);
    std::vector<Generator> gens = {{'c', constant_map(2, 1)},
                                   {'i', constant_map(2, 0)}};
    OperatorMonoid m = generate_monoid(two, gens, true);
    CHECK(m.size() == 3);
    CHECK(m.find(identity_map(2)) >= 0);
    CHECK(m.find(constant_map(2, 1)) >= 0);
    CHECK(m.find(constant_map(2, 0)) >= 0);
    CHECK(m.witness[m.find(constant_map(2, 1))] == "c");
    CHECK(m.witness[m.find(constant_map(2, 0))] == "i");
  }

  TEST_CASE("an idempotent generator without identity is a one-element semigroup") {
    Poset two = chain(2);
    std::vector<Generator> gens = {{'s', constant_map(2, 0)}};
    OperatorMonoid m = generate_monoid(two, gens, false);
    CHECK(m.size() == 1);
    CHECK(m.elements[0] == constant_map(2, 0));
  }

  TEST_CASE("witness words evaluate back to their elements") {
    Poset d = diamond();
    std::vector<Generator> gens = {{'c', map_of({1, 1, 3, 3})},
                                   {'i', map_of({0, 0, 2, 2})}};
    OperatorMonoid m = generate_monoid(d, gens, true);
    CHECK(m.size() <= 4 * 4 * 4 * 4);
    for (int k = 0; k < m.size(); ++k)
      CHECK(eval_word(m.witness[k], gens, d.n) == m.elements[k]);
  }

  TEST_CASE("composition table closes over the element list") {
    Poset three = chain(3);
    std::vector<Generator> gens = {{'c', map_of({0, 2, 2})},
                                   {'i', map_of({0, 0, 2})}};
    OperatorMonoid m = generate_monoid(three, gens, true);
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b) {
        int ab = m.table[a][b];
        REQUIRE(ab >= 0);
        REQUIRE(ab < m.size());
        CHECK(compose(m.elements[a], m.elements[b]) == m.elements[ab]);
      }
  }

  TEST_CASE("order matrix restates pointwise comparison") {
    Poset three = chain(3);
    std::vector<Generator> gens = {{'c', map_of({0, 2, 2})},
                                   {'i', map_of({0, 0, 2})}};
    OperatorMonoid m = generate_monoid(three, gens, true);
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b)
        CHECK((m.order[a][b] != 0) ==
              pointwise_leq(m.elements[a], m.elements[b], three));
  }

  TEST_CASE("eval_word folds right to left and rejects unknown letters") {
    Poset three = chain(3);
    std::vector<Generator> gens = {{'c', constant_map(3, 2)},
                                   {'i', map_of({0, 0, 2})}};
    // "ci" applies i first, then c
    CHECK(eval_word("ci", gens, 3) == compose(constant_map(3, 2), map_of({0, 0, 2})));
    CHECK(eval_word("", gens, 3) == identity_map(3));
    CHECK_THROWS_AS(eval_word("cx", gens, 3), Error);
  }

  TEST_CASE("element partition groups words with equal action") {
    Poset two = chain(2);
    std::vector<Generator> closure_only = {{'c', constant_map(2, 1)}};
    auto part = element_partition(two, closure_only, {"c", "cc"});
    CHECK(part == std::vector<std::vector<std::string>>{{"c", "cc"}});

    std::vector<Generator> on_point = {{'c', identity_map(1)},
                                       {'i', identity_map(1)}};
    auto one = element_partition(Poset(1), on_point, seven_words());
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 7);
  }

  TEST_CASE("an instance separating every word pair except ici=i exists") {
    // searched over closure/interior pairs on posets of up to 5 points;
    // target blocks: {id} {c} {i, ici} {ci} {ic} {cic}
    const auto words = seven_words();
    bool found = false;
    for (int n = 1; n <= 5 && !found; ++n) {
      for (const Poset& p : poset_classes(n)) {
        for (const EndoMap& c : closure_operators(p)) {
          for (const EndoMap& i : interior_operators(p)) {
            auto blocks = element_partition(p, {{'c', c}, {'i', i}}, words);
            if (blocks.size() == 6 &&
                block_of(blocks, "i") == block_of(blocks, "ici")) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
    }
    CHECK(found);
  }

  TEST_CASE("hasse_edges returns covers of the element order") {
    Poset three = chain(3);
    std::vector<Generator> gens = {{'c', constant_map(3, 2)},
                                   {'i', constant_map(3, 0)}};
    OperatorMonoid m = generate_monoid(three, gens, true);
    REQUIRE(m.size() == 3);
    auto edges = hasse_edges(m.order);
    CHECK(edges.size() == 2);
  }

  TEST_CASE("monoid size never exceeds the count of all self-maps") {
    for (const Poset& p : poset_classes(3)) {
      auto maps = monotone_endomaps(p);
      for (size_t a = 0; a < maps.size(); a += 3)
        for (size_t b = 0; b < maps.size(); b += 3) {
          OperatorMonoid m =
              generate_monoid(p, {{'c', maps[a]}, {'i', maps[b]}}, true);
          CHECK(m.size() <= 27);
        }
    }
  }

  TEST_CASE("dot and json exports mention every element") {
    Poset two = chain(2);
    OperatorMonoid m = generate_monoid(
        two, {{'c', constant_map(2, 1)}, {'i', constant_map(2, 0)}}, true);
    std::string dot = monoid_to_dot(m);
    std::string json = monoid_to_json(m);
    CHECK(dot.find("digraph") != std::string::npos);
    for (int k = 0; k < m.size(); ++k) {
      std::string label = m.witness[k].empty() ? "id" : m.witness[k];
      CHECK(dot.find(label) != std::string::npos);
      CHECK(json.find(label) != std::string::npos);
    }
  }
}
