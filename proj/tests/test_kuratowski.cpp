#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "opw/kuratowski.hpp"
#include "opw/monoid.hpp"

using namespace opw;
using namespace opw::testutil;

namespace {

/// The seven words in catalog order, with "" for the identity so they can
/// be evaluated over the {c, i} generator alphabet.
std::vector<std::string> evaluable_words() {
  return {"", "i", "c", "ic", "ci", "ici", "cic"};
}

int block_of(const std::vector<std::vector<std::string>>& blocks,
             const std::string& w) {
  for (size_t b = 0; b < blocks.size(); ++b)
    for (const auto& x : blocks[b])
      if (x == w) return static_cast<int>(b);
  return -1;
}

}  // namespace

TEST_SUITE("kuratowski") {
  TEST_CASE("the seven words come in the fixed order") {
    const auto& w = k_words();
    CHECK(w == std::array<std::string, 7>{"id", "i", "c", "ic", "ci", "ici", "cic"});
  }

  TEST_CASE("catalog holds 18 labels with distinct partitions and dual closure") {
    const auto& cat = kuratowski_catalog();
    REQUIRE(cat.size() == 18);
    std::set<std::string> names;
    std::set<KPartition> partitions;
    std::map<std::string, const KuratowskiLabel*> by_name;
    for (const auto& label : cat) {
      names.insert(label.name);
      partitions.insert(label.partition);
      by_name[label.name] = &label;
      std::set<int> blocks(label.partition.begin(), label.partition.end());
      CHECK(label.cardinality == static_cast<int>(blocks.size()));
    }
    CHECK(names == std::set<std::string>{"1", "2", "2d", "3", "4", "5", "5d", "6",
                                         "6d", "7", "8", "8d", "9", "10", "10d",
                                         "11", "12", "13"});
    CHECK(partitions.size() == 18);
    for (const auto& label : cat) {
      REQUIRE(by_name.count(label.dual_name) == 1);
      CHECK(by_name.at(label.dual_name)->dual_name == label.name);
    }
  }

  TEST_CASE("identity operators land in the one-block label") {
    CHECK(classify(Poset(1), identity_map(1), identity_map(1)).name == "13");
    Poset two = chain(2);
    CHECK(classify(two, identity_map(2), identity_map(2)).name == "13");
  }

  TEST_CASE("constant closure against constant interior on the 2-chain") {
    Poset two = chain(2);
    const KuratowskiLabel& L = classify(two, constant_map(2, 1), constant_map(2, 0));
    CHECK(L.name == "11");
    CHECK(L.cardinality == 3);
    CHECK(k_partition(two, constant_map(2, 1), constant_map(2, 0)) ==
          KPartition{0, 1, 2, 1, 2, 1, 2});
  }

  TEST_CASE("identity closure with collapsing interior on the 2-chain") {
    Poset two = chain(2);
    const KuratowskiLabel& L = classify(two, identity_map(2), constant_map(2, 0));
    CHECK(L.name == "10");
    CHECK(L.dual_name == "10d");
    CHECK(classify(two, constant_map(2, 1), identity_map(2)).name == "10d");
  }

  TEST_CASE("classify rejects maps that are not closure or interior") {
    Poset two = chain(2);
    CHECK_THROWS_AS(classify(two, constant_map(2, 0), constant_map(2, 0)), Error);
    CHECK_THROWS_AS(classify(two, identity_map(2), constant_map(2, 1)), Error);
  }

  TEST_CASE("partition equals the generic word partition of the monoid") {
    const auto words = evaluable_words();
    for (const Poset& p : poset_classes(3))
      for (const EndoMap& c : closure_operators(p))
        for (const EndoMap& i : interior_operators(p)) {
          auto blocks = element_partition(p, {{'c', c}, {'i', i}}, words);
          KPartition kp = k_partition(p, c, i);
          for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
              REQUIRE((block_of(blocks, words[a]) == block_of(blocks, words[b])) ==
                      (kp[a] == kp[b]));
        }
  }

  TEST_CASE("classification is order-dual covariant") {
    for (int n = 1; n <= 3; ++n)
      for (const Poset& p : poset_classes(n)) {
        Poset q = dual(p);
        for (const EndoMap& c : closure_operators(p))
          for (const EndoMap& i : interior_operators(p))
            CHECK(classify(q, i, c).name == classify(p, c, i).dual_name);
      }
  }

  TEST_CASE("classification is relabeling-invariant") {
    Poset two = chain(2);
    Poset swapped(2);
    swapped.set(1, 0);
    CHECK(classify(swapped, constant_map(2, 0), constant_map(2, 1)).name ==
          classify(two, constant_map(2, 1), constant_map(2, 0)).name);
  }

  TEST_CASE("abstract order holds pointwise in every instance") {
    const auto& ord = k_order();
    const auto words = evaluable_words();
    for (const Poset& p : poset_classes(3))
      for (const EndoMap& c : closure_operators(p))
        for (const EndoMap& i : interior_operators(p)) {
          std::vector<Generator> gens = {{'c', c}, {'i', i}};
          for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
              if (ord[a][b])
                CHECK(pointwise_leq(eval_word(words[a], gens, p.n),
                                    eval_word(words[b], gens, p.n), p));
        }
  }

  TEST_CASE("abstract composition table matches instance composition") {
    const auto& table = k_table();
    const auto words = evaluable_words();
    for (const Poset& p : poset_classes(3))
      for (const EndoMap& c : closure_operators(p))
        for (const EndoMap& i : interior_operators(p)) {
          std::vector<Generator> gens = {{'c', c}, {'i', i}};
          for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
              CHECK(compose(eval_word(words[a], gens, p.n),
                            eval_word(words[b], gens, p.n)) ==
                    eval_word(words[table[a][b]], gens, p.n));
        }
  }

  TEST_CASE("closure_operators and interior_operators are exact and dual") {
    for (const Poset& p : {chain(2), chain(3), diamond()}) {
      auto closures = closure_operators(p);
      for (const EndoMap& c : closures) CHECK(is_closure(c, p));
      int brute = 0;
      for (const EndoMap& f : all_maps(p.n))
        if (is_closure(f, p)) ++brute;
      CHECK(static_cast<int>(closures.size()) == brute);
      CHECK(interior_operators(p).size() == closure_operators(dual(p)).size());
    }
  }

  TEST_CASE("small witness search finds the two-point labels immediately") {
    RealizeReport r = realize_labels(2);
    std::set<std::string> found;
    for (const auto& w : r.found) {
      found.insert(w.label);
      CHECK(classify(w.poset, w.c, w.i).name == w.label);
      CHECK(w.poset.n <= 2);
    }
    CHECK(found == std::set<std::string>{"10", "10d", "11", "13"});
    CHECK(r.unrealized.size() == 14);
  }

  TEST_CASE("witness search at six points realizes the full catalog") {
    RealizeReport r = realize_labels(6);
    CHECK(r.unrealized.empty());
    REQUIRE(r.found.size() == 18);
    std::map<std::string, int> size_of;
    for (const auto& w : r.found) {
      CHECK(classify(w.poset, w.c, w.i).name == w.label);
      size_of[w.label] = w.poset.n;
    }
    // minimal witness sizes, recorded from the exhaustive run
    CHECK(size_of["13"] == 1);
    CHECK(size_of["11"] == 2);
    CHECK(size_of["1"] == 6);
    CHECK(size_of["2"] == 5);
    CHECK(size_of["2d"] == 5);
    CHECK(size_of["4"] == 5);
  }

  TEST_CASE("json report lists every witness") {
    RealizeReport r = realize_labels(2);
    std::string json = realize_report_to_json(r);
    CHECK(json.find("\"10d\"") != std::string::npos);
    CHECK(json.find("unrealized") != std::string::npos);
  }
}
