#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "opw/poset.hpp"

using namespace opw;
using namespace opw::testutil;

namespace {

template <class F>
Err code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  FAIL("expected a typed error");
  return Err::BadInput;
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("validate_poset accepts orders and names the broken axiom") {
    CHECK(validate_poset({{true}}).n == 1);

    Poset two = validate_poset({{true, true}, {false, true}});
    CHECK(two.leq(0, 1));
    CHECK_FALSE(two.leq(1, 0));

    CHECK(code_of([] { validate_poset({{true, true}, {true, true}}); }) ==
          Err::NotAntisymmetric);
    CHECK(code_of([] { validate_poset({{false, false}, {false, true}}); }) ==
          Err::NotReflexive);
    CHECK(code_of([] {
            validate_poset({{true, true, false},
                            {false, true, true},
                            {false, false, true}});
          }) == Err::NotTransitive);
    CHECK(code_of([] { validate_poset({{true, true}, {true}}); }) ==
          Err::SizeMismatch);
  }

  TEST_CASE("error witnesses point at an offending pair") {
    try {
      validate_poset({{true, true}, {true, true}});
      FAIL("expected a throw");
    } catch (const Error& e) {
      CHECK(e.code == Err::NotAntisymmetric);
      bool names_pair = (e.a == 0 && e.b == 1) || (e.a == 1 && e.b == 0);
      CHECK(names_pair);
    }
  }

  TEST_CASE("dual reverses the order and is an involution") {
    Poset two = chain(2);
    Poset r = dual(two);
    CHECK(r.leq(1, 0));
    CHECK_FALSE(r.leq(0, 1));
    CHECK(dual(r) == two);

    CHECK(dual(antichain(3)) == antichain(3));

    Poset vee(3);  // 0 below 1 and 2
    vee.set(0, 1);
    vee.set(0, 2);
    Poset wedge = dual(vee);
    CHECK(wedge.leq(1, 0));
    CHECK(wedge.leq(2, 0));
    CHECK_FALSE(wedge.leq(0, 1));
    CHECK(dual(dual(diamond())) == diamond());
  }

  TEST_CASE("monotonicity: identity and constants always, order-breakers never") {
    Poset two = chain(2);
    CHECK(is_monotone(identity_map(2), two));
    CHECK(is_monotone(constant_map(2, 0), two));
    CHECK(is_monotone(constant_map(2, 1), two));
    CHECK_FALSE(is_monotone(map_of({1, 0}), two));
    CHECK(is_monotone(map_of({1, 0}), antichain(2)));
    CHECK(code_of([&] { is_monotone(identity_map(3), two); }) == Err::SizeMismatch);
  }

  TEST_CASE("monotone on a poset iff monotone on its dual") {
    for (const Poset& p : {chain(3), diamond(), antichain(3)}) {
      Poset q = dual(p);
      for (const EndoMap& f : all_maps(p.n))
        CHECK(is_monotone(f, p) == is_monotone(f, q));
    }
  }

  TEST_CASE("pointwise_leq compares images in the given order") {
    Poset two = chain(2);
    CHECK(pointwise_leq(constant_map(2, 0), identity_map(2), two));
    CHECK(pointwise_leq(identity_map(2), constant_map(2, 1), two));
    CHECK_FALSE(pointwise_leq(constant_map(2, 1), identity_map(2), two));
    CHECK(pointwise_leq(identity_map(2), identity_map(2), two));
  }

  TEST_CASE("compose applies the right factor first") {
    EndoMap f = map_of({0, 0, 1});
    EndoMap g = constant_map(3, 1);
    CHECK(compose(f, g) == constant_map(3, 0));
    CHECK(compose(g, f) == constant_map(3, 1));
  }

  TEST_CASE("compose is associative") {
    auto maps = all_maps(3);
    for (const EndoMap& f : maps)
      for (const EndoMap& g : maps)
        for (const EndoMap& h : maps)
          CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }

  TEST_CASE("power iterates composition") {
    EndoMap f = map_of({0, 0, 2});
    CHECK(power(f, 1) == f);
    CHECK(power(f, 2) == f);
    CHECK(power(f, 7) == f);
    CHECK(power(identity_map(4), 5) == identity_map(4));
    for (const EndoMap& g : all_maps(3))
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
          CHECK(power(g, a + b) == compose(power(g, a), power(g, b)));
  }

  TEST_CASE("closure and interior recognizers") {
    Poset two = chain(2);
    CHECK(is_closure(identity_map(2), two));
    CHECK(is_interior(identity_map(2), two));
    CHECK(is_closure(constant_map(2, 1), two));
    CHECK_FALSE(is_interior(constant_map(2, 1), two));
    CHECK(is_interior(constant_map(2, 0), two));
    CHECK_FALSE(is_closure(constant_map(2, 0), two));

    Poset d = diamond();
    CHECK(is_closure(constant_map(4, 3), d));
    // inflationary and monotone but not idempotent
    EndoMap step = map_of({1, 3, 3, 3});
    CHECK(is_monotone(step, d));
    CHECK(pointwise_leq(identity_map(4), step, d));
    CHECK_FALSE(is_closure(step, d));
  }

  TEST_CASE("every closure on the dual is an interior on the original") {
    for (const Poset& p : {chain(3), diamond()}) {
      Poset q = dual(p);
      for (const EndoMap& f : all_maps(p.n))
        CHECK(is_closure(f, q) == is_interior(f, p));
    }
  }

  TEST_CASE("circular_shift rotates the tail segment") {
    EndoMap s = circular_shift(1, 4);
    CHECK(s == map_of({0, 2, 3, 4, 1}));
    CHECK(circular_shift(0, 2) == map_of({1, 2, 0}));
    CHECK(code_of([] { circular_shift(3, 3); }) == Err::BadRange);

    EndoMap sigma = circular_shift(0, 3);  // 4-cycle
    CHECK(power(sigma, 5) == sigma);
    for (int k = 2; k <= 4; ++k) CHECK(power(sigma, k) != sigma);
  }

  TEST_CASE("poset json round-trips bit-exactly") {
    for (const Poset& p : {chain(3), diamond(), antichain(2)}) {
      std::string text = poset_to_json(p);
      CHECK(poset_from_json(text) == p);
      CHECK(poset_to_json(poset_from_json(text)) == text);
    }
    CHECK(code_of([] { poset_from_json(R"({"n":2,"covers":[[0,1],[1,0]]})"); }) ==
          Err::NotAntisymmetric);
    CHECK(code_of([] { poset_from_json(R"({"n":2,"covers":[[0,5]]})"); }) ==
          Err::BadRange);
    CHECK(code_of([] { poset_from_json("not json"); }) == Err::BadInput);
  }

  TEST_CASE("endomap json round-trips bit-exactly") {
    EndoMap f = map_of({2, 0, 1});
    std::string text = endomap_to_json(f);
    CHECK(endomap_from_json(text) == f);
    CHECK(endomap_to_json(endomap_from_json(text)) == text);
    CHECK(code_of([] { endomap_from_json(R"({"img":[0,9]})"); }) == Err::BadRange);
  }

  TEST_CASE("cover_pairs lists exactly the covering relation") {
    CHECK(cover_pairs(chain(3)) ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(cover_pairs(diamond()).size() == 4);
    CHECK(cover_pairs(antichain(3)).empty());
  }
}
