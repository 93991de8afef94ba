#include "doctest.h"
#include "wiman/field.hpp"
#include "wiman/poly.hpp"

using namespace wiman;

TEST_SUITE_BEGIN("field");

TEST_CASE("prime field construction") {
  Field f = Field::gf(19);
  CHECK(f.p() == 19);
  CHECK(f.k() == 1);
  CHECK(f.size() == 19);
  CHECK(f.modulus() == std::vector<u32>{0, 1});
  Field f2 = Field::gf(2);
  CHECK(f2.size() == 2);
}

TEST_CASE("deterministic modulus is the first irreducible in low-to-high order") {
  Field f = Field::gf(19, 2);
  // oracle: exhaustive search over monic quadratics, irreducibility = no root
  std::vector<u32> expect;
  for (u32 c0 = 0; c0 < 19 && expect.empty(); ++c0) {
    for (u32 c1 = 0; c1 < 19 && expect.empty(); ++c1) {
      bool has_root = false;
      for (u32 x = 0; x < 19; ++x)
        if ((x * x + c1 * x + c0) % 19 == 0) has_root = true;
      if (!has_root) expect = {c0, c1, 1};
    }
  }
  CHECK(f.modulus() == expect);
  CHECK(f.modulus() == std::vector<u32>{1, 0, 1});  // t^2 + 1: -1 is a non-residue mod 19
  // repeated construction yields the same field
  CHECK(Field::gf(19, 2) == f);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(Field::gf(4), domain_error);
  CHECK_THROWS_AS(Field::gf(1), domain_error);
  CHECK_THROWS_AS(Field::gf(2, 0), domain_error);
  CHECK_THROWS_AS(Field::gf(2, 63), capped_error);   // 2^63 above the machine bound
  CHECK_THROWS_AS(Field::gf(1048583), capped_error);  // prime above the 2^20 cap
}

TEST_CASE("field laws on random samples") {
  for (Field f : {Field::gf(19), Field::gf(19, 2), Field::gf(7, 2), Field::gf(3)}) {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
      Fe a = f.sample(rng), b = f.sample(rng), c = f.sample(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }
}

TEST_CASE("multiplicative group order via a sampled generator") {
  Field f = Field::gf(19, 2);
  u64 n = f.size() - 1;  // 360
  // find a generator and pin its order down exactly
  Fe g = f.zero();
  for (u64 i = 1; i < f.size(); ++i) {
    Fe cand = f.element_by_index(i);
    bool gen = true;
    for (u64 r : {2, 3, 5}) {  // prime divisors of 360
      if (cand.pow(n / r).is_one()) gen = false;
    }
    if (gen) {
      g = cand;
      break;
    }
  }
  REQUIRE(!g.is_zero());
  CHECK(g.pow(n).is_one());
  CHECK_FALSE(g.pow(180).is_one());
  CHECK_FALSE(g.pow(120).is_one());
  CHECK_FALSE(g.pow(72).is_one());

  SUBCASE("frobenius moves a generator") {
    CHECK(g.frobenius(19) != g);  // its order 360 exceeds 18
    CHECK(g.frobenius(19).frobenius(19) == g);
  }
}

TEST_CASE("frobenius") {
  Field f19 = Field::gf(19);
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    Fe x = f19.sample(rng);
    CHECK(x.frobenius(19) == x);  // prime field is fixed
  }
  Field f = Field::gf(19, 2);
  for (int i = 0; i < 50; ++i) {
    Fe x = f.sample(rng), y = f.sample(rng);
    CHECK((x + y).frobenius(19) == x.frobenius(19) + y.frobenius(19));
    CHECK((x * y).frobenius(19) == x.frobenius(19) * y.frobenius(19));
  }
  CHECK_THROWS_AS(f.one().frobenius(6), domain_error);  // 6 is not a power of 19
}

TEST_CASE("element enumeration round-trips") {
  Field f = Field::gf(5, 3);
  for (u64 i : {u64{0}, u64{1}, u64{37}, f.size() - 1}) {
    CHECK(f.index_of(f.element_by_index(i)) == i);
  }
  CHECK_THROWS_AS(f.element_by_index(f.size()), domain_error);
}

TEST_CASE("embedding is a field homomorphism") {
  Field src = Field::gf(19, 2), dst = Field::gf(19, 4);
  FieldHom h = embed_hom(src, dst);
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    Fe a = src.sample(rng), b = src.sample(rng);
    CHECK(h(a + b) == h(a) + h(b));
    CHECK(h(a * b) == h(a) * h(b));
  }
  CHECK(h(src.one()).is_one());
  CHECK_THROWS_AS(embed_hom(Field::gf(19, 2), Field::gf(19, 3)), domain_error);
}

TEST_SUITE_END();
