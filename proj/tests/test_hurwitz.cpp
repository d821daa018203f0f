#include <doctest.h>

#include "lowgenus/errors.hpp"
#include "lowgenus/hurwitz.hpp"
#include "oracle/hurwitz_bruteforce.hpp"

using lowgenus::ExactRational;
using lowgenus::MemoStore;
using namespace lowgenus::hurwitz;

namespace {

ExactRational q(const char* text) { return ExactRational::parse(text); }

}  // namespace

TEST_CASE("m0 and the closed form") {
  MemoStore store;
  CHECK(m0(store, 1) == 1);
  CHECK(m0(store, 2) == q("1/2"));
  CHECK(m0(store, 3) == 4);
  CHECK(m0_closed(1) == 1);
  CHECK(m0_closed(2) == q("1/2"));
  CHECK(m0_closed(4) == 120);
  CHECK(m0(store, 6) == 1088640);
  CHECK(m0(store, 7) == 228191040);
  for (int d = 1; d <= 15; ++d) CHECK(m0(store, d) == m0_closed(d));
}

TEST_CASE("m1") {
  MemoStore store;
  CHECK(m1(store, 1) == 0);
  CHECK(m1(store, 2) == q("1/2"));
  CHECK(m1(store, 3) == 40);
  CHECK(m1(store, 4) == 5460);
  CHECK(m1(store, 5) == 1189440);
  CHECK(m1(store, 6) == 382536000);
  CHECK(m1(store, 7) == q("171121991040"));
}

TEST_CASE("m2") {
  MemoStore store;
  CHECK(m2(store, 1) == 0);
  CHECK(m2(store, 2) == q("1/2"));
  CHECK(m2(store, 3) == 364);
  CHECK(m2(store, 4) == 206640);
  CHECK(m2(store, 5) == 131670000);
  CHECK(m2(store, 6) == q("100557737280"));
  CHECK(m2(store, 7) == q("92919587080320"));
}

TEST_CASE("recursions agree with counting transposition tuples") {
  MemoStore store;
  for (int d = 1; d <= 5; ++d) CHECK(m0(store, d) == oracle::hurwitz_by_enumeration(d, 0));
  for (int d = 1; d <= 4; ++d) CHECK(m1(store, d) == oracle::hurwitz_by_enumeration(d, 1));
  for (int d = 1; d <= 4; ++d) CHECK(m2(store, d) == oracle::hurwitz_by_enumeration(d, 2));
}

TEST_CASE("positivity and integrality") {
  MemoStore store;
  for (int d = 2; d <= 10; ++d) {
    CHECK(m0(store, d) > 0);
    CHECK(m1(store, d) > 0);
    CHECK(m2(store, d) > 0);
  }
  // Automorphisms of degree-2 covers are the only source of denominators.
  for (int d = 3; d <= 10; ++d) {
    CHECK(m0(store, d).is_integer());
    CHECK(m1(store, d).is_integer());
    CHECK(m2(store, d).is_integer());
  }
}

TEST_CASE("tables") {
  MemoStore store;
  const auto g0 = table(store, 0, 5);
  CHECK_FALSE(g0.conjectural);
  CHECK(g0.values.size() == 5);
  CHECK(g0.values.at(4) == 120);

  const auto g2 = table(store, 2, 10);
  CHECK(g2.conjectural);
  CHECK(g2.values.size() == 10);

  CHECK_THROWS_AS(table(store, 3, 4), lowgenus::InvalidGenus);
  CHECK_THROWS_AS(table(store, -1, 4), lowgenus::InvalidGenus);
  CHECK_THROWS_AS(m0(store, 0), lowgenus::InvalidDegree);
  CHECK_THROWS_AS(m0_closed(0), lowgenus::InvalidDegree);
}
