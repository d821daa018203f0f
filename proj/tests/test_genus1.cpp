#include <doctest.h>

#include <string>
#include <vector>

#include "lowgenus/errors.hpp"
#include "lowgenus/genus0.hpp"
#include "lowgenus/genus1.hpp"

using lowgenus::ExactRational;
using lowgenus::MemoStore;
using namespace lowgenus::genus1;

namespace {

ExactRational q(const char* text) { return ExactRational::parse(text); }

}  // namespace

TEST_CASE("ed") {
  MemoStore store;
  CHECK(ed(store, 1) == 0);
  CHECK(ed(store, 2) == 0);
  CHECK(ed(store, 3) == 1);
  CHECK(ed(store, 4) == 225);
  CHECK(ed(store, 5) == 87192);
  CHECK(ed(store, 6) == 57435240);
  CHECK(ed(store, 7) == q("60478511040"));
  CHECK_THROWS_AS(ed(store, 0), lowgenus::InvalidDegree);
}

TEST_CASE("echar") {
  MemoStore store;
  CHECK(echar(store, 2, 2, 4) == 2);
  CHECK(echar(store, 2, 0, 6) == q("45/2"));
  CHECK(echar(store, 3, 0, 9) == 33616);
  CHECK(echar(store, 3, 1, 7) == 0);  // off dimension
  CHECK_THROWS_AS(echar(store, 0, 0, 0), lowgenus::InvalidDegree);
}

TEST_CASE("lines carry no elliptic curves") {
  MemoStore store;
  for (int b = 0; b <= 3; ++b) CHECK(echar(store, 1, 3 - b, b) == 0);
}

TEST_CASE("echar with no tangencies is ed") {
  MemoStore store;
  for (int d = 1; d <= 6; ++d) CHECK(echar(store, d, 3 * d, 0) == ed(store, d));
}

TEST_CASE("jchar and the special j classes") {
  MemoStore store;
  CHECK(jchar(store, 2, 1, 4) == 48);
  CHECK(jchar(store, 2, 0, 5) == 75);
  CHECK(jchar(store, 3, 8, 0) == 12);
  CHECK(jchar(store, 3, 8, 1) == 0);

  CHECK(jchar_special(store, JClass::Generic, 2, 0, 5) == 75);
  CHECK(jchar_special(store, JClass::J0, 2, 0, 5) == 25);
  CHECK(jchar_special(store, JClass::J1728, 2, 0, 5) == q("75/2"));
  for (int b = 0; b <= 8; ++b) {
    const auto generic = jchar(store, 3, 8 - b, b);
    CHECK(jchar_special(store, JClass::J0, 3, 8 - b, b) * 3 == generic);
    CHECK(jchar_special(store, JClass::J1728, 3, 8 - b, b) * 2 == generic);
  }
}

TEST_CASE("fixed-j with no tangencies is C(d-1,2) R_d") {
  MemoStore store;
  for (int d = 1; d <= 6; ++d) {
    const long genus = static_cast<long>(d - 1) * (d - 2) / 2;
    CHECK(jchar(store, d, 3 * d - 1, 0) == lowgenus::genus0::rd(store, d) * genus);
  }
}

TEST_CASE("fixed-j enumerative range") {
  CHECK_FALSE(fixed_j_is_enumerative(1));
  CHECK_FALSE(fixed_j_is_enumerative(2));
  CHECK(fixed_j_is_enumerative(3));
}

TEST_CASE("dimension law") {
  MemoStore store;
  for (int d = 1; d <= 4; ++d) {
    for (int a = 0; a <= 3 * d + 1; ++a) {
      for (int b = 0; b <= 3 * d + 1; ++b) {
        if (a + b != 3 * d) CHECK(echar(store, d, a, b) == 0);
        if (a + b != 3 * d - 1) CHECK(jchar(store, d, a, b) == 0);
      }
    }
  }
}
