#include "lowgenus/genus1.hpp"

#include "lowgenus/combinatorics.hpp"
#include "lowgenus/genus0.hpp"
#include "splitting.hpp"

namespace lowgenus::genus1 {

using detail::fraction;
using detail::require_degree;
using detail::sum_splittings;
using genus0::rchar;
using genus0::rd;

namespace {

// E_d(a, b+1) from E_d(a+1, b), a + b = 3d - 1.  Irreducible nodal fibres
// contribute d/12 times the fixed-j number; reducible fibres pair a rational
// component of degree i with an elliptic one of degree j.
ExactRational elliptic_tangency_step(MemoStore& store, int d, int a, int b) {
  ExactRational value = echar(store, d, a + 1, b) + fraction(d, 12) * jchar(store, d, a, b);
  for (int i = 1; i < d; ++i) {
    const int j = d - i;
    const int dim_i = 3 * i - 1;
    const int dim_j = 3 * j;

    ExactRational bracket = sum_splittings(dim_i, dim_j, a, b, [&](int ai, int bi, int aj, int bj) {
      BigInt w = binom(a, ai) * binom(b, bi);
      if (w == 0) return ExactRational();
      return ExactRational(BigInt(w * (i * j))) * rchar(store, i, ai, bi) * echar(store, j, aj, bj);
    });

    if (b >= 1) {
      // The two sums differ in which component carries the multiplicity and
      // which point count picks the binomial.
      ExactRational one = sum_splittings(dim_i, dim_j, a + 1, b - 1, [&](int ai, int bi, int aj, int bj) {
        BigInt w = j * binom(a, aj) + i * binom(a, ai);
        w *= binom(b - 1, bi);
        if (w == 0) return ExactRational();
        return ExactRational(w) * rchar(store, i, ai, bi) * echar(store, j, aj, bj);
      });
      bracket += ExactRational(2L * b) * one;
    }

    if (b >= 2) {
      bracket += ExactRational(BigInt(4 * binom(b, 2))) *
                 sum_splittings(dim_i, dim_j, a + 2, b - 2, [&](int ai, int bi, int aj, int bj) {
                   BigInt w = binom(a, ai - 1) * binom(b - 2, bi);
                   if (w == 0) return ExactRational();
                   return ExactRational(w) * rchar(store, i, ai, bi) * echar(store, j, aj, bj);
                 });
    }
    value += ExactRational(i) * bracket;
  }
  return value;
}

}  // namespace

ExactRational ed(MemoStore& store, int d) {
  require_degree(d);
  if (d == 1) return 0;
  return memoized(store, Series::E, d, [&] {
    ExactRational sum = ExactRational(binom(d, 3)) / 12 * rd(store, d);
    for (int i = 1; i < d; ++i) {
      const long j = d - i;
      BigInt coeff = binom(3L * d - 1, 3 * j) * (i * j * (3L * i - 2));
      if (coeff == 0) continue;
      sum += ExactRational(coeff) / 9 * rd(store, i) * ed(store, static_cast<int>(j));
    }
    return sum;
  });
}

ExactRational echar(MemoStore& store, int d, int a, int b) {
  require_degree(d);
  const FamilyKey key{Family::Elliptic, d, a, b};
  if (!key.on_dimension()) return 0;
  if (b == 0) return ed(store, d);
  return memoized(store, key, [&] { return elliptic_tangency_step(store, d, a, b - 1); });
}

ExactRational jchar(MemoStore& store, int d, int a, int b) {
  require_degree(d);
  if (a < 0 || b < 0 || a + b != 3 * d - 1) return 0;
  ExactRational value = ExactRational(binom(d - 1, 2)) * rchar(store, d, a, b);
  if (b >= 1) value += ExactRational(2L * b) * genus0::nl(store, d, a, b - 1);
  if (b >= 2) value += ExactRational(BigInt(4 * binom(b, 2))) * genus0::npchar(store, d, a, b - 2);
  return value;
}

ExactRational jchar_special(MemoStore& store, JClass j_class, int d, int a, int b) {
  ExactRational value = jchar(store, d, a, b);
  switch (j_class) {
    case JClass::Generic:
      return value;
    case JClass::J0:
      return value / 3;
    case JClass::J1728:
      return value / 2;
  }
  return value;
}

}  // namespace lowgenus::genus1
