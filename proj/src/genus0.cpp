#include "lowgenus/genus0.hpp"

#include "lowgenus/combinatorics.hpp"
#include "splitting.hpp"

namespace lowgenus::genus0 {

using detail::fraction;
using detail::require_degree;
using detail::sum_splittings;

namespace {

// Trades the (b+1)-th tangency of R_d(a, b+1) for the incidence R_d(a+1, b),
// where a + b = 3d - 2.  The bracket collects reducible curves with zero,
// one or two tangent lines through the image of the node.
ExactRational rational_tangency_step(MemoStore& store, int d, int a, int b) {
  ExactRational value = fraction(d - 1, d) * rchar(store, d, a + 1, b);
  for (int i = 1; i < d; ++i) {
    const int j = d - i;
    const int dim_i = 3 * i - 1;
    const int dim_j = 3 * j - 1;

    ExactRational bracket = sum_splittings(dim_i, dim_j, a, b, [&](int ai, int bi, int aj, int bj) {
      BigInt w = binom(a, ai) * binom(b, bi);
      if (w == 0) return ExactRational();
      return ExactRational(BigInt(w * (i * j))) * rchar(store, i, ai, bi) * rchar(store, j, aj, bj);
    });
    if (b >= 1) {
      bracket += ExactRational(4L * b) *
                 sum_splittings(dim_i, dim_j, a + 1, b - 1, [&](int ai, int bi, int aj, int bj) {
                   BigInt w = binom(a, ai) * binom(b - 1, bj);
                   if (w == 0) return ExactRational();
                   return ExactRational(BigInt(w * i)) * rchar(store, i, ai, bi) *
                          rchar(store, j, aj, bj);
                 });
    }
    if (b >= 2) {
      bracket += ExactRational(BigInt(4 * binom(b, 2))) *
                 sum_splittings(dim_i, dim_j, a + 2, b - 2, [&](int ai, int bi, int aj, int bj) {
                   BigInt w = binom(a, ai - 1) * binom(b - 2, bj);
                   if (w == 0) return ExactRational();
                   return ExactRational(w) * rchar(store, i, ai, bi) * rchar(store, j, aj, bj);
                 });
    }
    value += fraction(static_cast<long>(i) * j, 2L * d) * bracket;
  }
  return value;
}

// Same trade for NP_d(a, b+1), a + b = 3d - 4.  Seven boundary sums: the two
// branches through the fixed node lie on one component or on both, and zero,
// one or two tangent lines pass through the image of the source node.
ExactRational node_point_tangency_step(MemoStore& store, int d, int a, int b) {
  ExactRational value = fraction(d - 1, d) * npchar(store, d, a + 1, b);
  for (int i = 1; i < d; ++i) {
    const int j = d - i;
    const int r_i = 3 * i - 1;
    const int r_j = 3 * j - 1;
    const int np_i = 3 * i - 3;
    const int np_j = 3 * j - 3;
    const auto R = [&](int deg, int p, int l) { return rchar(store, deg, p, l); };
    const auto NP = [&](int deg, int p, int l) { return npchar(store, deg, p, l); };

    // Zero tangent lines through the image of the node.
    ExactRational bracket = sum_splittings(r_i, r_j, a + 2, b, [&](int ai, int bi, int aj, int bj) {
      BigInt w = binom(a, ai - 1) * binom(b, bi);
      if (w == 0) return ExactRational();
      return ExactRational(BigInt(w * (i * j - 1))) * R(i, ai, bi) * R(j, aj, bj);
    });
    bracket += sum_splittings(r_i, np_j, a, b, [&](int ai, int bi, int aj, int bj) {
      BigInt w = binom(a, ai) * binom(b, bi);
      if (w == 0) return ExactRational();
      return ExactRational(BigInt(2 * w * (i * j))) * R(i, ai, bi) * NP(j, aj, bj);
    });

    // One tangent line through the image of the node.
    if (b >= 1) {
      ExactRational one = sum_splittings(r_i, r_j, a + 3, b - 1, [&](int ai, int bi, int aj, int bj) {
        BigInt w = binom(a, ai - 1) * binom(b - 1, bi);
        if (w == 0) return ExactRational();
        return ExactRational(BigInt(w * i)) * R(i, ai, bi) * R(j, aj, bj);
      });
      one += sum_splittings(np_i, r_j, a + 1, b - 1, [&](int ai, int bi, int aj, int bj) {
        BigInt w = binom(a, ai) * binom(b - 1, bi);
        if (w == 0) return ExactRational();
        return ExactRational(BigInt(w * i)) * NP(i, ai, bi) * R(j, aj, bj);
      });
      one += sum_splittings(r_i, np_j, a + 1, b - 1, [&](int ai, int bi, int aj, int bj) {
        BigInt w = binom(a, ai) * binom(b - 1, bi);
        if (w == 0) return ExactRational();
        return ExactRational(BigInt(w * i)) * R(i, ai, bi) * NP(j, aj, bj);
      });
      bracket += ExactRational(4L * b) * one;
    }

    // Two tangent lines through the image of the node.
    if (b >= 2) {
      const BigInt pairs = binom(b, 2);
      bracket += ExactRational(BigInt(4 * pairs)) *
                 sum_splittings(r_i, r_j, a + 4, b - 2, [&](int ai, int bi, int aj, int bj) {
                   BigInt w = binom(a, ai - 2) * binom(b - 2, bi);
                   if (w == 0) return ExactRational();
                   return ExactRational(w) * R(i, ai, bi) * R(j, aj, bj);
                 });
      bracket += ExactRational(BigInt(8 * pairs)) *
                 sum_splittings(r_i, np_j, a + 2, b - 2, [&](int ai, int bi, int aj, int bj) {
                   BigInt w = binom(a, ai - 1) * binom(b - 2, bi);
                   if (w == 0) return ExactRational();
                   return ExactRational(w) * R(i, ai, bi) * NP(j, aj, bj);
                 });
    }
    value += fraction(static_cast<long>(i) * j, 2L * d) * bracket;
  }
  return value;
}

}  // namespace

ExactRational rd(MemoStore& store, int d) {
  require_degree(d);
  if (d == 1) return 1;
  return memoized(store, Series::R, d, [&] {
    ExactRational sum;
    const long n = 3L * d - 4;
    for (int i = 1; i < d; ++i) {
      const long j = d - i;
      BigInt coeff = j * binom(n, 3L * i - 2) - i * binom(n, 3L * i - 1);
      coeff *= static_cast<long>(i) * i * j;
      if (coeff == 0) continue;
      sum += ExactRational(coeff) * rd(store, i) * rd(store, d - i);
    }
    return sum;
  });
}

ExactRational npd(MemoStore& store, int d) {
  require_degree(d);
  if (d == 1) return 0;
  return memoized(store, Series::NP, d, [&] {
    ExactRational sum;
    const long n = 3L * d - 6;
    for (int i = 1; i < d; ++i) {
      const long j = d - i;
      BigInt both_rational = j * binom(n, 3L * i - 3) - i * binom(n, 3L * i - 2);
      both_rational *= (i * j - 1) * i;
      if (both_rational != 0) sum += ExactRational(both_rational) * rd(store, i) * rd(store, d - i);

      BigInt node_on_i = 2 * i * j * binom(n, 3L * i - 4) - i * i * binom(n, 3L * i - 3) -
                         j * j * binom(n, 3L * i - 5);
      node_on_i *= i * j;
      if (node_on_i != 0) sum += ExactRational(node_on_i) * npd(store, i) * rd(store, d - i);
    }
    return sum;
  });
}

ExactRational nl(MemoStore& store, int d, int a, int b) {
  require_degree(d);
  if (a < 0 || b < 0 || a + b != 3 * d - 2) return 0;
  return ExactRational(d - 1) * rchar(store, d, a + 1, b) - rchar(store, d, a, b + 1) / 2;
}

ExactRational rchar(MemoStore& store, int d, int a, int b) {
  require_degree(d);
  const FamilyKey key{Family::Rational, d, a, b};
  if (!key.on_dimension()) return 0;
  if (b == 0) return rd(store, d);
  return memoized(store, key, [&] { return rational_tangency_step(store, d, a, b - 1); });
}

ExactRational npchar(MemoStore& store, int d, int a, int b) {
  require_degree(d);
  const FamilyKey key{Family::NodeAtPoint, d, a, b};
  if (!key.on_dimension()) return 0;
  if (b == 0) return npd(store, d);
  return memoized(store, key, [&] { return node_point_tangency_step(store, d, a, b - 1); });
}

}  // namespace lowgenus::genus0
