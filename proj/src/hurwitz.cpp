#include "lowgenus/hurwitz.hpp"

#include "lowgenus/combinatorics.hpp"
#include "lowgenus/errors.hpp"
#include "splitting.hpp"

namespace lowgenus::hurwitz {

using detail::fraction;
using detail::require_degree;

ExactRational m0(MemoStore& store, int d) {
  require_degree(d);
  if (d == 1) return 1;
  return memoized(store, Series::M0, d, [&] {
    ExactRational sum;
    for (int j = 1; j < d; ++j) {
      const long k = d - j;
      BigInt w = binom(2L * d - 4, 2L * j - 2) * (static_cast<long>(j) * j * k * k);
      sum += ExactRational(w) * m0(store, j) * m0(store, d - j);
    }
    return fraction(2L * d - 3, d) * sum;
  });
}

ExactRational m0_closed(int d) {
  require_degree(d);
  return ipow(d, d - 3L) * ExactRational(factorial(2L * d - 2), factorial(d));
}

ExactRational m1(MemoStore& store, int d) {
  require_degree(d);
  return memoized(store, Series::M1, d, [&] {
    ExactRational sum = fraction(d, 6) * ExactRational(BigInt(binom(d, 2) * (2L * d - 1))) * m0(store, d);
    for (int j = 1; j <= d - 2; ++j) {
      const long k = d - j;
      BigInt w = binom(2L * d - 2, 2L * j - 2) * (2L * j * (2L * d - 1) * k * j);
      sum += ExactRational(w) * m0(store, j) * m1(store, d - j);
    }
    return sum;
  });
}

ExactRational m2(MemoStore& store, int d) {
  require_degree(d);
  return memoized(store, Series::M2, d, [&] {
    const ExactRational dd(d);
    ExactRational sum = dd * dd * (fraction(97, 136) * dd - fraction(20, 17)) * m1(store, d);
    for (int j = 1; j < d; ++j) {
      const long k = d - j;
      const ExactRational jj(j);
      sum += m0(store, j) * m2(store, d - j) * ExactRational(BigInt(binom(2L * d, 2L * j - 2) * (j * k))) *
             (fraction(-115, 17) * jj + 8 * dd);
      sum += m1(store, j) * m1(store, d - j) * ExactRational(BigInt(binom(2L * d, 2L * j) * (j * k))) *
             (fraction(11697, 34) * ExactRational(j * k) - fraction(3899, 68) * dd * dd);
    }
    return sum;
  });
}

HurwitzTable table(MemoStore& store, int genus, int max_d) {
  if (genus < 0 || genus > 2) throw InvalidGenus(genus, 2);
  require_degree(max_d);
  HurwitzTable out;
  out.genus = genus;
  out.conjectural = genus == 2;
  for (int d = 1; d <= max_d; ++d) {
    switch (genus) {
      case 0:
        out.values.emplace(d, m0(store, d));
        break;
      case 1:
        out.values.emplace(d, m1(store, d));
        break;
      default:
        out.values.emplace(d, m2(store, d));
        break;
    }
  }
  return out;
}

}  // namespace lowgenus::hurwitz
