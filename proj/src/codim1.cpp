#include "lowgenus/codim1.hpp"

#include "lowgenus/combinatorics.hpp"
#include "lowgenus/errors.hpp"
#include "lowgenus/genus0.hpp"
#include "lowgenus/genus1.hpp"
#include "splitting.hpp"

namespace lowgenus {

using detail::fraction;
using detail::require_degree;

DivisorClass DivisorClass::cuspidal() { return {3, 3, 1, -1}; }

DivisorClass DivisorClass::canonical() {
  return {fraction(-3, 2), fraction(3, 2), fraction(11, 12), fraction(-13, 12)};
}

ExactRational evaluate_class(const DivisorClass& cls, const DivisorDegrees& deg) {
  return cls.cA * deg.A + cls.cB * deg.B + cls.cC * deg.C + cls.cDelta * deg.Delta;
}

Codim1Calculator::Codim1Calculator(MemoStore& store, SeveriInputs inputs)
    : store_(store), inputs_(std::move(inputs)) {}

namespace {

void require_genus(int genus) {
  if (genus < 0 || genus > 3) throw InvalidGenus(genus, 3);
}

ExactRational nodes(int d, int genus) { return ExactRational(binom(d - 1, 2)) - genus; }

}  // namespace

void Codim1Calculator::require_inputs(int genus, int d) const {
  if (genus < 2) return;
  std::vector<std::string> missing;
  const auto need_record = [&](int g, int deg) {
    if (!inputs_.record(g, deg)) missing.push_back("g=" + std::to_string(g) + " d=" + std::to_string(deg));
  };
  for (int j = 1; j <= d; ++j) {
    need_record(2, j);
    if (genus == 3) need_record(3, j);
  }
  if (genus == 3 && !inputs_.hyperelliptic(d)) missing.push_back("H_" + std::to_string(d));
  if (!missing.empty()) throw MissingInput(std::move(missing));
}

ExactRational Codim1Calculator::curve_count(int genus, int d) {
  require_genus(genus);
  require_degree(d);
  switch (genus) {
    case 0:
      return genus0::rd(store_, d);
    case 1:
      return genus1::ed(store_, d);
    default:
      if (auto rec = inputs_.record(genus, d)) return rec->n;
      throw MissingInput({"g=" + std::to_string(genus) + " d=" + std::to_string(d)});
  }
}

DivisorDegrees Codim1Calculator::degrees(int genus, int d) {
  require_genus(genus);
  require_degree(d);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find({genus, d}); it != cache_.end()) return it->second;
  }
  require_inputs(genus, d);
  DivisorDegrees deg = compute_degrees(genus, d);
  std::lock_guard lock(cache_mutex_);
  return cache_.try_emplace({genus, d}, std::move(deg)).first->second;
}

DivisorDegrees Codim1Calculator::compute_degrees(int genus, int d) {
  DivisorDegrees deg;
  deg.genus = genus;
  deg.d = d;
  const auto R = [&](int i) { return genus0::rd(store_, i); };
  const auto E = [&](int i) { return genus1::ed(store_, i); };
  const auto T = [&](int i) { return inputs_.record(2, i)->n; };
  const auto U = [&](int i) { return inputs_.record(3, i)->n; };

  switch (genus) {
    case 0: {
      ExactRational b_sum;
      ExactRational c_sum;
      for (int i = 1; i < d; ++i) {
        const long j = d - i;
        const ExactRational w = ExactRational(binom(3L * d - 2, 3L * i - 1)) * R(i) * R(d - i);
        b_sum += w * (i * i * j * j);
        c_sum += w * (i * j);
      }
      deg.A = R(d);
      deg.B = -R(d) / d + b_sum / (2 * d);
      deg.C = -c_sum / 2;
      deg.Delta = -deg.C;
      break;
    }
    case 1: {
      // Sum of ij C(3d-1,3i-1) R_i E_j over reducible fibres, and the same
      // weighted by the degree i of the rational component.
      ExactRational reducible;
      ExactRational weighted;
      for (int i = 1; i < d; ++i) {
        const long j = d - i;
        const ExactRational w = ExactRational(binom(3L * d - 1, 3L * i - 1)) * (i * j) * R(i) * E(d - i);
        reducible += w;
        weighted += w * i;
      }
      const ExactRational nodal = ExactRational(binom(d - 1, 2)) * R(d);
      deg.A = E(d);
      deg.Delta = nodal + reducible;
      deg.B = fraction(d, 12) * nodal + weighted;
      deg.C = -reducible;
      break;
    }
    case 2: {
      const SeveriRecord rec = *inputs_.record(2, d);
      ExactRational rational_tail;  // R_i T_j
      ExactRational elliptic_pair;  // E_i E_j
      for (int i = 1; i < d; ++i) {
        const long j = d - i;
        rational_tail += ExactRational(binom(3L * d, 3L * i - 1)) * (i * j) * R(i) * T(d - i);
        elliptic_pair += ExactRational(binom(3L * d, 3L * i)) * (i * j) * E(i) * E(d - i);
      }
      const ExactRational nodal = nodes(d, 1) * E(d);
      deg.A = rec.n;
      deg.TL = rec.tl;
      deg.B = rec.tl - rec.n;
      deg.Delta = nodal + rational_tail + elliptic_pair / 2;
      deg.C = nodal / 5 + fraction(7, 10) * elliptic_pair - rational_tail;
      break;
    }
    default: {
      const SeveriRecord rec = *inputs_.record(3, d);
      ExactRational rational_tail;  // R_i U_j
      ExactRational elliptic_tail;  // E_i T_j
      for (int i = 1; i < d; ++i) {
        const long j = d - i;
        rational_tail += ExactRational(binom(3L * d + 1, 3L * i - 1)) * (i * j) * R(i) * U(d - i);
        elliptic_tail += ExactRational(binom(3L * d + 1, 3L * i)) * (i * j) * E(i) * T(d - i);
      }
      const ExactRational nodal = nodes(d, 2) * T(d);
      deg.A = rec.n;
      deg.TL = rec.tl;
      deg.B = rec.tl - rec.n;
      deg.Delta = nodal + rational_tail + elliptic_tail;
      deg.C = fraction(4, 3) * *inputs_.hyperelliptic(d) + nodal / 3 + 3 * elliptic_tail - rational_tail;
      break;
    }
  }
  if (genus < 2) deg.TL = deg.A + deg.B;
  return deg;
}

ExactRational Codim1Calculator::cusp_count(int genus, int d) {
  return evaluate_class(DivisorClass::cuspidal(), degrees(genus, d));
}

ExactRational Codim1Calculator::triple_formula(const DivisorDegrees& deg) const {
  const long d = deg.d;
  return ExactRational(d * d - 6 * d + 10) * deg.A / 2 - ExactRational(d - 6) * deg.B / 2 + deg.C;
}

ExactRational Codim1Calculator::triple_count(int d) {
  require_degree(d, 3);
  return triple_formula(degrees(0, d));
}

ExactRational Codim1Calculator::sectional_geometric(int genus, int d) {
  const DivisorDegrees deg = degrees(genus, d);
  const ExactRational twice_minus_two =
      evaluate_class(DivisorClass::canonical(), deg) + ExactRational(3 * d + genus - 2) * deg.A;
  return (twice_minus_two + 2) / 2;
}

ExactRational Codim1Calculator::sectional_arithmetic(int genus, int d) {
  ExactRational value = sectional_geometric(genus, d) + cusp_count(genus, d);
  // Reducible curves: ordered (degree, genus) splittings, halved.
  ExactRational split;
  for (int i = 1; i < d; ++i) {
    const int j = d - i;
    for (int g_i = 0; g_i <= genus; ++g_i) {
      const int g_j = genus - g_i;
      const BigInt w = binom(3L * d + genus - 2, 3L * i + g_i - 1) * (static_cast<long>(i) * j - 1);
      if (w == 0) continue;
      split += ExactRational(w) * curve_count(g_i, i) * curve_count(g_j, j);
    }
  }
  value += split / 2;
  // Irreducible curves of genus one less, with one extra node.
  if (genus > 0) value += nodes(d, genus) * curve_count(genus - 1, d);
  return value;
}

ExactRational Codim1Calculator::sectional_tilde(int d) {
  require_degree(d);
  return sectional_geometric(0, d) - ExactRational(3L * d - 2) * genus0::npd(store_, d);
}

Codim1Report Codim1Calculator::report(int genus, int d) {
  Codim1Report out;
  out.degrees = degrees(genus, d);
  out.cusps = evaluate_class(DivisorClass::cuspidal(), out.degrees);
  out.g_hat = sectional_geometric(genus, d);
  out.g_arith = sectional_arithmetic(genus, d);
  if (genus == 0) {
    out.triple = triple_formula(out.degrees);
    out.triple_formal = d < 3;
    out.g_tilde = sectional_tilde(d);
  }
  out.reconstructed = genus == 3;
  out.formal = binom(d - 1, 2) < genus;
  return out;
}

}  // namespace lowgenus
