#pragma once

/**
 * @file codim1.hpp
 * @brief Codimension-one behaviour of plane curves of genus 0 to 3.
 *
 * Fix a genus g and degree d and take the one-parameter family of
 * irreducible curves through 3d+g-2 general points.  The tautological
 * divisor classes restrict to numbers |A|, |B|, |C|, |Delta| and
 * |TL| = |A| + |B|, and any divisor written in that basis (cuspidal curves,
 * the canonical class of the Severi variety, ...) evaluates to a count.
 *
 * Genus 0 and 1 degrees come from the recursions; genus 2 and 3 need the
 * externally supplied counts held in SeveriInputs.
 */

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lowgenus/memo_store.hpp"
#include "lowgenus/rational.hpp"
#include "lowgenus/severi_inputs.hpp"

namespace lowgenus {

struct DivisorDegrees {
  int genus = 0;
  int d = 0;
  ExactRational A;
  ExactRational B;
  ExactRational C;
  ExactRational Delta;
  ExactRational TL;
  friend bool operator==(const DivisorDegrees&, const DivisorDegrees&) = default;
};

// Coefficients of a divisor in the basis A, B, C, Delta.
struct DivisorClass {
  ExactRational cA;
  ExactRational cB;
  ExactRational cC;
  ExactRational cDelta;

  // CU = 3A + 3B + C - Delta.
  static DivisorClass cuspidal();
  // K = -3A/2 + 3B/2 + 11C/12 - 13Delta/12.
  static DivisorClass canonical();
};

ExactRational evaluate_class(const DivisorClass& cls, const DivisorDegrees& deg);

struct Codim1Report {
  DivisorDegrees degrees;
  ExactRational cusps;
  std::optional<ExactRational> triple;  // genus 0 only
  ExactRational g_hat;                  // geometric sectional genus
  ExactRational g_arith;                // arithmetic sectional genus
  std::optional<ExactRational> g_tilde; // genus 0 only

  // Genus 3: Delta and everything built on it use the reconstructed formula.
  bool reconstructed = false;
  // No irreducible curves of this genus and degree; values are formal.
  bool formal = false;
  // The triple-point formula is evaluated below degree 3.
  bool triple_formal = false;
};

/// Evaluates the codimension-one quantities over one memo store and one
/// immutable snapshot of Severi inputs.  Divisor degrees are cached per
/// (genus, d); the calculator may be shared between threads.
class Codim1Calculator {
 public:
  explicit Codim1Calculator(MemoStore& store, SeveriInputs inputs = SeveriInputs::embedded());

  DivisorDegrees degrees(int genus, int d);
  ExactRational cusp_count(int genus, int d);
  ExactRational triple_count(int d);
  ExactRational sectional_geometric(int genus, int d);
  ExactRational sectional_arithmetic(int genus, int d);
  ExactRational sectional_tilde(int d);
  Codim1Report report(int genus, int d);

  // Count of irreducible genus-g degree-d curves through 3d+g-1 points.
  ExactRational curve_count(int genus, int d);

  const SeveriInputs& inputs() const { return inputs_; }

 private:
  void require_inputs(int genus, int d) const;
  DivisorDegrees compute_degrees(int genus, int d);
  ExactRational triple_formula(const DivisorDegrees& deg) const;

  MemoStore& store_;
  const SeveriInputs inputs_;
  std::mutex cache_mutex_;
  std::map<std::pair<int, int>, DivisorDegrees> cache_;
};

}  // namespace lowgenus
