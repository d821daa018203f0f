#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "lowgenus/rational.hpp"

namespace lowgenus {

enum class Family : std::uint8_t { Rational, NodeAtPoint, Elliptic };

// Number of conditions (points plus lines) that cut a family of degree-d
// curves down to finitely many: 3d-1 rational, 3d-3 node at a point, 3d elliptic.
int family_dimension(Family family, int d);

// Index of one characteristic number.  Keys off the dimension law are legal
// and denote the value 0.
struct FamilyKey {
  Family family;
  int d;
  int a;
  int b;

  bool on_dimension() const {
    return a >= 0 && b >= 0 && a + b == family_dimension(family, d);
  }
  friend auto operator<=>(const FamilyKey&, const FamilyKey&) = default;
};

// Scalar series keyed by degree alone.
enum class Series : std::uint8_t { R, NP, E, M0, M1, M2 };

/// Write-once cache shared by the recursions.
///
/// Values are deterministic functions of their key, so a store may be shared
/// between threads: lookups and inserts are serialized, computation is not,
/// and a racing second insert of the same key keeps the first value.
class MemoStore {
 public:
  std::optional<ExactRational> find(const FamilyKey& key) const;
  ExactRational insert(const FamilyKey& key, ExactRational value);

  std::optional<ExactRational> find(Series series, int d) const;
  ExactRational insert(Series series, int d, ExactRational value);

  std::size_t size() const;

 private:
  struct KeyHash {
    std::size_t operator()(const FamilyKey& k) const noexcept;
  };
  struct SeriesKey {
    Series series;
    int d;
    friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
  };
  struct SeriesHash {
    std::size_t operator()(const SeriesKey& k) const noexcept;
  };

  mutable std::mutex mutex_;
  std::unordered_map<FamilyKey, ExactRational, KeyHash> characteristic_;
  std::unordered_map<SeriesKey, ExactRational, SeriesHash> scalars_;
};

template <typename Compute>
ExactRational memoized(MemoStore& store, const FamilyKey& key, Compute&& compute) {
  if (auto hit = store.find(key)) return *std::move(hit);
  return store.insert(key, std::invoke(std::forward<Compute>(compute)));
}

template <typename Compute>
ExactRational memoized(MemoStore& store, Series series, int d, Compute&& compute) {
  if (auto hit = store.find(series, d)) return *std::move(hit);
  return store.insert(series, d, std::invoke(std::forward<Compute>(compute)));
}

}  // namespace lowgenus
