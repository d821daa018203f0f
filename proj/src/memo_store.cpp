#include "lowgenus/memo_store.hpp"

namespace lowgenus {

int family_dimension(Family family, int d) {
  switch (family) {
    case Family::Rational:
      return 3 * d - 1;
    case Family::NodeAtPoint:
      return 3 * d - 3;
    case Family::Elliptic:
      return 3 * d;
  }
  return -1;
}

std::size_t MemoStore::KeyHash::operator()(const FamilyKey& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.family);
  h = h * 1000003u ^ static_cast<std::size_t>(k.d);
  h = h * 1000003u ^ static_cast<std::size_t>(k.a);
  h = h * 1000003u ^ static_cast<std::size_t>(k.b);
  return h;
}

std::size_t MemoStore::SeriesHash::operator()(const SeriesKey& k) const noexcept {
  return static_cast<std::size_t>(k.series) * 1000003u ^ static_cast<std::size_t>(k.d);
}

std::optional<ExactRational> MemoStore::find(const FamilyKey& key) const {
  std::lock_guard lock(mutex_);
  if (auto it = characteristic_.find(key); it != characteristic_.end()) return it->second;
  return std::nullopt;
}

ExactRational MemoStore::insert(const FamilyKey& key, ExactRational value) {
  std::lock_guard lock(mutex_);
  return characteristic_.try_emplace(key, std::move(value)).first->second;
}

std::optional<ExactRational> MemoStore::find(Series series, int d) const {
  std::lock_guard lock(mutex_);
  if (auto it = scalars_.find({series, d}); it != scalars_.end()) return it->second;
  return std::nullopt;
}

ExactRational MemoStore::insert(Series series, int d, ExactRational value) {
  std::lock_guard lock(mutex_);
  return scalars_.try_emplace(SeriesKey{series, d}, std::move(value)).first->second;
}

std::size_t MemoStore::size() const {
  std::lock_guard lock(mutex_);
  return characteristic_.size() + scalars_.size();
}

}  // namespace lowgenus
