#include "lowgenus/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "lowgenus/errors.hpp"

namespace lowgenus {

namespace {

// Pascal's triangle grown on demand.  Readers share the lock; growth takes it
// exclusively.  Rows are never modified once appended.
class BinomialTable {
 public:
  static constexpr long kMaxRows = 4096;

  BigInt get(long n, long k) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<long>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      std::vector<BigInt> row(prev.size() + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_{{BigInt(1)}};
};

BinomialTable& table() {
  static BinomialTable instance;
  return instance;
}

}  // namespace

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n >= BinomialTable::kMaxRows) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  }
  return table().get(n, k);
}

ExactRational ipow(long base, long exp) {
  if (exp < 0 && base == 0) throw ZeroToNegativePower(exp);
  const unsigned long magnitude = exp < 0 ? 0UL - static_cast<unsigned long>(exp)
                                          : static_cast<unsigned long>(exp);
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), BigInt(base).get_mpz_t(), magnitude);
  if (exp >= 0) return ExactRational(power);
  return ExactRational(BigInt(1), power);
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace lowgenus
