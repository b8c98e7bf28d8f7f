#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fincat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed its candidate budget.
struct BudgetExceeded : Error {
  BudgetExceeded() : Error("candidate budget exceeded") {}
};

/// Candidate counter shared by every exhaustive search. Charging happens
/// before a candidate is materialized, so no task allocates past the limit.
class Budget {
 public:
  static constexpr std::int64_t kDefault = 1'000'000;

  explicit Budget(std::int64_t limit = kDefault) : limit_(limit) {}

  void charge(std::int64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded{};
  }
  std::int64_t used() const { return used_; }
  std::int64_t limit() const { return limit_; }

 private:
  std::int64_t limit_;
  std::int64_t used_ = 0;
};

/// Saturating product, used to pre-screen enumeration sizes.
inline std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::int64_t>::max() / b)
    return std::numeric_limits<std::int64_t>::max();
  return a * b;
}

inline std::int64_t sat_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

/// Mixed-radix odometer. `digits` must start all-zero; returns false once
/// every tuple has been produced. Radix 0 anywhere means no tuples at all
/// unless the tuple is empty (one empty tuple). Lexicographic order with the
/// last digit fastest.
inline bool next_tuple(std::vector<std::size_t>& digits,
                       const std::vector<std::size_t>& radices) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radices[i]) return true;
    digits[i] = 0;
  }
  return false;
}

inline bool tuple_space_empty(const std::vector<std::size_t>& radices) {
  for (auto r : radices)
    if (r == 0) return true;
  return false;
}

/// Runs `fn` on every tuple of the mixed-radix space, in lexicographic
/// order, charging one budget unit per tuple. `fn` returning false stops
/// the walk early.
template <class Fn>
void for_each_tuple(const std::vector<std::size_t>& radices, Budget& budget,
                    Fn&& fn) {
  if (tuple_space_empty(radices)) return;
  std::vector<std::size_t> digits(radices.size(), 0);
  do {
    budget.charge();
    if (!fn(static_cast<const std::vector<std::size_t>&>(digits))) return;
  } while (next_tuple(digits, radices));
}

/// Deterministic tuple encoding for derived element names. Escapes the
/// delimiter characters so distinct tuples never collide.
std::string encode_tuple(const std::vector<std::string>& parts);
std::string encode_pair(const std::string& a, const std::string& b);
std::vector<std::string> decode_tuple(const std::string& encoded);

}  // namespace fincat
