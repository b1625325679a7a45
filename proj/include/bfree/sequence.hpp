#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bfree/arithmetic.hpp"

namespace bfree {

// The generators b_1..b_T of B = {2^i b_i}: odd, > 1, pairwise coprime.
// Indices are 1-based throughout to match the level numbering t = 1..T.
class Family {
 public:
  static Family make(std::vector<Int> generators);

  int depth() const noexcept { return static_cast<int>(generators_.size()); }
  const std::vector<Int>& generators() const noexcept { return generators_; }
  Int generator(int i) const;

  // 2^i * b_i.
  Int element(int i) const;
  // p_t = 2^t * b_1 * ... * b_t; p_0 = 1.
  Int period(int t) const;
  // Elements 2^i b_i for i <= t.
  std::vector<Int> elements(int t) const;

  // Appends the smallest odd integers >= 3 coprime to every existing generator until
  // depth() == target. Levels <= depth() are unchanged, so skeletons at those levels agree.
  Family extended_to(int target) const;

  // Smallest extension able to decide eta on [lo, hi).
  Family extended_for_range(Int lo, Int hi) const;

  bool operator==(const Family&) const = default;

 private:
  explicit Family(std::vector<Int> generators) : generators_(std::move(generators)) {}

  std::vector<Int> generators_;
};

struct SymbolWindow {
  Int start = 0;
  std::vector<std::uint8_t> symbols;

  Int size() const noexcept { return static_cast<Int>(symbols.size()); }
  Int end() const noexcept { return start + size(); }
  bool contains(Int n) const noexcept { return n >= start && n < end(); }
  std::uint8_t at(Int n) const;
  std::string to_string() const;

  static SymbolWindow from_string(Int start, std::string_view bits);

  bool operator==(const SymbolWindow&) const = default;
};

// eta(n) = 0 iff some 2^i b_i divides n. Decided exactly when a generator within the
// family divides n, or when v2(n) < T (deeper generators need 2^i | n with i > T).
int eta_at(const Family& family, Int n);

// Bulk form of eta_at, computed by sieving each 2^i b_i over the window.
SymbolWindow eta_window(const Family& family, Int lo, Int hi);

struct PeriodCertificate {
  enum class Kind { Zero, One };

  Int position = 0;
  Int period = 1;
  Kind kind = Kind::Zero;
  // Zero: least j with 2^j b_j | position. One: a = v2(position).
  int witness = 0;
};

PeriodCertificate period_certificate(const Family& family, Int n);

struct TautReport {
  int t = 0;
  Rational base_density;
  std::vector<Rational> densities_after_removal;
  bool is_taut_at_t = false;
};

// Density of M_{B_t} and of each single-element removal; taut iff every removal drops it.
TautReport taut_check_truncated(const Family& family, int t);

}  // namespace bfree
