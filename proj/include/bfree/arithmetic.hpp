#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bfree {

using Int = std::int64_t;

// Checked 64-bit helpers. Every overflow raises Error{Overflow}; nothing wraps silently.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow2(int exponent);

// Euclidean remainder in [0, |m|).
Int mod(Int a, Int m);
Int floor_div(Int a, Int b);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

// 2-adic valuation; v2(0) is reported as 64.
int v2(Int n);

bool divides(Int d, Int n);

// Exact rational with normalized sign (den > 0) and reduced terms.
class Rational {
 public:
  Rational() = default;
  Rational(Int num, Int den = 1);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;

  bool operator==(const Rational& other) const noexcept = default;
  std::strong_ordering operator<=>(const Rational& other) const noexcept;

  std::string to_string() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

struct Progression {
  Int modulus = 1;
  Int residue = 0;

  // Normalizes a negative modulus to |modulus| and the residue into [0, modulus).
  static Progression make(Int modulus, Int residue);

  bool contains(Int n) const { return mod(n - residue, modulus) == 0; }

  bool operator==(const Progression&) const = default;
};

struct DensityReport {
  std::vector<Int> divisors;
  Int period = 1;
  Int multiples_in_period = 0;
  Rational density;
};

// Some x with a*x = b (mod |m|), reduced into [0, |m|/gcd(a,m)); empty iff gcd(a,m) does not divide b.
std::optional<Int> solve_congruence(Int a, Int b, Int m);

// (aZ + r) intersected with bZ, as a single progression of modulus lcm(a, b).
std::optional<Progression> intersect_progressions(const Progression& p, Int b);

// |p ∩ [lo, hi)|; zero when hi <= lo.
Int count_in_interval(const Progression& p, Int lo, Int hi);

// |p ∩ [0, m * p.modulus)|, which is m.
Int count_in_periods(const Progression& p, Int m);

// Exact density of the union of d_i Z via inclusion-exclusion over subset lcms.
DensityReport multiples_density(std::span<const Int> divisors);

}  // namespace bfree
