#include "bfree/arithmetic.hpp"

#include <bit>
#include <limits>
#include <numeric>

#include "bfree/error.hpp"

namespace bfree {

namespace {

[[noreturn]] void overflow(const char* what) {
  throw Error(ErrorKind::Overflow, std::string("integer overflow in ") + what);
}

Int narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) overflow(what);
  return static_cast<Int>(v);
}

// Extended Euclid on non-negative inputs: returns g and x with a*x = g (mod b).
Int inverse_part(Int a, Int b, Int& g) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  g = old_r;
  return old_s;
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) overflow("add");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) overflow("mul");
  return out;
}

Int checked_pow2(int exponent) {
  if (exponent < 0 || exponent > 62) overflow("pow2");
  return Int{1} << exponent;
}

Int mod(Int a, Int m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be nonzero");
  if (m == std::numeric_limits<Int>::min()) overflow("mod");
  const Int am = m < 0 ? -m : m;
  const Int r = a % am;
  return r < 0 ? r + am : r;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  const Int g = gcd(a, b);
  const Int x = a < 0 ? -a : a;
  const Int y = b < 0 ? -b : b;
  return checked_mul(x / g, y);
}

int v2(Int n) {
  if (n == 0) return 64;
  return std::countr_zero(static_cast<std::uint64_t>(n));
}

bool divides(Int d, Int n) { return d != 0 && n % d == 0; }

Rational::Rational(Int num, Int den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = narrow(-static_cast<__int128>(num), "rational");
    den = narrow(-static_cast<__int128>(den), "rational");
  }
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

Rational from_wide(__int128 num, __int128 den) {
  auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
  __int128 a = abs128(num), b = abs128(den);
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num, "rational"), narrow(den, "rational"));
}

}  // namespace

Rational Rational::operator+(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero rational");
  return from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const noexcept {
  const __int128 lhs = static_cast<__int128>(num_) * o.den_;
  const __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Progression Progression::make(Int modulus, Int residue) {
  if (modulus == 0) throw Error(ErrorKind::InvalidArgument, "progression modulus must be nonzero");
  const Int m = modulus < 0 ? narrow(-static_cast<__int128>(modulus), "progression") : modulus;
  return Progression{m, mod(residue, m)};
}

std::optional<Int> solve_congruence(Int a, Int b, Int m) {
  if (a == 0 || m == 0) throw Error(ErrorKind::InvalidArgument, "solve_congruence needs a != 0 and m != 0");
  const Int am = m < 0 ? narrow(-static_cast<__int128>(m), "congruence") : m;
  Int g = 0;
  const Int x = inverse_part(mod(a, am), am, g);
  // a mod |m| may be 0 when |m| divides a; then g = |m|.
  if (g == 0) g = am;
  if (mod(b, g) != 0) return std::nullopt;
  const Int reduced = am / g;
  const __int128 sol = static_cast<__int128>(mod(x, reduced)) * (mod(b, am) / g);
  return static_cast<Int>(sol % reduced);
}

std::optional<Progression> intersect_progressions(const Progression& p, Int b) {
  if (p.modulus < 1 || b < 1) throw Error(ErrorKind::InvalidArgument, "intersect_progressions needs positive moduli");
  const Int g = gcd(p.modulus, b);
  if (p.residue % g != 0) return std::nullopt;
  // b*s = r (mod a); the element b*s lies in both sets.
  const auto s = solve_congruence(b, p.residue, p.modulus);
  if (!s) return std::nullopt;
  const Int l = lcm(p.modulus, b);
  return Progression::make(l, mod(checked_mul(b, *s), l));
}

Int count_in_interval(const Progression& p, Int lo, Int hi) {
  if (hi <= lo) return 0;
  // Elements n = r + q*a with lo <= n < hi.
  const Int first = floor_div(checked_add(lo, p.modulus - 1 - p.residue), p.modulus);
  const Int last = floor_div(checked_add(hi, -1 - p.residue), p.modulus);
  return last < first ? 0 : last - first + 1;
}

Int count_in_periods(const Progression& p, Int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "count_in_periods needs m >= 1");
  return count_in_interval(p, 0, checked_mul(m, p.modulus));
}

DensityReport multiples_density(std::span<const Int> divisors) {
  DensityReport report;
  report.divisors.assign(divisors.begin(), divisors.end());
  for (Int d : divisors) {
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "density divisors must be >= 2");
  }
  if (divisors.size() > 30) {
    throw Error(ErrorKind::ComplexityRefusal, "inclusion-exclusion limited to 30 divisors");
  }
  Int period = 1;
  for (Int d : divisors) period = lcm(period, d);
  report.period = period;

  const std::size_t n = divisors.size();
  Int count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Int l = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) l = lcm(l, divisors[i]);
    }
    const Int term = period / l;
    count = (std::popcount(mask) % 2 == 1) ? checked_add(count, term) : checked_add(count, -term);
  }
  if (count < 0 || count > period) {
    throw Error(ErrorKind::InconsistentLevels, "inclusion-exclusion count outside [0, period]");
  }
  report.multiples_in_period = count;
  report.density = Rational(count, period);
  return report;
}

}  // namespace bfree
