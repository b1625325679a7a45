#include "bfree/sequence.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "bfree/error.hpp"

namespace bfree {

namespace {

constexpr Int kNoElement = std::numeric_limits<Int>::max();

// 2^i * b, or kNoElement when it exceeds the Int range (such an element divides nothing representable but 0).
Int element_or_max(int i, Int b) {
  if (i > 62) return kNoElement;
  Int out;
  if (__builtin_mul_overflow(Int{1} << i, b, &out)) return kNoElement;
  return out;
}

void check_level(const Family& family, int t, const char* op) {
  if (t < 1 || t > family.depth()) {
    throw Error(ErrorKind::InvalidArgument, std::string(op) + ": level " + std::to_string(t) +
                                                " outside [1, " + std::to_string(family.depth()) + "]");
  }
}

}  // namespace

Family Family::make(std::vector<Int> generators) {
  if (generators.empty()) throw Error(ErrorKind::EmptyFamily, "family needs at least one generator");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Int b = generators[i];
    if (b <= 1) {
      throw Error(ErrorKind::NotGreaterThanOne,
                  "generator b_" + std::to_string(i + 1) + " = " + std::to_string(b) + " is not greater than one");
    }
    if (b % 2 == 0) {
      throw Error(ErrorKind::NotOdd, "generator b_" + std::to_string(i + 1) + " = " + std::to_string(b) + " is even");
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (gcd(generators[i], generators[j]) != 1) {
        const int a = static_cast<int>(i + 1), c = static_cast<int>(j + 1);
        throw NotCoprime(a, c, "generators b_" + std::to_string(a) + " and b_" + std::to_string(c) +
                                   " are not coprime");
      }
    }
  }
  return Family(std::move(generators));
}

Int Family::generator(int i) const {
  check_level(*this, i, "generator");
  return generators_[static_cast<std::size_t>(i - 1)];
}

Int Family::element(int i) const { return checked_mul(checked_pow2(i), generator(i)); }

Int Family::period(int t) const {
  if (t == 0) return 1;
  check_level(*this, t, "period");
  Int p = checked_pow2(t);
  for (int i = 1; i <= t; ++i) p = checked_mul(p, generators_[static_cast<std::size_t>(i - 1)]);
  return p;
}

std::vector<Int> Family::elements(int t) const {
  check_level(*this, t, "elements");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(t));
  for (int i = 1; i <= t; ++i) out.push_back(element(i));
  return out;
}

Family Family::extended_to(int target) const {
  std::vector<Int> gens = generators_;
  Int candidate = 3;
  while (static_cast<int>(gens.size()) < target) {
    bool ok = true;
    for (Int g : gens) {
      if (gcd(g, candidate) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) gens.push_back(candidate);
    candidate += 2;
  }
  return Family(std::move(gens));
}

Family Family::extended_for_range(Int lo, Int hi) const {
  int needed = 1;
  for (Int n : {lo, hi - 1}) {
    const Int a = n < 0 ? -n : n;
    if (a > 0) needed = std::max(needed, 63 - std::countl_zero(static_cast<std::uint64_t>(a)));
  }
  return depth() >= needed ? *this : extended_to(needed);
}

std::uint8_t SymbolWindow::at(Int n) const {
  if (!contains(n)) {
    throw Error(ErrorKind::InvalidArgument, "position " + std::to_string(n) + " outside window");
  }
  return symbols[static_cast<std::size_t>(n - start)];
}

std::string SymbolWindow::to_string() const {
  std::string out;
  out.reserve(symbols.size());
  for (auto s : symbols) out.push_back(s ? '1' : '0');
  return out;
}

SymbolWindow SymbolWindow::from_string(Int start, std::string_view bits) {
  SymbolWindow w{start, {}};
  w.symbols.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorKind::InvalidArgument, "window symbols must be 0 or 1");
    w.symbols.push_back(c == '1' ? 1 : 0);
  }
  return w;
}

int eta_at(const Family& family, Int n) {
  if (n == 0) return 0;
  const int a = v2(n);
  const int limit = std::min(a, family.depth());
  for (int i = 1; i <= limit; ++i) {
    const Int e = element_or_max(i, family.generators()[static_cast<std::size_t>(i - 1)]);
    if (e != kNoElement && n % e == 0) return 0;
  }
  if (a > family.depth()) {
    throw DepthInsufficient(n, "eta(" + std::to_string(n) + ") needs generators beyond depth " +
                                   std::to_string(family.depth()));
  }
  return 1;
}

SymbolWindow eta_window(const Family& family, Int lo, Int hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "eta_window needs lo <= hi");
  SymbolWindow w{lo, std::vector<std::uint8_t>(static_cast<std::size_t>(hi - lo), 1)};
  for (int i = 1; i <= family.depth(); ++i) {
    const Int e = element_or_max(i, family.generators()[static_cast<std::size_t>(i - 1)]);
    if (e == kNoElement) break;
    for (Int n = lo + mod(-lo, e); n < hi; n += e) w.symbols[static_cast<std::size_t>(n - lo)] = 0;
  }
  // Undecided cells: v2(n) > T and no sieved element divides n.
  if (family.depth() < 62) {
    const Int step = Int{1} << (family.depth() + 1);
    for (Int n = lo + mod(-lo, step); n < hi; n += step) {
      if (n != 0 && w.symbols[static_cast<std::size_t>(n - lo)] == 1) {
        throw DepthInsufficient(n, "eta(" + std::to_string(n) + ") needs generators beyond depth " +
                                       std::to_string(family.depth()));
      }
    }
  }
  return w;
}

PeriodCertificate period_certificate(const Family& family, Int n) {
  PeriodCertificate cert;
  cert.position = n;
  if (eta_at(family, n) == 0) {
    for (int j = 1; j <= family.depth(); ++j) {
      const Int e = element_or_max(j, family.generators()[static_cast<std::size_t>(j - 1)]);
      if (e != kNoElement && n % e == 0) {
        cert.kind = PeriodCertificate::Kind::Zero;
        cert.witness = j;
        cert.period = family.period(j);
        return cert;
      }
    }
    throw Error(ErrorKind::InconsistentLevels, "zero of eta without a divisor in the family");
  }
  const int a = v2(n);
  if (a + 1 > family.depth()) {
    throw DepthInsufficient(n, "certificate for " + std::to_string(n) + " needs level " + std::to_string(a + 1));
  }
  cert.kind = PeriodCertificate::Kind::One;
  cert.witness = a;
  cert.period = family.period(a + 1);
  return cert;
}

TautReport taut_check_truncated(const Family& family, int t) {
  check_level(family, t, "taut_check_truncated");
  const std::vector<Int> elems = family.elements(t);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i != j && elems[j] % elems[i] == 0) {
        throw Error(ErrorKind::InconsistentLevels, "truncated family is not primitive");
      }
    }
  }
  TautReport report;
  report.t = t;
  report.base_density = multiples_density(elems).density;
  report.is_taut_at_t = true;
  for (std::size_t skip = 0; skip < elems.size(); ++skip) {
    std::vector<Int> rest;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j != skip) rest.push_back(elems[j]);
    }
    const Rational d = multiples_density(rest).density;
    report.densities_after_removal.push_back(d);
    if (!(d < report.base_density)) report.is_taut_at_t = false;
  }
  return report;
}

}  // namespace bfree
