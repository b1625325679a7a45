// Brute-force reference implementations. Nothing here calls into the library
// beyond plain data types, so a bug in a fast path cannot hide behind itself.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int pos_mod(Int a, Int m) {
  m = m < 0 ? -m : m;
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

// Generators followed by the smallest odd integers > 1 coprime to everything before.
inline std::vector<Int> extend_generators(std::vector<Int> gens, std::size_t count) {
  Int candidate = 3;
  while (gens.size() < count) {
    bool ok = true;
    for (Int g : gens) ok = ok && std::gcd(g, candidate) == 1;
    if (ok && std::find(gens.begin(), gens.end(), candidate) == gens.end()) gens.push_back(candidate);
    candidate += 2;
  }
  return gens;
}

inline std::vector<Int> elements(const std::vector<Int>& gens, std::size_t t) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < t; ++i) out.push_back((Int{1} << (i + 1)) * gens[i]);
  return out;
}

// eta(n) with enough generators appended that every element 2^i b_i <= |n| is present.
inline int eta(const std::vector<Int>& gens, Int n) {
  if (n == 0) return 0;
  const Int a = n < 0 ? -n : n;
  std::size_t need = 0;
  while ((Int{1} << (need + 1)) <= a) ++need;
  const auto full = extend_generators(gens, std::max(need, gens.size()));
  for (std::size_t i = 0; i < full.size(); ++i) {
    const Int e = (Int{1} << (i + 1)) * full[i];
    if (e > a) continue;
    if (a % e == 0) return 0;
  }
  return 1;
}

inline Int period(const std::vector<Int>& gens, int t) {
  Int p = Int{1} << t;
  for (int i = 0; i < t; ++i) p *= gens[static_cast<std::size_t>(i)];
  return p;
}

// Holes by divisibility: 2^t | s and no b_i | s.
inline std::vector<Int> holes_by_divisibility(const std::vector<Int>& gens, int t) {
  std::vector<Int> out;
  const Int p = period(gens, t);
  for (Int s = 0; s < p; ++s) {
    if (s % (Int{1} << t) != 0) continue;
    bool hit = false;
    for (int i = 0; i < t; ++i) hit = hit || s % gens[static_cast<std::size_t>(i)] == 0;
    if (!hit) out.push_back(s);
  }
  return out;
}

// Holes by behaviour: residues s mod p_t on which eta is not constant over |k| <= K.
inline std::vector<Int> holes_by_scan(const std::vector<Int>& gens, int t, Int horizon) {
  std::vector<Int> out;
  const Int p = period(gens, t);
  for (Int s = 0; s < p; ++s) {
    const int first = eta(gens, s - horizon * p);
    for (Int k = -horizon + 1; k <= horizon; ++k) {
      if (eta(gens, s + k * p) != first) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

// s is a period of n over |k| <= horizon.
inline bool periodic_at(const std::vector<Int>& gens, Int n, Int s, Int horizon) {
  const int v = eta(gens, n);
  for (Int k = -horizon; k <= horizon; ++k) {
    if (eta(gens, n + k * s) != v) return false;
  }
  return true;
}

inline std::optional<Int> solve_congruence(Int a, Int b, Int m) {
  const Int am = m < 0 ? -m : m;
  const Int g = std::gcd(a < 0 ? -a : a, am);
  for (Int x = 0; x < am / g; ++x) {
    if (pos_mod(a * x - b, am) == 0) return x;
  }
  return std::nullopt;
}

inline std::set<Int> members(Int modulus, Int residue, Int lo, Int hi) {
  std::set<Int> out;
  for (Int n = lo; n < hi; ++n) {
    if (pos_mod(n - residue, modulus) == 0) out.insert(n);
  }
  return out;
}

inline Int multiples_in_period(const std::vector<Int>& divisors, Int period) {
  Int count = 0;
  for (Int r = 0; r < period; ++r) {
    for (Int d : divisors) {
      if (r % d == 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

// Sliding code, big-endian rule word, anchor 0, plain loops.
inline std::vector<std::uint8_t> apply_rule(const std::vector<std::uint8_t>& in, int width, std::uint64_t rule) {
  std::vector<std::uint8_t> out;
  if (in.size() < static_cast<std::size_t>(width)) return out;
  for (std::size_t i = 0; i + static_cast<std::size_t>(width) <= in.size(); ++i) {
    unsigned word = 0;
    for (int j = 0; j < width; ++j) word = (word << 1) | in[i + static_cast<std::size_t>(j)];
    out.push_back(static_cast<std::uint8_t>((rule >> word) & 1u));
  }
  return out;
}

inline std::set<std::string> factors(const std::string& bits, std::size_t len) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + len <= bits.size(); ++i) out.insert(bits.substr(i, len));
  return out;
}

}  // namespace oracle
