#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfree/arithmetic.hpp"
#include "bfree/odometer.hpp"
#include "bfree/sequence.hpp"

namespace bfree {

// Sliding block code: image(m) = rule bit at word x[m+anchor .. m+anchor+width-1], the word read
// as a binary number with the first symbol most significant.
struct SlidingCode {
  Int anchor = 0;
  int width = 1;
  std::uint64_t rule = 0;

  static SlidingCode shift(Int j);
  static SlidingCode complement();

  int output(std::uint32_t word) const { return static_cast<int>((rule >> word) & 1u); }

  bool operator==(const SlidingCode&) const = default;
};

// Image of the window under the code, on every m whose coding block lies inside the window.
SymbolWindow apply_code(const SlidingCode& code, const SymbolWindow& window);

// Set of length-L factors of a window, packed as integers (L <= 64).
class FactorSet {
 public:
  FactorSet(const SymbolWindow& window, int length);

  int length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(std::uint64_t word) const;
  // True iff every length-L factor of `symbols` belongs to the set.
  bool covers(std::span<const std::uint8_t> symbols) const;
  std::vector<std::string> words() const;

 private:
  int length_;
  std::vector<std::uint64_t> words_;
};

std::vector<std::string> language(const SymbolWindow& window, int k);

enum class CodeClass { ShiftPower, Complement, Other };

const char* to_string(CodeClass c) noexcept;

struct Survivor {
  SlidingCode code;
  CodeClass cls = CodeClass::Other;
  // ShiftPower: image = S^shift x. Complement: image = not(S^shift x).
  Int shift = 0;
};

struct SearchOptions {
  int width = 1;
  // Coding blocks [anchor, anchor + width - 1] are kept inside [-anchor_radius, anchor_radius].
  Int anchor_radius = 0;
  // Length of the image factors validated against the window's language.
  int horizon = 8;
  std::uint64_t budget = 1'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SearchReport {
  int radius = 0;
  Int anchor_radius = 0;
  int horizon = 0;
  std::uint64_t candidates_checked = 0;
  std::vector<Survivor> survivors;  // sorted by (rule, anchor)
};

// Exhaustive filter over all 2^(2^width) rules and every admissible anchor. A rule survives
// when each length-`horizon` factor of its image already occurs in the window. True
// endomorphisms always survive; surviving `Other` codes are only candidates.
SearchReport endomorphism_search(const SymbolWindow& window, const SearchOptions& options);

// j with image = S^j x on every position where both sides are defined, |j| <= max_shift.
std::optional<Int> is_shift_power(const SlidingCode& code, const SymbolWindow& window, Int max_shift);

struct LiftCertificate {
  int t0 = 0;
  Int k_prime = 0;
  // I_i - J_i for each hole I_i of A_t paired with its aligned hole J_i of A_t(h).
  std::vector<Int> alignment;
};

// Searches k' in [0, width) with (J + k') mod p_t = I, J the holes of A_t(h). An empty result
// means h cannot lift to an automorphism of coding width <= width at this level.
std::optional<LiftCertificate> alignment_certificate(const Family& family, int t, int width,
                                                     const OdometerElement& h);

// Certificates at every level t with 2^t > width up to h.depth(); k' must agree across levels.
std::optional<Int> consistent_lift(const Family& family, int width, const OdometerElement& h);

bool divisibility_check(const Family& family, int t, Int n_t, Int k_prime);

// All n in [0, p_t) with (holes - n + k') mod p_t = holes.
std::vector<Int> hole_stabilizer(const Family& family, int t, Int k_prime);

struct ComplementReport {
  bool member = false;
  // 0: B = {2}; 1: some coprime pair; 2: every pair shares a factor.
  int dichotomy_case = 0;
  std::string reason;
  std::vector<Int> coprime_pair;        // case 1
  std::optional<Int> ones_pair_at;      // case 2: eta(n) = eta(n+1) = 1
  bool zero_pair_absent = false;        // case 2: no eta(n) = eta(n+1) = 0 on the checked span
  Int checked_span = 0;
};

// For the family B = {2^i b_i}: always case 2, never a member.
ComplementReport complement_membership(const Family& family);
// For a literal finite B (reduced to its primitive part first); member iff that part is {2}.
ComplementReport complement_membership(std::vector<Int> literal_set);

}  // namespace bfree
