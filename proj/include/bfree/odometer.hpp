#pragma once

#include <optional>
#include <vector>

#include "bfree/arithmetic.hpp"
#include "bfree/sequence.hpp"
#include "bfree/toeplitz.hpp"

namespace bfree {

// Depth-T approximation of an element of lim Z/p_t Z: residues n_t in [0, p_t) with
// n_{t+1} = n_t (mod p_t). The moduli travel with the value so arithmetic needs no family.
class OdometerElement {
 public:
  static OdometerElement from_integer(const Family& family, Int n, int depth);
  // Validates ranges and compatibility.
  static OdometerElement make(const Family& family, std::vector<Int> residues);

  int depth() const noexcept { return static_cast<int>(residues_.size()); }
  const std::vector<Int>& residues() const noexcept { return residues_; }
  const std::vector<Int>& moduli() const noexcept { return moduli_; }
  // 1-based level.
  Int residue(int t) const;

  OdometerElement operator+(const OdometerElement& other) const;
  OdometerElement translate() const;

  bool operator==(const OdometerElement&) const = default;

 private:
  OdometerElement(std::vector<Int> residues, std::vector<Int> moduli)
      : residues_(std::move(residues)), moduli_(std::move(moduli)) {}

  std::vector<Int> residues_;
  std::vector<Int> moduli_;
};

// max{1/(i+1) : n_i != n'_i}, 0 when equal.
Rational metric(const OdometerElement& g, const OdometerElement& h);

// A_t(g) = (A_t A_t)[n_t, n_t + p_t).
SkeletonBlock shifted_skeleton(const Family& family, int t, const OdometerElement& g);

struct Classification {
  bool in_g2 = false;
  std::optional<Int> g1_witness;
  bool in_g0_at_depth = false;
};

// Default shift bound 2^depth - 1 keeps any found witness unique (holes of A_depth are
// 2^depth apart). Passing a larger bound (at most p_depth) is allowed.
Classification classify_at_depth(const Family& family, const OdometerElement& g,
                                 std::optional<Int> shift_bound = std::nullopt);

// x(g) on [lo, hi) over {0, 1, hole}: each position takes the value of any level that fills it.
std::vector<Cell> point_of(const Family& family, const OdometerElement& g, Int lo, Int hi);

}  // namespace bfree
