#include "bfree/odometer.hpp"

#include <algorithm>

#include "bfree/error.hpp"

namespace bfree {

namespace {

std::vector<Int> moduli_for(const Family& family, int depth) {
  if (depth < 1 || depth > family.depth()) {
    throw Error(ErrorKind::InvalidArgument, "odometer depth " + std::to_string(depth) + " outside [1, " +
                                                std::to_string(family.depth()) + "]");
  }
  std::vector<Int> out;
  for (int t = 1; t <= depth; ++t) out.push_back(family.period(t));
  return out;
}

void require_same_shape(const OdometerElement& g, const OdometerElement& h) {
  if (g.moduli() != h.moduli()) {
    throw Error(ErrorKind::DepthMismatch, "odometer elements of depth " + std::to_string(g.depth()) + " and " +
                                              std::to_string(h.depth()) + " are not comparable");
  }
}

}  // namespace

OdometerElement OdometerElement::from_integer(const Family& family, Int n, int depth) {
  std::vector<Int> moduli = moduli_for(family, depth);
  std::vector<Int> residues;
  for (Int p : moduli) residues.push_back(mod(n, p));
  return OdometerElement(std::move(residues), std::move(moduli));
}

OdometerElement OdometerElement::make(const Family& family, std::vector<Int> residues) {
  std::vector<Int> moduli = moduli_for(family, static_cast<int>(residues.size()));
  for (std::size_t t = 0; t < residues.size(); ++t) {
    if (residues[t] < 0 || residues[t] >= moduli[t]) {
      throw Error(ErrorKind::InvalidArgument, "residue n_" + std::to_string(t + 1) + " outside [0, p_t)");
    }
    if (t > 0 && residues[t] % moduli[t - 1] != residues[t - 1]) {
      throw Error(ErrorKind::InvalidArgument, "residues n_" + std::to_string(t) + ", n_" + std::to_string(t + 1) +
                                                  " are not compatible");
    }
  }
  return OdometerElement(std::move(residues), std::move(moduli));
}

Int OdometerElement::residue(int t) const {
  if (t < 1 || t > depth()) throw Error(ErrorKind::DepthMismatch, "level beyond element depth");
  return residues_[static_cast<std::size_t>(t - 1)];
}

OdometerElement OdometerElement::operator+(const OdometerElement& other) const {
  require_same_shape(*this, other);
  std::vector<Int> sum(residues_.size());
  for (std::size_t t = 0; t < sum.size(); ++t) {
    // Both summands are < p_t <= Int max / 2 in practice; keep it checked regardless.
    sum[t] = mod(checked_add(residues_[t], other.residues_[t]), moduli_[t]);
  }
  return OdometerElement(std::move(sum), moduli_);
}

OdometerElement OdometerElement::translate() const {
  std::vector<Int> out(residues_.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = (residues_[t] + 1) % moduli_[t];
  return OdometerElement(std::move(out), moduli_);
}

Rational metric(const OdometerElement& g, const OdometerElement& h) {
  require_same_shape(g, h);
  // Disagreement at level i forces disagreement at every deeper level, so the first one wins.
  for (int i = 1; i <= g.depth(); ++i) {
    if (g.residue(i) != h.residue(i)) return Rational(1, i + 1);
  }
  return Rational(0);
}

SkeletonBlock shifted_skeleton(const Family& family, int t, const OdometerElement& g) {
  const Int shift = g.residue(t);
  const SkeletonBlock base = skeleton_exact(family, t);
  std::vector<Cell> cells(base.cells.size());
  const auto p = static_cast<std::size_t>(base.period);
  for (std::size_t i = 0; i < p; ++i) cells[i] = base.cells[(i + static_cast<std::size_t>(shift)) % p];
  return SkeletonBlock::from_cells(t, std::move(cells));
}

Classification classify_at_depth(const Family& family, const OdometerElement& g, std::optional<Int> shift_bound) {
  const int depth = g.depth();
  const Int bound = shift_bound.value_or(checked_pow2(depth) - 1);
  if (bound < 0 || bound > family.period(depth)) {
    throw Error(ErrorKind::InvalidArgument, "shift bound must lie in [0, p_depth]");
  }
  std::vector<SkeletonBlock> blocks;
  for (int t = 1; t <= depth; ++t) blocks.push_back(skeleton_exact(family, t));
  auto on_holes = [&](Int shift) {
    for (int t = 1; t <= depth; ++t) {
      if (!blocks[static_cast<std::size_t>(t - 1)].is_hole(checked_add(g.residue(t), shift))) return false;
    }
    return true;
  };
  Classification out;
  out.in_g2 = on_holes(0);
  for (Int m = 0; m <= bound && !out.g1_witness; ++m) {
    if (on_holes(m)) {
      out.g1_witness = m;
    } else if (m != 0 && on_holes(-m)) {
      out.g1_witness = -m;
    }
  }
  out.in_g0_at_depth = !out.g1_witness.has_value();
  return out;
}

std::vector<Cell> point_of(const Family& family, const OdometerElement& g, Int lo, Int hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "point_of needs lo <= hi");
  std::vector<SkeletonBlock> blocks;
  for (int t = 1; t <= g.depth(); ++t) blocks.push_back(skeleton_exact(family, t));
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (Int i = lo; i < hi; ++i) {
    Cell value = Cell::Hole;
    for (int t = 1; t <= g.depth(); ++t) {
      const SkeletonBlock& b = blocks[static_cast<std::size_t>(t - 1)];
      const Cell c = b.cells[static_cast<std::size_t>(mod(checked_add(g.residue(t), i), b.period))];
      if (c == Cell::Hole) continue;
      if (value != Cell::Hole && value != c) {
        throw Error(ErrorKind::InconsistentLevels, "levels disagree at position " + std::to_string(i));
      }
      value = c;
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace bfree
