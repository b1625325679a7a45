#include "bfree/toeplitz.hpp"

#include <algorithm>
#include <set>

#include "bfree/error.hpp"
#include "bfree/kernels.hpp"

namespace bfree {

namespace {

void check_level(const Family& family, int t, const char* op) {
  if (t < 1 || t > family.depth()) {
    throw Error(ErrorKind::InvalidArgument, std::string(op) + ": level " + std::to_string(t) +
                                                " outside [1, " + std::to_string(family.depth()) + "]");
  }
}

bool is_exact_hole(const Family& family, int t, Int s) {
  if (!divides(checked_pow2(t), s)) return false;
  for (int i = 1; i <= t; ++i) {
    if (divides(family.generator(i), s)) return false;
  }
  return true;
}

}  // namespace

char to_char(Cell c) noexcept {
  switch (c) {
    case Cell::Zero: return '0';
    case Cell::One: return '1';
    case Cell::Hole: return '_';
  }
  return '?';
}

SkeletonBlock SkeletonBlock::from_cells(int t, std::vector<Cell> cells) {
  SkeletonBlock block;
  block.t = t;
  block.period = static_cast<Int>(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] == Cell::Hole) block.holes.push_back(static_cast<Int>(i));
  }
  block.cells = std::move(cells);
  return block;
}

SkeletonBlock SkeletonBlock::parse(int t, std::string_view text) {
  std::vector<Cell> cells;
  cells.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': cells.push_back(Cell::Zero); break;
      case '1': cells.push_back(Cell::One); break;
      case '_': cells.push_back(Cell::Hole); break;
      default: throw Error(ErrorKind::InvalidArgument, std::string("bad skeleton cell '") + c + "'");
    }
  }
  return from_cells(t, std::move(cells));
}

std::string SkeletonBlock::cells_string() const {
  std::string out;
  out.reserve(cells.size());
  for (Cell c : cells) out.push_back(to_char(c));
  return out;
}

std::vector<Int> per_set_brute(const SymbolWindow& window, Int s, Int horizon) {
  if (s < 1 || horizon < 1) throw Error(ErrorKind::InvalidArgument, "per_set_brute needs s >= 1 and horizon >= 1");
  const Int len = window.size();
  const Int needed = checked_mul(checked_add(checked_mul(2, horizon), 1), s);
  if (len < needed) {
    throw Error(ErrorKind::WindowTooShort, "window of length " + std::to_string(len) + " cannot sample " +
                                               std::to_string(2 * horizon + 1) + " translates per residue mod " +
                                               std::to_string(s));
  }
  // flags[i] = x(start + i) != x(start + i + s)
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(len - s));
  const std::span<const std::uint8_t> sym(window.symbols);
  kernels::mismatch_flags(sym.first(flags.size()), sym.subspan(static_cast<std::size_t>(s)), flags);

  std::vector<Int> out;
  for (Int r = 0; r < s; ++r) {
    const Int first = mod(r - window.start, s);
    const Int count = (len - 1 - first) / s + 1;
    const Int mid = count / 2;
    const Int lo_q = std::max<Int>(0, mid - horizon);
    const Int hi_q = std::min<Int>(count - 1, mid + horizon);
    bool constant = true;
    for (Int q = lo_q; q < hi_q; ++q) {
      if (flags[static_cast<std::size_t>(first + q * s)]) {
        constant = false;
        break;
      }
    }
    if (constant) out.push_back(r);
  }
  return out;
}

SkeletonBlock skeleton_exact(const Family& family, int t) {
  check_level(family, t, "skeleton_exact");
  const Int p = family.period(t);
  const std::vector<Int> elems = family.elements(t);
  std::vector<Cell> cells(static_cast<std::size_t>(p));
  for (Int s = 0; s < p; ++s) {
    Cell c;
    if (std::any_of(elems.begin(), elems.end(), [s](Int e) { return s % e == 0; })) {
      c = Cell::Zero;
    } else if (is_exact_hole(family, t, s)) {
      c = Cell::Hole;
    } else {
      c = eta_at(family, s) ? Cell::One : Cell::Zero;
    }
    cells[static_cast<std::size_t>(s)] = c;
  }
  return SkeletonBlock::from_cells(t, std::move(cells));
}

EssentialWitness essential_check(const Family& family, int t, Int s) {
  check_level(family, t, "essential_check");
  const Int p = family.period(t);
  if (s < 1 || s > p) throw Error(ErrorKind::InvalidArgument, "essential_check needs 1 <= s <= p_t");
  EssentialWitness out;
  if (s == p) return out;

  int small_gcd = 0;
  for (int i = 1; i <= t - 1; ++i) {
    if (gcd(family.generator(i), s) < family.generator(i)) {
      small_gcd = i;
      break;
    }
  }
  if (small_gcd != 0) {
    const int i = small_gcd;
    out.which = EssentialCase::SmallGcd;
    out.witness = checked_mul(checked_pow2(t - 1), gcd(family.generator(i), s));
    // s * n = -w (mod 2^i b_i) is solvable since gcd(2^i b_i, s) divides w.
    const auto n = solve_congruence(s, -out.witness, family.element(i));
    if (!n) throw Error(ErrorKind::InconsistentLevels, "essential_check: expected solvable congruence");
    out.step = *n;
  } else if (gcd(family.generator(t), s) < family.generator(t)) {
    out.which = EssentialCase::LastGeneratorGcd;
    out.witness = family.element(t);
    out.step = checked_pow2(t + 1);
  } else {
    out.which = EssentialCase::AllDivide;
    out.witness = family.element(t);
    out.step = 1;
  }
  if (is_exact_hole(family, t, out.witness)) {
    throw Error(ErrorKind::InconsistentLevels, "essential_check: witness is a hole of A_t");
  }
  const Int moved = checked_add(out.witness, checked_mul(out.step, s));
  if (eta_at(family, moved) == eta_at(family, out.witness)) {
    throw Error(ErrorKind::InconsistentLevels, "essential_check: constructed witness does not separate");
  }
  out.essential_violated_by_s = true;
  return out;
}

Int sh_gap(const SkeletonBlock& block) {
  const auto& h = block.holes;
  if (h.empty()) return 0;
  Int best = block.period - h.back() + h.front();
  for (std::size_t j = 1; j < h.size(); ++j) best = std::min(best, h[j] - h[j - 1]);
  return best;
}

Int sh_gap(const Family& family, int t) { return sh_gap(skeleton_exact(family, t)); }

Rational regularity_ratio(const Family& family, int t) {
  const SkeletonBlock block = skeleton_exact(family, t);
  return Rational(static_cast<Int>(block.holes.size()), block.period);
}

std::vector<Int> residue_classes_of_holes(const Family& family, int t, int i) {
  check_level(family, t, "residue_classes_of_holes");
  if (i < 1 || i > t) throw Error(ErrorKind::InvalidArgument, "residue_classes_of_holes needs 1 <= i <= t");
  const Int step = checked_pow2(t);
  const Int b = family.generator(i);
  std::set<Int> classes;
  for (Int hole : skeleton_exact(family, t).holes) classes.insert(mod(hole / step, b));
  return {classes.begin(), classes.end()};
}

PeriodicStructureReport periodic_structure(const Family& family, int max_t, Int limit) {
  check_level(family, max_t, "periodic_structure");
  PeriodicStructureReport report;
  for (int t = 1; t <= max_t; ++t) {
    const Int p = family.period(t);
    if (p > limit) {
      throw Error(ErrorKind::ComplexityRefusal, "p_" + std::to_string(t) + " = " + std::to_string(p) +
                                                    " exceeds the exhaustive-check limit");
    }
    if (t > 1 && p % family.period(t - 1) != 0) {
      throw Error(ErrorKind::InconsistentLevels, "periods are not nested");
    }
    PeriodicLevel level{t, p, true, {}};
    for (Int s = 1; s < p; ++s) {
      const EssentialWitness w = essential_check(family, t, s);
      level.essential = level.essential && w.essential_violated_by_s;
      level.witness_map.emplace(s, w.witness);
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace bfree
