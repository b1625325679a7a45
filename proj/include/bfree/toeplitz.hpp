#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfree/arithmetic.hpp"
#include "bfree/sequence.hpp"

namespace bfree {

enum class Cell : std::uint8_t { Zero = 0, One = 1, Hole = 2 };

char to_char(Cell c) noexcept;

// A length-p block over {0, 1, hole}; `holes` is always the sorted index list of Hole cells.
struct SkeletonBlock {
  int t = 0;
  Int period = 0;
  std::vector<Cell> cells;
  std::vector<Int> holes;

  static SkeletonBlock from_cells(int t, std::vector<Cell> cells);
  static SkeletonBlock parse(int t, std::string_view text);

  std::string cells_string() const;
  bool is_hole(Int position) const { return cells[static_cast<std::size_t>(mod(position, period))] == Cell::Hole; }

  bool operator==(const SkeletonBlock&) const = default;
};

// Residues r in [0, s) whose sampled orbit in the window is constant. For each residue the
// sample is the run of 2*horizon + 1 consecutive in-window members centred on the middle
// member, so the window must hold (2*horizon + 1) * s symbols. Sound only up to the sample:
// may report residues that are not truly periodic.
std::vector<Int> per_set_brute(const SymbolWindow& window, Int s, Int horizon);

// A_t from the divisibility trichotomy: 0 if some 2^j b_j | s (j <= t), hole if 2^t | s and
// no b_i | s, else the (p_t-periodic) value eta(s).
SkeletonBlock skeleton_exact(const Family& family, int t);

enum class EssentialCase { SamePeriod, SmallGcd, LastGeneratorGcd, AllDivide };

struct EssentialWitness {
  bool essential_violated_by_s = false;
  EssentialCase which = EssentialCase::SamePeriod;
  Int witness = 0;  // w in Per_{p_t} \ Per_s
  Int step = 0;     // eta(witness + step * s) != eta(witness)
};

// Constructive witness that Per_s(eta) != Per_{p_t}(eta) for 1 <= s < p_t.
EssentialWitness essential_check(const Family& family, int t, Int s);

// Cyclic minimal gap between consecutive holes, wraparound term included.
Int sh_gap(const SkeletonBlock& block);
Int sh_gap(const Family& family, int t);

// |holes(A_t)| / p_t.
Rational regularity_ratio(const Family& family, int t);

// {I / 2^t mod b_i : I a hole of A_t}, sorted.
std::vector<Int> residue_classes_of_holes(const Family& family, int t, int i);

struct PeriodicLevel {
  int t = 0;
  Int period = 0;
  bool essential = false;
  // Candidate s -> witness position, for each s < p_t.
  std::map<Int, Int> witness_map;
};

struct PeriodicStructureReport {
  std::vector<PeriodicLevel> levels;
};

// Levels 1..max_t with an exhaustive essential-period check per level (p_t <= limit).
PeriodicStructureReport periodic_structure(const Family& family, int max_t, Int limit = 1'000'000);

}  // namespace bfree
