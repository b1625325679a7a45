#include "bfree/counterexample.hpp"

#include "bfree/automorphism.hpp"
#include "bfree/error.hpp"
#include "bfree/kernels.hpp"

namespace bfree {

namespace {

std::vector<Cell> complement_cells(const std::vector<Cell>& word) {
  std::vector<Cell> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out[i] = word[i] == Cell::One ? Cell::Zero : Cell::One;
  return out;
}

void append(std::vector<Cell>& dst, const std::vector<Cell>& src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace

std::vector<SkeletonBlock> build_blocks(const ToeplitzConstruction& construction) {
  if (construction.seed.empty()) throw Error(ErrorKind::InvalidArgument, "seed block must be nonempty");
  if (construction.depth < 1) throw Error(ErrorKind::InvalidArgument, "construction depth must be >= 1");
  std::vector<Cell> b;
  for (char c : construction.seed) {
    if (c != '0' && c != '1') throw Error(ErrorKind::InvalidArgument, "seed must be over {0,1}");
    b.push_back(c == '1' ? Cell::One : Cell::Zero);
  }
  for (int bit : construction.fill_bits) {
    if (bit != 0 && bit != 1) throw Error(ErrorKind::InvalidArgument, "fill bits must be 0 or 1");
  }

  std::vector<SkeletonBlock> blocks;
  for (int t = 1; t <= construction.depth; ++t) {
    if (t > 1) {
      const std::size_t idx = static_cast<std::size_t>(t - 2);
      const Cell c = (idx < construction.fill_bits.size() && construction.fill_bits[idx] == 1) ? Cell::One : Cell::Zero;
      const std::vector<Cell> nb = complement_cells(b);
      std::vector<Cell> next;
      next.reserve(3 * b.size() + 2);
      append(next, b);
      next.push_back(c);
      append(next, nb);
      next.push_back(c);
      append(next, b);
      b = std::move(next);
    }
    std::vector<Cell> a;
    a.reserve(2 * b.size() + 2);
    append(a, b);
    a.push_back(Cell::Hole);
    append(a, complement_cells(b));
    a.push_back(Cell::Hole);
    blocks.push_back(SkeletonBlock::from_cells(t, std::move(a)));
  }

  // Refinement: A_{t+1} agrees with A_t A_t A_t on the cells A_t fills.
  for (std::size_t t = 1; t < blocks.size(); ++t) {
    const SkeletonBlock& prev = blocks[t - 1];
    const SkeletonBlock& cur = blocks[t];
    if (cur.period != 3 * prev.period) throw Error(ErrorKind::InconsistentLevels, "block length is not tripled");
    for (Int i = 0; i < cur.period; ++i) {
      const Cell c = prev.cells[static_cast<std::size_t>(i % prev.period)];
      if (c != Cell::Hole && cur.cells[static_cast<std::size_t>(i)] != c) {
        throw Error(ErrorKind::InconsistentLevels, "A_" + std::to_string(t + 1) + " does not refine A_" +
                                                       std::to_string(t) + "^3");
      }
    }
  }
  return blocks;
}

SymbolWindow window_of(const ToeplitzConstruction& construction, Int lo, Int hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "window_of needs lo <= hi");
  const std::vector<SkeletonBlock> blocks = build_blocks(construction);
  SymbolWindow w{lo, std::vector<std::uint8_t>(static_cast<std::size_t>(hi - lo))};
  for (Int n = lo; n < hi; ++n) {
    Cell value = Cell::Hole;
    for (const SkeletonBlock& b : blocks) {
      const Cell c = b.cells[static_cast<std::size_t>(mod(n, b.period))];
      if (c == Cell::Hole) continue;
      if (value != Cell::Hole && value != c) {
        throw Error(ErrorKind::InconsistentLevels, "levels disagree at position " + std::to_string(n));
      }
      value = c;
    }
    if (value == Cell::Hole) {
      throw DepthInsufficient(n, "position " + std::to_string(n) + " is a hole of every level up to " +
                                     std::to_string(construction.depth));
    }
    w.symbols[static_cast<std::size_t>(n - lo)] = value == Cell::One ? 1 : 0;
  }
  return w;
}

int depth_to_fill(const ToeplitzConstruction& construction, Int n) {
  // Holes of A_t sit at |B_t| and 2|B_t| + 1 (mod |A_t|); [0, n) is filled once |B_t| >= n.
  Int b_len = static_cast<Int>(construction.seed.size());
  int depth = 1;
  while (b_len < n) {
    b_len = checked_add(checked_mul(3, b_len), 2);
    ++depth;
  }
  return depth;
}

bool complement_closed(const SymbolWindow& window, int word_len) {
  const FactorSet factors(window, word_len);
  const std::uint64_t mask = word_len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << word_len) - 1);
  for (const std::string& word : factors.words()) {
    std::uint64_t packed = 0;
    for (char c : word) packed = (packed << 1) | (c == '1' ? 1u : 0u);
    if (!factors.contains(~packed & mask)) return false;
  }
  return true;
}

std::optional<Int> detected_period(const SymbolWindow& window, Int max_period) {
  const std::span<const std::uint8_t> sym(window.symbols);
  for (Int p = 1; p <= max_period && p < window.size(); ++p) {
    const auto n = static_cast<std::size_t>(window.size() - p);
    if (kernels::count_mismatch(sym.first(n), sym.subspan(static_cast<std::size_t>(p))) == 0) return p;
  }
  return std::nullopt;
}

bool complement_closure_check(const ToeplitzConstruction& construction, int word_len, int span_depth) {
  if (span_depth < 1) throw Error(ErrorKind::InvalidArgument, "span depth must be >= 1");
  const std::vector<SkeletonBlock> blocks = build_blocks(ToeplitzConstruction{construction.seed, construction.fill_bits,
                                                                            span_depth});
  const Int span = checked_mul(4, blocks.back().period);
  return complement_closed(window_of(construction, 0, span), word_len);
}

}  // namespace bfree
