#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfree/sequence.hpp"
#include "bfree/toeplitz.hpp"

namespace bfree {

// Toeplitz sequence closed under Boolean complement:
//   A_1 = B_1 _ ~B_1 _,  B_{t+1} = B_t c_t ~B_t c_t B_t,  A_{t+1} = B_{t+1} _ ~B_{t+1} _.
struct ToeplitzConstruction {
  std::string seed;
  std::vector<int> fill_bits;  // c_1, c_2, ...; missing entries default to 0
  int depth = 1;
};

std::vector<SkeletonBlock> build_blocks(const ToeplitzConstruction& construction);

// The sequence on [lo, hi); positions left as holes by every level throw DepthInsufficient.
SymbolWindow window_of(const ToeplitzConstruction& construction, Int lo, Int hi);

// Levels needed so that [0, n) is completely filled.
int depth_to_fill(const ToeplitzConstruction& construction, Int n);

// Every length-L factor of the span [0, 4 |A_span_depth|) has its complement among the factors.
bool complement_closure_check(const ToeplitzConstruction& construction, int word_len, int span_depth);

// Same check on an arbitrary window.
bool complement_closed(const SymbolWindow& window, int word_len);

// Least p <= max_period with x(n) = x(n + p) across the whole window, if any. Only a statement
// about the generated span.
std::optional<Int> detected_period(const SymbolWindow& window, Int max_period);

}  // namespace bfree
