#include "bfree/automorphism.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "bfree/error.hpp"
#include "bfree/kernels.hpp"
#include "bfree/toeplitz.hpp"

namespace bfree {

namespace {

std::uint64_t low_mask(int length) { return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1); }

template <typename Fn>
void for_each_factor(std::span<const std::uint8_t> symbols, int length, Fn&& fn) {
  if (symbols.size() < static_cast<std::size_t>(length)) return;
  const std::uint64_t mask = low_mask(length);
  std::uint64_t word = 0;
  for (int i = 0; i < length - 1; ++i) word = (word << 1) | symbols[static_cast<std::size_t>(i)];
  for (std::size_t m = static_cast<std::size_t>(length) - 1; m < symbols.size(); ++m) {
    word = ((word << 1) | symbols[m]) & mask;
    if (!fn(word)) return;
  }
}

}  // namespace

SlidingCode SlidingCode::shift(Int j) { return SlidingCode{j, 1, 0b10}; }

SlidingCode SlidingCode::complement() { return SlidingCode{0, 1, 0b01}; }

SymbolWindow apply_code(const SlidingCode& code, const SymbolWindow& window) {
  if (code.width < 1 || code.width > 6) throw Error(ErrorKind::InvalidArgument, "code width must be in [1, 6]");
  if (window.size() < code.width) {
    throw Error(ErrorKind::WindowTooShort, "window shorter than the code width");
  }
  SymbolWindow image{window.start - code.anchor,
                     std::vector<std::uint8_t>(static_cast<std::size_t>(window.size() - code.width + 1))};
  kernels::apply_rule(window.symbols, code.width, code.rule, image.symbols);
  return image;
}

FactorSet::FactorSet(const SymbolWindow& window, int length) : length_(length) {
  if (length < 1 || length > 64) throw Error(ErrorKind::InvalidArgument, "factor length must be in [1, 64]");
  if (window.size() < length) throw Error(ErrorKind::WindowTooShort, "window shorter than the factor length");
  for_each_factor(window.symbols, length, [this](std::uint64_t w) {
    words_.push_back(w);
    return true;
  });
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool FactorSet::contains(std::uint64_t word) const { return std::binary_search(words_.begin(), words_.end(), word); }

bool FactorSet::covers(std::span<const std::uint8_t> symbols) const {
  bool ok = true;
  for_each_factor(symbols, length_, [&](std::uint64_t w) {
    ok = contains(w);
    return ok;
  });
  return ok;
}

std::vector<std::string> FactorSet::words() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (std::uint64_t w : words_) {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i) {
      if ((w >> (length_ - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> language(const SymbolWindow& window, int k) { return FactorSet(window, k).words(); }

const char* to_string(CodeClass c) noexcept {
  switch (c) {
    case CodeClass::ShiftPower: return "shift_power";
    case CodeClass::Complement: return "complement";
    case CodeClass::Other: return "other";
  }
  return "unknown";
}

SearchReport endomorphism_search(const SymbolWindow& window, const SearchOptions& options) {
  const int k = options.width;
  if (k < 1 || k > 5) throw Error(ErrorKind::InvalidArgument, "search width must be in [1, 5]");
  if (options.horizon < 1 || options.horizon > 64) {
    throw Error(ErrorKind::InvalidArgument, "search horizon must be in [1, 64]");
  }
  const Int anchor_lo = -options.anchor_radius;
  const Int anchor_hi = options.anchor_radius - k + 1;
  if (options.anchor_radius < 0 || anchor_hi < anchor_lo) {
    throw Error(ErrorKind::InvalidArgument, "anchor radius too small for the coding width");
  }
  const std::uint64_t anchors = static_cast<std::uint64_t>(anchor_hi - anchor_lo + 1);
  const std::uint64_t rules = std::uint64_t{1} << (1u << k);
  if (rules > options.budget / anchors) {
    throw Error(ErrorKind::ComplexityRefusal, std::to_string(rules) + " rules x " + std::to_string(anchors) +
                                                  " anchors exceeds the budget of " + std::to_string(options.budget));
  }
  const Int image_len = window.size() - k + 1;
  if (image_len < options.horizon || image_len < 1) {
    throw Error(ErrorKind::WindowTooShort, "window leaves fewer than horizon symbols after coding");
  }

  const FactorSet lang(window, options.horizon);
  std::vector<std::uint8_t> negated(window.symbols.size());
  kernels::complement(window.symbols, negated);

  // Per-rule outcome at anchor 0; anchors are applied afterwards as shift powers.
  struct Outcome {
    bool survived = false;
    CodeClass cls = CodeClass::Other;
    Int shift = 0;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(rules));

  const std::span<const std::uint8_t> sym(window.symbols);
  const std::span<const std::uint8_t> neg(negated);
  const auto n = static_cast<std::size_t>(image_len);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint8_t> image(n);
    for (std::uint64_t rule = begin; rule < end; ++rule) {
      kernels::apply_rule(sym, k, rule, image);
      if (!lang.covers(image)) continue;
      Outcome o{true, CodeClass::Other, 0};
      for (int j = 0; j < k && o.cls == CodeClass::Other; ++j) {
        const auto off = static_cast<std::size_t>(j);
        if (kernels::count_mismatch(image, sym.subspan(off, n)) == 0) {
          o.cls = CodeClass::ShiftPower;
          o.shift = j;
        } else if (kernels::count_mismatch(image, neg.subspan(off, n)) == 0) {
          o.cls = CodeClass::Complement;
          o.shift = j;
        }
      }
      outcomes[static_cast<std::size_t>(rule)] = o;
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, rules));
  if (threads <= 1) {
    work(0, rules);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (rules + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
      const std::uint64_t b = i * chunk, e = std::min(rules, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
  }

  SearchReport report;
  report.radius = k;
  report.anchor_radius = options.anchor_radius;
  report.horizon = options.horizon;
  report.candidates_checked = rules * anchors;
  for (std::uint64_t rule = 0; rule < rules; ++rule) {
    const Outcome& o = outcomes[static_cast<std::size_t>(rule)];
    if (!o.survived) continue;
    for (Int anchor = anchor_lo; anchor <= anchor_hi; ++anchor) {
      report.survivors.push_back(Survivor{SlidingCode{anchor, k, rule}, o.cls, o.shift + anchor});
    }
  }
  return report;
}

std::optional<Int> is_shift_power(const SlidingCode& code, const SymbolWindow& window, Int max_shift) {
  const SymbolWindow image = apply_code(code, window);
  std::optional<Int> best;
  for (Int j = -max_shift; j <= max_shift; ++j) {
    // Compare image(m) with x(m + j) on the overlap.
    const Int lo = std::max(image.start, window.start - j);
    const Int hi = std::min(image.end(), window.end() - j);
    if (hi <= lo) continue;
    const auto len = static_cast<std::size_t>(hi - lo);
    const std::span<const std::uint8_t> a(image.symbols.data() + (lo - image.start), len);
    const std::span<const std::uint8_t> b(window.symbols.data() + (lo + j - window.start), len);
    if (kernels::count_mismatch(a, b) == 0 && (!best || std::abs(j) < std::abs(*best))) best = j;
  }
  return best;
}

std::optional<LiftCertificate> alignment_certificate(const Family& family, int t, int width,
                                                     const OdometerElement& h) {
  if (width < 1) throw Error(ErrorKind::InvalidArgument, "coding width must be >= 1");
  if (t < 1 || t > family.depth()) throw Error(ErrorKind::InvalidArgument, "level outside the family");
  if (checked_pow2(t) <= width) {
    throw DepthInsufficient(t, "alignment needs 2^t > width (t = " + std::to_string(t) +
                                   ", width = " + std::to_string(width) + ")");
  }
  const SkeletonBlock a_t = skeleton_exact(family, t);
  const Int p = a_t.period;
  const Int n_t = h.residue(t);
  std::vector<Int> shifted;
  shifted.reserve(a_t.holes.size());
  for (Int hole : a_t.holes) shifted.push_back(mod(hole - n_t, p));
  std::sort(shifted.begin(), shifted.end());

  for (Int kp = 0; kp < width; ++kp) {
    std::vector<Int> moved;
    moved.reserve(shifted.size());
    for (Int j : shifted) moved.push_back(mod(j + kp, p));
    std::sort(moved.begin(), moved.end());
    if (moved != a_t.holes) continue;
    LiftCertificate cert{t, kp, {}};
    // Pair each I with the J it came from: J = I - k' (mod p).
    for (Int hole : a_t.holes) {
      const Int j = mod(hole - kp, p);
      cert.alignment.push_back(hole - j);
    }
    return cert;
  }
  return std::nullopt;
}

std::optional<Int> consistent_lift(const Family& family, int width, const OdometerElement& h) {
  std::optional<Int> common;
  bool any_level = false;
  for (int t = 1; t <= h.depth(); ++t) {
    if (checked_pow2(t) <= width) continue;
    any_level = true;
    const auto cert = alignment_certificate(family, t, width, h);
    if (!cert) return std::nullopt;
    if (common && *common != cert->k_prime) {
      throw Error(ErrorKind::InconsistentLevels, "k' differs between levels");
    }
    common = cert->k_prime;
  }
  if (!any_level) throw DepthInsufficient(h.depth(), "no level with 2^t > width");
  return common;
}

bool divisibility_check(const Family& family, int t, Int n_t, Int k_prime) {
  if (t < 1 || t > family.depth()) throw Error(ErrorKind::InvalidArgument, "level outside the family");
  return mod(n_t - k_prime, checked_pow2(t)) == 0;
}

std::vector<Int> hole_stabilizer(const Family& family, int t, Int k_prime) {
  const SkeletonBlock a_t = skeleton_exact(family, t);
  const Int p = a_t.period;
  std::vector<Int> out;
  for (Int n = 0; n < p; ++n) {
    const Int delta = k_prime - n;
    const bool fixes = std::all_of(a_t.holes.begin(), a_t.holes.end(),
                                   [&](Int hole) { return a_t.is_hole(hole + delta); });
    if (fixes) out.push_back(n);
  }
  return out;
}

namespace {

// Primitive part: drop every element divisible by a smaller (or equal, earlier) element.
std::vector<Int> primitive_part(std::vector<Int> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<Int> out;
  for (Int b : set) {
    if (std::none_of(out.begin(), out.end(), [b](Int a) { return b % a == 0; })) out.push_back(b);
  }
  return out;
}

}  // namespace

ComplementReport complement_membership(const Family& family) {
  ComplementReport report;
  report.dichotomy_case = 2;
  // All elements 2^i b_i are even, so no pair is coprime.
  const Int span = family.period(std::min(family.depth(), 3));
  const Family deep = family.extended_for_range(-span, span);
  const SymbolWindow w = eta_window(deep, -span, span);
  for (Int n = w.start; n + 1 < w.end(); ++n) {
    if (!report.ones_pair_at && w.at(n) == 1 && w.at(n + 1) == 1 && n > 0) report.ones_pair_at = n;
  }
  bool zero_pair = false;
  for (Int n = w.start; n + 1 < w.end(); ++n) zero_pair = zero_pair || (w.at(n) == 0 && w.at(n + 1) == 0);
  report.zero_pair_absent = !zero_pair;
  report.checked_span = w.size();
  report.member = false;
  report.reason = "no coprime pair in B (all elements even); the block 11 occurs in eta but 00 would need "
                  "adjacent multiples of coprime elements";
  return report;
}

ComplementReport complement_membership(std::vector<Int> literal_set) {
  if (literal_set.empty()) throw Error(ErrorKind::EmptyFamily, "literal set must be nonempty");
  for (Int b : literal_set) {
    if (b < 2) throw Error(ErrorKind::NotGreaterThanOne, "literal set elements must be >= 2");
  }
  const std::vector<Int> b_set = primitive_part(std::move(literal_set));
  Int period = 1;
  for (Int b : b_set) period = lcm(period, b);
  if (period > 10'000'000) throw Error(ErrorKind::ComplexityRefusal, "lcm of the literal set is too large");

  // One period of the (periodic) indicator of B-free numbers.
  std::vector<std::uint8_t> eta(static_cast<std::size_t>(period), 1);
  for (Int b : b_set) {
    for (Int n = 0; n < period; n += b) eta[static_cast<std::size_t>(n)] = 0;
  }
  auto at = [&](Int n) { return eta[static_cast<std::size_t>(mod(n, period))]; };

  ComplementReport report;
  report.checked_span = period;
  if (b_set == std::vector<Int>{2}) {
    report.member = true;
    report.dichotomy_case = 0;
    bool shift_is_negation = true;
    for (Int n = 0; n < period; ++n) shift_is_negation = shift_is_negation && (at(n + 1) == 1 - at(n));
    if (!shift_is_negation) throw Error(ErrorKind::InconsistentLevels, "B = {2} but S != not");
    report.reason = "B = {2}: eta alternates, so the shift equals the complement";
    return report;
  }
  for (std::size_t i = 0; i < b_set.size() && report.coprime_pair.empty(); ++i) {
    for (std::size_t j = i + 1; j < b_set.size(); ++j) {
      if (gcd(b_set[i], b_set[j]) == 1) {
        report.coprime_pair = {b_set[i], b_set[j]};
        break;
      }
    }
  }
  if (!report.coprime_pair.empty()) {
    report.dichotomy_case = 1;
    const Int b = report.coprime_pair[0], c = report.coprime_pair[1];
    // eta vanishes on bZ; complement-invariance would need r with eta(b*i + r) = 1 for i = 1..c.
    for (Int r = 0; r < period; ++r) {
      bool blocked = false;
      for (Int i = 1; i <= c && !blocked; ++i) blocked = at(b * i + r) == 0;
      if (!blocked) throw Error(ErrorKind::InconsistentLevels, "coprime-pair obstruction failed");
    }
    report.reason = "coprime pair (" + std::to_string(b) + ", " + std::to_string(c) + "): every progression r + " +
                    std::to_string(b) + "i, i = 1.." + std::to_string(c) + " meets a zero of eta";
    return report;
  }
  report.dichotomy_case = 2;
  bool zero_pair = false;
  for (Int n = 0; n < period; ++n) {
    if (!report.ones_pair_at && at(n) == 1 && at(n + 1) == 1) report.ones_pair_at = n;
    zero_pair = zero_pair || (at(n) == 0 && at(n + 1) == 0);
  }
  report.zero_pair_absent = !zero_pair;
  report.reason = "every pair shares a factor: 11 occurs in eta, 00 never does";
  return report;
}

}  // namespace bfree
