#include <cstdlib>
#include <string>

#include "bfree/error.hpp"
#include "bfree/kernels.hpp"

namespace bfree::kernels {

namespace {

const KernelTable& select() {
  if (const char* forced = std::getenv("BFREE_ISA")) {
    const std::string name(forced);
    if (name == "scalar") return table(Isa::Scalar);
    if (name == "avx2" && available(Isa::Avx2)) return table(Isa::Avx2);
    if (name == "neon" && available(Isa::Neon)) return table(Isa::Neon);
  }
  if (available(Isa::Avx2)) return table(Isa::Avx2);
  if (available(Isa::Neon)) return table(Isa::Neon);
  return table(Isa::Scalar);
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::InvalidArgument, "kernel operands differ in length");
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
      return detail::neon_table() != nullptr;
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) {
    throw Error(ErrorKind::InvalidArgument, std::string("kernel set not available: ") + std::string(to_string(isa)));
  }
  switch (isa) {
    case Isa::Avx2: return *detail::avx2_table();
    case Isa::Neon: return *detail::neon_table();
    case Isa::Scalar: break;
  }
  return detail::scalar_table();
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

void apply_rule(std::span<const std::uint8_t> in, int width, std::uint64_t rule, std::span<std::uint8_t> out) {
  if (width < 1 || width > 6) throw Error(ErrorKind::InvalidArgument, "rule width must be in [1, 6]");
  if (in.size() + 1 < out.size() + static_cast<std::size_t>(width)) {
    throw Error(ErrorKind::InvalidArgument, "apply_rule input shorter than output + width - 1");
  }
  active().apply_rule(in.data(), out.size(), width, rule, out.data());
}

std::size_t count_mismatch(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  require_same_size(a.size(), b.size());
  return active().count_mismatch(a.data(), b.data(), a.size());
}

void mismatch_flags(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, std::span<std::uint8_t> out) {
  require_same_size(a.size(), b.size());
  require_same_size(a.size(), out.size());
  active().mismatch_flags(a.data(), b.data(), a.size(), out.data());
}

void complement(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  require_same_size(in.size(), out.size());
  active().complement(in.data(), in.size(), out.data());
}

}  // namespace bfree::kernels
