#include <cstdlib>
#include <stdexcept>
#include <string>

#include "trdmo/kernels/kernels.hpp"

namespace trdmo::kernels {

namespace detail {
extern const Ops kScalarOps;
#if defined(__x86_64__) || defined(_M_X64)
const Ops* avx2_ops();
#endif
#if defined(__aarch64__)
const Ops* neon_ops();
#endif
}  // namespace detail

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Ops& ops(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument(std::string("kernel ISA not available: ") +
                                isa_name(isa));
  }
  switch (isa) {
    case Isa::kScalar:
      return detail::kScalarOps;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return *detail::avx2_ops();
#else
      break;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return *detail::neon_ops();
#else
      break;
#endif
  }
  return detail::kScalarOps;
}

namespace {

Isa pick_default() {
  if (const char* env = std::getenv("TRDMO_KERNELS")) {
    const std::string want(env);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (want == isa_name(isa)) {
        if (isa_available(isa)) return isa;
        return Isa::kScalar;  // requested ISA missing on this machine
      }
    }
  }
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

Isa& active_slot() {
  static Isa active = pick_default();
  return active;
}

}  // namespace

const Ops& ops() { return ops(active_slot()); }

Isa active_isa() { return active_slot(); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument(std::string("kernel ISA not available: ") +
                                isa_name(isa));
  }
  active_slot() = isa;
}

}  // namespace trdmo::kernels
