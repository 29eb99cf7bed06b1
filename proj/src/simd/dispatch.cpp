#include "normpow/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace normpow::simd {

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("NORMPOW_SIMD")) {
    const std::string v(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (v == isa_name(isa) && isa_supported(isa)) return isa;
    }
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("SIMD variant not supported here: " + std::string(isa_name(isa)));
  }
  active().store(isa, std::memory_order_relaxed);
}

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  if (out.size() != x.size()) throw std::invalid_argument("horner: output size mismatch");
  switch (active_isa()) {
    case Isa::avx2:
      return avx2::horner(coeffs, x, out);
    case Isa::neon:
      return neon::horner(coeffs, x, out);
    case Isa::scalar:
      break;
  }
  scalar::horner(coeffs, x, out);
}

void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv) {
  if (value.size() != x.size() || deriv.size() != x.size()) {
    throw std::invalid_argument("horner_with_derivative: output size mismatch");
  }
  switch (active_isa()) {
    case Isa::avx2:
      return avx2::horner_with_derivative(coeffs, x, value, deriv);
    case Isa::neon:
      return neon::horner_with_derivative(coeffs, x, value, deriv);
    case Isa::scalar:
      break;
  }
  scalar::horner_with_derivative(coeffs, x, value, deriv);
}

}  // namespace normpow::simd
