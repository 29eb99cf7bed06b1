#pragma once

#include <span>
#include <string_view>

namespace normpow::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
/// Whether the running CPU and this build both support the variant.
bool isa_supported(Isa isa);
/// Best supported variant on this machine.
Isa detected_isa();

/// Variant used by the dispatching entry points below. Defaults to
/// detected_isa(), or to the value of NORMPOW_SIMD (scalar|avx2|neon) when set.
Isa active_isa();
/// Throws std::invalid_argument if the variant is unsupported.
void set_active_isa(Isa isa);

// Batch Horner evaluation of sum_k coeffs[k] x^k at every x[i].
//
// Every variant performs, per point, exactly the scalar sequence
//   acc = coeffs[n-1]; acc = acc * x + coeffs[k] for k = n-2 .. 0
// with separate multiply and add, so all variants are bit-identical.
// out.size() must equal x.size(). An empty coefficient list yields zeros.
void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);

/// Value and first derivative in one pass:
///   d = d * x + acc; acc = acc * x + coeffs[k].
void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv);

namespace scalar {
void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);
void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv);
}  // namespace scalar

namespace avx2 {
void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);
void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv);
}  // namespace avx2

namespace neon {
void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);
void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv);
}  // namespace neon

}  // namespace normpow::simd
