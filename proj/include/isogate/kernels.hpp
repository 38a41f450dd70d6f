#pragma once

// Inner loop of naive point counting: the character sum
//     sum_{x in F_q} chi(f(x)),   f(x) = c3 x^3 + c2 x^2 + c1 x + c0,
// with chi the quadratic character of F_q supplied as a lookup table.
//
// A scalar reference implementation and an AVX2 variant exist; the AVX2 one is
// picked at runtime when the CPU supports it. Both must agree bit for bit.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace isogate::kernels {

inline constexpr std::uint32_t kMaxKernelPrime = 1'000'000;

struct CubicModQ {
    std::uint32_t q = 0;
    std::uint32_t c3 = 0, c2 = 0, c1 = 0, c0 = 0;  // reduced mod q
};

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// chi[v] for v in [0, q): 0, +1 or -1.
std::vector<std::int32_t> quadratic_character_table(std::uint32_t q);

std::int64_t character_sum_scalar(const CubicModQ& f, std::span<const std::int32_t> chi);
std::int64_t character_sum_avx2(const CubicModQ& f, std::span<const std::int32_t> chi);

bool cpu_has_avx2();

/// Best ISA available on this machine (scalar if ISOGATE_FORCE_SCALAR is set).
Isa best_isa();

std::int64_t character_sum(const CubicModQ& f, std::span<const std::int32_t> chi,
                           Isa isa = best_isa());

}  // namespace isogate::kernels
