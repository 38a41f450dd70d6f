#include "isogate/kernels.hpp"

namespace isogate::kernels {

std::vector<std::int32_t> quadratic_character_table(std::uint32_t q) {
    std::vector<std::int32_t> chi(q, -1);
    chi[0] = 0;
    for (std::uint64_t y = 1; y <= q / 2; ++y) chi[y * y % q] = 1;
    return chi;
}

std::int64_t character_sum_scalar(const CubicModQ& f, std::span<const std::int32_t> chi) {
    const std::uint64_t q = f.q;
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
        std::uint64_t v = f.c3;
        v = (v * x + f.c2) % q;
        v = (v * x + f.c1) % q;
        v = (v * x + f.c0) % q;
        sum += chi[v];
    }
    return sum;
}

}  // namespace isogate::kernels
