#include <cstdlib>

#include "isogate/error.hpp"
#include "isogate/kernels.hpp"

namespace isogate::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa best_isa() {
    static const Isa isa = [] {
        if (std::getenv("ISOGATE_FORCE_SCALAR") != nullptr) return Isa::scalar;
        return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    }();
    return isa;
}

std::int64_t character_sum(const CubicModQ& f, std::span<const std::int32_t> chi, Isa isa) {
    if (f.q < 3 || f.q > kMaxKernelPrime || chi.size() != f.q)
        throw Error(ErrorKind::InvalidArgument, "character table does not match the prime");
    if (isa == Isa::avx2 && cpu_has_avx2()) return character_sum_avx2(f, chi);
    return character_sum_scalar(f, chi);
}

}  // namespace isogate::kernels
