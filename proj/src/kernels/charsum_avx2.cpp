#include "isogate/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define ISOGATE_X86 1
#else
#define ISOGATE_X86 0
#endif

namespace isogate::kernels {

#if ISOGATE_X86

namespace {

// Horner step t * x + c mod q on four lanes. All operands are < 2^20, so the
// product is < 2^40 and exact in a double; floor(t * x / q) may be off by one,
// which the two compare/blend corrections fix.
__attribute__((target("avx2"))) inline __m256d horner_step(__m256d t, __m256d x, __m256d c,
                                                          __m256d q, __m256d inv_q) {
    const __m256d v = _mm256_add_pd(_mm256_mul_pd(t, x), c);
    const __m256d k = _mm256_floor_pd(_mm256_mul_pd(v, inv_q));
    __m256d rem = _mm256_sub_pd(v, _mm256_mul_pd(k, q));
    rem = _mm256_add_pd(rem, _mm256_and_pd(_mm256_cmp_pd(rem, _mm256_setzero_pd(), _CMP_LT_OQ), q));
    rem = _mm256_sub_pd(rem, _mm256_and_pd(_mm256_cmp_pd(rem, q, _CMP_GE_OQ), q));
    return rem;
}

}  // namespace

__attribute__((target("avx2"))) std::int64_t character_sum_avx2(const CubicModQ& f,
                                                                 std::span<const std::int32_t> chi) {
    const std::uint32_t q = f.q;
    const __m256d vq = _mm256_set1_pd(static_cast<double>(q));
    const __m256d inv_q = _mm256_set1_pd(1.0 / static_cast<double>(q));
    const __m256d c3 = _mm256_set1_pd(f.c3), c2 = _mm256_set1_pd(f.c2);
    const __m256d c1 = _mm256_set1_pd(f.c1), c0 = _mm256_set1_pd(f.c0);
    const __m256d step = _mm256_set1_pd(4.0);
    __m256d x = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    __m128i acc = _mm_setzero_si128();

    std::uint32_t i = 0;
    for (; i + 4 <= q; i += 4) {
        __m256d t = horner_step(c3, x, c2, vq, inv_q);
        t = horner_step(t, x, c1, vq, inv_q);
        t = horner_step(t, x, c0, vq, inv_q);
        const __m128i idx = _mm256_cvttpd_epi32(t);
        acc = _mm_add_epi32(acc, _mm_i32gather_epi32(chi.data(), idx, 4));
        x = _mm256_add_pd(x, step);
    }
    alignas(16) std::int32_t lanes[4];
    _mm_store_si128(reinterpret_cast<__m128i*>(lanes), acc);
    std::int64_t sum = static_cast<std::int64_t>(lanes[0]) + lanes[1] + lanes[2] + lanes[3];
    for (std::uint64_t xs = i; xs < q; ++xs) {
        std::uint64_t v = f.c3;
        v = (v * xs + f.c2) % q;
        v = (v * xs + f.c1) % q;
        v = (v * xs + f.c0) % q;
        sum += chi[v];
    }
    return sum;
}

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

#else

std::int64_t character_sum_avx2(const CubicModQ& f, std::span<const std::int32_t> chi) {
    return character_sum_scalar(f, chi);
}

bool cpu_has_avx2() { return false; }

#endif

}  // namespace isogate::kernels
