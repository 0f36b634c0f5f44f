// AVX2 variant of the distance scan. Eight 32-bit vertices per iteration;
// per-lane popcounts via the nibble lookup, horizontal byte sums with
// maddubs/madd, then one compare against k. Compiled with -mavx2 and only
// ever called after a runtime CPU check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

namespace ccode::kern {

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

bool all_dist_ge_avx2(std::uint32_t target, const std::uint32_t* verts, std::size_t n, int k) {
    std::size_t i = 0;
    if (n >= 8) {
        const __m256i vt = _mm256_set1_epi32(static_cast<int>(target));
        const __m256i low_nibble = _mm256_set1_epi8(0x0f);
        const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                             0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
        const __m256i ones8 = _mm256_set1_epi8(1);
        const __m256i ones16 = _mm256_set1_epi16(1);
        const __m256i kv = _mm256_set1_epi32(k);
        for (; i + 8 <= n; i += 8) {
            __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(verts + i));
            x = _mm256_xor_si256(x, vt);
            __m256i lo = _mm256_and_si256(x, low_nibble);
            __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low_nibble);
            __m256i cnt8 = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
            __m256i cnt16 = _mm256_maddubs_epi16(cnt8, ones8);
            __m256i cnt32 = _mm256_madd_epi16(cnt16, ones16);
            __m256i below = _mm256_cmpgt_epi32(kv, cnt32);
            if (_mm256_movemask_ps(_mm256_castsi256_ps(below)) != 0) return false;
        }
    }
    for (; i < n; ++i)
        if (std::popcount(target ^ verts[i]) < k) return false;
    return true;
}

}  // namespace ccode::kern

#endif
