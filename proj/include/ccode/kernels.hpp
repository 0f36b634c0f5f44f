#pragma once
// Hamming-distance scan kernels. The backtracking searches spend most of
// their time asking one question: is a candidate vertex at distance >= k
// from every vertex in a strip of the current walk? A scalar reference
// implementation and an AVX2 variant are selected at runtime; both must
// agree exactly (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>

namespace ccode::kern {

enum class Impl { scalar, avx2 };

const char* impl_name(Impl impl);

// Implementation picked for this process (AVX2 when the CPU supports it).
Impl active_impl();

// Force a specific implementation; returns false (and leaves the selection
// unchanged) if the CPU cannot run it. Intended for tests and benchmarks.
bool select_impl(Impl impl);

// True iff popcount(target ^ verts[i]) >= k for all i in [0, n).
bool all_dist_ge(std::uint32_t target, const std::uint32_t* verts, std::size_t n, int k);

// Index of the first i with popcount(target ^ verts[i]) < k, or n if none.
std::size_t first_dist_lt(std::uint32_t target, const std::uint32_t* verts, std::size_t n, int k);

// Direct entry points, kept callable so the variants can be cross-checked.
bool all_dist_ge_scalar(std::uint32_t target, const std::uint32_t* verts, std::size_t n, int k);
#if defined(__x86_64__) || defined(_M_X64)
bool all_dist_ge_avx2(std::uint32_t target, const std::uint32_t* verts, std::size_t n, int k);
bool cpu_has_avx2();
#endif

}  // namespace ccode::kern
