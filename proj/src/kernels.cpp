#include "ccode/kernels.hpp"

#include <atomic>
#include <bit>

namespace ccode::kern {

const char* impl_name(Impl impl) {
    switch (impl) {
        case Impl::scalar: return "scalar";
        case Impl::avx2: return "avx2";
    }
    return "?";
}

bool all_dist_ge_scalar(std::uint32_t target, const std::uint32_t* verts, std::size_t n, int k) {
    for (std::size_t i = 0; i < n; ++i)
        if (std::popcount(target ^ verts[i]) < k) return false;
    return true;
}

namespace {

using ScanFn = bool (*)(std::uint32_t, const std::uint32_t*, std::size_t, int);

Impl detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return Impl::avx2;
#endif
    return Impl::scalar;
}

ScanFn fn_for(Impl impl) {
#if defined(__x86_64__) || defined(_M_X64)
    if (impl == Impl::avx2) return all_dist_ge_avx2;
#endif
    (void)impl;
    return all_dist_ge_scalar;
}

struct Dispatch {
    Impl impl;
    std::atomic<ScanFn> fn;
    Dispatch() : impl(detect()), fn(fn_for(impl)) {}
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

Impl active_impl() { return dispatch().impl; }

bool select_impl(Impl impl) {
#if defined(__x86_64__) || defined(_M_X64)
    if (impl == Impl::avx2 && !cpu_has_avx2()) return false;
#else
    if (impl == Impl::avx2) return false;
#endif
    dispatch().impl = impl;
    dispatch().fn.store(fn_for(impl), std::memory_order_relaxed);
    return true;
}

bool all_dist_ge(std::uint32_t target, const std::uint32_t* verts, std::size_t n, int k) {
    return dispatch().fn.load(std::memory_order_relaxed)(target, verts, n, k);
}

std::size_t first_dist_lt(std::uint32_t target, const std::uint32_t* verts, std::size_t n, int k) {
    for (std::size_t i = 0; i < n; ++i)
        if (std::popcount(target ^ verts[i]) < k) return i;
    return n;
}

}  // namespace ccode::kern
