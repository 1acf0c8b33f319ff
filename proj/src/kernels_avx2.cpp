// Reached only after a runtime CPU check; each kernel carries its own
// target attribute so the rest of the build stays baseline x86-64.

#include "monostab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define MONOSTAB_HAVE_X86 1
#include <immintrin.h>
#endif

namespace monostab::kernels::detail {

#if defined(MONOSTAB_HAVE_X86) && (defined(__GNUC__) || defined(__clang__))

#define MONOSTAB_AVX2 __attribute__((target("avx2")))

namespace {

// All widths are multiples of 16 lanes, i.e. whole 256-bit registers.

MONOSTAB_AVX2 inline __m256i load(const Exponent* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
MONOSTAB_AVX2 inline void store(Exponent* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// a <= b  <=>  max(a, b) == b
MONOSTAB_AVX2 inline bool block_divides(__m256i a, __m256i b)
{
    const __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(a, b), b);
    return _mm256_movemask_epi8(eq) == -1;
}

MONOSTAB_AVX2 bool divides_avx2(const Exponent* a, const Exponent* b, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += kLanes) {
        if (!block_divides(load(a + i), load(b + i))) return false;
    }
    return true;
}

MONOSTAB_AVX2 std::ptrdiff_t find_divisor_avx2(const Exponent* rows, std::size_t count, std::size_t width,
                                 const Exponent* u)
{
    if (width == kLanes) {
        const __m256i target = load(u);
        std::size_t r = 0;
        // Two rows per iteration keeps both load ports busy.
        for (; r + 2 <= count; r += 2) {
            const __m256i g0 = load(rows + r * kLanes);
            const __m256i g1 = load(rows + (r + 1) * kLanes);
            const __m256i e0 = _mm256_cmpeq_epi16(_mm256_max_epu16(g0, target), target);
            const __m256i e1 = _mm256_cmpeq_epi16(_mm256_max_epu16(g1, target), target);
            if (_mm256_movemask_epi8(e0) == -1) return static_cast<std::ptrdiff_t>(r);
            if (_mm256_movemask_epi8(e1) == -1) return static_cast<std::ptrdiff_t>(r + 1);
        }
        for (; r < count; ++r) {
            if (block_divides(load(rows + r * kLanes), target)) return static_cast<std::ptrdiff_t>(r);
        }
        return -1;
    }
    for (std::size_t r = 0; r < count; ++r) {
        if (divides_avx2(rows + r * width, u, width)) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

MONOSTAB_AVX2 void lcm_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += kLanes) store(out + i, _mm256_max_epu16(load(a + i), load(b + i)));
}

MONOSTAB_AVX2 void gcd_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += kLanes) store(out + i, _mm256_min_epu16(load(a + i), load(b + i)));
}

MONOSTAB_AVX2 void quotient_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += kLanes) store(out + i, _mm256_subs_epu16(load(a + i), load(b + i)));
}

MONOSTAB_AVX2 bool multiply_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += kLanes) {
        const __m256i x = load(a + i);
        const __m256i y = load(b + i);
        const __m256i wrapped = _mm256_add_epi16(x, y);
        const __m256i saturated = _mm256_adds_epu16(x, y);
        if (_mm256_movemask_epi8(_mm256_cmpeq_epi16(wrapped, saturated)) != -1) return false;
        store(out + i, wrapped);
    }
    return true;
}

MONOSTAB_AVX2 std::uint32_t degree_avx2(const Exponent* a, std::size_t width)
{
    // Widen to 32 bits with madd against ones, then reduce.
    const __m256i ones = _mm256_set1_epi16(1);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t i = 0; i < width; i += kLanes) acc = _mm256_add_epi32(acc, _mm256_madd_epi16(load(a + i), ones));
    // madd treats lanes as signed; exponents above 0x7FFF are fixed up below.
    alignas(32) std::int32_t parts[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(parts), acc);
    std::int64_t sum = 0;
    for (std::int32_t p : parts) sum += p;
    for (std::size_t i = 0; i < width; ++i) {
        if (a[i] & 0x8000) sum += 0x10000;
    }
    return static_cast<std::uint32_t>(sum);
}

constexpr KernelTable kAvx2{
    "avx2",     divides_avx2,  find_divisor_avx2, lcm_avx2,
    gcd_avx2,   quotient_avx2, multiply_avx2,     degree_avx2,
};

}  // namespace

const KernelTable* avx2_table() noexcept
{
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2_table() noexcept { return nullptr; }

#endif

}  // namespace monostab::kernels::detail
