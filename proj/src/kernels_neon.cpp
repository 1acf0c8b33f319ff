// NEON variant; compiled into every build, populated only on AArch64.

#include "monostab/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace monostab::kernels::detail {

#if defined(__aarch64__) && defined(__ARM_NEON)

namespace {

// Eight u16 lanes per register, two registers per 16-lane block.

bool divides_neon(const Exponent* a, const Exponent* b, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += 8) {
        const uint16x8_t gt = vcgtq_u16(vld1q_u16(a + i), vld1q_u16(b + i));
        if (vmaxvq_u16(gt) != 0) return false;
    }
    return true;
}

std::ptrdiff_t find_divisor_neon(const Exponent* rows, std::size_t count, std::size_t width,
                                 const Exponent* u)
{
    for (std::size_t r = 0; r < count; ++r) {
        if (divides_neon(rows + r * width, u, width)) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

void lcm_neon(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += 8) vst1q_u16(out + i, vmaxq_u16(vld1q_u16(a + i), vld1q_u16(b + i)));
}

void gcd_neon(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += 8) vst1q_u16(out + i, vminq_u16(vld1q_u16(a + i), vld1q_u16(b + i)));
}

void quotient_neon(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += 8) vst1q_u16(out + i, vqsubq_u16(vld1q_u16(a + i), vld1q_u16(b + i)));
}

bool multiply_neon(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; i += 8) {
        const uint16x8_t x = vld1q_u16(a + i);
        const uint16x8_t y = vld1q_u16(b + i);
        const uint16x8_t wrapped = vaddq_u16(x, y);
        const uint16x8_t saturated = vqaddq_u16(x, y);
        if (vminvq_u16(vceqq_u16(wrapped, saturated)) == 0) return false;
        vst1q_u16(out + i, wrapped);
    }
    return true;
}

std::uint32_t degree_neon(const Exponent* a, std::size_t width)
{
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < width; i += 8) d += vaddlvq_u16(vld1q_u16(a + i));
    return d;
}

constexpr KernelTable kNeon{
    "neon",     divides_neon,  find_divisor_neon, lcm_neon,
    gcd_neon,   quotient_neon, multiply_neon,     degree_neon,
};

}  // namespace

const KernelTable* neon_table() noexcept { return &kNeon; }

#else

const KernelTable* neon_table() noexcept { return nullptr; }

#endif

}  // namespace monostab::kernels::detail
