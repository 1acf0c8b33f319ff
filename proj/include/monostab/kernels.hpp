#pragma once

// Exponent-vector kernels.
//
// Every monomial is stored as a row of `padded_width(n)` unsigned 16-bit
// lanes; lanes past the arity are zero. The algebra layer only talks to
// these rows through a KernelTable, so the scalar reference and the SIMD
// variants are interchangeable and can be checked against each other.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace monostab::kernels {

using Exponent = std::uint16_t;

inline constexpr std::size_t kLanes = 16;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

constexpr std::size_t padded_width(std::size_t arity) noexcept
{
    return arity == 0 ? kLanes : (arity + kLanes - 1) / kLanes * kLanes;
}

struct KernelTable {
    std::string_view name;

    // a | b, i.e. a <= b lane-wise.
    bool (*divides)(const Exponent* a, const Exponent* b, std::size_t width);

    // Index of the first row (rows laid out back to back) dividing u, or -1.
    std::ptrdiff_t (*find_divisor)(const Exponent* rows, std::size_t count,
                                   std::size_t width, const Exponent* u);

    void (*lcm)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width);
    void (*gcd)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width);

    // a / gcd(a, b): saturating lane-wise subtraction.
    void (*quotient)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width);

    // Returns false (out unspecified) if some lane overflows.
    bool (*multiply)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width);

    std::uint32_t (*degree)(const Exponent* a, std::size_t width);
};

const KernelTable& scalar() noexcept;

// nullptr when the build or the running CPU lacks the instruction set.
const KernelTable* avx2() noexcept;
const KernelTable* neon() noexcept;

// Every table usable on this machine, scalar first.
std::vector<const KernelTable*> available();

// Chosen once on first use: the widest available table, unless the
// environment variable MONOSTAB_KERNELS names another one ("scalar", "avx2").
const KernelTable& active() noexcept;

// Test hook; the table must outlive every later call.
void set_active(const KernelTable& table) noexcept;

}  // namespace monostab::kernels
