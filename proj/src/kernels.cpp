#include "monostab/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string_view>

namespace monostab::kernels {

namespace detail {
// Defined in the per-ISA translation units; they return nullptr when the
// target was not compiled in.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
}  // namespace detail

namespace {

bool divides_scalar(const Exponent* a, const Exponent* b, std::size_t width)
{
    for (std::size_t i = 0; i < width; ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

std::ptrdiff_t find_divisor_scalar(const Exponent* rows, std::size_t count,
                                   std::size_t width, const Exponent* u)
{
    for (std::size_t r = 0; r < count; ++r) {
        if (divides_scalar(rows + r * width, u, width)) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

void lcm_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; ++i) out[i] = std::max(a[i], b[i]);
}

void gcd_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; ++i) out[i] = std::min(a[i], b[i]);
}

void quotient_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; ++i) out[i] = a[i] > b[i] ? Exponent(a[i] - b[i]) : Exponent(0);
}

bool multiply_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t width)
{
    for (std::size_t i = 0; i < width; ++i) {
        const std::uint32_t s = std::uint32_t(a[i]) + std::uint32_t(b[i]);
        if (s > kMaxExponent) return false;
        out[i] = Exponent(s);
    }
    return true;
}

std::uint32_t degree_scalar(const Exponent* a, std::size_t width)
{
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < width; ++i) d += a[i];
    return d;
}

constexpr KernelTable kScalar{
    "scalar",       divides_scalar,  find_divisor_scalar, lcm_scalar,
    gcd_scalar,     quotient_scalar, multiply_scalar,     degree_scalar,
};

const KernelTable* pick_default() noexcept
{
    const KernelTable* best = &kScalar;
    if (auto* t = detail::neon_table()) best = t;
    if (auto* t = detail::avx2_table()) best = t;
    if (const char* env = std::getenv("MONOSTAB_KERNELS")) {
        const std::string_view want(env);
        for (const KernelTable* t : available()) {
            if (t->name == want) return t;
        }
    }
    return best;
}

std::atomic<const KernelTable*>& slot() noexcept
{
    static std::atomic<const KernelTable*> current{pick_default()};
    return current;
}

}  // namespace

const KernelTable& scalar() noexcept { return kScalar; }
const KernelTable* avx2() noexcept { return detail::avx2_table(); }
const KernelTable* neon() noexcept { return detail::neon_table(); }

std::vector<const KernelTable*> available()
{
    std::vector<const KernelTable*> out{&kScalar};
    if (auto* t = detail::avx2_table()) out.push_back(t);
    if (auto* t = detail::neon_table()) out.push_back(t);
    return out;
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_relaxed); }

void set_active(const KernelTable& table) noexcept { slot().store(&table, std::memory_order_relaxed); }

}  // namespace monostab::kernels
