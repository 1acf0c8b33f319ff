#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "monostab/vnumber.hpp"

namespace monostab {

struct ProfileOptions {
    // Maximum number of minimal generators allowed in any power.
    std::size_t generator_cap = 200000;
    AssOptions ass{};
};

struct ProfileEntry {
    std::size_t k = 0;
    MonomialIdeal power;
    std::size_t component_count = 0;
    AssSet ass;
    VReport v;
};

struct PowerProfile {
    MonomialIdeal ideal;
    std::uint32_t alpha = 0;
    std::vector<ProfileEntry> entries;  // entries[k - 1] describes I^k

    std::size_t horizon() const noexcept { return entries.size(); }
    const ProfileEntry& at(std::size_t k) const { return entries.at(k - 1); }
};

// I^1..I^{k_max}, each power built from the previous one. Throws
// CapacityError naming the first k whose power exceeds the cap.
PowerProfile build_profile(const MonomialIdeal& I, std::size_t k_max, const ProfileOptions& options = {});

// The entry for I^k computed from scratch.
ProfileEntry compute_entry(const MonomialIdeal& I, std::size_t k, const ProfileOptions& options = {});

enum class StabilityKind { ass, v, v_p };

std::string_view to_string(StabilityKind kind) noexcept;

struct Line {
    std::int64_t slope;
    std::int64_t intercept;
    bool operator==(const Line&) const = default;
};

// A horizon-bounded detection. When `conclusive` is false no tail of
// length `window` was found and `index` is 0. `certified` is set only when
// the caller supplied the known answer and the detection matches it.
struct StabilityEstimate {
    StabilityKind kind = StabilityKind::ass;
    std::optional<MonomialPrime> prime;  // kind == v_p
    bool conclusive = false;
    std::size_t index = 0;
    std::size_t horizon = 0;
    std::size_t window = 0;
    bool certified = false;
    std::optional<Line> line;  // v and v_p
    bool ascending = false;    // ass: Ass(I^k) grew weakly at every step
};

// Least k0 <= horizon - window with Ass(I^k) constant on [k0, horizon].
StabilityEstimate detect_astab(const PowerProfile& profile, std::size_t window,
                               std::optional<std::size_t> known = std::nullopt);

// Least k0 <= horizon - window with v(I^k) - alpha*k constant on
// [k0, horizon]; line = (alpha, that constant).
StabilityEstimate detect_vstab(const PowerProfile& profile, std::size_t window,
                               std::optional<std::size_t> known = std::nullopt);

// Least k0 with p in Ass(I^k) and v_p(I^k) - slope*k constant on
// [k0, horizon]; the slope is the common value of the last `window`
// differences and the detection is inconclusive if they disagree.
StabilityEstimate detect_vstab_p(const PowerProfile& profile, const MonomialPrime& p, std::size_t window,
                                 std::optional<std::size_t> known = std::nullopt);

// max_p vstab_p >= astab and vstab <= max_p vstab_p over p in the last
// Ass of the profile.
struct InequalityReport {
    bool conclusive = false;
    StabilityEstimate astab;
    StabilityEstimate vstab;
    std::vector<StabilityEstimate> per_prime;
    std::size_t max_vstab_p = 0;
    bool max_vstab_p_at_least_astab = false;
    bool vstab_at_most_max_vstab_p = false;
};

InequalityReport check_index_inequalities(const PowerProfile& profile, std::size_t window);

}  // namespace monostab
