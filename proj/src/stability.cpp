#include "monostab/stability.hpp"

#include <algorithm>

#include "monostab/errors.hpp"

namespace monostab {

namespace {

ProfileEntry describe(MonomialIdeal power, std::size_t k, const ProfileOptions& options)
{
    if (power.size() > options.generator_cap) throw CapacityError(k, power.size(), options.generator_cap);
    ProfileEntry e{k, std::move(power), 0, {}, {}};
    const auto comps = irreducible_decomposition(e.power);
    e.component_count = comps.size();
    auto witnessed = witnessed_associated_primes(e.power, comps, options.ass);
    std::vector<MonomialPrime> primes;
    for (const auto& w : witnessed) primes.push_back(w.prime);
    e.ass = AssSet(std::move(primes));
    e.v = v_global(std::move(witnessed));
    return e;
}

void require_proper(const MonomialIdeal& I)
{
    if (I.is_zero() || I.is_unit()) throw UndefinedError("power profiles need a proper nonzero ideal");
}

void require_window(const PowerProfile& profile, std::size_t window)
{
    if (window < 1) throw ParameterError("window must be at least 1");
    if (window >= profile.horizon())
        throw ParameterError("window must be smaller than the profile horizon (" + std::to_string(profile.horizon()) +
                             ")");
}

StabilityEstimate blank(StabilityKind kind, const PowerProfile& profile, std::size_t window)
{
    StabilityEstimate s;
    s.kind = kind;
    s.horizon = profile.horizon();
    s.window = window;
    return s;
}

// Least k0 >= floor such that f(k) == f(horizon) for all k in [k0, horizon].
template <typename F>
std::size_t tail_start(std::size_t floor, std::size_t horizon, F&& value)
{
    const auto last = value(horizon);
    std::size_t k0 = horizon;
    while (k0 > floor && value(k0 - 1) == last) --k0;
    return k0;
}

void settle(StabilityEstimate& s, std::size_t k0, std::optional<std::size_t> known)
{
    s.conclusive = k0 + s.window <= s.horizon;
    s.index = s.conclusive ? k0 : 0;
    s.certified = s.conclusive && known && *known == k0;
}

}  // namespace

ProfileEntry compute_entry(const MonomialIdeal& I, std::size_t k, const ProfileOptions& options)
{
    require_proper(I);
    if (k < 1) throw ParameterError("k must be at least 1");
    return describe(power(I, k), k, options);
}

PowerProfile build_profile(const MonomialIdeal& I, std::size_t k_max, const ProfileOptions& options)
{
    require_proper(I);
    if (k_max < 1) throw ParameterError("k_max must be at least 1");
    PowerProfile profile{I, alpha(I), {}};
    MonomialIdeal current = I;
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (k > 1) {
            current = product(current, I);
            if (current.size() > options.generator_cap)
                throw CapacityError(k, current.size(), options.generator_cap);
        }
        profile.entries.push_back(describe(current, k, options));
    }
    return profile;
}

std::string_view to_string(StabilityKind kind) noexcept
{
    switch (kind) {
    case StabilityKind::ass: return "ass";
    case StabilityKind::v: return "v";
    case StabilityKind::v_p: return "v_p";
    }
    return "?";
}

StabilityEstimate detect_astab(const PowerProfile& profile, std::size_t window, std::optional<std::size_t> known)
{
    require_window(profile, window);
    StabilityEstimate s = blank(StabilityKind::ass, profile, window);
    const std::size_t h = profile.horizon();
    s.ascending = true;
    for (std::size_t k = 1; k < h; ++k) s.ascending = s.ascending && profile.at(k).ass.is_subset_of(profile.at(k + 1).ass);
    settle(s, tail_start(1, h, [&](std::size_t k) -> const AssSet& { return profile.at(k).ass; }), known);
    return s;
}

StabilityEstimate detect_vstab(const PowerProfile& profile, std::size_t window, std::optional<std::size_t> known)
{
    require_window(profile, window);
    StabilityEstimate s = blank(StabilityKind::v, profile, window);
    const std::int64_t slope = profile.alpha;
    auto offset = [&](std::size_t k) { return std::int64_t(profile.at(k).v.global) - slope * std::int64_t(k); };
    settle(s, tail_start(1, profile.horizon(), offset), known);
    if (s.conclusive) s.line = Line{slope, offset(profile.horizon())};
    return s;
}

StabilityEstimate detect_vstab_p(const PowerProfile& profile, const MonomialPrime& p, std::size_t window,
                                 std::optional<std::size_t> known)
{
    require_window(profile, window);
    StabilityEstimate s = blank(StabilityKind::v_p, profile, window);
    s.prime = p;
    const std::size_t h = profile.horizon();
    if (!profile.at(h).ass.contains(p)) return s;

    // First k of the unbroken run of p in Ass(I^k) reaching the horizon.
    std::size_t enter = h;
    while (enter > 1 && profile.at(enter - 1).ass.contains(p)) --enter;
    if (enter + window > h) return s;

    auto vp = [&](std::size_t k) { return std::int64_t(profile.at(k).v.find(p)->degree); };
    const std::int64_t slope = vp(h) - vp(h - 1);
    for (std::size_t k = h - window + 1; k <= h; ++k) {
        if (vp(k) - vp(k - 1) != slope) return s;
    }
    auto offset = [&](std::size_t k) { return vp(k) - slope * std::int64_t(k); };
    settle(s, tail_start(enter, h, offset), known);
    if (s.conclusive) s.line = Line{slope, offset(h)};
    return s;
}

InequalityReport check_index_inequalities(const PowerProfile& profile, std::size_t window)
{
    InequalityReport r;
    r.astab = detect_astab(profile, window);
    r.vstab = detect_vstab(profile, window);
    bool all = r.astab.conclusive && r.vstab.conclusive;
    for (const auto& p : profile.at(profile.horizon()).ass) {
        r.per_prime.push_back(detect_vstab_p(profile, p, window));
        all = all && r.per_prime.back().conclusive;
        r.max_vstab_p = std::max(r.max_vstab_p, r.per_prime.back().index);
    }
    r.conclusive = all;
    if (all) {
        r.max_vstab_p_at_least_astab = r.max_vstab_p >= r.astab.index;
        r.vstab_at_most_max_vstab_p = r.vstab.index <= r.max_vstab_p;
    }
    return r;
}

}  // namespace monostab
