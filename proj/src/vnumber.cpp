#include "monostab/vnumber.hpp"

#include <algorithm>
#include <limits>

#include "monostab/errors.hpp"

namespace monostab {

const VEntry* VReport::find(const MonomialPrime& p) const
{
    for (const auto& e : per_prime) {
        if (e.prime == p) return &e;
    }
    return nullptr;
}

VEntry v_entry(const MonomialIdeal& I, const MonomialPrime& p)
{
    const auto comps = irreducible_decomposition(I);
    auto u = find_witness(I, p, comps);
    if (!u) throw NotAssociatedError(p.to_string(I.context()) + " is not associated to " + I.to_string());
    const std::uint32_t d = u->degree();
    return VEntry{p, d, std::move(*u)};
}

std::uint32_t v_p(const MonomialIdeal& I, const MonomialPrime& p) { return v_entry(I, p).degree; }

VReport v_global(const MonomialIdeal& I, std::span<const IrreducibleComponent> components, const AssSet& ass)
{
    if (ass.empty()) throw UndefinedError("the v-number needs at least one associated prime");
    VReport report;
    report.global = std::numeric_limits<std::uint32_t>::max();
    for (const auto& p : ass) {
        auto u = find_witness(I, p, components);
        if (!u) throw NotAssociatedError(p.to_string(I.context()) + " is not associated to " + I.to_string());
        const std::uint32_t d = u->degree();
        report.global = std::min(report.global, d);
        report.per_prime.push_back(VEntry{p, d, std::move(*u)});
    }
    return report;
}

VReport v_global(std::vector<WitnessedPrime> witnessed)
{
    if (witnessed.empty()) throw UndefinedError("the v-number needs at least one associated prime");
    VReport report;
    report.global = std::numeric_limits<std::uint32_t>::max();
    for (auto& w : witnessed) {
        const std::uint32_t d = w.witness.degree();
        report.global = std::min(report.global, d);
        report.per_prime.push_back(VEntry{std::move(w.prime), d, std::move(w.witness)});
    }
    return report;
}

VReport v_global(const MonomialIdeal& I)
{
    const auto comps = irreducible_decomposition(I);
    const AssSet ass = associated_primes(I, comps);
    return v_global(I, comps, ass);
}

std::uint32_t vm_two_variable(const MonomialIdeal& I)
{
    if (I.arity() != 2) throw PreconditionError("the closed form needs exactly two variables");
    if (I.is_zero() || I.is_unit()) throw PreconditionError("the closed form needs a proper nonzero ideal");

    std::vector<Monomial> stairs = I.generators();
    std::sort(stairs.begin(), stairs.end(), [](const Monomial& a, const Monomial& b) { return a[0] > b[0]; });
    if (stairs.front()[1] != 0 || stairs.back()[0] != 0)
        throw PreconditionError("ideal is not (x, y)-primary: a pure power of each variable is required");

    // Minimal generators in two variables form a strict staircase.
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i + 1 < stairs.size(); ++i) {
        const std::uint32_t a = stairs[i][0];
        const std::uint32_t b = stairs[i + 1][1];
        best = std::min(best, a + b - 2);
    }
    return best;
}

}  // namespace monostab
