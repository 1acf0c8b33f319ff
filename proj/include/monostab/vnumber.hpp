#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monostab/decomposition.hpp"

namespace monostab {

// Witnesses are monomials: v_p is the least degree of a monomial u with
// I:u = p. This convention is recorded in every serialized report.
inline constexpr const char* kWitnessConvention = "monomial";

struct VEntry {
    MonomialPrime prime;
    std::uint32_t degree;
    Monomial witness;
};

struct VReport {
    // One entry per associated prime, in canonical prime order.
    std::vector<VEntry> per_prime;
    std::uint32_t global = 0;

    const VEntry* find(const MonomialPrime& p) const;
};

// v_p(I); throws NotAssociatedError when p is not in Ass(I).
std::uint32_t v_p(const MonomialIdeal& I, const MonomialPrime& p);

// v_p(I) together with its canonical witness.
VEntry v_entry(const MonomialIdeal& I, const MonomialPrime& p);

VReport v_global(const MonomialIdeal& I);

// Reuses a decomposition and Ass already computed for I.
VReport v_global(const MonomialIdeal& I, std::span<const IrreducibleComponent> components, const AssSet& ass);

// Assembles the report from already confirmed witnesses.
VReport v_global(std::vector<WitnessedPrime> witnessed);

// Closed form for an (x, y)-primary ideal of K[x, y]: with minimal
// generators x^{a_1}, x^{a_2} y^{b_2}, ..., y^{b_m} sorted by falling
// x-degree, v = min_{1 <= i < m} (a_i + b_{i+1} - 2).
// Throws PreconditionError unless I has two variables and contains pure
// powers of both.
std::uint32_t vm_two_variable(const MonomialIdeal& I);

}  // namespace monostab
