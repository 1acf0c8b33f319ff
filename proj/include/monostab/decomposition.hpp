#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monostab/ideal.hpp"

namespace monostab {

// (x_i^{e_i} : e_i > 0), stored densely with 0 meaning "variable absent".
class IrreducibleComponent {
public:
    // Throws PreconditionError if every exponent is zero.
    explicit IrreducibleComponent(std::vector<Exponent> exponents);

    const std::vector<Exponent>& exponents() const noexcept { return exponents_; }
    MonomialPrime radical() const;

    // u lies in the component iff u_i >= e_i for some i in the support.
    bool contains(const Monomial& u) const;

    // Largest monomial outside the component, restricted to its support:
    // prod x_i^{e_i - 1}.
    Monomial corner() const;

    MonomialIdeal to_ideal(ContextPtr ctx) const;

    bool operator==(const IrreducibleComponent&) const noexcept = default;
    // By radical, then by exponents.
    std::strong_ordering operator<=>(const IrreducibleComponent& other) const;

    std::string to_string(const VariableContext& ctx) const;

private:
    std::vector<Exponent> exponents_;
};

// A canonically ordered set of monomial primes.
class AssSet {
public:
    AssSet() = default;
    explicit AssSet(std::vector<MonomialPrime> primes);

    const std::vector<MonomialPrime>& primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }
    bool empty() const noexcept { return primes_.empty(); }
    bool contains(const MonomialPrime& p) const;
    bool is_subset_of(const AssSet& other) const;

    auto begin() const noexcept { return primes_.begin(); }
    auto end() const noexcept { return primes_.end(); }

    bool operator==(const AssSet&) const noexcept = default;

    std::string to_string(const VariableContext& ctx) const;

private:
    std::vector<MonomialPrime> primes_;
};

// Irredundant irreducible decomposition, canonically ordered.
//
// Computed incrementally as the maximal standard monomials of the Artinian
// closure I + (x_i^{E_i + 1}), E the generator exponent bound: adding a
// generator g removes every corner it divides and proposes, for each
// variable of g, the corner lowered to g_i - 1 in that variable; a proposal
// survives iff multiplying it by any variable lands in the ideal.
//
// Throws UndefinedError on the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

struct AssOptions {
    // Run the exhaustive box enumeration as a cross-check whenever the
    // witness box has at most this many monomials.
    std::uint64_t exhaustive_box_limit = 1u << 15;
};

// Ass(I). Candidates are the radicals of the irreducible components, each
// confirmed by a witness u with I:u = p; small inputs are also enumerated
// exhaustively and both answers must agree (std::logic_error otherwise).
AssSet associated_primes(const MonomialIdeal& I, const AssOptions& options = {});

// The same, reusing a decomposition already at hand.
AssSet associated_primes(const MonomialIdeal& I, std::span<const IrreducibleComponent> components,
                         const AssOptions& options = {});

struct WitnessedPrime {
    MonomialPrime prime;
    Monomial witness;  // canonical minimum-degree u with I:u = prime
};

// Ass(I) with the witness that confirmed each prime, in canonical prime order.
std::vector<WitnessedPrime> witnessed_associated_primes(const MonomialIdeal& I,
                                                        std::span<const IrreducibleComponent> components,
                                                        const AssOptions& options = {});

// Every prime arising as I:u for u in the box 0 <= u_i <= E_i.
AssSet associated_primes_exhaustive(const MonomialIdeal& I);

// Number of monomials in the witness box, saturating at UINT64_MAX.
std::uint64_t witness_box_size(const MonomialIdeal& I);

AssSet minimal_primes(const MonomialIdeal& I);

// Minimum-degree u not in I with I:u = p, ties going to the canonically
// first monomial; nullopt iff p is not associated. Search runs over the
// p-primary components: u restricted to p is a component corner, and the
// remaining variables carry a minimum-degree element of the intersection,
// over x_i in p, of the ideals {g restricted off p : g|_p divides x_i u|_p}.
std::optional<Monomial> find_witness(const MonomialIdeal& I, const MonomialPrime& p);
std::optional<Monomial> find_witness(const MonomialIdeal& I, const MonomialPrime& p,
                                     std::span<const IrreducibleComponent> components);

// Degree-ascending scan of the box 0 <= u_i <= box[i], canonical order
// within a degree; first hit wins.
std::optional<Monomial> find_witness_in_box(const MonomialIdeal& I, const MonomialPrime& p,
                                            std::span<const Exponent> box);

// Ass memo keyed by canonical ideal form; safe for concurrent use.
class AssCache {
public:
    explicit AssCache(AssOptions options = {}) : options_(options) {}

    AssSet get(const MonomialIdeal& I);
    std::size_t size() const;
    std::size_t hits() const;

private:
    AssOptions options_;
    mutable std::mutex mutex_;
    std::map<std::string, AssSet> table_;
    std::size_t hits_ = 0;
};

}  // namespace monostab
