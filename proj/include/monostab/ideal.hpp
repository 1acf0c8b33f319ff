#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monostab/monomial.hpp"

namespace monostab {

// The prime generated by a nonempty set of variables.
class MonomialPrime {
public:
    // Sorts and deduplicates; throws PreconditionError on an empty support.
    explicit MonomialPrime(std::vector<std::size_t> support);

    const std::vector<std::size_t>& support() const noexcept { return support_; }
    std::size_t size() const noexcept { return support_.size(); }
    bool contains(std::size_t var) const noexcept;
    bool is_subset_of(const MonomialPrime& other) const noexcept;

    // p + q
    MonomialPrime unite(const MonomialPrime& other) const;

    bool operator==(const MonomialPrime&) const noexcept = default;
    // Smaller primes first, then lexicographic on the sorted support.
    std::strong_ordering operator<=>(const MonomialPrime& other) const noexcept;

    std::string to_string(const VariableContext& ctx) const;

private:
    std::vector<std::size_t> support_;
};

// A monomial ideal held by its minimal generators in canonical order, so
// structural equality is ideal equality. No generators: the zero ideal.
// The single generator 1: the unit ideal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(ContextPtr ctx);

    static MonomialIdeal unit(ContextPtr ctx);

    const VariableContext& context() const noexcept { return *ctx_; }
    const ContextPtr& context_ptr() const noexcept { return ctx_; }
    std::size_t arity() const noexcept { return ctx_->arity(); }
    std::size_t width() const noexcept { return ctx_->width(); }

    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }

    // Generators packed row after row, width() lanes each.
    const std::vector<Exponent>& rows() const noexcept { return rows_; }

    bool contains(const Monomial& u) const;

    // Per variable, the largest exponent over the minimal generators.
    std::vector<Exponent> max_exponents() const;

    bool operator==(const MonomialIdeal& other) const noexcept;

    // "(x^3, x^2*y, y^3)"; the zero ideal prints as "(0)".
    std::string to_string() const;

private:
    friend MonomialIdeal minimalize(std::vector<Monomial> gens, ContextPtr ctx);

    ContextPtr ctx_;
    std::vector<Monomial> gens_;
    std::vector<Exponent> rows_;
};

// Divisibility-minimal subset in canonical order.
MonomialIdeal minimalize(std::vector<Monomial> gens, ContextPtr ctx);

MonomialIdeal power(const MonomialIdeal& I, std::size_t k);

// Minimal generators of I*J.
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

// I : u
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u);

bool contains(const MonomialIdeal& I, const Monomial& u);

// Initial degree; throws UndefinedError on the zero ideal.
std::uint32_t alpha(const MonomialIdeal& I);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);

// u * I
MonomialIdeal scale(const Monomial& u, const MonomialIdeal& I);

MonomialIdeal prime_ideal(ContextPtr ctx, const MonomialPrime& p);

// Rewrites I into a larger ring; variable i of I becomes target variable map[i].
MonomialIdeal embed(const MonomialIdeal& I, ContextPtr target, std::span<const std::size_t> map);

// Throws InputError unless both carry the same variable names.
void require_same_context(const VariableContext& a, const VariableContext& b);

}  // namespace monostab
