#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "monostab/kernels.hpp"

namespace monostab {

using kernels::Exponent;

// Ordered, named variables of the ambient ring K[x_1, ..., x_n].
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names);

    static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);

    // x_1, ..., x_n (or x_{first}, ..., x_{first+n-1}).
    static std::shared_ptr<const VariableContext> indexed(std::size_t n, std::size_t first = 1,
                                                          const std::string& stem = "x");

    std::size_t arity() const noexcept { return names_.size(); }
    std::size_t width() const noexcept { return kernels::padded_width(names_.size()); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    // Index of a variable name, or arity() if absent.
    std::size_t index_of(const std::string& name) const noexcept;

    bool operator==(const VariableContext& other) const noexcept { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

// Dense exponent vector. Lanes beyond the arity are kept at zero so the
// SIMD kernels can work on whole registers.
class Monomial {
public:
    Monomial() = default;

    // The unit monomial 1.
    explicit Monomial(std::size_t arity);

    Monomial(std::size_t arity, std::initializer_list<std::uint64_t> exponents);

    // Throws OverflowError if an exponent exceeds the lane range.
    static Monomial from_exponents(std::span<const std::uint64_t> exponents);
    static Monomial from_exponents(std::span<const Exponent> exponents);

    // x_i^e in the given arity.
    static Monomial variable(std::size_t arity, std::size_t i, std::uint64_t e = 1);

    std::size_t arity() const noexcept { return arity_; }
    std::uint32_t degree() const noexcept { return degree_; }
    bool is_unit() const noexcept { return degree_ == 0; }

    Exponent operator[](std::size_t i) const noexcept { return lanes_[i]; }
    std::span<const Exponent> exponents() const noexcept { return {lanes_.data(), arity_}; }
    const Exponent* lanes() const noexcept { return lanes_.data(); }
    std::size_t width() const noexcept { return lanes_.size(); }

    // Variables with positive exponent.
    std::vector<std::size_t> support() const;

    bool divides(const Monomial& other) const;

    // Checked product; throws OverflowError.
    Monomial operator*(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;
    // this / gcd(this, other)
    Monomial quotient(const Monomial& other) const;
    // this^k, checked.
    Monomial pow(std::uint64_t k) const;

    // Replace one exponent.
    Monomial with(std::size_t i, std::uint64_t e) const;

    bool operator==(const Monomial& other) const noexcept
    {
        return arity_ == other.arity_ && lanes_ == other.lanes_;
    }

    // Canonical order: ascending degree, then descending lexicographic
    // exponents (x_1-heavy first). For two variables: x^3 < x^2y < y^3.
    std::strong_ordering operator<=>(const Monomial& other) const noexcept;

    std::string to_string(const VariableContext& ctx) const;

private:
    Monomial(std::size_t arity, std::vector<Exponent> lanes);
    void refresh_degree();
    void check_same_arity(const Monomial& other) const;

    std::size_t arity_ = 0;
    std::uint32_t degree_ = 0;
    std::vector<Exponent> lanes_;
};

}  // namespace monostab
