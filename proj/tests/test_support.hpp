#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "monostab/text_format.hpp"

namespace testing {

inline monostab::MonomialIdeal ideal(std::string_view text) { return monostab::parse_ideal(text); }

inline monostab::Monomial mono(const monostab::MonomialIdeal& ring, std::string_view text)
{
    return monostab::parse_monomial(text, ring.context());
}

inline monostab::MonomialPrime prime_of(const monostab::MonomialIdeal& ring, std::vector<std::string> names)
{
    std::vector<std::size_t> s;
    for (const auto& n : names) s.push_back(ring.context().index_of(n));
    return monostab::MonomialPrime(std::move(s));
}

// Proper nonzero ideal: 1..max_gens generators, each of positive degree.
inline monostab::MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, int max_exp, std::size_t max_gens)
{
    auto ctx = monostab::VariableContext::indexed(n);
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::vector<monostab::Monomial> gens;
    const std::size_t m = count(rng);
    while (gens.size() < m) {
        std::vector<std::uint64_t> x(n);
        std::uint64_t d = 0;
        for (auto& v : x) d += (v = std::uint64_t(e(rng)));
        if (d > 0) gens.push_back(monostab::Monomial::from_exponents(std::span<const std::uint64_t>(x)));
    }
    return monostab::minimalize(std::move(gens), ctx);
}

inline monostab::Monomial random_monomial(std::mt19937& rng, std::size_t n, int max_exp)
{
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<std::uint64_t> x(n);
    for (auto& v : x) v = std::uint64_t(e(rng));
    return monostab::Monomial::from_exponents(std::span<const std::uint64_t>(x));
}

}  // namespace testing
