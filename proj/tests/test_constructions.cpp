#include <doctest.h>

#include <numeric>

#include "monostab/constructions.hpp"
#include "monostab/errors.hpp"
#include "monostab/vnumber.hpp"
#include "test_support.hpp"

using namespace monostab;
using testing::prime_of;

namespace {

// The triangle J_i placed inside the ring of `host`.
MonomialIdeal triangle_in(const MonomialIdeal& host, std::uint32_t i)
{
    const auto t = make_triangle(i);
    std::vector<std::size_t> map;
    for (const auto& name : t.context().names()) map.push_back(host.context().index_of(name));
    return embed(t, host.context_ptr(), map);
}

MonomialIdeal lift(const MonomialIdeal& I, const MonomialIdeal& host)
{
    std::vector<std::size_t> map;
    for (const auto& name : I.context().names()) map.push_back(host.context().index_of(name));
    return embed(I, host.context_ptr(), map);
}

std::vector<AssSet> ass_profile(const MonomialIdeal& I, std::size_t k)
{
    std::vector<AssSet> out;
    for (std::size_t j = 1; j <= k; ++j) out.push_back(associated_primes(power(I, j)));
    return out;
}

}  // namespace

TEST_CASE("builders")
{
    CHECK(make_H(1).to_string() == "(x^3, x^2*y, y^3)");
    CHECK(make_H(2).to_string() == "(x^5, x^2*y^3, y^5)");
    CHECK(make_triangle(2).to_string() == "(x4*x5, x4*x6, x5*x6)");
    CHECK(make_J(3).size() == 6);
    CHECK(make_J(3).context().arity() == 6);
    CHECK(make_L(2, 2).to_string() == "(x0^3*x1*x2, x0^3*x1*x3, x0^3*x2*x3)");
    CHECK(make_composite(1, 2) == make_H(2));
    const auto P = make_composite(3, 1);
    CHECK(P.context().arity() == 9);
    CHECK(P.size() == 9);
    CHECK_FALSE(composite_ring_note(3).empty());

    CHECK_THROWS_AS(make_H(0), ParameterError);
    CHECK_THROWS_AS(make_triangle(0), ParameterError);
    CHECK_THROWS_AS(make_J(1), ParameterError);
    CHECK_THROWS_AS(make_L(1, 1), ParameterError);
    CHECK_THROWS_AS(make_composite(2, 0), ParameterError);
}

TEST_CASE("ground truth and horizons")
{
    CHECK(known_indices_H(3).astab == 1);
    CHECK(known_indices_H(3).vstab == 3);
    CHECK(known_indices_composite(3, 2).astab == 3);
    CHECK(known_indices_composite(3, 2).vstab == 2);
    CHECK(default_horizon(1, 1) == 6);
    CHECK(default_horizon(1, 3) == 8);
    CHECK(default_horizon(3, 2) == 7);
}

TEST_CASE("H power generators match the formula")
{
    for (std::uint32_t b = 1; b <= 3; ++b) {
        const auto H = make_H(b);
        for (std::uint32_t k = 1; k <= 6; ++k) {
            const auto predicted = predict_H_power_generators(b, k);
            CHECK(predicted.size() == std::size_t(k + 1) * (k + 2) / 2);
            const auto Hk = power(H, k);
            CHECK(minimalize(predicted, H.context_ptr()) == Hk);
            if (k < b) CHECK(Hk.size() == predicted.size());
        }
    }
}

TEST_CASE("H v-number formula")
{
    CHECK(predict_v_H(2, 1) == 5);
    CHECK(predict_v_H(2, 2) == 9);
    for (std::uint32_t b = 1; b <= 3; ++b) {
        for (std::uint32_t k = 1; k <= b + 3; ++k) {
            CHECK(std::int64_t(v_global(power(make_H(b), k)).global) == predict_v_H(b, k));
        }
    }
}

TEST_CASE("Ass of a sum in disjoint variables")
{
    const auto J = make_J(3);
    const auto A = triangle_in(J, 1);
    const auto B = triangle_in(J, 2);
    CHECK(sum(A, B) == J);
    const auto pa = ass_profile(A, 4);
    const auto pb = ass_profile(B, 4);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(predict_ass_disjoint_sum(pa, pb, k) == associated_primes(power(J, k)));
    }
    CHECK_THROWS_AS(predict_ass_disjoint_sum(pa, pb, 5), InputError);
    CHECK_THROWS_AS(predict_ass_disjoint_sum(pa, pa, 2), InputError);
}

TEST_CASE("Ass of the composite family")
{
    for (std::uint32_t a = 2; a <= 3; ++a) {
        const auto P = make_composite(a, 1);
        const auto L = lift(make_L(a, 1), P);
        const auto H = lift(make_H(1), P);
        const auto J = lift(make_J(a), P);
        const std::size_t x0 = P.context().index_of("x0");
        const std::size_t depth = a == 2 ? 4 : 3;
        const auto pl = ass_profile(L, depth);
        const auto ph = ass_profile(H, depth);
        for (std::size_t k = 1; k <= depth; ++k) {
            auto with_x0 = associated_primes(power(J, k)).primes();
            with_x0.push_back(MonomialPrime({x0}));
            CHECK(pl[k - 1] == AssSet(with_x0));
            CHECK(ph[k - 1] == AssSet({prime_of(P, {"x", "y"})}));
            CHECK(predict_ass_disjoint_sum(pl, ph, k) == associated_primes(power(P, k)));
        }
    }
}

TEST_CASE("composite v-number formulas")
{
    for (std::uint32_t a = 2; a <= 3; ++a) {
        for (std::uint32_t b = 1; b <= 2; ++b) {
            const auto J = make_J(a);
            const auto L = make_L(a, b);
            const auto I = make_composite(a, b);
            const std::uint32_t depth = a == 2 ? 5 : 3;
            for (std::uint32_t k = 1; k <= depth; ++k) {
                const auto p = predict_v_composites(a, b, k);
                CHECK(p.v_J == std::int64_t(2 * k + a - 3));
                CHECK(std::int64_t(v_global(power(J, k)).global) == p.v_J);
                CHECK(std::int64_t(v_global(power(L, k)).global) == p.v_L);
                CHECK(std::int64_t(v_global(power(I, k)).global) == p.v_I);
                std::int64_t least = INT64_MAX;
                for (std::uint32_t l = 0; l < k; ++l) least = std::min(least, v_I_term(b, k, l));
                CHECK(least == p.v_I);
            }
        }
    }
}
