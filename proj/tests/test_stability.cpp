#include <doctest.h>

#include "monostab/constructions.hpp"
#include "monostab/errors.hpp"
#include "monostab/stability.hpp"
#include "test_support.hpp"

using namespace monostab;
using testing::ideal;
using testing::prime_of;

namespace {

std::vector<std::uint32_t> v_values(const PowerProfile& p)
{
    std::vector<std::uint32_t> out;
    for (const auto& e : p.entries) out.push_back(e.v.global);
    return out;
}

}  // namespace

TEST_CASE("power profiles")
{
    const auto H1 = build_profile(make_H(1), 3);
    CHECK(H1.horizon() == 3);
    CHECK(H1.alpha == 3);
    CHECK(v_values(H1) == std::vector<std::uint32_t>{2, 5, 8});

    const auto J1 = build_profile(make_triangle(1), 3);
    CHECK(J1.at(1).ass.size() == 3);
    CHECK(J1.at(2).ass.size() == 4);
    CHECK(J1.at(3).ass.size() == 4);

    const auto x = build_profile(ideal("vars: x, y\nx\n"), 4);
    CHECK(v_values(x) == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(build_profile(make_H(1), 0), ParameterError);
}

TEST_CASE("incremental entries equal entries computed from scratch")
{
    const auto I = make_composite(2, 1);
    const auto profile = build_profile(I, 4);
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto e = compute_entry(I, k);
        CHECK(e.power == profile.at(k).power);
        CHECK(e.ass == profile.at(k).ass);
        CHECK(e.component_count == profile.at(k).component_count);
        CHECK(e.v.global == profile.at(k).v.global);
    }
}

TEST_CASE("capacity errors name the offending power")
{
    ProfileOptions opts;
    opts.generator_cap = 10;
    try {
        build_profile(make_H(2), 5, opts);
        FAIL("expected a capacity error");
    } catch (const CapacityError& e) {
        CHECK(power(make_H(2), e.k()).size() > 10);
        CHECK(power(make_H(2), e.k() - 1).size() <= 10);
    }
}

TEST_CASE("astab detection")
{
    for (std::uint32_t b = 1; b <= 3; ++b) {
        const auto est = detect_astab(build_profile(make_H(b), 5), 2, 1);
        CHECK(est.conclusive);
        CHECK(est.index == 1);
        CHECK(est.certified);
        CHECK(est.ascending);
    }
    const auto J = detect_astab(build_profile(make_J(3), 5), 2);
    CHECK(J.conclusive);
    CHECK(J.index == 3);
    CHECK(J.ascending);
    CHECK_FALSE(J.certified);

    const auto wrong = detect_astab(build_profile(make_J(3), 5), 2, 2);
    CHECK_FALSE(wrong.certified);

    CHECK(detect_astab(build_profile(ideal("vars: x, y\nx\ny\n"), 3), 2).index == 1);
}

TEST_CASE("astab is inconclusive when the horizon is too short")
{
    const auto est = detect_astab(build_profile(make_J(3), 3), 2);
    CHECK_FALSE(est.conclusive);
    CHECK(est.index == 0);
}

TEST_CASE("vstab detection")
{
    const auto H3 = detect_vstab(build_profile(make_H(3), 7), 2, 3);
    CHECK(H3.conclusive);
    CHECK(H3.index == 3);
    CHECK(H3.certified);
    CHECK(H3.line == Line{7, -1});

    const auto J1 = detect_vstab(build_profile(make_triangle(1), 4), 2);
    CHECK(J1.index == 1);
    CHECK(J1.line == Line{2, -1});

    const auto x = detect_vstab(build_profile(ideal("vars: x, y\nx\n"), 4), 2);
    CHECK(x.index == 1);
    CHECK(x.line == Line{1, -1});
}

TEST_CASE("vstab_p detection")
{
    const auto H2 = build_profile(make_H(2), 5);
    const auto m = detect_vstab_p(H2, prime_of(H2.ideal, {"x", "y"}), 2);
    CHECK(m.conclusive);
    CHECK(m.index == 2);
    CHECK(m.line == Line{5, -1});

    const auto J1 = build_profile(make_triangle(1), 5);
    const auto m1 = detect_vstab_p(J1, prime_of(J1.ideal, {"x1", "x2", "x3"}), 2);
    CHECK(m1.conclusive);
    CHECK(m1.index == 2);

    const auto x = build_profile(ideal("vars: x, y\nx\n"), 4);
    CHECK(detect_vstab_p(x, prime_of(x.ideal, {"x"}), 2).index == 1);
}

TEST_CASE("index inequalities hold on the reference families")
{
    for (const auto& I : {make_H(2), make_triangle(1), make_composite(2, 1)}) {
        const auto r = check_index_inequalities(build_profile(I, 6), 2);
        CHECK(r.conclusive);
        CHECK(r.max_vstab_p_at_least_astab);
        CHECK(r.vstab_at_most_max_vstab_p);
        CHECK(r.max_vstab_p >= r.astab.index);
        CHECK(r.vstab.index <= r.max_vstab_p);
    }
}

TEST_CASE("window must fit inside the horizon")
{
    const auto p = build_profile(make_H(1), 3);
    CHECK_THROWS_AS(detect_astab(p, 0), ParameterError);
    CHECK_THROWS_AS(detect_vstab(p, 3), ParameterError);
    CHECK_NOTHROW(detect_vstab(p, 2));
}

TEST_CASE("a chain that loses a prime is not ascending")
{
    // (a, b, c) is associated to I but I^2 = (a, b)^8.
    const auto I = ideal("vars: a, b, c\na^4\na^3*b\na*b^3\nb^4\na^2*b^2*c\n");
    const auto profile = build_profile(I, 4);
    CHECK(profile.at(1).ass.size() == 2);
    CHECK(profile.at(2).ass.size() == 1);
    const auto est = detect_astab(profile, 2);
    CHECK_FALSE(est.ascending);
    CHECK(est.index == 2);

    CHECK(detect_astab(build_profile(ideal("vars: x, y\nx*y\n"), 3), 2).ascending);
}
