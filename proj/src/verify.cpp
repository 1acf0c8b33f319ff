#include "monostab/verify.hpp"

#include <algorithm>

#include "monostab/constructions.hpp"
#include "monostab/errors.hpp"

namespace monostab {

namespace {

std::string pair_text(std::size_t a, std::size_t b)
{
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string index_text(const StabilityEstimate& s)
{
    return s.conclusive ? std::to_string(s.index) : std::string("inconclusive");
}

void expect(FamilyResult& r, std::string name, const std::string& expected, const std::string& actual)
{
    r.checks.push_back(Check{std::move(name), expected, actual, expected == actual});
}

template <typename T>
void expect_eq(FamilyResult& r, std::string name, const T& expected, const T& actual)
{
    r.checks.push_back(Check{std::move(name), std::to_string(expected), std::to_string(actual), expected == actual});
}

// Shared tail of both families: indices, line, and the two inequalities.
void check_indices(FamilyResult& r, const PowerProfile& profile, const VerifyConfig& config, KnownIndices known,
                   const Line& line)
{
    const auto& ctx = profile.ideal.context();
    const auto astab = detect_astab(profile, config.window, known.astab);
    const auto vstab = detect_vstab(profile, config.window, known.vstab);
    expect(r, "(astab, vstab)", pair_text(known.astab, known.vstab),
           "(" + index_text(astab) + ", " + index_text(vstab) + ")");
    expect(r, "v-line", report::format_line(line), vstab.line ? report::format_line(*vstab.line) : "none");

    const auto ineq = check_index_inequalities(profile, config.window);
    r.inequalities = report::to_json(ineq, ctx);
    expect(r, "index inequalities conclusive", "true", ineq.conclusive ? "true" : "false");
    if (ineq.conclusive) {
        expect(r, "max vstab_p >= astab", "true", ineq.max_vstab_p_at_least_astab ? "true" : "false");
        expect(r, "vstab <= max vstab_p", "true", ineq.vstab_at_most_max_vstab_p ? "true" : "false");
    }
    // v(I^k) is the minimum of the per-prime values once Ass has settled.
    if (astab.conclusive) {
        bool ok = true;
        for (std::size_t k = astab.index; k <= profile.horizon(); ++k) {
            std::uint32_t m = UINT32_MAX;
            for (const auto& e : profile.at(k).v.per_prime) m = std::min(m, e.degree);
            ok = ok && m == profile.at(k).v.global;
        }
        expect(r, "v = min_p v_p from astab on", "true", ok ? "true" : "false");
    }
    r.profile = report::to_json(profile);
}

}  // namespace

bool FamilyResult::passed() const
{
    return !capacity_error && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

FamilyResult verify_H(std::uint32_t b, const VerifyConfig& config)
{
    FamilyResult r;
    r.family = "H";
    r.b = b;
    r.horizon = config.k_max.value_or(default_horizon(1, b));
    const MonomialIdeal H = make_H(b);
    try {
        const PowerProfile profile = build_profile(H, r.horizon, config.profile);
        expect_eq<std::int64_t>(r, "alpha", 2 * b + 1, profile.alpha);
        for (std::size_t k = 1; k <= profile.horizon(); ++k) {
            const auto& e = profile.at(k);
            const std::string at = "(I^" + std::to_string(k) + ")";
            expect_eq<std::int64_t>(r, "v" + at, predict_v_H(b, std::uint32_t(k)), e.v.global);
            expect_eq<std::int64_t>(r, "closed-form v_m" + at, e.v.global, vm_two_variable(e.power));
            expect(r, "Ass" + at, "{(x, y)}", e.ass.to_string(H.context()));
            if (k <= 6) {
                const auto predicted = predict_H_power_generators(b, std::uint32_t(k));
                const MonomialIdeal from_formula = minimalize(predicted, H.context_ptr());
                expect(r, "generators" + at, from_formula.to_string(), e.power.to_string());
                if (k < b) {
                    expect_eq<std::size_t>(r, "formula generators minimal" + at, predicted.size(),
                                           from_formula.size());
                }
            }
        }
        check_indices(r, profile, config, known_indices_H(b), Line{2 * std::int64_t(b) + 1, -1});
    } catch (const CapacityError& e) {
        r.capacity_error = e.what();
    }
    return r;
}

FamilyResult verify_composite(std::uint32_t a, std::uint32_t b, const VerifyConfig& config)
{
    if (a == 1) return verify_H(b, config);
    FamilyResult r;
    r.family = "composite";
    r.a = a;
    r.b = b;
    r.horizon = config.k_max.value_or(default_horizon(a, b));
    const MonomialIdeal I = make_composite(a, b);
    try {
        const PowerProfile profile = build_profile(I, r.horizon, config.profile);
        expect_eq<std::int64_t>(r, "alpha", 2 * b + 1, profile.alpha);
        for (std::size_t k = 1; k <= profile.horizon(); ++k) {
            const auto predicted = predict_v_composites(a, b, std::uint32_t(k));
            expect_eq<std::int64_t>(r, "v(I^" + std::to_string(k) + ")", predicted.v_I,
                                    profile.at(k).v.global);
        }
        check_indices(r, profile, config, known_indices_composite(a, b), Line{2 * std::int64_t(b) + 1, 2 * std::int64_t(b) - 1});
    } catch (const CapacityError& e) {
        r.capacity_error = e.what();
    }
    return r;
}

VerifyReport run_verification(const VerifyConfig& config)
{
    VerifyReport out;
    for (std::uint32_t b : config.h_values) out.families.push_back(verify_H(b, config));
    for (const auto& [a, b] : config.composite_pairs) out.families.push_back(verify_composite(a, b, config));
    return out;
}

bool VerifyReport::passed() const
{
    return std::all_of(families.begin(), families.end(), [](const FamilyResult& f) { return f.passed(); });
}

bool VerifyReport::capacity_exceeded() const
{
    return std::any_of(families.begin(), families.end(), [](const FamilyResult& f) { return f.capacity_error.has_value(); });
}

report::Json VerifyReport::to_json() const
{
    using report::Json;
    Json fams = Json::array();
    for (const auto& f : families) {
        Json checks = Json::array();
        for (const auto& c : f.checks) {
            checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
        }
        Json j{{"family", f.family}, {"a", f.a}, {"b", f.b}, {"horizon", f.horizon}};
        if (f.family == "composite") j["ring_note"] = composite_ring_note(f.a);
        j["passed"] = f.passed();
        j["capacity_error"] = f.capacity_error ? Json(*f.capacity_error) : Json(nullptr);
        j["checks"] = std::move(checks);
        j["inequalities"] = f.inequalities;
        j["profile"] = f.profile;
        fams.push_back(std::move(j));
    }
    return Json{{"witness_convention", kWitnessConvention}, {"passed", passed()}, {"families", std::move(fams)}};
}

std::string VerifyReport::to_table() const
{
    std::string out;
    for (const auto& f : families) {
        const std::string title =
            f.family == "H" ? "H(" + std::to_string(f.b) + ")" : "composite(" + std::to_string(f.a) + ", " + std::to_string(f.b) + ")";
        out += title + "  horizon " + std::to_string(f.horizon) + '\n';
        if (f.capacity_error) {
            out += "  CAPACITY  " + *f.capacity_error + '\n';
            continue;
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : f.checks) {
            rows.push_back({"  " + std::string(c.passed ? "PASS" : "FAIL"), c.name, "expected " + c.expected, "got " + c.actual});
        }
        out += report::align_columns(rows);
        for (const auto& c : f.checks) {
            if (c.name == "(astab, vstab)") out += "  (astab, vstab) = " + c.actual + '\n';
        }
    }
    out += passed() ? "verification passed\n" : "verification FAILED\n";
    return out;
}

}  // namespace monostab
