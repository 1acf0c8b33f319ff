// monostab: command-line front end for the monomial ideal engine.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse or parameter
// error, 3 inconclusive detection, 4 generator cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monostab/constructions.hpp"
#include "monostab/errors.hpp"
#include "monostab/report.hpp"
#include "monostab/text_format.hpp"
#include "monostab/verify.hpp"

using namespace monostab;
using report::Json;

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kBadInput = 2, kInconclusive = 3, kCapacity = 4 };

struct RunConfig {
    std::string input;
    std::string family;
    std::optional<std::uint32_t> a;
    std::optional<std::uint32_t> b;
    std::optional<std::uint32_t> i;
    std::optional<std::size_t> k_max;
    std::size_t window = 2;
    std::string format = "table";
    std::size_t cap = 200000;
};

MonomialIdeal construct(const std::string& name, const RunConfig& cfg)
{
    const std::uint32_t a = cfg.a.value_or(2);
    const std::uint32_t b = cfg.b.value_or(1);
    if (name == "H") return make_H(b);
    if (name == "J") return make_J(a);
    if (name == "L") return make_L(a, b);
    if (name == "composite") return make_composite(cfg.a.value_or(2), b);
    if (name == "triangle") return make_triangle(cfg.i.value_or(1));
    throw ParameterError("unknown family '" + name + "' (expected H, J, L, composite or triangle)");
}

MonomialIdeal load(const RunConfig& cfg)
{
    if (!cfg.family.empty()) return construct(cfg.family, cfg);
    if (cfg.input.empty()) throw ParameterError("give an ideal file (or '-') or --family");
    if (cfg.input == "-") return parse_ideal(std::cin);
    std::ifstream in(cfg.input);
    if (!in) throw ParameterError("cannot open '" + cfg.input + "'");
    return parse_ideal(in);
}

std::size_t horizon(const RunConfig& cfg)
{
    if (cfg.k_max) return *cfg.k_max;
    if (cfg.family == "H") return default_horizon(1, cfg.b.value_or(1));
    if (cfg.family == "composite") return default_horizon(cfg.a.value_or(2), cfg.b.value_or(1));
    return 6;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_ass(const RunConfig& cfg)
{
    const MonomialIdeal I = load(cfg);
    const auto comps = irreducible_decomposition(I);
    const AssSet ass = associated_primes(I, comps);
    const AssSet min = minimal_primes(I);
    const auto& ctx = I.context();
    if (cfg.format == "json") {
        emit(Json{{"ideal", report::to_json(I)},
                  {"components", report::to_json(comps, ctx)},
                  {"ass", report::to_json(ass, ctx)},
                  {"min", report::to_json(min, ctx)}});
    } else if (cfg.format == "csv") {
        std::cout << "prime,minimal\n";
        for (const auto& p : ass) std::cout << '"' << p.to_string(ctx) << "\"," << (min.contains(p) ? 1 : 0) << '\n';
    } else {
        std::cout << "ideal       " << I.to_string() << '\n';
        std::cout << "components  ";
        for (std::size_t c = 0; c < comps.size(); ++c) std::cout << (c ? " ∩ " : "") << comps[c].to_string(ctx);
        std::cout << '\n' << "Ass         " << ass.to_string(ctx) << '\n' << "Min         " << min.to_string(ctx) << '\n';
    }
    return kOk;
}

int cmd_vnum(const RunConfig& cfg)
{
    const MonomialIdeal I = load(cfg);
    const VReport v = v_global(I);
    const auto& ctx = I.context();
    if (cfg.format == "json") {
        emit(Json{{"ideal", report::to_json(I)}, {"report", report::to_json(v, ctx)}});
        return kOk;
    }
    if (cfg.format == "csv") {
        std::cout << "prime,v,witness\n";
        for (const auto& e : v.per_prime)
            std::cout << '"' << e.prime.to_string(ctx) << "\"," << e.degree << ',' << e.witness.to_string(ctx) << '\n';
        return kOk;
    }
    std::vector<std::vector<std::string>> rows{{"prime", "v_p", "witness"}};
    for (const auto& e : v.per_prime) rows.push_back({e.prime.to_string(ctx), std::to_string(e.degree), e.witness.to_string(ctx)});
    std::cout << report::align_columns(rows);
    const VEntry* best = nullptr;
    for (const auto& e : v.per_prime) {
        if (e.degree == v.global && (!best || e.witness < best->witness)) best = &e;
    }
    std::cout << "v=" << v.global << ", witness " << best->witness.to_string(ctx) << '\n';
    return kOk;
}

int cmd_powers(const RunConfig& cfg)
{
    const MonomialIdeal I = load(cfg);
    const std::size_t kmax = horizon(cfg);
    Json arr = Json::array();
    std::string csv = "k,generator\n";
    MonomialIdeal P = I;
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (k > 1) P = product(P, I);
        if (P.size() > cfg.cap) throw CapacityError(k, P.size(), cfg.cap);
        if (cfg.format == "json") {
            arr.push_back(Json{{"k", k}, {"ideal", report::to_json(P)}});
        } else if (cfg.format == "csv") {
            for (const auto& g : P.generators()) csv += std::to_string(k) + ',' + g.to_string(P.context()) + '\n';
        } else {
            std::cout << "# k=" << k << ", " << P.size() << " minimal generators\n" << format_ideal(P);
        }
    }
    if (cfg.format == "json") emit(arr);
    if (cfg.format == "csv") std::cout << csv;
    return kOk;
}

int cmd_stab(const RunConfig& cfg)
{
    const MonomialIdeal I = load(cfg);
    const std::size_t kmax = horizon(cfg);
    if (kmax < cfg.window + 1) throw ParameterError("--kmax must be at least --window + 1");
    ProfileOptions opts;
    opts.generator_cap = cfg.cap;
    const PowerProfile profile = build_profile(I, kmax, opts);

    std::optional<KnownIndices> known;
    if (cfg.family == "H") known = known_indices_H(cfg.b.value_or(1));
    if (cfg.family == "composite") known = known_indices_composite(cfg.a.value_or(2), cfg.b.value_or(1));
    const auto astab = detect_astab(profile, cfg.window, known ? std::optional(known->astab) : std::nullopt);
    const auto vstab = detect_vstab(profile, cfg.window, known ? std::optional(known->vstab) : std::nullopt);
    const auto ineq = check_index_inequalities(profile, cfg.window);
    const auto& ctx = I.context();

    if (cfg.format == "json") {
        emit(Json{{"profile", report::to_json(profile)},
                  {"astab", report::to_json(astab, ctx)},
                  {"vstab", report::to_json(vstab, ctx)},
                  {"inequalities", report::to_json(ineq, ctx)}});
    } else if (cfg.format == "csv") {
        std::cout << report::profile_csv(profile);
    } else {
        std::cout << report::profile_table(profile);
        std::cout << "astab=" << (astab.conclusive ? std::to_string(astab.index) : "inconclusive")
                  << " vstab=" << (vstab.conclusive ? std::to_string(vstab.index) : "inconclusive")
                  << " line=" << (vstab.line ? report::format_line(*vstab.line) : "none") << '\n';
    }
    return astab.conclusive && vstab.conclusive ? kOk : kInconclusive;
}

int cmd_construct(const std::string& name, const RunConfig& cfg)
{
    const MonomialIdeal I = construct(name, cfg);
    if (name == "composite" && cfg.a.value_or(2) > 1) std::cout << "# " << composite_ring_note(cfg.a.value_or(2)) << '\n';
    std::cout << format_ideal(I);
    return kOk;
}

int cmd_verify(const RunConfig& cfg)
{
    VerifyConfig vc;
    vc.window = cfg.window;
    vc.k_max = cfg.k_max;
    vc.profile.generator_cap = cfg.cap;
    if (cfg.a || cfg.b) {
        const std::uint32_t b = cfg.b.value_or(1);
        vc.h_values.clear();
        vc.composite_pairs.clear();
        if (cfg.a && *cfg.a >= 2) {
            vc.composite_pairs.push_back({*cfg.a, b});
        } else {
            vc.h_values.push_back(b);
        }
    }
    const VerifyReport r = run_verification(vc);
    if (cfg.format == "json") {
        emit(r.to_json());
    } else {
        std::cout << r.to_table();
    }
    if (!r.passed() && !r.capacity_exceeded()) return kMismatch;
    if (r.capacity_exceeded()) {
        bool mismatch = false;
        for (const auto& f : r.families) mismatch = mismatch || (!f.capacity_error && !f.passed());
        return mismatch ? kMismatch : kCapacity;
    }
    return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_input)
{
    if (with_input) {
        sub->add_option("input", cfg.input, "ideal file, or '-' for standard input");
        sub->add_option("--family", cfg.family, "build the input instead: H, J, L, composite, triangle");
    }
    sub->add_option("--a", cfg.a, "block parameter a")->check(CLI::PositiveNumber);
    sub->add_option("--b", cfg.b, "degree parameter b")->check(CLI::PositiveNumber);
    sub->add_option("--i", cfg.i, "triangle index")->check(CLI::PositiveNumber);
    sub->add_option("--kmax", cfg.k_max, "largest power computed")->check(CLI::PositiveNumber);
    sub->add_option("--window", cfg.window, "tail length required for a detection")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--cap", cfg.cap, "maximum minimal generators per power")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Powers, associated primes, v-numbers and stability indices of monomial ideals"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string family_name;

    auto* ass = app.add_subcommand("ass", "irreducible decomposition, Ass and Min");
    auto* vnum = app.add_subcommand("vnum", "v-numbers per associated prime, with witnesses");
    auto* powers = app.add_subcommand("powers", "minimal generators of I^k for k = 1..kmax");
    auto* stab = app.add_subcommand("stab", "power profile and the detected astab / vstab");
    auto* cons = app.add_subcommand("construct", "emit a built-in family in the ideal text format");
    auto* verify = app.add_subcommand("verify", "replay the known results on the built-in families");
    for (auto* s : {ass, vnum, powers, stab}) add_common(s, cfg, true);
    add_common(cons, cfg, false);
    add_common(verify, cfg, false);
    cons->add_option("name", family_name, "H, J, L, composite or triangle")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*ass) return cmd_ass(cfg);
        if (*vnum) return cmd_vnum(cfg);
        if (*powers) return cmd_powers(cfg);
        if (*stab) return cmd_stab(cfg);
        if (*cons) return cmd_construct(family_name, cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
