#include "monostab/report.hpp"

#include <algorithm>

namespace monostab::report {

Json to_json(const MonomialIdeal& I)
{
    Json gens = Json::array();
    for (const auto& g : I.generators()) gens.push_back(g.to_string(I.context()));
    return Json{{"vars", I.context().names()}, {"generators", std::move(gens)}};
}

Json to_json(const MonomialPrime& p, const VariableContext& ctx)
{
    Json out = Json::array();
    for (std::size_t v : p.support()) out.push_back(ctx.name(v));
    return out;
}

Json to_json(const AssSet& ass, const VariableContext& ctx)
{
    Json out = Json::array();
    for (const auto& p : ass) out.push_back(to_json(p, ctx));
    return out;
}

Json to_json(const std::vector<IrreducibleComponent>& comps, const VariableContext& ctx)
{
    Json out = Json::array();
    for (const auto& c : comps) {
        Json gens = Json::array();
        for (std::size_t i = 0; i < c.exponents().size(); ++i) {
            if (!c.exponents()[i]) continue;
            gens.push_back(Monomial::variable(ctx.arity(), i, c.exponents()[i]).to_string(ctx));
        }
        out.push_back(std::move(gens));
    }
    return out;
}

Json to_json(const VReport& v, const VariableContext& ctx)
{
    Json per = Json::array();
    for (const auto& e : v.per_prime) {
        per.push_back(Json{{"prime", to_json(e.prime, ctx)}, {"v", e.degree}, {"witness", e.witness.to_string(ctx)}});
    }
    return Json{{"witness_convention", kWitnessConvention}, {"v", v.global}, {"per_prime", std::move(per)}};
}

Json to_json(const StabilityEstimate& s, const VariableContext& ctx)
{
    Json out{{"kind", std::string(to_string(s.kind))}};
    if (s.prime) out["prime"] = to_json(*s.prime, ctx);
    out["conclusive"] = s.conclusive;
    out["index"] = s.conclusive ? Json(s.index) : Json(nullptr);
    out["horizon"] = s.horizon;
    out["window"] = s.window;
    out["certified"] = s.certified;
    if (s.kind == StabilityKind::ass) {
        out["ascending"] = s.ascending;
    } else if (s.line) {
        out["line"] = Json{{"slope", s.line->slope}, {"intercept", s.line->intercept}, {"text", format_line(*s.line)}};
    } else {
        out["line"] = nullptr;
    }
    return out;
}

Json to_json(const PowerProfile& profile)
{
    const auto& ctx = profile.ideal.context();
    Json entries = Json::array();
    for (const auto& e : profile.entries) {
        entries.push_back(Json{{"k", e.k},
                               {"generators", e.power.size()},
                               {"components", e.component_count},
                               {"ass", to_json(e.ass, ctx)},
                               {"v", to_json(e.v, ctx)}});
    }
    return Json{{"ideal", to_json(profile.ideal)},
                {"alpha", profile.alpha},
                {"horizon", profile.horizon()},
                {"entries", std::move(entries)}};
}

Json to_json(const InequalityReport& r, const VariableContext& ctx)
{
    Json per = Json::array();
    for (const auto& s : r.per_prime) per.push_back(to_json(s, ctx));
    Json out{{"conclusive", r.conclusive}, {"astab", to_json(r.astab, ctx)}, {"vstab", to_json(r.vstab, ctx)},
             {"vstab_p", std::move(per)}};
    if (r.conclusive) {
        out["max_vstab_p"] = r.max_vstab_p;
        out["max_vstab_p_at_least_astab"] = r.max_vstab_p_at_least_astab;
        out["vstab_at_most_max_vstab_p"] = r.vstab_at_most_max_vstab_p;
    }
    return out;
}

std::string format_line(const Line& line)
{
    std::string out;
    if (line.slope == 1) {
        out = "k";
    } else if (line.slope != 0) {
        out = std::to_string(line.slope) + "k";
    }
    if (line.intercept != 0 || out.empty()) {
        if (line.intercept > 0 && !out.empty()) out += '+';
        out += std::to_string(line.intercept);
    }
    return out;
}

std::string align_columns(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> widths;
    for (const auto& r : rows) {
        if (widths.size() < r.size()) widths.resize(r.size(), 0);
        for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], r[c].size());
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(widths[c] - r[c].size() + 2, ' ');
        }
        out += line + '\n';
    }
    return out;
}

std::string profile_table(const PowerProfile& profile)
{
    const auto& ctx = profile.ideal.context();
    std::vector<std::vector<std::string>> rows{{"k", "gens", "comps", "|Ass|", "v", "v-alpha*k", "Ass"}};
    for (const auto& e : profile.entries) {
        rows.push_back({std::to_string(e.k), std::to_string(e.power.size()), std::to_string(e.component_count),
                        std::to_string(e.ass.size()), std::to_string(e.v.global),
                        std::to_string(std::int64_t(e.v.global) - std::int64_t(profile.alpha) * std::int64_t(e.k)),
                        e.ass.to_string(ctx)});
    }
    return align_columns(rows);
}

std::string profile_csv(const PowerProfile& profile)
{
    const auto& ctx = profile.ideal.context();
    std::string out = "k,generators,components,ass_size,v,ass\n";
    for (const auto& e : profile.entries) {
        std::string ass;
        for (const auto& p : e.ass) {
            if (!ass.empty()) ass += ' ';
            ass += p.to_string(ctx);
        }
        out += std::to_string(e.k) + ',' + std::to_string(e.power.size()) + ',' + std::to_string(e.component_count) +
               ',' + std::to_string(e.ass.size()) + ',' + std::to_string(e.v.global) + ",\"" + ass + "\"\n";
    }
    return out;
}

}  // namespace monostab::report
