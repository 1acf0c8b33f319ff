#include "monostab/constructions.hpp"

#include <algorithm>
#include <limits>

#include "monostab/errors.hpp"

namespace monostab {

namespace {

void require_b(std::uint32_t b)
{
    if (b < 1) throw ParameterError("b must be at least 1");
    if (b > 1000) throw ParameterError("b is too large");
}

void require_a(std::uint32_t a)
{
    if (a < 2) throw ParameterError("a must be at least 2 for J and L");
    if (a > 1000) throw ParameterError("a is too large");
}

std::vector<std::string> block_names(std::uint32_t a)
{
    std::vector<std::string> names;
    for (std::uint32_t i = 1; i <= 3 * (a - 1); ++i) names.push_back("x" + std::to_string(i));
    return names;
}

// Triangle on variables (o, o+1, o+2) of an n-variable ring.
std::vector<Monomial> triangle_gens(std::size_t n, std::size_t o)
{
    auto x = [&](std::size_t i) { return Monomial::variable(n, o + i); };
    return {x(0) * x(1), x(0) * x(2), x(1) * x(2)};
}

}  // namespace

MonomialIdeal make_H(std::uint32_t b)
{
    require_b(b);
    auto ctx = VariableContext::make({"x", "y"});
    return minimalize({Monomial(2, {2 * b + 1, 0}), Monomial(2, {2, 2 * b - 1}), Monomial(2, {0, 2 * b + 1})},
                      ctx);
}

std::vector<Monomial> predict_H_power_generators(std::uint32_t b, std::uint32_t k)
{
    require_b(b);
    if (k < 1) throw ParameterError("k must be at least 1");
    const std::uint64_t s = 2 * std::uint64_t(b) + 1;
    std::vector<Monomial> out;
    for (std::uint64_t i = 0; i <= k; ++i) {
        for (std::uint64_t j = 0; j <= i; ++j) {
            out.push_back(Monomial(2, {s * (k - i) + 2 * (i - j), s * i - 2 * (i - j)}));
        }
    }
    return out;
}

std::int64_t predict_v_H(std::uint32_t b, std::uint32_t k)
{
    require_b(b);
    if (k < 1) throw ParameterError("k must be at least 1");
    const std::int64_t s = 2 * std::int64_t(b) + 1;
    return k < b ? s * k : s * k - 1;
}

MonomialIdeal make_triangle(std::uint32_t i)
{
    if (i < 1) throw ParameterError("triangle index must be at least 1");
    auto ctx = VariableContext::indexed(3, 3 * std::size_t(i) - 2);
    return minimalize(triangle_gens(3, 0), ctx);
}

MonomialIdeal make_J(std::uint32_t a)
{
    require_a(a);
    auto ctx = VariableContext::make(block_names(a));
    const std::size_t n = ctx->arity();
    std::vector<Monomial> gens;
    for (std::size_t t = 0; t + 1 < a; ++t) {
        auto tri = triangle_gens(n, 3 * t);
        gens.insert(gens.end(), tri.begin(), tri.end());
    }
    return minimalize(std::move(gens), ctx);
}

MonomialIdeal make_L(std::uint32_t a, std::uint32_t b)
{
    require_a(a);
    require_b(b);
    auto names = block_names(a);
    names.insert(names.begin(), "x0");
    auto ctx = VariableContext::make(std::move(names));
    const std::size_t n = ctx->arity();
    const MonomialIdeal J = make_J(a);
    std::vector<std::size_t> map(J.arity());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i + 1;
    return scale(Monomial::variable(n, 0, 2 * b - 1), embed(J, ctx, map));
}

MonomialIdeal make_composite(std::uint32_t a, std::uint32_t b)
{
    if (a < 1) throw ParameterError("a must be at least 1");
    if (a == 1) return make_H(b);
    require_a(a);
    require_b(b);
    auto names = block_names(a);
    names.insert(names.begin(), "x0");
    names.push_back("x");
    names.push_back("y");
    auto ctx = VariableContext::make(std::move(names));
    const std::size_t n = ctx->arity();

    const MonomialIdeal L = make_L(a, b);
    std::vector<std::size_t> l_map(L.arity());
    for (std::size_t i = 0; i < l_map.size(); ++i) l_map[i] = i;
    const MonomialIdeal H = make_H(b);
    const std::size_t h_map[] = {n - 2, n - 1};
    return sum(embed(L, ctx, l_map), embed(H, ctx, h_map));
}

std::string composite_ring_note(std::uint32_t a)
{
    if (a <= 1) return "ring K[x, y]";
    const std::uint32_t used = 3 * (a - 1) + 3;
    return "ring built on the " + std::to_string(used) + " variables that occur (x0, x1..x" +
           std::to_string(3 * (a - 1)) + ", x, y); the construction's nominal ring K[x0, ..., x" +
           std::to_string(3 * a) + ", x, y] has " + std::to_string(3 * (a + 1)) +
           " variables, the extra ones appear in no generator and change neither Ass nor v";
}

AssSet predict_ass_disjoint_sum(const std::vector<AssSet>& a_profile, const std::vector<AssSet>& b_profile,
                                std::size_t k)
{
    if (k < 1) throw InputError("k must be at least 1");
    if (a_profile.size() < k || b_profile.size() < k)
        throw InputError("Ass profiles must cover exponents 1.." + std::to_string(k));
    std::vector<MonomialPrime> out;
    for (std::size_t l = 0; l < k; ++l) {
        for (const auto& p : a_profile[k - l - 1]) {
            for (const auto& q : b_profile[l]) {
                for (std::size_t v : p.support()) {
                    if (q.contains(v)) throw InputError("the two ideals share a variable");
                }
                out.push_back(p.unite(q));
            }
        }
    }
    return AssSet(std::move(out));
}

std::int64_t v_I_term(std::uint32_t b, std::uint32_t k, std::uint32_t l)
{
    require_b(b);
    if (l >= k) throw ParameterError("l must lie in [0, k)");
    const std::int64_t s = 2 * std::int64_t(b) + 1;
    return s * (std::int64_t(k) - l) - 1 + predict_v_H(b, l + 1);
}

VComposites predict_v_composites(std::uint32_t a, std::uint32_t b, std::uint32_t k)
{
    require_a(a);
    require_b(b);
    if (k < 1) throw ParameterError("k must be at least 1");
    const std::int64_t K = k;
    VComposites out{};
    out.v_J = 2 * K + std::int64_t(a) - 3;
    // v((x_0^{(2b-1)k})) = (2b-1)k - 1, alpha(J) = 2, alpha((x_0^{2b-1})) = 2b-1.
    out.v_L = std::min((2 * std::int64_t(b) - 1) * K - 1 + 2 * K, (2 * std::int64_t(b) - 1) * K + out.v_J);
    out.v_I = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t l = 0; l < k; ++l) out.v_I = std::min(out.v_I, v_I_term(b, k, l));
    return out;
}

KnownIndices known_indices_H(std::uint32_t b)
{
    require_b(b);
    return {1, b};
}

KnownIndices known_indices_composite(std::uint32_t a, std::uint32_t b)
{
    if (a < 1) throw ParameterError("a must be at least 1");
    require_b(b);
    return {a, b};
}

std::size_t default_horizon(std::uint32_t a, std::uint32_t b)
{
    return std::max<std::size_t>({2 * std::size_t(b) + 2, std::size_t(a) + b + 2, 6});
}

}  // namespace monostab
