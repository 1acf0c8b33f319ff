#include "monostab/ideal.hpp"

#include <algorithm>

#include "monostab/errors.hpp"

namespace monostab {

MonomialPrime::MonomialPrime(std::vector<std::size_t> support) : support_(std::move(support))
{
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    if (support_.empty()) throw PreconditionError("a monomial prime needs at least one variable");
}

bool MonomialPrime::contains(std::size_t var) const noexcept
{
    return std::binary_search(support_.begin(), support_.end(), var);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const noexcept
{
    return std::includes(other.support_.begin(), other.support_.end(), support_.begin(), support_.end());
}

MonomialPrime MonomialPrime::unite(const MonomialPrime& other) const
{
    std::vector<std::size_t> s;
    std::set_union(support_.begin(), support_.end(), other.support_.begin(), other.support_.end(),
                   std::back_inserter(s));
    return MonomialPrime(std::move(s));
}

std::strong_ordering MonomialPrime::operator<=>(const MonomialPrime& other) const noexcept
{
    if (auto c = support_.size() <=> other.support_.size(); c != 0) return c;
    return support_ <=> other.support_;
}

std::string MonomialPrime::to_string(const VariableContext& ctx) const
{
    std::string out = "(";
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i) out += ", ";
        out += ctx.name(support_[i]);
    }
    return out + ")";
}

MonomialIdeal::MonomialIdeal(ContextPtr ctx) : ctx_(std::move(ctx))
{
    if (!ctx_) throw InputError("missing variable context");
}

MonomialIdeal MonomialIdeal::unit(ContextPtr ctx)
{
    const std::size_t n = ctx->arity();
    return minimalize({Monomial(n)}, std::move(ctx));
}

bool MonomialIdeal::contains(const Monomial& u) const
{
    if (u.arity() != arity()) throw InputError("monomial arity does not match the ideal's ring");
    return kernels::active().find_divisor(rows_.data(), gens_.size(), width(), u.lanes()) >= 0;
}

std::vector<Exponent> MonomialIdeal::max_exponents() const
{
    std::vector<Exponent> e(arity(), 0);
    for (const auto& g : gens_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], g[i]);
    }
    return e;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const noexcept
{
    return (ctx_ == other.ctx_ || *ctx_ == *other.ctx_) && gens_ == other.gens_;
}

std::string MonomialIdeal::to_string() const
{
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string(*ctx_);
    }
    return out + ")";
}

void require_same_context(const VariableContext& a, const VariableContext& b)
{
    if (&a != &b && !(a == b)) throw InputError("ideals live in different variable contexts");
}

MonomialIdeal minimalize(std::vector<Monomial> gens, ContextPtr ctx)
{
    MonomialIdeal out(std::move(ctx));
    const std::size_t n = out.arity();
    const std::size_t width = out.width();
    for (const auto& g : gens) {
        if (g.arity() != n) throw InputError("generator arity does not match the ring");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    const auto& k = kernels::active();
    // In canonical order a generator can only be divided by one of strictly
    // smaller degree, i.e. by something already kept before the current
    // degree block started.
    std::size_t below = 0;
    std::uint32_t block_degree = 0;
    for (auto& g : gens) {
        if (g.degree() != block_degree) {
            below = out.gens_.size();
            block_degree = g.degree();
        }
        if (k.find_divisor(out.rows_.data(), below, width, g.lanes()) >= 0) continue;
        out.rows_.insert(out.rows_.end(), g.lanes(), g.lanes() + width);
        out.gens_.push_back(std::move(g));
    }
    return out;
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J)
{
    require_same_context(I.context(), J.context());
    std::vector<Monomial> prods;
    prods.reserve(I.size() * J.size());
    for (const auto& g : I.generators()) {
        for (const auto& h : J.generators()) prods.push_back(g * h);
    }
    return minimalize(std::move(prods), I.context_ptr());
}

MonomialIdeal power(const MonomialIdeal& I, std::size_t k)
{
    if (k == 0) return MonomialIdeal::unit(I.context_ptr());
    MonomialIdeal acc = I;
    for (std::size_t j = 1; j < k; ++j) acc = product(acc, I);
    return acc;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u)
{
    if (u.arity() != I.arity()) throw InputError("monomial arity does not match the ideal's ring");
    std::vector<Monomial> q;
    q.reserve(I.size());
    for (const auto& g : I.generators()) q.push_back(g.quotient(u));
    return minimalize(std::move(q), I.context_ptr());
}

bool contains(const MonomialIdeal& I, const Monomial& u) { return I.contains(u); }

std::uint32_t alpha(const MonomialIdeal& I)
{
    if (I.is_zero()) throw UndefinedError("the initial degree of the zero ideal is undefined");
    // Canonical order is degree-ascending.
    return I.generators().front().degree();
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J)
{
    require_same_context(I.context(), J.context());
    std::vector<Monomial> all = I.generators();
    all.insert(all.end(), J.generators().begin(), J.generators().end());
    return minimalize(std::move(all), I.context_ptr());
}

MonomialIdeal scale(const Monomial& u, const MonomialIdeal& I)
{
    if (u.arity() != I.arity()) throw InputError("monomial arity does not match the ideal's ring");
    std::vector<Monomial> out;
    out.reserve(I.size());
    for (const auto& g : I.generators()) out.push_back(u * g);
    return minimalize(std::move(out), I.context_ptr());
}

MonomialIdeal prime_ideal(ContextPtr ctx, const MonomialPrime& p)
{
    const std::size_t n = ctx->arity();
    std::vector<Monomial> gens;
    for (std::size_t v : p.support()) gens.push_back(Monomial::variable(n, v));
    return minimalize(std::move(gens), std::move(ctx));
}

MonomialIdeal embed(const MonomialIdeal& I, ContextPtr target, std::span<const std::size_t> map)
{
    if (map.size() != I.arity()) throw InputError("variable map does not cover the source ring");
    const std::size_t n = target->arity();
    for (std::size_t t : map) {
        if (t >= n) throw InputError("variable map points outside the target ring");
    }
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        Monomial m(n);
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (g[i]) m = m.with(map[i], g[i]);
        }
        gens.push_back(std::move(m));
    }
    return minimalize(std::move(gens), std::move(target));
}

}  // namespace monostab
