#include "monostab/decomposition.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <set>
#include <stdexcept>

#include "monostab/errors.hpp"
#include "monostab/text_format.hpp"

namespace monostab {

IrreducibleComponent::IrreducibleComponent(std::vector<Exponent> exponents) : exponents_(std::move(exponents))
{
    if (std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; }))
        throw PreconditionError("an irreducible component needs a nonempty support");
}

MonomialPrime IrreducibleComponent::radical() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i]) s.push_back(i);
    }
    return MonomialPrime(std::move(s));
}

bool IrreducibleComponent::contains(const Monomial& u) const
{
    if (u.arity() != exponents_.size()) throw InputError("monomial arity does not match the component");
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] && u[i] >= exponents_[i]) return true;
    }
    return false;
}

Monomial IrreducibleComponent::corner() const
{
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] ? Exponent(exponents_[i] - 1) : Exponent(0);
    return Monomial::from_exponents(std::span<const Exponent>(e));
}

MonomialIdeal IrreducibleComponent::to_ideal(ContextPtr ctx) const
{
    if (ctx->arity() != exponents_.size()) throw InputError("component arity does not match the ring");
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i]) gens.push_back(Monomial::variable(exponents_.size(), i, exponents_[i]));
    }
    return minimalize(std::move(gens), std::move(ctx));
}

std::strong_ordering IrreducibleComponent::operator<=>(const IrreducibleComponent& other) const
{
    if (auto c = radical() <=> other.radical(); c != 0) return c;
    return exponents_ <=> other.exponents_;
}

std::string IrreducibleComponent::to_string(const VariableContext& ctx) const
{
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (!exponents_[i]) continue;
        if (!first) out += ", ";
        first = false;
        out += ctx.name(i);
        if (exponents_[i] != 1) out += '^' + std::to_string(exponents_[i]);
    }
    return out + ")";
}

AssSet::AssSet(std::vector<MonomialPrime> primes) : primes_(std::move(primes))
{
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool AssSet::contains(const MonomialPrime& p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

bool AssSet::is_subset_of(const AssSet& other) const
{
    return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

std::string AssSet::to_string(const VariableContext& ctx) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i) out += ", ";
        out += primes_[i].to_string(ctx);
    }
    return out + "}";
}

namespace {

void require_proper_nonzero(const MonomialIdeal& I, const char* what)
{
    if (I.is_zero()) throw UndefinedError(std::string(what) + " is undefined for the zero ideal");
    if (I.is_unit()) throw UndefinedError(std::string(what) + " is undefined for the unit ideal");
}

void require_prime_in_ring(const MonomialIdeal& I, const MonomialPrime& p)
{
    if (p.support().back() >= I.arity()) throw InputError("prime mentions a variable outside the ring");
}

// Proposal for a new corner: the lanes, plus the variables already known
// to push it into the ideal (the ones lowered to create it).
struct Proposal {
    std::size_t offset;
    std::size_t lowered;
};

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I)
{
    require_proper_nonzero(I, "the irreducible decomposition");
    const auto& k = kernels::active();
    const std::size_t n = I.arity();
    const std::size_t w = I.width();

    std::vector<Exponent> bound(w, 0);
    {
        const auto e = I.max_exponents();
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == kernels::kMaxExponent) throw OverflowError("exponent too large to decompose");
            bound[i] = e[i];
        }
    }

    std::vector<Exponent> corners = bound;
    std::size_t corner_count = 1;
    std::vector<Exponent> added;
    std::size_t added_count = 0;

    std::vector<Exponent> survivors;
    std::vector<Exponent> proposals;
    std::vector<Proposal> meta;
    std::vector<std::size_t> order;
    std::vector<Exponent> probe(w);

    for (const Monomial& g : I.generators()) {
        added.insert(added.end(), g.lanes(), g.lanes() + w);
        ++added_count;

        survivors.clear();
        proposals.clear();
        meta.clear();
        std::size_t survivor_count = 0;
        for (std::size_t c = 0; c < corner_count; ++c) {
            const Exponent* u = corners.data() + c * w;
            if (!k.divides(g.lanes(), u, w)) {
                survivors.insert(survivors.end(), u, u + w);
                ++survivor_count;
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (g[i] == 0) continue;
                meta.push_back({proposals.size(), i});
                proposals.insert(proposals.end(), u, u + w);
                proposals[proposals.size() - w + i] = Exponent(g[i] - 1);
            }
        }

        order.resize(meta.size());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        auto row = [&](std::size_t j) { return proposals.data() + meta[j].offset; };
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const int c = std::memcmp(row(a), row(b), w * sizeof(Exponent));
            return c < 0 || (c == 0 && meta[a].lowered < meta[b].lowered);
        });

        for (std::size_t s = 0; s < order.size();) {
            std::size_t e = s + 1;
            while (e < order.size() && std::memcmp(row(order[s]), row(order[e]), w * sizeof(Exponent)) == 0) ++e;
            const Exponent* v = row(order[s]);
            bool maximal = true;
            for (std::size_t j = 0; j < n && maximal; ++j) {
                bool lowered = false;
                for (std::size_t t = s; t < e; ++t) lowered |= meta[order[t]].lowered == j;
                if (lowered || v[j] >= bound[j]) continue;  // x_j v is in (g) or in the Artinian part
                std::copy(v, v + w, probe.begin());
                ++probe[j];
                maximal = k.find_divisor(added.data(), added_count, w, probe.data()) >= 0;
            }
            if (maximal) {
                survivors.insert(survivors.end(), v, v + w);
                ++survivor_count;
            }
            s = e;
        }
        corners.swap(survivors);
        corner_count = survivor_count;
    }

    std::vector<IrreducibleComponent> out;
    out.reserve(corner_count);
    for (std::size_t c = 0; c < corner_count; ++c) {
        const Exponent* u = corners.data() + c * w;
        std::vector<Exponent> e(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] < bound[i]) e[i] = Exponent(u[i] + 1);
        }
        out.emplace_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t witness_box_size(const MonomialIdeal& I)
{
    std::uint64_t size = 1;
    for (Exponent e : I.max_exponents()) {
        const std::uint64_t f = std::uint64_t(e) + 1;
        if (size > std::numeric_limits<std::uint64_t>::max() / f) return std::numeric_limits<std::uint64_t>::max();
        size *= f;
    }
    return size;
}

namespace {

// The prime generated by I's generators when they are all variables.
std::optional<MonomialPrime> as_prime(const MonomialIdeal& J)
{
    if (J.is_zero()) return std::nullopt;
    std::vector<std::size_t> s;
    for (const auto& g : J.generators()) {
        if (g.degree() != 1) return std::nullopt;
        s.push_back(g.support().front());
    }
    return MonomialPrime(std::move(s));
}

// Minimal generators of degree <= budget of the intersection of the given
// ideals (all in one ring); empty when none exist.
std::vector<Monomial> bounded_intersection(const std::vector<MonomialIdeal>& ideals, std::uint32_t budget)
{
    std::vector<Monomial> acc;
    for (const auto& g : ideals.front().generators()) {
        if (g.degree() <= budget) acc.push_back(g);
    }
    const ContextPtr& ctx = ideals.front().context_ptr();
    for (std::size_t q = 1; q < ideals.size() && !acc.empty(); ++q) {
        std::vector<Monomial> next;
        for (const auto& a : acc) {
            for (const auto& b : ideals[q].generators()) {
                Monomial l = a.lcm(b);
                if (l.degree() <= budget) next.push_back(std::move(l));
            }
        }
        acc = minimalize(std::move(next), ctx).generators();
    }
    return acc;
}

}  // namespace

std::optional<Monomial> find_witness(const MonomialIdeal& I, const MonomialPrime& p,
                                     std::span<const IrreducibleComponent> components)
{
    require_proper_nonzero(I, "a witness search");
    require_prime_in_ring(I, p);
    const auto& k = kernels::active();
    const std::size_t n = I.arity();
    const std::size_t w = I.width();

    std::vector<Exponent> off_p(w, 0);  // saturating mask: quotient by it drops p's variables
    for (std::size_t v : p.support()) off_p[v] = kernels::kMaxExponent;

    std::vector<Monomial> corners;
    for (const auto& c : components) {
        if (c.exponents().size() != n) throw InputError("component arity does not match the ideal");
        if (c.radical() == p) corners.push_back(c.corner());
    }
    std::sort(corners.begin(), corners.end());

    std::optional<Monomial> best;
    std::vector<Exponent> target(w);
    std::vector<Exponent> rest(w);
    for (const Monomial& up : corners) {
        if (best && up.degree() > best->degree()) break;
        const std::uint32_t budget =
            best ? best->degree() - up.degree() : std::numeric_limits<std::uint32_t>::max();

        std::vector<MonomialIdeal> needs;
        bool feasible = true;
        for (std::size_t i : p.support()) {
            // x_i * up on p, unconstrained elsewhere.
            std::fill(target.begin(), target.end(), Exponent(0));
            for (std::size_t v = 0; v < n; ++v) target[v] = p.contains(v) ? up[v] : kernels::kMaxExponent;
            ++target[i];
            std::vector<Monomial> gens;
            for (const auto& g : I.generators()) {
                if (!k.divides(g.lanes(), target.data(), w)) continue;
                k.quotient(g.lanes(), off_p.data(), rest.data(), w);
                Monomial r = Monomial::from_exponents(std::span<const Exponent>(rest.data(), n));
                if (r.degree() <= budget) gens.push_back(std::move(r));
            }
            if (gens.empty()) {
                feasible = false;
                break;
            }
            MonomialIdeal q = minimalize(std::move(gens), I.context_ptr());
            if (std::find(needs.begin(), needs.end(), q) == needs.end()) needs.push_back(std::move(q));
        }
        if (!feasible) continue;

        const std::vector<Monomial> rest_gens = bounded_intersection(needs, budget);
        if (rest_gens.empty()) continue;
        // Canonical order is preserved by multiplying with a fixed monomial,
        // so the first minimal generator gives this corner's best witness.
        Monomial candidate = up * rest_gens.front();
        if (!best || candidate < *best) best = std::move(candidate);
    }
    return best;
}

std::optional<Monomial> find_witness(const MonomialIdeal& I, const MonomialPrime& p)
{
    require_proper_nonzero(I, "a witness search");
    require_prime_in_ring(I, p);
    const auto comps = irreducible_decomposition(I);
    return find_witness(I, p, comps);
}

namespace {

// Visit monomials of total degree d in the box, in canonical order
// (x_1-heavy first). Stops when the visitor returns true.
template <typename Visitor>
bool visit_degree(std::span<const Exponent> box, std::uint32_t d, std::vector<std::uint64_t>& e,
                  std::size_t var, Visitor&& visit)
{
    const std::size_t n = box.size();
    if (var + 1 == n) {
        if (d > box[var]) return false;
        e[var] = d;
        return visit(e);
    }
    std::uint64_t tail = 0;
    for (std::size_t j = var + 1; j < n; ++j) tail += box[j];
    const std::uint32_t hi = std::min<std::uint32_t>(box[var], d);
    for (std::int64_t x = hi; x >= 0; --x) {
        if (d - std::uint32_t(x) > tail) break;
        e[var] = std::uint64_t(x);
        if (visit_degree(box, d - std::uint32_t(x), e, var + 1, visit)) return true;
    }
    return false;
}

}  // namespace

std::optional<Monomial> find_witness_in_box(const MonomialIdeal& I, const MonomialPrime& p,
                                            std::span<const Exponent> box)
{
    require_proper_nonzero(I, "a witness search");
    require_prime_in_ring(I, p);
    if (box.size() != I.arity()) throw InputError("box arity does not match the ideal");
    const MonomialIdeal target = prime_ideal(I.context_ptr(), p);
    std::uint32_t top = 0;
    for (Exponent b : box) top += b;
    std::vector<std::uint64_t> e(box.size(), 0);
    std::optional<Monomial> found;
    for (std::uint32_t d = 0; d <= top && !found; ++d) {
        visit_degree(box, d, e, 0, [&](const std::vector<std::uint64_t>& ex) {
            Monomial u = Monomial::from_exponents(std::span<const std::uint64_t>(ex));
            if (I.contains(u) || colon(I, u) != target) return false;
            found = std::move(u);
            return true;
        });
    }
    return found;
}

AssSet associated_primes_exhaustive(const MonomialIdeal& I)
{
    require_proper_nonzero(I, "Ass");
    const std::size_t n = I.arity();
    const auto box = I.max_exponents();
    std::vector<std::uint64_t> e(n, 0);
    std::set<MonomialPrime> found;
    while (true) {
        Monomial u = Monomial::from_exponents(std::span<const std::uint64_t>(e));
        if (!I.contains(u)) {
            if (auto p = as_prime(colon(I, u))) found.insert(*p);
        }
        std::size_t i = 0;
        while (i < n && e[i] == box[i]) e[i++] = 0;
        if (i == n) break;
        ++e[i];
    }
    return AssSet(std::vector<MonomialPrime>(found.begin(), found.end()));
}

std::vector<WitnessedPrime> witnessed_associated_primes(const MonomialIdeal& I,
                                                        std::span<const IrreducibleComponent> components,
                                                        const AssOptions& options)
{
    require_proper_nonzero(I, "Ass");
    std::set<MonomialPrime> candidates;
    for (const auto& c : components) candidates.insert(c.radical());

    std::vector<WitnessedPrime> confirmed;
    std::vector<MonomialPrime> primes;
    for (const auto& p : candidates) {
        auto u = find_witness(I, p, components);
        if (!u || I.contains(*u) || colon(I, *u) != prime_ideal(I.context_ptr(), p))
            throw std::logic_error("component radical " + p.to_string(I.context()) + " has no valid witness in " +
                                   I.to_string());
        primes.push_back(p);
        confirmed.push_back(WitnessedPrime{p, std::move(*u)});
    }

    if (witness_box_size(I) <= options.exhaustive_box_limit) {
        if (associated_primes_exhaustive(I) != AssSet(std::move(primes)))
            throw std::logic_error("decomposition and exhaustive Ass disagree on " + I.to_string());
    }
    return confirmed;
}

AssSet associated_primes(const MonomialIdeal& I, std::span<const IrreducibleComponent> components,
                         const AssOptions& options)
{
    std::vector<MonomialPrime> primes;
    for (auto& w : witnessed_associated_primes(I, components, options)) primes.push_back(std::move(w.prime));
    return AssSet(std::move(primes));
}

AssSet associated_primes(const MonomialIdeal& I, const AssOptions& options)
{
    require_proper_nonzero(I, "Ass");
    const auto comps = irreducible_decomposition(I);
    return associated_primes(I, comps, options);
}

AssSet minimal_primes(const MonomialIdeal& I)
{
    const AssSet ass = associated_primes(I);
    std::vector<MonomialPrime> out;
    for (const auto& p : ass) {
        const bool minimal = std::none_of(ass.begin(), ass.end(), [&](const MonomialPrime& q) {
            return q != p && q.is_subset_of(p);
        });
        if (minimal) out.push_back(p);
    }
    return AssSet(std::move(out));
}

AssSet AssCache::get(const MonomialIdeal& I)
{
    std::string key = format_ideal(I);
    {
        std::lock_guard lock(mutex_);
        if (auto it = table_.find(key); it != table_.end()) {
            ++hits_;
            return it->second;
        }
    }
    AssSet computed = associated_primes(I, options_);
    std::lock_guard lock(mutex_);
    return table_.emplace(std::move(key), std::move(computed)).first->second;
}

std::size_t AssCache::size() const
{
    std::lock_guard lock(mutex_);
    return table_.size();
}

std::size_t AssCache::hits() const
{
    std::lock_guard lock(mutex_);
    return hits_;
}

}  // namespace monostab
