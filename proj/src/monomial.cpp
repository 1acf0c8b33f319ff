#include "monostab/monomial.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "monostab/errors.hpp"

namespace monostab {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty()) throw InputError("a variable context needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw InputError("empty variable name");
        if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
    }
}

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names)
{
    return std::make_shared<const VariableContext>(std::move(names));
}

std::shared_ptr<const VariableContext> VariableContext::indexed(std::size_t n, std::size_t first,
                                                                const std::string& stem)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(first + i));
    return make(std::move(names));
}

std::size_t VariableContext::index_of(const std::string& name) const noexcept
{
    const auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<std::size_t>(it - names_.begin());
}

Monomial::Monomial(std::size_t arity) : arity_(arity), lanes_(kernels::padded_width(arity), 0) {}

Monomial::Monomial(std::size_t arity, std::vector<Exponent> lanes) : arity_(arity), lanes_(std::move(lanes))
{
    refresh_degree();
}

Monomial::Monomial(std::size_t arity, std::initializer_list<std::uint64_t> exponents) : Monomial(arity)
{
    if (exponents.size() != arity) throw InputError("exponent count does not match arity");
    std::size_t i = 0;
    for (std::uint64_t e : exponents) {
        if (e > kernels::kMaxExponent) throw OverflowError("exponent out of range");
        lanes_[i++] = static_cast<Exponent>(e);
    }
    refresh_degree();
}

Monomial Monomial::from_exponents(std::span<const std::uint64_t> exponents)
{
    Monomial m(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > kernels::kMaxExponent) throw OverflowError("exponent out of range");
        m.lanes_[i] = static_cast<Exponent>(exponents[i]);
    }
    m.refresh_degree();
    return m;
}

Monomial Monomial::from_exponents(std::span<const Exponent> exponents)
{
    Monomial m(exponents.size());
    std::copy(exponents.begin(), exponents.end(), m.lanes_.begin());
    m.refresh_degree();
    return m;
}

Monomial Monomial::variable(std::size_t arity, std::size_t i, std::uint64_t e)
{
    if (i >= arity) throw InputError("variable index out of range");
    return Monomial(arity).with(i, e);
}

void Monomial::refresh_degree()
{
    degree_ = lanes_.empty() ? 0 : kernels::active().degree(lanes_.data(), lanes_.size());
}

void Monomial::check_same_arity(const Monomial& other) const
{
    if (arity_ != other.arity_) throw InputError("monomials of different arity");
}

std::vector<std::size_t> Monomial::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < arity_; ++i) {
        if (lanes_[i] != 0) s.push_back(i);
    }
    return s;
}

bool Monomial::divides(const Monomial& other) const
{
    check_same_arity(other);
    return lanes_.empty() || kernels::active().divides(lanes_.data(), other.lanes_.data(), lanes_.size());
}

Monomial Monomial::operator*(const Monomial& other) const
{
    check_same_arity(other);
    std::vector<Exponent> out(lanes_.size());
    if (!lanes_.empty() && !kernels::active().multiply(lanes_.data(), other.lanes_.data(), out.data(), out.size()))
        throw OverflowError("exponent overflow in monomial product");
    return Monomial(arity_, std::move(out));
}

Monomial Monomial::lcm(const Monomial& other) const
{
    check_same_arity(other);
    std::vector<Exponent> out(lanes_.size());
    if (!lanes_.empty()) kernels::active().lcm(lanes_.data(), other.lanes_.data(), out.data(), out.size());
    return Monomial(arity_, std::move(out));
}

Monomial Monomial::gcd(const Monomial& other) const
{
    check_same_arity(other);
    std::vector<Exponent> out(lanes_.size());
    if (!lanes_.empty()) kernels::active().gcd(lanes_.data(), other.lanes_.data(), out.data(), out.size());
    return Monomial(arity_, std::move(out));
}

Monomial Monomial::quotient(const Monomial& other) const
{
    check_same_arity(other);
    std::vector<Exponent> out(lanes_.size());
    if (!lanes_.empty()) kernels::active().quotient(lanes_.data(), other.lanes_.data(), out.data(), out.size());
    return Monomial(arity_, std::move(out));
}

Monomial Monomial::pow(std::uint64_t k) const
{
    std::vector<Exponent> out(lanes_.size());
    for (std::size_t i = 0; i < arity_; ++i) {
        const std::uint64_t e = lanes_[i];
        if (e != 0 && k > kernels::kMaxExponent / e) throw OverflowError("exponent overflow in monomial power");
        out[i] = static_cast<Exponent>(e * k);
    }
    return Monomial(arity_, std::move(out));
}

Monomial Monomial::with(std::size_t i, std::uint64_t e) const
{
    if (i >= arity_) throw InputError("variable index out of range");
    if (e > kernels::kMaxExponent) throw OverflowError("exponent out of range");
    Monomial m = *this;
    m.lanes_[i] = static_cast<Exponent>(e);
    m.refresh_degree();
    return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const noexcept
{
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    if (auto c = arity_ <=> other.arity_; c != 0) return c;
    for (std::size_t i = 0; i < arity_; ++i) {
        if (lanes_[i] != other.lanes_[i]) return other.lanes_[i] <=> lanes_[i];
    }
    return std::strong_ordering::equal;
}

std::string Monomial::to_string(const VariableContext& ctx) const
{
    std::string out;
    for (std::size_t i = 0; i < arity_; ++i) {
        if (lanes_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ctx.name(i);
        if (lanes_[i] != 1) out += '^' + std::to_string(lanes_[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace monostab
