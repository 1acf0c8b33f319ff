#include "monostab/text_format.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "monostab/errors.hpp"

namespace monostab {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Cursor over one line that skips blanks and reports 1-based columns.
class LineCursor {
public:
    LineCursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

    void skip_ws()
    {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ >= line_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < line_.size() ? line_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    std::string identifier()
    {
        skip_ws();
        if (pos_ >= line_.size() || !is_ident_start(line_[pos_])) fail("expected a variable name");
        const std::size_t start = pos_;
        while (pos_ < line_.size() && is_ident_char(line_[pos_])) ++pos_;
        return std::string(line_.substr(start, pos_ - start));
    }
    std::uint64_t integer()
    {
        skip_ws();
        if (pos_ >= line_.size() || !std::isdigit(static_cast<unsigned char>(line_[pos_])))
            fail("expected a nonnegative integer");
        std::uint64_t v = 0;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
            v = v * 10 + std::uint64_t(line_[pos_] - '0');
            if (v > kernels::kMaxExponent) fail("exponent out of range");
            ++pos_;
        }
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_ + 1, what); }
    [[noreturn]] void fail_at(std::size_t column, const std::string& what) const
    {
        throw InputError(what, line_no_, column);
    }
    std::size_t column() const { return pos_ + 1; }

private:
    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line)
{
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

Monomial parse_generator(LineCursor& cur, const VariableContext& ctx)
{
    std::vector<std::uint64_t> e(ctx.arity(), 0);
    do {
        if (cur.peek() == '1') {
            // The unit factor; a bare "1" or a harmless "1*x".
            if (cur.integer() != 1) cur.fail("only 1 may appear as a numeric factor");
            continue;
        }
        cur.skip_ws();
        const std::size_t col = cur.column();
        const std::string name = cur.identifier();
        const std::size_t idx = ctx.index_of(name);
        if (idx == ctx.arity()) cur.fail_at(col, "unknown variable '" + name + "'");
        std::uint64_t p = 1;
        if (cur.accept('^')) p = cur.integer();
        e[idx] += p;
        if (e[idx] > kernels::kMaxExponent) cur.fail("exponent out of range");
    } while (cur.accept('*'));
    if (!cur.at_end()) cur.fail("unexpected character");
    return Monomial::from_exponents(std::span<const std::uint64_t>(e));
}

}  // namespace

MonomialIdeal parse_ideal(std::istream& in)
{
    ContextPtr ctx;
    std::vector<Monomial> gens;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = strip_comment(raw);
        LineCursor cur(line, line_no);
        if (cur.at_end()) continue;
        if (!ctx) {
            const std::string head = cur.identifier();
            if (head != "vars" || !cur.accept(':')) throw InputError("expected header 'vars: ...'", line_no, 1);
            std::vector<std::string> names;
            do {
                names.push_back(cur.identifier());
            } while (cur.accept(','));
            if (!cur.at_end()) cur.fail("unexpected character in header");
            try {
                ctx = VariableContext::make(std::move(names));
            } catch (const InputError& e) {
                throw InputError(e.what(), line_no, 1);
            }
            continue;
        }
        gens.push_back(parse_generator(cur, *ctx));
    }
    if (!ctx) throw InputError("missing header 'vars: ...'", line_no + 1, 1);
    return minimalize(std::move(gens), std::move(ctx));
}

MonomialIdeal parse_ideal(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_ideal(in);
}

Monomial parse_monomial(std::string_view text, const VariableContext& ctx)
{
    LineCursor cur(text, 1);
    if (cur.at_end()) cur.fail("empty monomial");
    return parse_generator(cur, ctx);
}

std::string format_ideal(const MonomialIdeal& I)
{
    std::string out = "vars: ";
    const auto& names = I.context().names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    out += '\n';
    for (const auto& g : I.generators()) out += g.to_string(I.context()) + '\n';
    return out;
}

}  // namespace monostab
