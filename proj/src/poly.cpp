#include "galext/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace galext {

SymbolRegistry::SymbolRegistry(std::vector<Symbol> symbols)
    : symbols_(std::move(symbols))
{
    std::sort(symbols_.begin(), symbols_.end(),
              [](const Symbol &a, const Symbol &b) { return a.name < b.name; });
    for (std::size_t k = 1; k < symbols_.size(); ++k)
        if (symbols_[k].name == symbols_[k - 1].name)
            throw std::invalid_argument("duplicate symbol '" + symbols_[k].name + "'");
}

std::optional<std::size_t> SymbolRegistry::find(std::string_view name) const
{
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name,
                               [](const Symbol &s, std::string_view n) { return s.name < n; });
    if (it == symbols_.end() || it->name != name)
        return std::nullopt;
    return static_cast<std::size_t>(it - symbols_.begin());
}

std::size_t SymbolRegistry::index_of(std::string_view name) const
{
    if (auto idx = find(name))
        return *idx;
    throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
}

RegistryPtr make_registry(std::vector<Symbol> symbols)
{
    return std::make_shared<const SymbolRegistry>(std::move(symbols));
}

RegistryPtr physics_registry()
{
    static const RegistryPtr registry = make_registry({
        {"c", false},
        {"d", false},
        {"lambda", false},
        {"m", true},
        {"t", false},
        {"v1", false},
        {"v2", false},
        {"x1", false},
        {"x2", false},
    });
    return registry;
}

// ---------------------------------------------------------------------------

PolyExpr::PolyExpr(RegistryPtr registry)
    : registry_(std::move(registry))
{
    if (!registry_)
        throw RegistryMismatch("polynomial without registry");
}

PolyExpr::PolyExpr(RegistryPtr registry, const Scalar &constant)
    : PolyExpr(std::move(registry))
{
    add_term(Monomial(registry_->size(), 0), constant);
}

PolyExpr PolyExpr::symbol(RegistryPtr registry, std::string_view name, int exponent)
{
    Monomial mono(registry->size(), 0);
    mono[registry->index_of(name)] = exponent;
    return monomial(std::move(registry), mono, Scalar(1));
}

PolyExpr PolyExpr::monomial(RegistryPtr registry, const Monomial &exponents, const Scalar &coeff)
{
    PolyExpr p(std::move(registry));
    if (exponents.size() != p.registry_->size())
        throw RegistryMismatch("monomial length does not match registry");
    for (std::size_t k = 0; k < exponents.size(); ++k)
        if (exponents[k] < 0 && !p.registry_->symbol(k).invertible)
            throw NotInvertible("negative exponent of non-invertible symbol '" +
                                p.registry_->symbol(k).name + "'");
    p.add_term(exponents, coeff);
    return p;
}

void PolyExpr::add_term(const Monomial &mono, const Scalar &coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void PolyExpr::require_same(const PolyExpr &o) const
{
    if (registry_ != o.registry_)
        throw RegistryMismatch("polynomials over different symbol registries");
}

bool PolyExpr::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto &mono = terms_.begin()->first;
    return std::all_of(mono.begin(), mono.end(), [](int e) { return e == 0; });
}

Scalar PolyExpr::constant_term() const
{
    auto it = terms_.find(Monomial(registry_->size(), 0));
    return it == terms_.end() ? Scalar() : it->second;
}

bool PolyExpr::is_unit() const
{
    if (terms_.size() != 1)
        return false;
    const auto &mono = terms_.begin()->first;
    for (std::size_t k = 0; k < mono.size(); ++k)
        if (mono[k] != 0 && !registry_->symbol(k).invertible)
            return false;
    return true;
}

bool PolyExpr::depends_on(std::size_t symbol_index) const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const auto &term) { return term.first.at(symbol_index) != 0; });
}

int PolyExpr::degree_in(const std::vector<std::size_t> &symbol_indices) const
{
    int best = 0;
    for (const auto &[mono, coeff] : terms_) {
        int deg = 0;
        for (auto idx : symbol_indices)
            deg += mono.at(idx);
        best = std::max(best, deg);
    }
    return best;
}

PolyExpr PolyExpr::conj() const
{
    PolyExpr r(registry_);
    for (const auto &[mono, coeff] : terms_)
        r.terms_.emplace(mono, coeff.conj());
    return r;
}

PolyExpr PolyExpr::operator-() const
{
    PolyExpr r(registry_);
    for (const auto &[mono, coeff] : terms_)
        r.terms_.emplace(mono, -coeff);
    return r;
}

PolyExpr &PolyExpr::operator+=(const PolyExpr &o)
{
    require_same(o);
    for (const auto &[mono, coeff] : o.terms_)
        add_term(mono, coeff);
    return *this;
}

PolyExpr &PolyExpr::operator-=(const PolyExpr &o)
{
    require_same(o);
    for (const auto &[mono, coeff] : o.terms_)
        add_term(mono, -coeff);
    return *this;
}

PolyExpr operator*(const PolyExpr &a, const PolyExpr &b)
{
    a.require_same(b);
    PolyExpr r(a.registry_);
    Monomial mono(a.registry_->size());
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            for (std::size_t k = 0; k < mono.size(); ++k)
                mono[k] = ma[k] + mb[k];
            r.add_term(mono, ca * cb);
        }
    }
    return r;
}

PolyExpr &PolyExpr::operator*=(const PolyExpr &o)
{
    *this = *this * o;
    return *this;
}

PolyExpr &PolyExpr::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &term : terms_)
        term.second *= c;
    return *this;
}

bool operator==(const PolyExpr &a, const PolyExpr &b)
{
    a.require_same(b);
    return a.terms_ == b.terms_;
}

PolyExpr PolyExpr::div_symbol(std::string_view name, int k) const
{
    std::size_t idx = registry_->index_of(name);
    if (!registry_->symbol(idx).invertible)
        throw NotInvertible("symbol '" + std::string(name) + "' is not invertible");
    PolyExpr r(registry_);
    for (const auto &[key, coeff] : terms_) {
        Monomial mono = key;
        mono[idx] -= k;
        r.terms_.emplace(std::move(mono), coeff);
    }
    return r;
}

PolyExpr PolyExpr::unit_inverse() const
{
    if (!is_unit())
        throw NotInvertible("'" + str() + "' is not a unit");
    Monomial mono = terms_.begin()->first;
    for (auto &e : mono)
        e = -e;
    return monomial(registry_, mono, terms_.begin()->second.inverse());
}

PolyExpr PolyExpr::derivative(std::size_t symbol_index) const
{
    PolyExpr r(registry_);
    for (const auto &[key, coeff] : terms_) {
        Monomial mono = key;
        int e = mono.at(symbol_index);
        if (e == 0)
            continue;
        mono[symbol_index] = e - 1;
        r.add_term(mono, coeff * Scalar(e));
    }
    return r;
}

PolyExpr PolyExpr::substitute(std::size_t symbol_index, const PolyExpr &value) const
{
    require_same(value);
    PolyExpr r(registry_);
    for (const auto &[key, coeff] : terms_) {
        Monomial mono = key;
        int e = mono.at(symbol_index);
        if (e < 0)
            throw NotInvertible("cannot substitute into a negative power");
        mono[symbol_index] = 0;
        PolyExpr term = monomial(registry_, mono, coeff);
        for (int k = 0; k < e; ++k)
            term *= value;
        r += term;
    }
    return r;
}

std::string PolyExpr::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[mono, coeff] : terms_) {
        std::string factors;
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (mono[k] == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += registry_->symbol(k).name;
            if (mono[k] != 1)
                factors += "^" + std::to_string(mono[k]);
        }
        std::string c = coeff.str();
        bool negative = !c.empty() && c.front() == '-';
        if (negative)
            c.erase(0, 1);
        std::string body;
        if (factors.empty())
            body = c;
        else if (c == "1")
            body = factors;
        else
            body = c + "*" + factors;
        if (first)
            os << (negative ? "-" : "") << body;
        else
            os << (negative ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser
{
public:
    PolyParser(const RegistryPtr &registry, std::string_view text)
        : registry_(registry)
        , text_(text)
    {}

    PolyExpr parse()
    {
        PolyExpr result = parse_sum();
        if (pos_ != text_.size())
            throw std::invalid_argument("unbalanced ')' in '" + std::string(text_) + "'");
        return result;
    }

private:
    PolyExpr parse_sum()
    {
        PolyExpr result(registry_);
        skip_ws();
        if (pos_ == text_.size() || text_[pos_] == ')')
            throw std::invalid_argument("empty expression");
        bool first = true;
        while (pos_ < text_.size() && text_[pos_] != ')') {
            Scalar sign(1);
            if (text_[pos_] == '+' || text_[pos_] == '-') {
                if (text_[pos_] == '-')
                    sign = Scalar(-1);
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw std::invalid_argument("expected '+' or '-' in '" + std::string(text_) + "'");
            }
            result += parse_term() * sign;
            skip_ws();
            first = false;
        }
        return result;
    }

    PolyExpr parse_term()
    {
        PolyExpr term(registry_, Scalar(1));
        for (;;) {
            term *= parse_factor();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                continue;
            }
            return term;
        }
    }

    PolyExpr parse_factor()
    {
        if (pos_ >= text_.size())
            throw std::invalid_argument("unexpected end of expression");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            PolyExpr inner = parse_sum();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw std::invalid_argument("missing ')' in '" + std::string(text_) + "'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            return PolyExpr(registry_, Scalar::parse(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            int exponent = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                std::size_t estart = pos_;
                if (pos_ < text_.size() && text_[pos_] == '-')
                    ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                exponent = std::stoi(std::string(text_.substr(estart, pos_ - estart)));
            }
            if (name == "i") {
                if (exponent < 0)
                    throw std::invalid_argument("negative power of i");
                PolyExpr r(registry_, Scalar(1));
                for (int k = 0; k < exponent; ++k)
                    r *= Scalar::imaginary_unit();
                return r;
            }
            Monomial mono(registry_->size(), 0);
            mono[registry_->index_of(name)] = exponent;
            return PolyExpr::monomial(registry_, mono, Scalar(1));
        }
        throw std::invalid_argument("unexpected character '" + std::string(1, ch) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const RegistryPtr &registry_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

PolyExpr parse_poly(const RegistryPtr &registry, std::string_view text)
{
    return PolyParser(registry, text).parse();
}

} // namespace galext
