#include "galext/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace galext {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineParser
{
public:
    LineParser(std::string_view line, std::size_t line_no)
        : line_(line)
        , line_no_(line_no)
    {}

    [[noreturn]] void fail(const std::string &message) const { throw ParseError(line_no_, pos_ + 1, message); }

    void skip_ws()
    {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
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

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string identifier()
    {
        skip_ws();
        if (pos_ >= line_.size() || !is_ident_start(line_[pos_]))
            fail("expected identifier");
        std::size_t start = pos_;
        while (pos_ < line_.size() && is_ident_char(line_[pos_]))
            ++pos_;
        return std::string(line_.substr(start, pos_ - start));
    }

    std::size_t column() const { return pos_ + 1; }

    /// rational := digits ('/' digits)?
    Scalar rational()
    {
        std::size_t start = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
        if (pos_ < line_.size() && line_[pos_] == '/') {
            ++pos_;
            std::size_t den_start = pos_;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            if (pos_ == den_start)
                fail("expected denominator");
        }
        try {
            return Scalar::parse(std::string(line_.substr(start, pos_ - start)));
        } catch (const std::exception &e) {
            pos_ = start;
            fail(e.what());
        }
    }

    /// Parses a signed sum of terms; each term names exactly one generator.
    std::vector<std::pair<std::size_t, Scalar>> rhs(const LieAlgebraSpec &algebra)
    {
        std::vector<std::pair<std::size_t, Scalar>> out;
        if (at_end())
            fail("missing right-hand side");
        if (peek() == '0') {
            std::size_t save = pos_;
            ++pos_;
            if (at_end())
                return out;
            pos_ = save;
        }
        bool first = true;
        while (!at_end()) {
            Scalar sign(1);
            char c = peek();
            if (c == '+' || c == '-') {
                sign = c == '-' ? Scalar(-1) : Scalar(1);
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            out.push_back(term(algebra, sign));
            first = false;
        }
        return out;
    }

private:
    std::pair<std::size_t, Scalar> term(const LieAlgebraSpec &algebra, Scalar coeff)
    {
        std::optional<std::size_t> generator;
        for (;;) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= rational();
            } else if (is_ident_start(c)) {
                std::size_t col = column();
                std::string name = identifier();
                if (name == "i") {
                    coeff *= Scalar::imaginary_unit();
                } else {
                    auto idx = algebra.find(name);
                    if (!idx)
                        throw ParseError(line_no_, col, "unknown generator '" + name + "'");
                    if (generator)
                        throw ParseError(line_no_, col, "term names more than one generator");
                    generator = idx;
                }
            } else {
                fail("expected coefficient or generator");
            }
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!generator)
            fail("term has no generator");
        return {*generator, coeff};
    }

    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

} // namespace

LieAlgebraSpec parse_algebra(std::string_view text)
{
    std::optional<LieAlgebraSpec> algebra;
    // Brackets seen so far, keyed by ordered pair (first, second) as written.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> seen;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        LineParser p(line, line_no);
        if (p.at_end())
            continue;

        if (p.peek() != '[') {
            std::string keyword = p.identifier();
            if (keyword != "generators")
                p.fail("expected 'generators:' or a bracket line");
            if (algebra)
                p.fail("generators declared twice");
            p.expect(':');
            std::vector<std::string> names;
            while (!p.at_end()) {
                std::size_t col = p.column();
                std::string name = p.identifier();
                if (name == "i")
                    throw ParseError(line_no, col, "'i' is reserved for the imaginary unit");
                for (const auto &n : names)
                    if (n == name)
                        throw ParseError(line_no, col, "duplicate generator '" + name + "'");
                names.push_back(name);
            }
            if (names.empty())
                p.fail("no generators declared");
            algebra.emplace(std::move(names));
            continue;
        }

        if (!algebra)
            p.fail("bracket line before 'generators:'");
        p.expect('[');
        std::size_t col_a = p.column();
        std::string a = p.identifier();
        p.expect(',');
        std::size_t col_b = p.column();
        std::string b = p.identifier();
        p.expect(']');
        p.expect('=');
        auto ia = algebra->find(a);
        if (!ia)
            throw ParseError(line_no, col_a, "unknown generator '" + a + "'");
        auto ib = algebra->find(b);
        if (!ib)
            throw ParseError(line_no, col_b, "unknown generator '" + b + "'");
        auto rhs = p.rhs(*algebra);

        std::vector<Scalar> dense(algebra->dim());
        for (const auto &[k, c] : rhs)
            dense[k] += c;
        if (*ia == *ib) {
            for (const auto &c : dense)
                if (!c.is_zero())
                    throw ParseError(line_no, col_a, "[" + a + "," + a + "] must be zero");
            continue;
        }

        auto key = std::minmax(*ia, *ib);
        std::vector<Scalar> oriented = dense;
        if (*ia > *ib)
            for (auto &c : oriented)
                c = -c;
        auto [it, inserted] = seen.try_emplace({key.first, key.second}, oriented);
        if (!inserted) {
            if (it->second != oriented)
                throw ParseError(line_no, 1, "[" + a + "," + b + "] conflicts with an earlier line (not antisymmetric)");
            continue;
        }
        algebra->set_bracket(*ia, *ib, rhs);
    }
    if (!algebra)
        throw ParseError(1, 1, "missing 'generators:' line");
    return *algebra;
}

LieAlgebraSpec load_algebra(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw BadParameter("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra(buffer.str());
}

std::string format_algebra(const LieAlgebraSpec &algebra)
{
    std::ostringstream os;
    os << "generators:";
    for (const auto &name : algebra.names())
        os << " " << name;
    os << "\n";
    for (std::size_t i = 0; i < algebra.dim(); ++i)
        for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
            if (algebra.bracket_is_zero(i, j))
                continue;
            os << "[" << algebra.names()[i] << "," << algebra.names()[j] << "] =";
            bool first = true;
            for (std::size_t k = 0; k < algebra.dim(); ++k) {
                const Scalar &c = algebra.constant(i, j, k);
                if (c.is_zero())
                    continue;
                // Split complex coefficients into real and imaginary terms.
                for (int part = 0; part < 2; ++part) {
                    mpq_class v = part == 0 ? c.re() : c.im();
                    if (sgn(v) == 0)
                        continue;
                    bool negative = sgn(v) < 0;
                    if (negative)
                        v = -v;
                    os << (first ? (negative ? " -" : " ") : (negative ? " - " : " + "));
                    if (v != 1)
                        os << v.get_str() << "*";
                    if (part == 1)
                        os << "i*";
                    os << algebra.names()[k];
                    first = false;
                }
            }
            os << "\n";
        }
    return os.str();
}

} // namespace galext
