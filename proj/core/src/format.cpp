#include "lsa/format.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "lsa/errors.hpp"

namespace lsa {

namespace {

// Character-level scanner with 1-based position tracking.
class Scanner {
  public:
    Scanner(std::string_view text, int line, int col_base = 1)
        : text_(text), line_(line), col_base_(col_base) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char advance() { return text_[pos_++]; }
    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, col(), msg); }
    int col() const { return col_base_ + static_cast<int>(pos_); }

    long read_integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_;
    int col_base_;
};

// atom := integer [ '/' integer ] | 'z(' N ')' [ '^' k ]
Scalar parse_atom(Scanner& s) {
    if (s.peek() == 'z') {
        s.advance();
        s.expect('(', "after z");
        long n = s.read_integer();
        if (n < 1) s.fail("root order must be >= 1");
        s.expect(')', "after root order");
        long k = 1;
        if (s.consume('^')) k = s.read_integer();
        return Scalar::root_of_unity(static_cast<unsigned>(n), k);
    }
    long num = s.read_integer();
    if (s.consume('/')) {
        long den = s.read_integer();
        if (den == 0) s.fail("zero denominator");
        return Scalar(Rational(num, den));
    }
    return Scalar(Rational(num));
}

Scalar parse_product(Scanner& s) {
    Scalar value = parse_atom(s);
    while (s.consume('*')) value = value * parse_atom(s);
    return value;
}

Scalar parse_sum(Scanner& s) {
    Scalar value = s.consume('-') ? -parse_product(s) : parse_product(s);
    while (true) {
        if (s.consume('+'))
            value = value + parse_product(s);
        else if (s.consume('-'))
            value = value - parse_product(s);
        else
            break;
    }
    return value;
}

std::optional<std::pair<Parity, int>> try_parse_basis(Scanner& s) {
    char c = s.peek();
    if (c != 'x' && c != 'y') return std::nullopt;
    s.advance();
    long idx = s.read_integer();
    if (idx < 1) s.fail("basis index must be >= 1");
    return std::make_pair(c == 'x' ? Parity::even : Parity::odd, static_cast<int>(idx));
}

struct Line {
    int number;
    std::string text;
};

std::string format_monomial(const Rational& coeff, unsigned order, size_t power,
                            const std::string& basis) {
    std::string out;
    const Rational mag = coeff.sign() < 0 ? -coeff : coeff;
    if (power == 0) {
        if (!mag.is_one()) out += mag.str() + " ";
    } else {
        if (!mag.is_one()) out += mag.str() + "*";
        out += "z(" + std::to_string(order) + ")";
        if (power > 1) out += "^" + std::to_string(power);
        out += " ";
    }
    return out + basis;
}

}  // namespace

SuperAlgebra parse_lsa(std::string_view text) {
    std::vector<Line> lines;
    {
        int number = 0;
        size_t start = 0;
        while (start <= text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++number;
            std::string raw(text.substr(start, end - start));
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            if (size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
            bool blank = raw.find_first_not_of(" \t") == std::string::npos;
            if (!blank) lines.push_back({number, raw});
            if (end == text.size()) break;
            start = end + 1;
        }
    }
    if (lines.empty()) throw ParseError(1, 1, "missing 'dims <n> <m>' header");

    int n = 0, m = 0;
    {
        const std::string& t = lines[0].text;
        size_t at = t.find_first_not_of(" \t");
        if (at == std::string::npos || t.compare(at, 4, "dims") != 0)
            throw ParseError(lines[0].number, static_cast<int>(at) + 1,
                             "first line must be 'dims <n> <m>'");
        Scanner s(std::string_view(t).substr(at + 4), lines[0].number,
                  static_cast<int>(at) + 5);
        long ln = s.read_integer(), lm = s.read_integer();
        if (!s.eof()) s.fail("trailing characters after dims header");
        if (ln < 0 || lm < 0) s.fail("dimensions must be nonnegative");
        n = static_cast<int>(ln);
        m = static_cast<int>(lm);
    }

    std::vector<TableEntry> entries;
    std::map<SuperAlgebra::Key, int> seen;  // key -> line number
    for (size_t li = 1; li < lines.size(); ++li) {
        Scanner s(lines[li].text, lines[li].number);
        s.expect('[', "at start of bracket line");
        auto left = try_parse_basis(s);
        if (!left) s.fail("expected basis token x<i> or y<j>");
        s.expect(',', "between bracket arguments");
        auto right = try_parse_basis(s);
        if (!right) s.fail("expected basis token x<i> or y<j>");
        s.expect(']', "after bracket arguments");
        s.expect('=', "after bracket");

        auto check_range = [&](std::pair<Parity, int> b) {
            const int dim = b.first == Parity::even ? n : m;
            if (b.second > dim)
                throw ParseError(lines[li].number, s.col(),
                                 "basis token " + basis_token(b.first, b.second) +
                                     " out of range for dims (" + std::to_string(n) + ", " +
                                     std::to_string(m) + ")");
        };
        check_range(*left);
        check_range(*right);

        const SuperAlgebra::Key key = {static_cast<int>(left->first), left->second,
                                       static_cast<int>(right->first), right->second};
        if (auto it = seen.find(key); it != seen.end())
            s.fail("duplicate bracket (already defined on line " + std::to_string(it->second) +
                   ")");
        seen[key] = lines[li].number;

        // rhs := '0' | signed term list; each term is a product of scalar
        // atoms ('*' or whitespace separated) ending in a basis token, or a
        // bare zero scalar.
        Element value(n, m);
        bool negate = s.consume('-');
        while (true) {
            Scalar coeff(1);
            std::optional<std::pair<Parity, int>> basis;
            bool scalar_seen = false;
            while (true) {
                if ((basis = try_parse_basis(s))) break;
                coeff = coeff * parse_atom(s);
                scalar_seen = true;
                if (s.consume('*')) continue;
                if ((basis = try_parse_basis(s))) break;
                break;  // scalar-only term; must be zero
            }
            if (!scalar_seen && !basis) s.fail("expected a term");
            if (negate) coeff = -coeff;
            if (basis) {
                check_range(*basis);
                const Parity target_parity = left->first ^ right->first;
                if (basis->first != target_parity)
                    throw ParseError(lines[li].number, s.col(),
                                     "grading violation: [" +
                                         basis_token(left->first, left->second) + ", " +
                                         basis_token(right->first, right->second) +
                                         "] must land in the " +
                                         (target_parity == Parity::even ? "even" : "odd") +
                                         " component, got " +
                                         basis_token(basis->first, basis->second));
                if (basis->first == Parity::even)
                    value.even_at(basis->second - 1) += coeff;
                else
                    value.odd_at(basis->second - 1) += coeff;
            } else if (!coeff.is_zero()) {
                s.fail("term without a basis token");
            }
            if (s.consume('+'))
                negate = false;
            else if (s.consume('-'))
                negate = true;
            else
                break;
        }
        if (!s.eof()) s.fail("trailing characters after bracket value");
        entries.push_back({left->first, left->second, right->first, right->second, value});
    }

    try {
        return SuperAlgebra::make(n, m, entries);
    } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
    }
}

std::string serialize_lsa(const SuperAlgebra& a) {
    std::ostringstream out;
    out << "dims " << a.even_dim() << " " << a.odd_dim() << "\n";
    // Block order: even-even, even-odd, odd-even, odd-odd.
    auto block_rank = [](const SuperAlgebra::Key& k) {
        return k[0] * 2 + k[2];  // (pa, pb) as two bits
    };
    std::vector<SuperAlgebra::Key> keys;
    for (const auto& [key, coords] : a.table()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
        if (block_rank(x) != block_rank(y)) return block_rank(x) < block_rank(y);
        if (x[1] != y[1]) return x[1] < y[1];
        return x[3] < y[3];
    });
    for (const auto& key : keys) {
        const auto& coords = *a.table_entry(static_cast<Parity>(key[0]), key[1],
                                            static_cast<Parity>(key[2]), key[3]);
        const Parity target = static_cast<Parity>(key[0]) ^ static_cast<Parity>(key[2]);
        out << "[" << basis_token(static_cast<Parity>(key[0]), key[1]) << ", "
            << basis_token(static_cast<Parity>(key[2]), key[3]) << "] = ";
        bool first = true;
        for (size_t t = 0; t < coords.size(); ++t) {
            const Scalar& c = coords[t];
            if (c.is_zero()) continue;
            const std::string basis = basis_token(target, static_cast<int>(t) + 1);
            // One term per nonzero monomial of the coefficient.
            for (size_t p = 0; p < c.coeffs().size(); ++p) {
                const Rational& r = c.coeffs()[p];
                if (r.is_zero()) continue;
                if (first) {
                    if (r.sign() < 0) out << "-";
                    first = false;
                } else {
                    out << (r.sign() < 0 ? " - " : " + ");
                }
                out << format_monomial(r, c.order(), p, basis);
            }
        }
        out << "\n";
    }
    return out.str();
}

Scalar parse_scalar(std::string_view text) {
    Scanner s(text, 1);
    if (s.eof()) throw ParseError(1, 1, "empty scalar literal");
    Scalar v = parse_sum(s);
    if (!s.eof()) s.fail("trailing characters in scalar literal");
    return v;
}

std::vector<Scalar> parse_scalar_csv(std::string_view text) {
    std::vector<Scalar> out;
    size_t start = 0;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_scalar(text.substr(start, comma - start)));
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace lsa
