#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qtoric/field.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

/// Exact problem description parsed from the structured-text config format.
struct ProblemConfig {
    std::size_t ambient_dim = 0;  // n
    long discriminant = 1;        // m
    std::vector<Halfspace> halfspaces;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::string emit_samples;  // optional CSV path
};

namespace detail {

/// Character cursor with line/column tracking for parse diagnostics.
class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    char get() {
        char c = peek();
        ++pos_;
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) get();
    }
    bool consume(char c) {
        skip_ws();
        if (peek() != c) return false;
        get();
        return true;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, col_, msg); }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

inline Int parse_integer(Cursor& cur) {
    cur.skip_ws();
    std::string digits;
    if (cur.peek() == '-' || cur.peek() == '+') digits += cur.get();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) digits += cur.get();
    return Int(digits);
}

inline Rational parse_fraction(Cursor& cur) {
    Int num = parse_integer(cur);
    Int den = 1;
    cur.skip_ws();
    if (cur.peek() == '/') {
        cur.get();
        den = parse_integer(cur);
        if (den == 0) cur.fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// entry := term (('+'|'-') term)*  where a term is `p/q`, `p/q*sqrt(m)` or `sqrt(m)`.
inline FieldScalar parse_entry(Cursor& cur, long m) {
    Rational a = 0, b = 0;
    bool first = true;
    while (true) {
        cur.skip_ws();
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.get() == '-') sign = -1;
        } else if (!first) {
            break;
        }
        cur.skip_ws();
        Rational coeff = 1;
        bool have_coeff = false;
        if (cur.peek() != 's') {
            coeff = parse_fraction(cur);
            have_coeff = true;
        }
        cur.skip_ws();
        bool is_sqrt = false;
        if (cur.peek() == '*' || (!have_coeff && cur.peek() == 's')) {
            if (cur.peek() == '*') cur.get();
            cur.skip_ws();
            for (char c : std::string("sqrt"))
                if (cur.get() != c) cur.fail("expected sqrt");
            cur.expect('(');
            Int arg = parse_integer(cur);
            cur.expect(')');
            if (!arg.fits_slong_p() || !is_square_free(arg.get_si()))
                throw NonSquareFreeDiscriminant("sqrt argument must be square-free and positive");
            if (arg.get_si() != m && arg != 1)
                throw DiscriminantMismatch("sqrt(" + arg.get_str() +
                                           ") does not match configured discriminant " +
                                           std::to_string(m));
            is_sqrt = arg != 1;
        }
        if (sign < 0) coeff = -coeff;
        if (is_sqrt)
            b += coeff;
        else
            a += coeff;
        first = false;
        cur.skip_ws();
        if (cur.peek() != '+' && cur.peek() != '-') break;
    }
    if (b == 0) return FieldScalar(a);
    return FieldScalar(a, b, m);
}

}  // namespace detail

/// Parse the key-value config format:
///   n = 2
///   m = 5
///   facet = [p/q, p/q + p/q*sqrt(m)] ; lambda = p/q
/// plus optional samples / seed / tolerance / emit_samples keys.
inline ProblemConfig parse_config(const std::string& text) {
    ProblemConfig cfg;
    detail::Cursor cur(text);
    bool have_n = false, have_m = false;

    auto read_key = [&]() -> std::string {
        cur.skip_ws();
        std::string key;
        while (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_')
            key += cur.get();
        return key;
    };

    while (!cur.eof()) {
        cur.skip_ws();
        if (cur.peek() == '\n' || cur.peek() == '\r') {
            cur.get();
            continue;
        }
        if (cur.peek() == '#') {  // comment to end of line
            while (!cur.eof() && cur.peek() != '\n') cur.get();
            continue;
        }
        if (cur.eof()) break;
        std::string key = read_key();
        if (key.empty()) cur.fail("expected key");
        cur.expect('=');
        if (key == "n") {
            cfg.ambient_dim = std::size_t(detail::parse_integer(cur).get_ui());
            have_n = true;
        } else if (key == "m") {
            Int m = detail::parse_integer(cur);
            if (!m.fits_slong_p() || !is_square_free(m.get_si()))
                throw NonSquareFreeDiscriminant("m must be a square-free positive integer");
            cfg.discriminant = m.get_si();
            have_m = true;
        } else if (key == "samples") {
            cfg.samples = std::size_t(detail::parse_integer(cur).get_ui());
        } else if (key == "seed") {
            cfg.seed = std::uint64_t(detail::parse_integer(cur).get_ui());
        } else if (key == "tolerance") {
            cur.skip_ws();
            std::string num;
            while (!cur.eof() && cur.peek() != '\n' && cur.peek() != ' ' && cur.peek() != '\t')
                num += cur.get();
            try {
                cfg.tolerance = std::stod(num);
            } catch (const std::exception&) {
                cur.fail("invalid tolerance value");
            }
        } else if (key == "emit_samples") {
            cur.skip_ws();
            std::string path;
            while (!cur.eof() && cur.peek() != '\n') path += cur.get();
            cfg.emit_samples = path;
        } else if (key == "facet") {
            if (!have_n || !have_m) cur.fail("n and m must precede facet entries");
            Halfspace h;
            cur.expect('[');
            for (std::size_t i = 0; i < cfg.ambient_dim; ++i) {
                h.normal.push_back(detail::parse_entry(cur, cfg.discriminant));
                if (i + 1 < cfg.ambient_dim) cur.expect(',');
            }
            cur.expect(']');
            cur.expect(';');
            std::string lkey = read_key();
            if (lkey != "lambda") cur.fail("expected 'lambda'");
            cur.expect('=');
            h.offset = detail::parse_entry(cur, cfg.discriminant);
            bool zero = true;
            for (const FieldScalar& x : h.normal) zero = zero && x.is_zero();
            if (zero) cur.fail("facet normal must be nonzero");
            cfg.halfspaces.push_back(std::move(h));
        } else {
            cur.fail("unknown key '" + key + "'");
        }
        cur.skip_ws();
        if (!cur.eof() && cur.peek() != '\n' && cur.peek() != '\r' && cur.peek() != '#')
            cur.fail("trailing characters");
    }
    if (!have_n) throw SyntaxError(1, 1, "missing required key 'n'");
    if (cfg.halfspaces.empty()) throw SyntaxError(1, 1, "no facets given");
    return cfg;
}

/// Canonical serialization; parse(serialize(cfg)) reproduces the exact data.
inline std::string serialize_config(const ProblemConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "n = " << cfg.ambient_dim << "\n";
    out << "m = " << cfg.discriminant << "\n";
    out << "samples = " << cfg.samples << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "tolerance = " << cfg.tolerance << "\n";
    if (!cfg.emit_samples.empty()) out << "emit_samples = " << cfg.emit_samples << "\n";
    auto entry = [](const FieldScalar& x) {
        std::string s = x.rat_part().get_str();
        if (x.rat_part().get_den() == 1) s += "/1";
        if (!x.is_rational()) {
            std::string b = x.irr_part().get_str();
            if (x.irr_part().get_den() == 1) b += "/1";
            s += " + " + b + "*sqrt(" + std::to_string(x.disc()) + ")";
        }
        return s;
    };
    for (const Halfspace& h : cfg.halfspaces) {
        out << "facet = [";
        for (std::size_t i = 0; i < h.normal.size(); ++i) {
            if (i) out << ", ";
            out << entry(h.normal[i]);
        }
        out << "] ; lambda = " << entry(h.offset) << "\n";
    }
    return out.str();
}

}  // namespace qtoric
