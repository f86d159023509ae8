#include "prehom/parser.hpp"

#include <cctype>

namespace prehom {

namespace {

struct Parser {
    std::string_view src;
    std::span<const std::string> vars;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    mpz_class read_digits() {
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(std::string(src.substr(start, pos - start)), 10);
    }

    Rat read_number() {
        mpz_class num = read_digits();
        if (pos < src.size() && src[pos] == '.') fail("floating-point literals are not allowed");
        skip_ws();
        if (pos < src.size() && src[pos] == '/') {
            ++pos;
            skip_ws();
            if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
                fail("expected denominator digits after '/'");
            mpz_class den = read_digits();
            if (sgn(den) == 0) fail("zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }

    std::string read_ident() {
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        return std::string(src.substr(start, pos - start));
    }

    unsigned read_exponent() {
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            fail("expected a non-negative integer exponent after '^'");
        mpz_class e = read_digits();
        if (!e.fits_uint_p()) fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    MultiPoly atom() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            MultiPoly e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(static_cast<int>(vars.size()), read_number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t where = pos;
            std::string name = read_ident();
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return MultiPoly::variable(static_cast<int>(vars.size()),
                                                                static_cast<int>(i));
            throw ParseError("unknown variable \"" + name + "\"", where);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    MultiPoly factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (accept('-')) neg = !neg;
            else accept('+');
        }
        MultiPoly a = atom();
        if (accept('^')) a = pow(a, read_exponent());
        // No implicit multiplication: a factor must be followed by an
        // operator, ')' or end.
        skip_ws();
        if (pos < src.size()) {
            char c = src[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
                fail("implicit multiplication is not allowed; use '*'");
        }
        return neg ? -a : a;
    }

    MultiPoly term() {
        MultiPoly a = factor();
        while (accept('*')) a = a * factor();
        return a;
    }

    MultiPoly expr() {
        MultiPoly a = term();
        for (;;) {
            if (accept('+')) a += term();
            else if (accept('-')) a -= term();
            else break;
        }
        return a;
    }
};

}  // namespace

MultiPoly parse_poly(std::string_view src, std::span<const std::string> vars) {
    Parser p{src, vars};
    MultiPoly result = p.expr();
    if (!p.at_end()) p.fail("trailing input");
    return result;
}

}  // namespace prehom
