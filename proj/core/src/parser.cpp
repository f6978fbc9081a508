#include "elring/parser.hpp"

#include <cctype>

namespace elring {

namespace {

class ElementParser {
public:
    ElementParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

    Value run() {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Value expr() {
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            negate = c == '-';
        }
        Value acc = term();
        if (negate)
            acc = ring_.neg(acc);
        for (;;) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Value t = term();
                acc = c == '+' ? ring_.add(acc, t) : ring_.sub(acc, t);
            } else {
                return acc;
            }
        }
    }

    Value term() {
        char c = peek();
        Value acc;
        if (std::isdigit(static_cast<unsigned char>(c)))
            acc = ring_.from_int(integer());
        else
            acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc = ring_.mul(acc, factor());
        }
        return acc;
    }

    Value factor() {
        Value base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected an exponent", pos_);
            long long e = integer();
            if (e == 0)
                throw ParseError("exponent must be positive", at);
            if (e > 4096)
                throw ParseError("exponent too large", at);
            Value acc = base;
            for (long long i = 1; i < e; ++i)
                acc = ring_.mul(acc, base);
            return acc;
        }
        return base;
    }

    Value primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return generator();
        throw ParseError(pos_ < text_.size()
                             ? "unexpected '" + std::string(1, c) + "'"
                             : std::string("unexpected end of input"),
                         pos_);
    }

    Value generator() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        const auto& names = ring_.generator_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return ring_.generator(i);
        throw ParseError("unknown generator '" + name + "' in " + ring_.spec(), start);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        unsigned long long n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            unsigned long long digit = text_[pos_] - '0';
            if (n > (0x3fffffffffffffffull - digit) / 10)
                throw ParseError("integer literal too large", start);
            n = n * 10 + digit;
            ++pos_;
        }
        return static_cast<long long>(n);
    }

    const Ring& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Value parse_element(const Ring& ring, std::string_view text) {
    return ElementParser(ring, text).run();
}

}  // namespace elring
