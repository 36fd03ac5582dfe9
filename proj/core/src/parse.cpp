#include "gcover/parse.hpp"

#include <cctype>

namespace gcover {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ", " : std::string()) + "column " +
                         std::to_string(column) + ": " + msg),
      line_(line), column_(column), detail_(msg)
{
}

namespace {

class Parser {
public:
    Parser(std::string_view s, const RingPtr& r, int line, int col0) : s_(s), r_(r), line_(line), col0_(col0) {}

    QPoly run()
    {
        skip();
        if (pos_ >= s_.size()) fail("empty polynomial");
        QPoly p = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(line_, col0_ + static_cast<int>(pos_), msg);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    QPoly expr()
    {
        QPoly acc(r_);
        bool neg = false;
        skip();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        QPoly t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    QPoly term()
    {
        QPoly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                size_t at = pos_;
                QPoly d = factor();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division only by a nonzero constant");
                }
                acc = acc.scaled(inv(d.lc()));
            } else {
                break;
            }
        }
        return acc;
    }

    QPoly factor()
    {
        QPoly base = primary();
        if (eat('^')) {
            skip();
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("expected exponent");
            if (pos_ - st > 5) fail("exponent too large");
            int k = std::stoi(std::string(s_.substr(st, pos_ - st)));
            base = pow(base, k);
        }
        return base;
    }

    QPoly primary()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            QPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer z(std::string(s_.substr(st, pos_ - st)));
            return qconst(r_, Rational(z));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t st = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(st, pos_ - st));
            int idx = r_->index_of(name);
            if (idx < 0) {
                pos_ = st;
                fail("unknown identifier '" + name + "'");
            }
            return qvar(r_, idx);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    const RingPtr& r_;
    int line_, col0_;
    size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text, const RingPtr& ring, int line, int col0)
{
    return Parser(text, ring, line, col0).run();
}

}  // namespace gcover
