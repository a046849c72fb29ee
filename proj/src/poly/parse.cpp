#include "padicres/poly/parse.hpp"

#include <cctype>
#include <string>

#include "padicres/error.hpp"

namespace padicres::poly {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t num_vars, const ParseOptions& options)
        : text_(text), num_vars_(num_vars), options_(options)
    {
    }

    MultiPoly run()
    {
        if (num_vars_ == 0)
            throw DomainError("a polynomial needs at least one variable");
        skip_space();
        if (pos_ == text_.size())
            throw ParseError("empty expression", pos_);
        MultiPoly r = expr();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    MultiPoly expr()
    {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = unary();
        while (accept('*'))
            acc = acc * unary();
        return acc;
    }

    MultiPoly unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    MultiPoly power()
    {
        MultiPoly base = atom();
        if (!accept('^'))
            return base;
        skip_space();
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.empty())
            throw ParseError("expected a non-negative integer exponent", at);
        const Integer e(d);
        if (e > options_.max_exponent)
            throw ParseError("exponent " + d + " exceeds the bound " + std::to_string(options_.max_exponent), at);
        const auto ev = static_cast<std::uint32_t>(e.get_ui());
        for (const auto& [exps, c] : base.terms())
            for (auto x : exps)
                if (std::uint64_t{x} * ev > options_.max_exponent)
                    throw ParseError("exponent overflow beyond the bound " + std::to_string(options_.max_exponent), at);
        return base.pow(ev);
    }

    MultiPoly atom()
    {
        skip_space();
        if (pos_ == text_.size())
            throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(num_vars_, Integer(digits()));
        if (c == 't') {
            const std::size_t at = pos_++;
            const std::string d = digits();
            if (d.empty()) {
                if (num_vars_ != 1)
                    throw ParseError("bare 't' is only allowed for univariate input", at);
                return MultiPoly::variable(1, 0);
            }
            const Integer idx(d);
            if (idx == 0 || idx > num_vars_)
                throw ParseError("variable t" + d + " outside t1..t" + std::to_string(num_vars_), at);
            return MultiPoly::variable(num_vars_, idx.get_ui() - 1);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t num_vars_;
    ParseOptions options_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(std::string_view text, std::size_t num_vars, const ParseOptions& options)
{
    return Parser(text, num_vars, options).run();
}

} // namespace padicres::poly
