#include "lieinv/expr.hpp"

#include <cctype>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ExprContext& ctx) : s_(text), ctx_(ctx) {}

    Poly run() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in \"" + s_ + "\"", "offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly p = term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    Poly term() {
        Poly p = unary();
        for (;;) {
            if (eat('*')) {
                p *= unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                Poly d = unary();
                if (d.degree() > 0) {
                    pos_ = at;
                    fail("division by a non-constant");
                }
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                p *= d.lead().inv();
            } else {
                return p;
            }
        }
    }

    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (!eat('^')) return base;
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
        if (!neg) return pow(base, e);
        if (base.degree() > 0) fail("negative power of a non-constant");
        if (base.is_zero()) fail("negative power of zero");
        return Poly(lieinv::pow(base.lead(), -static_cast<long>(e)));
    }

    Poly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly(Scalar(Rational(mpz_class(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == "i") return Poly(Scalar::imag_unit());
            if (ctx_.tower && id == ctx_.tower->generator()) return Poly(Scalar::generator(ctx_.tower));
            if (!ctx_.variable.empty() && id == ctx_.variable) return Poly::variable();
            auto it = ctx_.params.find(id);
            if (it != ctx_.params.end()) return Poly(it->second);
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    const ExprContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const ExprContext& ctx) { return Parser(text, ctx).run(); }

Scalar parse_scalar(const std::string& text, const ExprContext& ctx) {
    ExprContext c = ctx;
    c.variable.clear();
    Poly p = Parser(text, c).run();
    return p.is_zero() ? Scalar() : p.lead();
}

const FieldTower* parse_tower(const std::string& generator, const std::string& minpoly) {
    ExprContext c;
    c.variable = generator;
    Poly p = parse_poly(minpoly, c);
    if (p.tower()) throw ParseError("tower minimal polynomial must have coefficients in Q(i)");
    std::vector<GaussianRational> coeffs;
    for (const auto& s : p.coeffs()) coeffs.push_back(s.base_part());
    try {
        return FieldTower::declare(generator, std::move(coeffs));
    } catch (const MathError& e) {
        throw ParseError(e.what(), "extension " + generator);
    }
}

}  // namespace lieinv
