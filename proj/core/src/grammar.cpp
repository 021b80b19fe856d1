#include "ore/grammar.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "ore/polytools.hpp"

namespace ore {

// ------------------------------------------------------------------ parsing

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        cur_.pos = i_;
        if (i_ >= s_.size()) {
            cur_.kind = Tok::End;
            cur_.text.clear();
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_ = {Tok::Int, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            cur_ = {Tok::Ident, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", i_);
        }
        cur_ = {k, s_.substr(i_, 1), i_};
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_;
};

// Expressions evaluate directly in the Ore algebra (lifted to the fraction
// field internally so scalar division works); the result is converted back
// to the requested domain at the end.
class Parser {
public:
    Parser(const std::string& text, const OreAlgebra& target)
        : lex_(text), target_(target), work_(target.with_domain(CoeffDomain::RatFun)) {}

    OrePoly run() {
        OrePoly v = expr();
        if (lex_.peek().kind != Tok::End)
            throw parse_error("trailing input after expression", lex_.peek().pos);
        if (target_.coeff_domain() == CoeffDomain::RatFun) return v;
        for (const auto& c : v.coeffs())
            if (!c.is_polynomial())
                throw parse_error("coefficient is not polynomial in the polynomial domain", 0);
        return convert(v, target_);
    }

private:
    OrePoly expr() {
        OrePoly acc = term();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                acc = acc + term();
            } else if (k == Tok::Minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    OrePoly term() {
        OrePoly acc = factor();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (k == Tok::Slash) {
                Token slash = lex_.take();
                OrePoly rhs = factor();
                acc = divide(acc, rhs, slash.pos);
            } else {
                return acc;
            }
        }
    }

    OrePoly divide(const OrePoly& lhs, const OrePoly& rhs, std::size_t pos) {
        if (rhs.order() != 0)
            throw parse_error("divisor must be free of the generator", pos);
        const BFrac& d = rhs.coeff(0);
        if (d.is_zero()) throw parse_error("division by zero", pos);
        if (!d.is_constant()) {
            if (target_.coeff_domain() != CoeffDomain::RatFun)
                throw parse_error("'/' by a base-variable expression needs the fraction-field domain", pos);
            if (lhs.order() > 0)
                throw parse_error("'/' by a base-variable expression applies to coefficients only", pos);
        }
        return d.inverse() * lhs;
    }

    OrePoly factor() {
        Tok k = lex_.peek().kind;
        if (k == Tok::Minus) {
            lex_.take();
            return -factor();
        }
        if (k == Tok::Plus) {
            lex_.take();
            return factor();
        }
        return power();
    }

    OrePoly power() {
        OrePoly base = primary();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::Int)
                throw parse_error("exponent must be a nonnegative integer", e.pos);
            if (e.text.size() > 6) throw parse_error("exponent out of range", e.pos);
            return base.pow(std::stol(e.text));
        }
        return base;
    }

    OrePoly primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Int:
                return OrePoly::scalar(work_, BFrac(Scalar(Rational::from_string(t.text))));
            case Tok::Ident: {
                if (t.text == target_.gen_name()) return OrePoly::generator(work_);
                if (t.text == target_.base_var())
                    return OrePoly::scalar(work_, BFrac::var());
                if (t.text == "q" && target_.has_q())
                    return OrePoly::scalar(work_, BFrac(target_.q()));
                throw parse_error("unknown symbol '" + t.text + "'", t.pos);
            }
            case Tok::LParen: {
                OrePoly v = expr();
                Token close = lex_.take();
                if (close.kind != Tok::RParen)
                    throw parse_error("expected ')'", close.pos);
                return v;
            }
            case Tok::End:
                throw parse_error("unexpected end of input", t.pos);
            default:
                throw parse_error("unexpected token '" + t.text + "'", t.pos);
        }
    }

    Lexer lex_;
    const OreAlgebra& target_;
    OreAlgebra work_;
};

} // namespace

OrePoly parse_operator(const std::string& text, const OreAlgebra& a) {
    return Parser(text, a).run();
}

// --------------------------------------------------------------- formatting

namespace {

bool is_composite(const std::string& s) {
    // Needs parentheses when used as a multiplicand.
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && (c == '+' || (c == '-' && i > 0))) return true;
    }
    return false;
}

// Splits an "atomic up to sign" rendering: returns (negative?, body) when the
// value is a product of plain tokens, so the sign can fold into a sum.
struct SignedBody {
    bool negative;
    std::string body;
};

std::optional<SignedBody> scalar_signed_body(const Scalar& s) {
    if (s.is_rational()) {
        Rational r = s.rat();
        return SignedBody{r.sign() < 0, r.abs().to_string()};
    }
    const RFrac& f = s.qfrac();
    if (!f.is_polynomial()) return std::nullopt;
    // single monomial c * q^k
    const RPoly& p = f.num();
    int nonzero = 0, k = 0;
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) {
            ++nonzero;
            k = i;
        }
    if (nonzero != 1) return std::nullopt;
    Rational c = p.coeff(k);
    std::string body;
    if (!c.abs().is_one() || k == 0) body = c.abs().to_string();
    if (k > 0) {
        if (!body.empty()) body += "*";
        body += "q";
        if (k > 1) body += "^" + std::to_string(k);
    }
    return SignedBody{c.sign() < 0, body};
}

std::optional<SignedBody> bfrac_signed_body(const BFrac& f, const std::string& var) {
    if (!f.is_polynomial()) return std::nullopt;
    const BPoly& p = f.num();
    int nonzero = 0, k = 0;
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) {
            ++nonzero;
            k = i;
        }
    if (nonzero != 1) return std::nullopt;
    auto sb = scalar_signed_body(p.coeff(k));
    if (!sb) return std::nullopt;
    std::string body = sb->body;
    if (k > 0) {
        if (body == "1")
            body.clear();
        if (!body.empty()) body += "*";
        body += var;
        if (k > 1) body += "^" + std::to_string(k);
    }
    return SignedBody{sb->negative, body};
}

} // namespace

std::string scalar_to_string(const Scalar& s) {
    if (s.is_rational()) return s.rat().to_string();
    const RFrac& f = s.qfrac();
    if (f.is_polynomial()) return rpoly_to_string(f.num(), "q");
    std::string num = rpoly_to_string(f.num(), "q");
    std::string den = rpoly_to_string(f.den(), "q");
    if (is_composite(num) || num.find('*') != std::string::npos) num = "(" + num + ")";
    return num + "/(" + den + ")";
}

std::string bpoly_to_string(const BPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Scalar& c = p.coeff(i);
        if (c.is_zero()) continue;
        auto sb = scalar_signed_body(c);
        std::string body;
        bool neg = false;
        if (sb) {
            neg = sb->negative;
            body = sb->body;
        } else {
            body = "(" + scalar_to_string(c) + ")";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (i == 0) {
            os << (body.empty() ? "1" : body);
        } else {
            if (body == "1") body.clear();
            if (!body.empty()) os << body << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string bfrac_to_string(const BFrac& f, const std::string& var) {
    std::string num = bpoly_to_string(f.num(), var);
    if (f.is_polynomial()) return num;
    std::string den = bpoly_to_string(f.den(), var);
    if (is_composite(num) || num.find('*') != std::string::npos ||
        num.find('/') != std::string::npos)
        num = "(" + num + ")";
    return num + "/(" + den + ")";
}

std::string format_operator(const OrePoly& L) {
    if (L.is_zero()) return "0";
    const std::string& var = L.algebra().base_var();
    const std::string& gen = L.algebra().gen_name();
    std::ostringstream os;
    bool first = true;
    for (int i = L.order(); i >= 0; --i) {
        const BFrac& c = L.coeff(i);
        if (c.is_zero()) continue;
        auto sb = bfrac_signed_body(c, var);
        std::string body;
        bool neg = false;
        if (sb) {
            neg = sb->negative;
            body = sb->body;
        } else {
            body = "(" + bfrac_to_string(c, var) + ")";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << (body.empty() ? "1" : body);
        } else {
            if (body == "1") body.clear();
            if (!body.empty()) os << body << "*";
            os << gen;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string OrePoly::to_string() const { return format_operator(*this); }

} // namespace ore
