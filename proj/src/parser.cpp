#include "padicgamma/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace padicgamma {

namespace {

struct Token {
    enum Kind { Number, X, Y, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::size_t pos;
    BigInt value;        // Number
    std::uint32_t index; // Y
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Token::End, start, 0, 0};
        char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Plus, start, 0, 0};
            case '-': ++pos_; return {Token::Minus, start, 0, 0};
            case '*': ++pos_; return {Token::Star, start, 0, 0};
            case '^': ++pos_; return {Token::Caret, start, 0, 0};
            case '/': ++pos_; return {Token::Slash, start, 0, 0};
            case '(': ++pos_; return {Token::LParen, start, 0, 0};
            case ')': ++pos_; return {Token::RParen, start, 0, 0};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return {Token::Number, start, v, 0};
        }
        if (c == 'X' || c == 'x') {
            ++pos_;
            return {Token::X, start, 0, 0};
        }
        if (c == 'Y' || c == 'y') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw syntax_error("expected an index after Y", pos_);
            std::uint64_t idx = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = idx * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (idx > 1'000'000) throw syntax_error("Y index out of range", start);
                ++pos_;
            }
            return {Token::Y, start, 0, static_cast<std::uint32_t>(idx)};
        }
        throw syntax_error(std::string("unexpected character '") + c + "'", start);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// One parsed term: an X-polynomial coefficient times a Y-monomial.
struct TermAccum {
    RationalPolynomial coeff = RationalPolynomial::constant(BigRat(1));
    std::map<std::uint32_t, std::uint32_t> ypowers;
};

class Parser {
  public:
    Parser(std::string_view text, std::uint32_t max_order)
        : lexer_(text), max_order_(max_order) {
        advance();
    }

    DifferentialPolynomial parse() {
        std::vector<std::pair<TermAccum, bool>> terms; // term, negated
        bool neg = accept(Token::Minus);
        terms.emplace_back(parse_term(), neg);
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            terms.emplace_back(parse_term(), minus);
        }
        if (tok_.kind != Token::End) throw syntax_error("unexpected trailing input", tok_.pos);

        std::uint32_t order = 0;
        for (const auto& [t, m] : terms)
            if (!t.ypowers.empty()) order = std::max(order, t.ypowers.rbegin()->first);
        DifferentialPolynomial p(order);
        for (const auto& [t, minus] : terms) {
            ExponentVector alpha(order + 1, 0);
            for (const auto& [idx, e] : t.ypowers) alpha[idx] = e;
            p.add_term(alpha, minus ? -t.coeff : t.coeff);
        }
        return p;
    }

  private:
    void advance() { tok_ = lexer_.next(); }

    bool accept(Token::Kind k) {
        if (tok_.kind != k) return false;
        advance();
        return true;
    }

    std::uint32_t parse_exponent() {
        if (!accept(Token::Caret)) return 1;
        if (tok_.kind != Token::Number) throw syntax_error("expected an exponent", tok_.pos);
        if (tok_.value > 4096) throw syntax_error("exponent out of range", tok_.pos);
        auto e = tok_.value.convert_to<std::uint32_t>();
        advance();
        return e;
    }

    BigRat parse_literal() {
        BigInt num = tok_.value;
        advance();
        if (accept(Token::Slash)) {
            if (tok_.kind != Token::Number) throw syntax_error("expected a denominator", tok_.pos);
            if (tok_.value == 0) throw syntax_error("zero denominator", tok_.pos);
            BigRat r(num, tok_.value);
            advance();
            return r;
        }
        return BigRat(num);
    }

    TermAccum parse_term() {
        TermAccum t;
        parse_factor(t);
        while (accept(Token::Star)) parse_factor(t);
        return t;
    }

    void parse_factor(TermAccum& t) {
        switch (tok_.kind) {
            case Token::Number: {
                BigRat lit = parse_literal();
                // literals take exponents too, for round-trip friendliness
                if (tok_.kind == Token::Caret) {
                    std::uint32_t e = parse_exponent();
                    BigRat acc(1);
                    for (std::uint32_t i = 0; i < e; ++i) acc *= lit;
                    lit = acc;
                }
                t.coeff = lit * t.coeff;
                return;
            }
            case Token::X: {
                advance();
                std::uint32_t e = parse_exponent();
                t.coeff = t.coeff * RationalPolynomial::variable().pow(e);
                return;
            }
            case Token::Y: {
                std::uint32_t idx = tok_.index;
                std::size_t pos = tok_.pos;
                advance();
                if (idx > max_order_)
                    throw order_exceeded("Y" + std::to_string(idx) +
                                         " exceeds the configured maximal order " +
                                         std::to_string(max_order_) + " (at offset " +
                                         std::to_string(pos) + ")");
                t.ypowers[idx] += parse_exponent();
                return;
            }
            case Token::LParen: {
                advance();
                RationalPolynomial inner = parse_xpoly();
                if (!accept(Token::RParen)) throw syntax_error("expected ')'", tok_.pos);
                std::uint32_t e = parse_exponent();
                t.coeff = t.coeff * inner.pow(e);
                return;
            }
            default:
                throw syntax_error("expected a factor", tok_.pos);
        }
    }

    // Parenthesized coefficients are polynomials in X only.
    RationalPolynomial parse_xpoly() {
        RationalPolynomial acc;
        bool neg = accept(Token::Minus);
        acc = acc + (neg ? -parse_xterm() : parse_xterm());
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            acc = acc + (minus ? -parse_xterm() : parse_xterm());
        }
        return acc;
    }

    RationalPolynomial parse_xterm() {
        RationalPolynomial t = parse_xfactor();
        while (accept(Token::Star)) t = t * parse_xfactor();
        return t;
    }

    RationalPolynomial parse_xfactor() {
        switch (tok_.kind) {
            case Token::Number:
                return RationalPolynomial::constant(parse_literal());
            case Token::X: {
                advance();
                return RationalPolynomial::variable().pow(parse_exponent());
            }
            case Token::LParen: {
                advance();
                RationalPolynomial inner = parse_xpoly();
                if (!accept(Token::RParen)) throw syntax_error("expected ')'", tok_.pos);
                return inner.pow(parse_exponent());
            }
            case Token::Y:
                throw syntax_error("Y is not allowed inside a coefficient", tok_.pos);
            default:
                throw syntax_error("expected a coefficient factor", tok_.pos);
        }
    }

    Lexer lexer_;
    std::uint32_t max_order_;
    Token tok_;
};

// Single X-monomial coefficients print bare; anything longer is wrapped in
// parentheses so the output re-parses unambiguously.
std::size_t monomial_count(const RationalPolynomial& q) {
    std::size_t n = 0;
    for (const auto& c : q.coeffs())
        if (c != 0) ++n;
    return n;
}

std::string render_term(const ExponentVector& alpha, const RationalPolynomial& coeff) {
    std::ostringstream os;
    std::string ypart;
    {
        std::ostringstream ys;
        bool first = true;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            if (alpha[k] == 0) continue;
            if (!first) ys << "*";
            first = false;
            ys << "Y" << k;
            if (alpha[k] > 1) ys << "^" << alpha[k];
        }
        ypart = ys.str();
    }
    if (monomial_count(coeff) > 1) {
        os << "(" << xpoly_str(coeff) << ")";
        if (!ypart.empty()) os << "*" << ypart;
        return os.str();
    }
    // single monomial c*X^d
    auto d = static_cast<std::size_t>(coeff.degree());
    BigRat c = coeff.coeff(d);
    if (ypart.empty()) return xpoly_str(coeff);
    if (d == 0) {
        if (c == 1) return ypart;
        if (c == -1) return "-" + ypart;
        os << c << "*" << ypart;
        return os.str();
    }
    os << xpoly_str(coeff) << "*" << ypart;
    return os.str();
}

} // namespace

DifferentialPolynomial parse_diffpoly(std::string_view text, std::uint32_t max_order) {
    return Parser(text, max_order).parse();
}

std::string format_diffpoly(const DifferentialPolynomial& P) {
    if (P.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, coeff] : P.terms()) {
        std::string s = render_term(alpha, coeff);
        if (first) {
            os << s;
            first = false;
        } else if (!s.empty() && s[0] == '-') {
            os << " - " << s.substr(1);
        } else {
            os << " + " << s;
        }
    }
    return os.str();
}

} // namespace padicgamma
