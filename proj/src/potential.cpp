#include "pslet/potential.hpp"

#include <cctype>
#include <cstddef>

#include "pslet/errors.hpp"

namespace pslet {
namespace detail {

struct Expr {
    enum class Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    std::string literal;                // Num
    std::shared_ptr<const Expr> a, b;   // operands (b unused for Neg/Pow)
    long exponent = 0;                  // Pow
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace {

ExprPtr make_num(std::string lit) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Num;
    e->literal = std::move(lit);
    return e;
}

ExprPtr make_var() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Var;
    return e;
}

ExprPtr make_bin(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr make_neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Neg;
    e->a = std::move(a);
    return e;
}

ExprPtr make_pow(ExprPtr a, long n) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->a = std::move(a);
    e->exponent = n;
    return e;
}

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept('+'))
                e = make_bin(Expr::Kind::Add, e, term());
            else if (accept('-'))
                e = make_bin(Expr::Kind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (accept('*'))
                e = make_bin(Expr::Kind::Mul, e, factor());
            else if (accept('/'))
                e = make_bin(Expr::Kind::Div, e, factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        if (accept('-')) return make_neg(factor());
        ExprPtr a = atom();
        if (accept('^')) return make_pow(a, integer());
        return a;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name != "r") throw UnknownSymbol(name, start);
            return make_var();
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprPtr number() {
        std::size_t start = pos_;
        bool digits = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
            digits = true;
        }
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
                digits = true;
            }
        }
        if (!digits) throw SyntaxError("malformed number", start);
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            } else {
                pos_ = mark;  // "e" was not an exponent part
            }
        }
        return make_num(s_.substr(start, pos_ - start));
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError("expected integer exponent", start);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }
};

// Taylor coefficients a_k = f^(k)(r)/k!, truncated at fixed length.
using Series = std::vector<Real>;

Series series_const(const Real& c, int K, Precision p) {
    Series s(static_cast<std::size_t>(K) + 1, Real(p));
    s[0] = c;
    return s;
}

Series add(const Series& a, const Series& b, int sign) {
    Series r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = sign > 0 ? a[i] + b[i] : a[i] - b[i];
    return r;
}

Series mul(const Series& a, const Series& b, Precision p) {
    Series r(a.size(), Real(p));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series div(const Series& a, const Series& b, Precision p) {
    if (b[0].is_zero())
        throw SingularPoint("division by an expression vanishing at the evaluation point");
    Series r(a.size(), Real(p));
    for (std::size_t k = 0; k < a.size(); ++k) {
        Real acc = a[k];
        for (std::size_t i = 1; i <= k; ++i) acc -= b[i] * r[k - i];
        r[k] = acc / b[0];
    }
    return r;
}

Series pow(const Series& a, long n, int K, Precision p) {
    Series one = series_const(Real(1L, p), K, p);
    if (n == 0) return one;
    bool inv = n < 0;
    unsigned long e = static_cast<unsigned long>(inv ? -n : n);
    Series acc = one;
    Series base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base, p);
        e >>= 1;
        if (e) base = mul(base, base, p);
    }
    return inv ? div(one, acc, p) : acc;
}

Series eval_series(const Expr& e, const Real& r, int K, Precision p) {
    switch (e.kind) {
        case Expr::Kind::Num:
            return series_const(Real(e.literal, p), K, p);
        case Expr::Kind::Var: {
            Series s = series_const(r.to_prec(p), K, p);
            if (K >= 1) s[1] = Real(1L, p);
            return s;
        }
        case Expr::Kind::Add:
            return add(eval_series(*e.a, r, K, p), eval_series(*e.b, r, K, p), +1);
        case Expr::Kind::Sub:
            return add(eval_series(*e.a, r, K, p), eval_series(*e.b, r, K, p), -1);
        case Expr::Kind::Mul:
            return mul(eval_series(*e.a, r, K, p), eval_series(*e.b, r, K, p), p);
        case Expr::Kind::Div:
            return div(eval_series(*e.a, r, K, p), eval_series(*e.b, r, K, p), p);
        case Expr::Kind::Neg: {
            Series s = eval_series(*e.a, r, K, p);
            for (auto& x : s) x = -x;
            return s;
        }
        case Expr::Kind::Pow:
            return pow(eval_series(*e.a, r, K, p), e.exponent, K, p);
    }
    throw Error("unreachable expression kind");
}

void pretty_rec(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::Num:
            out += e.literal;
            break;
        case Expr::Kind::Var:
            out += 'r';
            break;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul:
        case Expr::Kind::Div: {
            char op = e.kind == Expr::Kind::Add   ? '+'
                      : e.kind == Expr::Kind::Sub ? '-'
                      : e.kind == Expr::Kind::Mul ? '*'
                                                  : '/';
            out += '(';
            pretty_rec(*e.a, out);
            out += op;
            pretty_rec(*e.b, out);
            out += ')';
            break;
        }
        case Expr::Kind::Neg:
            out += "(-";
            pretty_rec(*e.a, out);
            out += ')';
            break;
        case Expr::Kind::Pow:
            out += '(';
            pretty_rec(*e.a, out);
            out += '^';
            out += std::to_string(e.exponent);
            out += ')';
            break;
    }
}

}  // namespace
}  // namespace detail

PotentialExpr parse_potential(const std::string& text) {
    detail::Parser p(text);
    PotentialExpr out;
    out.root_ = p.parse();
    out.source_ = text;
    return out;
}

Real PotentialExpr::evaluate(const Real& r) const {
    return detail::eval_series(*root_, r, 0, Precision{r.prec()})[0];
}

Jet PotentialExpr::jet(const Real& r, int K, Precision prec) const {
    if (K < 0) throw Error("jet: negative order");
    // Guard bits absorb the rounding accumulated by the coefficient
    // recurrences, so the returned derivatives are correctly rounded at
    // the requested precision.
    const Precision wide{prec.mantissa_bits + 64};
    detail::Series s = detail::eval_series(*root_, r, K, wide);
    Jet j;
    j.base_point = r;
    j.derivs.reserve(s.size());
    Real fact(1L, wide);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) fact *= Real(static_cast<long>(k), wide);
        j.derivs.push_back((s[static_cast<std::size_t>(k)] * fact).to_prec(prec));
    }
    return j;
}

std::string PotentialExpr::pretty() const {
    std::string out;
    detail::pretty_rec(*root_, out);
    return out;
}

Jet truncated_coulomb_jet(const Real& alpha, const Real& r, int K) {
    const Precision p{r.prec() > alpha.prec() ? r.prec() : alpha.prec()};
    const Precision wide{p.mantissa_bits + 64};
    Real denom = r.to_prec(wide) + alpha.to_prec(wide);
    if (denom.sign() <= 0) throw SingularPoint("truncated Coulomb: r + alpha <= 0");
    Jet j;
    j.base_point = r;
    Real inv = Real(1L, wide) / denom;  // (r+alpha)^-1
    Real power = inv;
    Real fact(1L, wide);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            fact *= Real(static_cast<long>(k), wide);
            power *= inv;
        }
        Real term = fact * power;  // k! (r+alpha)^-(k+1)
        j.derivs.push_back((k % 2 == 0 ? -term : term).to_prec(p));
    }
    return j;
}

}  // namespace pslet
