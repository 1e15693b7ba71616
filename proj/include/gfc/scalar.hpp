#pragma once

/**
 * @file scalar.hpp
 * @brief Branch-point scalars: Q, Q(sqrt d), big complex numbers, infinity and symbols.
 *
 * Textual syntax, shared by the CLI and the JSON reports:
 *   "3/4", "-2", "0.25"            rational
 *   "1/2+3/2*sqrt(5)", "sqrt(5)"   quadratic a + b*sqrt(d)
 *   "c(0.25,-1.1)"                 complex, parsed at the working precision
 *   "inf"                          the point at infinity
 *   "sym:lambda1"                  a free symbol
 *
 * Arithmetic promotes Rational -> Quadratic -> BigComplex and Rational ->
 * Symbolic. Mixing two different square roots, or a symbol with a
 * non-rational number, is rejected.
 */

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>

#include "gfc/bigfloat.hpp"
#include "gfc/error.hpp"
#include "gfc/polynomial.hpp"

namespace gfc {

struct Infinity {
    friend bool operator==(const Infinity&, const Infinity&) { return true; }
};

/// a + b*sqrt(d), b != 0, d square-free and not 0 or 1.
struct Quadratic {
    mpq_class a;
    mpq_class b;
    long d = 0;
};

struct Symbolic {
    RationalFunction f;
};

namespace detail {

/// Splits d = f^2 * s with s square-free; returns {s, f}.
inline std::pair<long, long> squarefree_split(long d) {
    long sign = d < 0 ? -1 : 1;
    long m = d < 0 ? -d : d;
    long f = 1;
    for (long q = 2; q * q <= m; ++q)
        while (m % (q * q) == 0) {
            m /= q * q;
            f *= q;
        }
    return {sign * m, f};
}

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

inline mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational");
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t frac = text.size() - dot - 1;
        mpz_class num, den = 1;
        if (num.set_str(digits, 10) != 0) throw InputError("cannot parse number '" + text + "'");
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpq_class q;
    std::string t = text[0] == '+' ? text.substr(1) : text;
    if (q.set_str(t, 10) != 0) throw InputError("cannot parse number '" + text + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace detail

class Scalar {
public:
    enum class Kind { Rational, Quadratic, Complex, Infinity, Symbolic };

    Scalar() : v_(mpq_class(0)) {}
    Scalar(long v) : v_(mpq_class(v)) {}
    Scalar(int v) : v_(mpq_class(v)) {}
    Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
    Scalar(BigComplex z) : v_(std::move(z)) {}
    Scalar(Infinity) : v_(Infinity{}) {}

    static Scalar rational(long num, long den) {
        if (den == 0) throw DomainError("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q);
    }
    /// a + b*sqrt(d), normalized (square factors pulled out, b = 0 or d = 1 collapse to Rational).
    static Scalar quadratic(const mpq_class& a, const mpq_class& b, long d) {
        if (d == 0) return Scalar(a);
        auto [s, f] = detail::squarefree_split(d);
        mpq_class aa = a, bb = b * f;
        aa.canonicalize();
        bb.canonicalize();
        if (bb == 0) return Scalar(aa);
        if (s == 1) return Scalar(mpq_class(aa + bb));
        Scalar out;
        out.v_ = Quadratic{aa, bb, s};
        return out;
    }
    static Scalar infinity() { return Scalar(Infinity{}); }
    static Scalar symbol(const std::string& name) {
        if (name.empty()) throw InputError("empty symbol name");
        return from_function(RationalFunction::variable(name));
    }
    static Scalar from_function(const RationalFunction& f) {
        Scalar out;
        if (f.is_constant()) {
            out.v_ = f.constant_value();
        } else {
            out.v_ = Symbolic{f};
        }
        return out;
    }
    static Scalar complex(double re, double im, long prec = kDefaultPrecision) {
        return Scalar(BigComplex(BigFloat(re, prec), BigFloat(im, prec)));
    }

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_rational() const { return kind() == Kind::Rational; }
    bool is_quadratic() const { return kind() == Kind::Quadratic; }
    bool is_complex() const { return kind() == Kind::Complex; }
    bool is_infinity() const { return kind() == Kind::Infinity; }
    bool is_symbolic() const { return kind() == Kind::Symbolic; }
    bool is_exact() const { return is_rational() || is_quadratic() || is_infinity(); }

    const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
    const Quadratic& as_quadratic() const { return std::get<Quadratic>(v_); }
    const BigComplex& as_complex() const { return std::get<BigComplex>(v_); }
    const Symbolic& as_symbolic() const { return std::get<Symbolic>(v_); }

    /// The square-free d of a quadratic value, 0 otherwise.
    long field_d() const { return is_quadratic() ? as_quadratic().d : 0; }

    bool is_zero() const {
        switch (kind()) {
            case Kind::Rational: return as_rational() == 0;
            case Kind::Complex: return as_complex().is_zero();
            case Kind::Symbolic: return as_symbolic().f.is_zero();
            default: return false;
        }
    }

    /// Numeric value; Symbolic and Infinity are rejected.
    BigComplex to_complex(long prec = kDefaultPrecision) const {
        switch (kind()) {
            case Kind::Rational: return BigComplex(as_rational(), prec);
            case Kind::Quadratic: {
                const auto& q = as_quadratic();
                BigFloat root = BigFloat(mpq_class(q.d < 0 ? -q.d : q.d), prec).sqrt();
                BigFloat a(q.a, prec), b(q.b, prec);
                if (q.d > 0) return {a + b * root, BigFloat(prec)};
                return {a, b * root};
            }
            case Kind::Complex: return as_complex();
            case Kind::Infinity: throw DomainError("infinity has no finite numeric value");
            case Kind::Symbolic: throw UnsupportedModeError("symbolic value has no numeric value");
        }
        throw ConsistencyError("unreachable scalar kind");
    }

    RationalFunction to_function() const {
        if (is_symbolic()) return as_symbolic().f;
        if (is_rational()) return RationalFunction(as_rational());
        throw UnsupportedModeError("cannot combine a symbolic value with " + to_string());
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) { return combine(x, y, Op::Add); }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return combine(x, y, Op::Sub); }
    friend Scalar operator*(const Scalar& x, const Scalar& y) { return combine(x, y, Op::Mul); }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return combine(x, y, Op::Div); }
    Scalar operator-() const { return Scalar(0) - *this; }

    Scalar pow(int e) const {
        if (e < 0) return Scalar(1) / pow(-e);
        Scalar r(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Exact equality for exact and symbolic values; complex values compare with
    /// relative tolerance 2^(-prec/2) (absolute near zero).
    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.is_infinity() || y.is_infinity()) return x.is_infinity() && y.is_infinity();
        if (x.is_complex() || y.is_complex()) {
            if (x.is_symbolic() || y.is_symbolic()) return false;
            const long prec = std::max(x.is_complex() ? x.as_complex().precision() : 0L,
                                       y.is_complex() ? y.as_complex().precision() : 0L);
            return approx_equal(x.to_complex(prec), y.to_complex(prec), prec / 2);
        }
        if (x.is_symbolic() || y.is_symbolic()) {
            if (x.is_quadratic() || y.is_quadratic()) return false;
            return x.to_function() == y.to_function();
        }
        if (x.is_rational() && y.is_rational()) return x.as_rational() == y.as_rational();
        if (x.is_quadratic() && y.is_quadratic()) {
            const auto &p = x.as_quadratic(), &q = y.as_quadratic();
            return p.d == q.d && p.a == q.a && p.b == q.b;
        }
        return false;
    }

    static bool approx_equal(const BigComplex& a, const BigComplex& b, long tol_bits) {
        const long prec = std::max(a.precision(), b.precision());
        const BigFloat eps = BigFloat::pow2(-tol_bits, prec);
        const BigFloat diff = (a - b).abs();
        BigFloat scale = std::max(a.abs(), b.abs(), [](const BigFloat& u, const BigFloat& v) { return u < v; });
        const BigFloat one(1.0, prec);
        if (scale < one) scale = one;
        return diff <= eps * scale;
    }

    std::string to_string(int digits = 30) const {
        switch (kind()) {
            case Kind::Rational: return as_rational().get_str();
            case Kind::Quadratic: {
                const auto& q = as_quadratic();
                std::string out;
                if (q.a != 0) out = q.a.get_str();
                if (q.b < 0) {
                    out += "-" + mpq_class(-q.b).get_str();
                } else {
                    if (!out.empty()) out += "+";
                    out += q.b.get_str();
                }
                return out + "*sqrt(" + std::to_string(q.d) + ")";
            }
            case Kind::Complex: return as_complex().to_string(digits);
            case Kind::Infinity: return "inf";
            case Kind::Symbolic: return "sym:" + as_symbolic().f.to_string();
        }
        return "?";
    }

    /// Total order on the printed form; used only to keep containers deterministic.
    friend bool operator<(const Scalar& x, const Scalar& y) { return x.to_string() < y.to_string(); }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    enum class Op { Add, Sub, Mul, Div };

    static Scalar combine(const Scalar& x, const Scalar& y, Op op) {
        if (x.is_infinity() || y.is_infinity())
            throw DomainError("arithmetic with infinity (" + x.to_string() + ", " + y.to_string() + ")");
        if (op == Op::Div && y.is_zero()) throw DomainError("division by zero");
        if (x.is_symbolic() || y.is_symbolic()) {
            if (x.is_complex() || y.is_complex() || x.is_quadratic() || y.is_quadratic())
                throw UnsupportedModeError("symbolic values combine only with rationals");
            const RationalFunction a = x.to_function(), b = y.to_function();
            switch (op) {
                case Op::Add: return from_function(a + b);
                case Op::Sub: return from_function(a - b);
                case Op::Mul: return from_function(a * b);
                case Op::Div: return from_function(a / b);
            }
        }
        if (x.is_complex() || y.is_complex()) {
            const long prec = std::max(x.is_complex() ? x.as_complex().precision() : 0L,
                                       y.is_complex() ? y.as_complex().precision() : 0L);
            const BigComplex a = x.to_complex(prec), b = y.to_complex(prec);
            switch (op) {
                case Op::Add: return Scalar(a + b);
                case Op::Sub: return Scalar(a - b);
                case Op::Mul: return Scalar(a * b);
                case Op::Div: return Scalar(a / b);
            }
        }
        if (x.is_rational() && y.is_rational()) {
            const mpq_class &a = x.as_rational(), &b = y.as_rational();
            switch (op) {
                case Op::Add: return Scalar(mpq_class(a + b));
                case Op::Sub: return Scalar(mpq_class(a - b));
                case Op::Mul: return Scalar(mpq_class(a * b));
                case Op::Div: return Scalar(mpq_class(a / b));
            }
        }
        const long d = x.field_d() ? x.field_d() : y.field_d();
        if (x.field_d() && y.field_d() && x.field_d() != y.field_d())
            throw UnsupportedModeError("mixed quadratic fields sqrt(" + std::to_string(x.field_d()) + ") and sqrt(" +
                                       std::to_string(y.field_d()) + ")");
        auto parts = [](const Scalar& s) -> std::pair<mpq_class, mpq_class> {
            if (s.is_rational()) return {s.as_rational(), 0};
            return {s.as_quadratic().a, s.as_quadratic().b};
        };
        auto [a1, b1] = parts(x);
        auto [a2, b2] = parts(y);
        switch (op) {
            case Op::Add: return quadratic(a1 + a2, b1 + b2, d);
            case Op::Sub: return quadratic(a1 - a2, b1 - b2, d);
            case Op::Mul: return quadratic(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, d);
            case Op::Div: {
                const mpq_class n = a2 * a2 - b2 * b2 * d;
                const mpq_class ra = a2 / n, rb = -b2 / n;
                return quadratic(a1 * ra + b1 * rb * d, a1 * rb + ra * b1, d);
            }
        }
        throw ConsistencyError("unreachable arithmetic case");
    }

    std::variant<mpq_class, Quadratic, BigComplex, Infinity, Symbolic> v_;
};

/// Parses the textual scalar syntax; complex literals use the given precision.
inline Scalar parse_scalar(const std::string& raw, long prec = kDefaultPrecision) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    if (s.empty()) throw InputError("empty scalar");
    if (s == "inf" || s == "infinity" || s == "oo") return Scalar::infinity();
    if (s.rfind("sym:", 0) == 0) return Scalar::symbol(s.substr(4));
    if (s.rfind("c(", 0) == 0) {
        if (s.back() != ')') throw InputError("unterminated complex literal '" + raw + "'");
        const std::string body = s.substr(2, s.size() - 3);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw InputError("complex literal needs 're,im': '" + raw + "'");
        return Scalar(BigComplex(BigFloat::parse(body.substr(0, comma), prec),
                                 BigFloat::parse(body.substr(comma + 1), prec)));
    }
    const auto sq = s.find("sqrt(");
    if (sq == std::string::npos) return Scalar(detail::parse_rational(s));

    const auto close = s.find(')', sq);
    if (close == std::string::npos || close + 1 != s.size())
        throw InputError("malformed quadratic literal '" + raw + "'");
    long d = 0;
    try {
        std::size_t used = 0;
        d = std::stol(s.substr(sq + 5, close - sq - 5), &used);
        if (used != close - sq - 5) throw InputError("bad radicand");
    } catch (const std::exception&) {
        throw InputError("radicand must be an integer in '" + raw + "'");
    }
    std::string prefix = s.substr(0, sq);
    if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = prefix.size(); i-- > 1;)
        if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != '/') {
            split = i;
            break;
        }
    mpq_class a = 0;
    std::string bstr = prefix;
    if (split != std::string::npos) {
        a = detail::parse_rational(prefix.substr(0, split));
        bstr = prefix.substr(split);
    }
    mpq_class b;
    if (bstr.empty() || bstr == "+") {
        b = 1;
    } else if (bstr == "-") {
        b = -1;
    } else {
        b = detail::parse_rational(bstr);
    }
    return Scalar::quadratic(a, b, d);
}

/**
 * Square root staying in the exact tier when possible: in Q, or in Q(sqrt d)
 * where d is the value's own field or the given ambient field. Complex input
 * gets the principal root. Returns nullopt when no exact root exists.
 */
inline std::optional<Scalar> sqrt_in_field(const Scalar& x, long ambient_d = 0) {
    switch (x.kind()) {
        case Scalar::Kind::Infinity: return x;
        case Scalar::Kind::Complex: return Scalar(x.as_complex().sqrt());
        case Scalar::Kind::Symbolic: return std::nullopt;
        case Scalar::Kind::Rational: {
            const mpq_class& q = x.as_rational();
            if (auto r = detail::rational_sqrt(q)) return Scalar(*r);
            if (ambient_d != 0) {
                const long d = detail::squarefree_split(ambient_d).first;
                if (auto r = detail::rational_sqrt(q / d)) return Scalar::quadratic(0, *r, d);
            }
            return std::nullopt;
        }
        case Scalar::Kind::Quadratic: {
            const auto& q = x.as_quadratic();
            // (u + v sqrt d)^2 = a + b sqrt d  <=>  u^2 + d v^2 = a, 2uv = b.
            const auto norm_root = detail::rational_sqrt(q.a * q.a - q.d * q.b * q.b);
            if (!norm_root) return std::nullopt;
            for (int sgn : {1, -1}) {
                const mpq_class u2 = (q.a + sgn * *norm_root) / 2;
                if (u2 == 0) continue;
                if (auto u = detail::rational_sqrt(u2)) {
                    const mpq_class v = q.b / (2 * *u);
                    return Scalar::quadratic(*u, v, q.d);
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

/// Klein's j-function j(l) = (1 - l + l^2)^3 / (l^2 (1 - l)^2).
inline Scalar j_invariant(const Scalar& lambda) {
    if (lambda.is_symbolic()) throw UnsupportedModeError("j-invariant of a symbolic parameter");
    if (lambda.is_infinity()) throw DomainError("j-invariant at infinity");
    const Scalar one(1);
    if (lambda.is_zero() || lambda == one) throw DomainError("j-invariant at degenerate lambda " + lambda.to_string());
    const Scalar num = (one - lambda + lambda * lambda).pow(3);
    const Scalar den = lambda * lambda * (one - lambda) * (one - lambda);
    return num / den;
}

/// Replaces symbols by values; non-symbolic scalars pass through unchanged.
inline Scalar substitute(const Scalar& x, const std::map<std::string, Scalar>& values) {
    if (!x.is_symbolic()) return x;
    auto eval = [&](const Polynomial& p) {
        Scalar acc(0);
        for (const auto& [m, c] : p.terms()) {
            Scalar t{mpq_class(c)};
            for (const auto& [v, e] : m) {
                auto it = values.find(v);
                t = t * (it == values.end() ? Scalar::symbol(v) : it->second).pow(e);
            }
            acc = acc + t;
        }
        return acc;
    };
    const auto& f = x.as_symbolic().f;
    return eval(f.numerator()) / eval(f.denominator());
}

}  // namespace gfc
