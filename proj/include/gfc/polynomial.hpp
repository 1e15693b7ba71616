#pragma once

/**
 * @file polynomial.hpp
 * @brief Multivariate polynomials and rational functions over Q in named variables.
 *
 * This backs the symbolic scalar tier: a branch point tagged "sym:lambda1" is
 * the rational function lambda1, and the formulas of the decomposition are
 * carried out exactly in Q(lambda1, lambda2, ...). Equality of rational
 * functions is decided by cross multiplication, so no gcd is ever needed.
 */

#include <gmpxx.h>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "gfc/error.hpp"

namespace gfc {

/// Variable name -> positive exponent.
using Monomial = std::map<std::string, int>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const mpq_class& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    static Polynomial variable(const std::string& name) {
        Polynomial p;
        p.terms_[Monomial{{name, 1}}] = 1;
        return p;
    }

    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    mpq_class constant_value() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    std::set<std::string> variables() const {
        std::set<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Polynomial scaled(const mpq_class& c) const {
        if (c == 0) return {};
        Polynomial r = *this;
        for (auto& [m, x] : r.terms_) x *= c;
        return r;
    }

    /// Leading coefficient in the map order (deterministic, used for normalization).
    mpq_class leading_coefficient() const { return terms_.empty() ? mpq_class(0) : terms_.rbegin()->second; }

    /// Largest monomial dividing every term.
    Monomial monomial_content() const {
        if (terms_.empty()) return {};
        Monomial g = terms_.begin()->first;
        for (const auto& [m, c] : terms_) {
            for (auto it = g.begin(); it != g.end();) {
                auto f = m.find(it->first);
                if (f == m.end()) {
                    it = g.erase(it);
                } else {
                    it->second = std::min(it->second, f->second);
                    ++it;
                }
            }
        }
        return g;
    }

    Polynomial divide_monomial(const Monomial& d) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            Monomial q = m;
            for (const auto& [v, e] : d) {
                q[v] -= e;
                if (q[v] == 0) q.erase(v);
            }
            r.terms_[q] = c;
        }
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            mpq_class mag = abs(c);
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool need_star = false;
            if (m.empty() || mag != 1) {
                os << mag.get_str();
                need_star = true;
            }
            for (const auto& [v, e] : m) {
                if (need_star) os << '*';
                os << v;
                if (e != 1) os << '^' << e;
                need_star = true;
            }
        }
        return os.str();
    }

private:
    void add_term(const Monomial& m, const mpq_class& c) {
        auto& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    std::map<Monomial, mpq_class> terms_;
};

/// num/den with den != 0; normalized so den has leading coefficient 1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(mpq_class(1)) {}
    explicit RationalFunction(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(mpq_class(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        normalize();
    }
    static RationalFunction variable(const std::string& name) {
        return RationalFunction(Polynomial::variable(name));
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    mpq_class constant_value() const { return num_.constant_value() / den_.constant_value(); }

    std::set<std::string> variables() const {
        auto v = num_.variables();
        for (const auto& x : den_.variables()) v.insert(x);
        return v;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string() const {
        if (den_ == Polynomial(mpq_class(1))) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(mpq_class(1));
            return;
        }
        const Monomial common = [&] {
            Monomial a = num_.monomial_content(), b = den_.monomial_content(), g;
            for (const auto& [v, e] : a) {
                auto f = b.find(v);
                if (f != b.end()) g[v] = std::min(e, f->second);
            }
            return g;
        }();
        if (!common.empty()) {
            num_ = num_.divide_monomial(common);
            den_ = den_.divide_monomial(common);
        }
        // num = c * den cancels to the constant c.
        const mpq_class ratio = num_.leading_coefficient() / den_.leading_coefficient();
        if (num_ == den_.scaled(ratio)) {
            num_ = Polynomial(ratio);
            den_ = Polynomial(mpq_class(1));
            return;
        }
        const mpq_class lc = den_.leading_coefficient();
        if (lc != 1) {
            num_ = num_.scaled(1 / lc);
            den_ = den_.scaled(1 / lc);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace gfc
