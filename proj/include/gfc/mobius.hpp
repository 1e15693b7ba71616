#pragma once

/**
 * @file mobius.hpp
 * @brief Möbius transformations acting projectively on scalars, and branch sets.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "gfc/error.hpp"
#include "gfc/scalar.hpp"

namespace gfc {

/// x -> (a x + b) / (c x + d) with ad - bc != 0.
class Mobius {
public:
    Mobius() : a_(1), b_(0), c_(0), d_(1) {}
    Mobius(Scalar a, Scalar b, Scalar c, Scalar d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (determinant().is_zero()) throw DomainError("singular Möbius matrix");
    }

    static Mobius identity() { return {}; }

    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }
    const Scalar& d() const { return d_; }
    Scalar determinant() const { return a_ * d_ - b_ * c_; }

    /// Complex denominators that are negligible against the numerator count as 0.
    Scalar operator()(const Scalar& x) const {
        const Scalar num = x.is_infinity() ? a_ : a_ * x + b_;
        const Scalar den = x.is_infinity() ? c_ : c_ * x + d_;
        if (den.is_zero()) return Scalar::infinity();
        if (den.is_complex() && !num.is_zero()) {
            const BigComplex zd = den.as_complex(), zn = num.to_complex(zd.precision());
            if (zd.abs() <= BigFloat::pow2(-zd.precision() / 2, zd.precision()) * zn.abs()) return Scalar::infinity();
        }
        return num / den;
    }

    /// (f * g)(x) = f(g(x)).
    friend Mobius operator*(const Mobius& f, const Mobius& g) {
        return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_,
                f.c_ * g.b_ + f.d_ * g.d_};
    }

    Mobius inverse() const { return {d_, -b_, -c_, a_}; }

    /// Equality in PGL2: the matrices are proportional.
    friend bool operator==(const Mobius& f, const Mobius& g) {
        const Scalar u[4] = {f.a_, f.b_, f.c_, f.d_};
        const Scalar v[4] = {g.a_, g.b_, g.c_, g.d_};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!(u[i] * v[j] == u[j] * v[i])) return false;
        return true;
    }

    bool is_identity() const { return *this == identity(); }

    /// Representative with the first nonzero entry equal to 1.
    Mobius normalized() const {
        const Scalar& lead = !a_.is_zero() ? a_ : b_;
        return {a_ / lead, b_ / lead, c_ / lead, d_ / lead};
    }

    /// Order in PGL2, or 0 if none up to max_order.
    int order(int max_order = 64) const {
        Mobius p = *this;
        for (int m = 1; m <= max_order; ++m) {
            if (p.is_identity()) return m;
            p = p * *this;
        }
        return 0;
    }

    std::string to_string() const {
        return "x -> (" + a_.to_string() + "*x + " + b_.to_string() + ")/(" + c_.to_string() + "*x + " +
               d_.to_string() + ")";
    }

private:
    Scalar a_, b_, c_, d_;
};

/// The map sending p -> inf, q -> 0, r -> 1.
inline Mobius mobius_to_standard(const Scalar& p, const Scalar& q, const Scalar& r) {
    if (p == q || p == r || q == r) throw InputError("repeated points in a Möbius triple");
    const Scalar one(1), zero(0);
    if (p.is_infinity()) return {one, -q, zero, r - q};
    if (q.is_infinity()) return {zero, r - p, one, -p};
    if (r.is_infinity()) return {one, -q, one, -p};
    return {r - p, -(q * (r - p)), r - q, -(p * (r - q))};
}

/// The unique Möbius map with src[i] -> dst[i].
inline Mobius mobius_from_triple(const std::vector<Scalar>& src, const std::vector<Scalar>& dst) {
    if (src.size() != 3 || dst.size() != 3) throw InputError("Möbius triples need exactly three points");
    return mobius_to_standard(dst[0], dst[1], dst[2]).inverse() * mobius_to_standard(src[0], src[1], src[2]);
}

/// Ordered list of distinct points on the Riemann sphere.
class BranchSet {
public:
    BranchSet() = default;
    explicit BranchSet(std::vector<Scalar> points) : points_(std::move(points)) {
        if (points_.size() < 3) throw InputError("a branch set needs at least three points");
        bool symbolic = std::any_of(points_.begin(), points_.end(), [](const Scalar& s) { return s.is_symbolic(); });
        if (symbolic) return;
        for (std::size_t i = 0; i < points_.size(); ++i)
            for (std::size_t j = i + 1; j < points_.size(); ++j)
                if (points_[i] == points_[j])
                    throw InputError("branch points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                     " coincide (" + points_[i].to_string() + ")");
    }

    /// (inf, 0, 1, lambda_1, ..., lambda_{n-2}).
    static BranchSet standard(const std::vector<Scalar>& lambdas) {
        std::vector<Scalar> pts = {Scalar::infinity(), Scalar(0), Scalar(1)};
        for (const auto& l : lambdas) {
            if (l.is_infinity() || l.is_zero() || l == Scalar(1))
                throw InputError("parameter " + l.to_string() + " must avoid 0, 1 and infinity");
            pts.push_back(l);
        }
        return BranchSet(std::move(pts));
    }

    const std::vector<Scalar>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Scalar& operator[](std::size_t i) const { return points_[i]; }

    bool is_symbolic() const {
        return std::any_of(points_.begin(), points_.end(), [](const Scalar& s) { return s.is_symbolic(); });
    }
    bool is_complex() const {
        return std::any_of(points_.begin(), points_.end(), [](const Scalar& s) { return s.is_complex(); });
    }

    /// Position of x in the set, or -1.
    int index_of(const Scalar& x) const {
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (points_[i] == x) return static_cast<int>(i);
        return -1;
    }

    /// Image indices under T, or empty if T does not preserve the set.
    std::vector<int> permutation(const Mobius& t) const {
        std::vector<int> perm;
        for (const auto& p : points_) {
            const int idx = index_of(t(p));
            if (idx < 0) return {};
            perm.push_back(idx);
        }
        return perm;
    }

private:
    std::vector<Scalar> points_;
};

/**
 * All Möbius maps permuting B. Each candidate is fixed by the images of the
 * first three points, so the search runs over ordered triples of B.
 * Complex points are compared with the scalar tolerance.
 */
inline std::vector<Mobius> symmetries_of_branch_set(const BranchSet& b) {
    if (b.is_symbolic()) throw UnsupportedModeError("symmetry search needs concrete branch points");
    const std::vector<Scalar> src = {b[0], b[1], b[2]};
    std::vector<Mobius> out;
    const std::size_t m = b.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                if (i == j || i == k || j == k) continue;
                const Mobius t = mobius_from_triple(src, {b[i], b[j], b[k]});
                if (!b.permutation(t).empty()) out.push_back(t);
            }
    return out;
}

}  // namespace gfc
