#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fuchs3/errors.hpp"

namespace fuchs3 {

namespace detail {
template <class S>
bool scalar_zero(const S& s)
{
    return is_zero(s);
}
} // namespace detail

// Dense univariate polynomial, coefficients low to high. The zero
// polynomial has no coefficients and degree -1.
template <class S>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const S& a) { return Poly(std::vector<S>{a}); }
    static Poly monomial(const S& a, int k)
    {
        std::vector<S> c(static_cast<size_t>(k) + 1, S(0));
        c[k] = a;
        return Poly(std::move(c));
    }
    // z - a
    static Poly linear_root(const S& a) { return Poly(std::vector<S>{-a, S(1)}); }
    static Poly from_roots(const std::vector<S>& roots)
    {
        Poly r = constant(S(1));
        for (const auto& a : roots)
            r = r * linear_root(a);
        return r;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : S(0); }
    const S& leading() const { return c_.back(); }

    S operator()(const S& x) const { return eval(x); }
    S eval(const S& x) const
    {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const
    {
        std::vector<S> d;
        for (size_t k = 1; k < c_.size(); ++k)
            d.push_back(S(static_cast<long>(k)) * c_[k]);
        return Poly(std::move(d));
    }

    Poly monic() const
    {
        if (is_zero())
            return *this;
        S inv = S(1) / leading();
        std::vector<S> c = c_;
        for (auto& a : c)
            a = a * inv;
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
        for (size_t k = 0; k < a.c_.size(); ++k)
            c[k] = c[k] + a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k)
            c[k] = c[k] + b.c_[k];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a) 
    {
        std::vector<S> c = a.c_;
        for (auto& x : c)
            x = -x;
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::scalar_zero(a.c_[i]))
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const S& s, const Poly& a)
    {
        std::vector<S> c = a.c_;
        for (auto& x : c)
            x = s * x;
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && detail::scalar_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<S> c_;
};

template <class S>
Poly<S> pow(const Poly<S>& p, int e)
{
    Poly<S> r = Poly<S>::constant(S(1));
    for (int i = 0; i < e; ++i)
        r = r * p;
    return r;
}

// Euclidean division over a field: a = q*b + r, deg r < deg b.
template <class S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& a, const Poly<S>& b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    std::vector<S> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db)
        return {Poly<S>(), a};
    std::vector<S> q(static_cast<size_t>(a.degree() - db) + 1, S(0));
    S inv = S(1) / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        if (is_zero(r[k]))
            continue;
        S f = r[k] * inv;
        q[k - db] = f;
        for (int i = 0; i <= db; ++i)
            r[k - db + i] = r[k - db + i] - f * b.coeffs()[i];
    }
    r.resize(static_cast<size_t>(db));
    return {Poly<S>(std::move(q)), Poly<S>(std::move(r))};
}

// Monic gcd; gcd(0, 0) = 0.
template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b)
{
    while (!b.is_zero()) {
        Poly<S> r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// Extended Euclid: returns (g, u) with u*a = g mod m, g = gcd(a, m) monic.
template <class S>
std::pair<Poly<S>, Poly<S>> gcd_cofactor(const Poly<S>& a, const Poly<S>& m)
{
    Poly<S> r0 = m, r1 = a;
    Poly<S> u0, u1 = Poly<S>::constant(S(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<S> u = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u);
    }
    S inv = S(1) / r0.leading();
    return {inv * r0, inv * u0};
}

// Coefficients of p(c + x).
template <class S>
Poly<S> taylor_shift(const Poly<S>& p, const S& c)
{
    std::vector<S> a = p.coeffs();
    int d = p.degree();
    for (int i = 0; i < d; ++i)
        for (int k = d - 1; k >= i; --k)
            a[k] = a[k] + c * a[k + 1];
    return Poly<S>(std::move(a));
}

// Divides out (z - c) as often as possible; returns the multiplicity.
template <class S>
int strip_root(Poly<S>& p, const S& c)
{
    if (p.is_zero())
        return 0;
    int m = 0;
    for (;;) {
        const auto& a = p.coeffs();
        int d = p.degree();
        if (d < 1)
            return m;
        std::vector<S> q(static_cast<size_t>(d), S(0));
        S acc = a[d];
        for (int k = d - 1; k >= 0; --k) {
            q[k] = acc;
            acc = a[k] + c * acc;
        }
        if (!is_zero(acc))
            return m;
        p = Poly<S>(std::move(q));
        ++m;
    }
}

// Newton interpolation through (xs[i], ys[i]); xs distinct.
template <class S>
Poly<S> interpolate(const std::vector<S>& xs, const std::vector<S>& ys)
{
    if (xs.size() != ys.size())
        throw DimensionMismatch("interpolate: sizes differ");
    size_t n = xs.size();
    std::vector<S> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    Poly<S> r;
    for (size_t i = n; i-- > 0;)
        r = r * Poly<S>::linear_root(xs[i]) + Poly<S>::constant(dd[i]);
    return r;
}

} // namespace fuchs3
