#pragma once

#include <string>
#include <vector>

#include "fuchs3/poly.hpp"

namespace fuchs3 {

// Truncated Laurent expansion sum_k coefficients[k] (z - center)^(lowest_order + k).
template <class S>
struct LaurentJet {
    S center;
    int lowest_order = 0;
    std::vector<S> coefficients;

    int highest_order() const { return lowest_order + static_cast<int>(coefficients.size()) - 1; }

    // Coefficient of (z - center)^order; zero below the pole order.
    S at(int order) const
    {
        if (order < lowest_order)
            return S(0);
        if (order > highest_order())
            throw DimensionMismatch("Laurent order " + std::to_string(order) + " beyond truncation");
        return coefficients[order - lowest_order];
    }
};

template <class S>
LaurentJet<S> laurent_jet(const Poly<S>& num, const Poly<S>& den, const S& center, int orders)
{
    if (den.is_zero())
        throw ZeroDenominator("laurent_jet: denominator is identically zero");
    if (orders < 1)
        throw DimensionMismatch("laurent_jet: orders must be >= 1");

    Poly<S> n = num, d = den;
    int md = strip_root(d, center);
    LaurentJet<S> jet{center, -md, std::vector<S>(static_cast<size_t>(orders), S(0))};
    if (n.is_zero())
        return jet;
    jet.lowest_order += strip_root(n, center);

    Poly<S> a = taylor_shift(n, center), b = taylor_shift(d, center);
    S inv = S(1) / b.coeff(0);
    for (int k = 0; k < orders; ++k) {
        S acc = a.coeff(k);
        for (int i = 1; i <= k && i <= b.degree(); ++i)
            acc = acc - b.coeff(i) * jet.coefficients[k - i];
        jet.coefficients[k] = acc * inv;
    }
    return jet;
}

// Jet of num/den covering at least orders [.., highest].
template <class S>
LaurentJet<S> laurent_jet_through(const Poly<S>& num, const Poly<S>& den, const S& center, int highest)
{
    Poly<S> d = den;
    int md = strip_root(d, center);
    int orders = highest + md + 1;
    return laurent_jet(num, den, center, orders < 1 ? 1 : orders);
}

} // namespace fuchs3
