#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fuchs3/roots.hpp"
#include "fuchs3/system.hpp"

namespace fuchs3 {

// A finite point, or infinity when `finite` is empty.
template <class S>
struct SingularPoint {
    std::optional<S> finite;
    static SingularPoint infinity() { return {}; }
    static SingularPoint at(const S& x) { return {x}; }
};

template <class S>
struct IndicialData {
    SingularPoint<S> point;
    S g0, h0, i0;
    // rho^3 + (g0 - 3) rho^2 + (h0 - g0 + 2) rho + i0
    std::array<S, 3> cubic() const { return {g0 - S(3), h0 - g0 + S(2), i0}; }
    // Filled when the cubic has rational coefficients.
    std::optional<RootIsolation> roots;
};

template <class S>
S indicial_value(const IndicialData<S>& d, const S& rho)
{
    auto c = d.cubic();
    return ((rho + c[0]) * rho + c[1]) * rho + c[2];
}

template <class S>
IndicialData<S> indicial_at(const FuchsianEquation<S>& eq, const SingularPoint<S>& point)
{
    IndicialData<S> d{point, S(0), S(0), S(0), std::nullopt};
    if (point.finite) {
        const S& x = *point.finite;
        if (!is_zero(eq.psi.eval(x)))
            throw NotASingularPoint(to_string(x) + " is not a root of psi");
        d.g0 = laurent_jet_through(eq.G, eq.psi, x, -1).at(-1);
        d.h0 = laurent_jet_through(eq.H, eq.psi * eq.psi, x, -2).at(-2);
        d.i0 = laurent_jet_through(eq.I, eq.psi * eq.psi * eq.psi, x, -3).at(-3);
    }
    else {
        const int D = eq.psi.degree();
        const S& lead = eq.psi.leading();
        d.g0 = eq.G.coeff(D - 1) / lead;
        d.h0 = eq.H.coeff(2 * D - 2) / (lead * lead);
        d.i0 = eq.I.coeff(3 * D - 3) / (lead * lead * lead);
    }
    auto c = d.cubic();
    auto c0 = rational_value(c[0]), c1 = rational_value(c[1]), c2 = rational_value(c[2]);
    if (c0 && c1 && c2)
        d.roots = isolate_roots(Poly<Rational>({*c2, *c1, *c0, Rational(1)}));
    return d;
}

// Taylor coefficients of x B1, x^2 B2, x^3 B3 at a finite point, x = z - point.
template <class S>
struct LocalCoefficients {
    std::vector<S> a, b, c;
};

template <class S>
LocalCoefficients<S> local_coefficients(const FuchsianEquation<S>& eq, const S& x, int order)
{
    Poly<S> psi2 = eq.psi * eq.psi;
    auto g = laurent_jet_through(eq.G, eq.psi, x, order - 1);
    auto h = laurent_jet_through(eq.H, psi2, x, order - 2);
    auto i = laurent_jet_through(eq.I, psi2 * eq.psi, x, order - 3);
    LocalCoefficients<S> lc;
    for (int k = 0; k <= order; ++k) {
        if (g.lowest_order < -1 || h.lowest_order < -2 || i.lowest_order < -3)
            throw WrongExponents("pole order exceeds the Fuchsian bound at " + to_string(x));
        lc.a.push_back(g.at(k - 1));
        lc.b.push_back(h.at(k - 2));
        lc.c.push_back(i.at(k - 3));
    }
    return lc;
}

struct ObstructionInfo {
    int step = 0;
    std::string residual;
};

template <class S>
struct FrobeniusSeries {
    S exponent;
    std::vector<S> coefficients;  // w_0 = 1
    std::vector<int> resonant_steps;
    std::optional<int> obstruction_step;
    std::optional<S> obstruction_residual;
    bool exists() const { return !obstruction_step; }
};

// Power-series recursion f_0(rho + m) w_m = -sum_{k>=1} w_{m-k} f_k(rho + m - k).
// Resonant free coefficients are set to zero.
template <class S>
FrobeniusSeries<S> frobenius_series(const FuchsianEquation<S>& eq, const S& point, const S& exponent, int order)
{
    auto lc = local_coefficients(eq, point, order);
    auto f = [&](int k, const S& s) {
        S v = lc.a[k] * s * (s - S(1)) + lc.b[k] * s + lc.c[k];
        if (k == 0)
            v = v + s * (s - S(1)) * (s - S(2));
        return v;
    };
    if (!is_zero(f(0, exponent)))
        throw WrongExponents(to_string(exponent) + " is not an indicial root at " + to_string(point));

    FrobeniusSeries<S> series{exponent, {S(1)}, {}, std::nullopt, std::nullopt};
    for (int m = 1; m <= order; ++m) {
        S rhs(0);
        for (int k = 1; k <= m; ++k)
            rhs = rhs - series.coefficients[m - k] * f(k, exponent + S(m - k));
        S lead = f(0, exponent + S(m));
        if (!is_zero(lead)) {
            series.coefficients.push_back(rhs / lead);
            continue;
        }
        series.resonant_steps.push_back(m);
        if (!is_zero(rhs)) {
            series.obstruction_step = m;
            series.obstruction_residual = rhs;
            return series;
        }
        series.coefficients.push_back(S(0));
    }
    return series;
}

// Residuals (I_1, G_1 H_1 + H_1^2 + H_2 + I_2, G_1 I_2 + H_1 I_2 + I_3) at q.
template <class S>
std::array<S, 3> check_log_obstructions(const FuchsianEquation<S>& eq, const S& q)
{
    auto ind = indicial_at(eq, SingularPoint<S>::at(q));
    if (!(ind.g0 == S(-1) && is_zero(ind.h0) && is_zero(ind.i0)))
        throw WrongExponents("exponents at " + to_string(q) + " are not {0, 1, 3}");
    Poly<S> psi2 = eq.psi * eq.psi;
    auto g = laurent_jet_through(eq.G, eq.psi, q, 0);
    auto h = laurent_jet_through(eq.H, psi2, q, 0);
    auto i = laurent_jet_through(eq.I, psi2 * eq.psi, q, 0);
    S G1 = g.at(0), H1 = h.at(-1), H2 = h.at(0), I1 = i.at(-2), I2 = i.at(-1), I3 = i.at(0);
    return {I1, G1 * H1 + H1 * H1 + H2 + I2, G1 * I2 + H1 * I2 + I3};
}

template <class S>
struct PointReport {
    std::string label;
    std::string kind;  // "infinity", "parabolic", "apparent"
    S g0, h0, i0;
    bool exponents_ok = false;
    std::vector<std::string> notes;
    // apparent points
    std::optional<S> defect;
    std::array<S, 3> obstructions{};
    std::vector<std::pair<int, std::optional<int>>> series;  // exponent, obstruction step
    std::optional<bool> h1_matches;
    bool passed = false;
};

template <class S>
struct FrobeniusReport {
    std::vector<PointReport<S>> points;
    std::vector<std::string> structural;
    int order = 0;
    bool passed = false;
};

inline constexpr int default_series_order = 3 + 8;

namespace detail {

template <class S>
void check_parabolic(PointReport<S>& r, const IndicialData<S>& d, const ExponentSums<S>& e)
{
    r.g0 = d.g0;
    r.h0 = d.h0;
    r.i0 = d.i0;
    // Vieta: alpha = 3 - g0, beta = h0 - g0 + 2, gamma = -i0
    r.exponents_ok = S(3) - d.g0 == e.alpha && d.h0 - d.g0 + S(2) == e.beta && -d.i0 == e.gamma;
    if (!r.exponents_ok)
        r.notes.push_back("indicial cubic differs from the prescribed exponents");
    r.passed = r.exponents_ok;
}

} // namespace detail

template <class S>
FrobeniusReport<S> verify_apparent_all(const FuchsianEquation<S>& eq, const ProblemConfig<S>& cfg,
                                       int order = default_series_order)
{
    FrobeniusReport<S> rep;
    rep.order = order;
    auto validation = validate_config(cfg);
    for (const auto& v : validation.violations)
        rep.structural.push_back(v.message);
    if (!validation.ok())
        return rep;

    const int n = cfg.n, N = cfg.N();
    Poly<S> expected = psi_polynomial(cfg);
    if (!(eq.psi == expected)) {
        Poly<S> rest = eq.psi;
        for (const auto& x : cfg.t)
            strip_root(rest, x);
        for (const auto& x : cfg.q)
            strip_root(rest, x);
        if (rest.degree() > 0)
            rep.structural.push_back("psi has a factor of degree " + std::to_string(rest.degree()) +
                                     " vanishing outside the prescribed points: extra singularity");
        else
            rep.structural.push_back("psi differs from prod (z - t_i) prod (z - q_j)");
    }
    if (eq.G.degree() > 4 * n - 6 || eq.H.degree() > 8 * n - 12 || eq.I.degree() > 12 * n - 18)
        rep.structural.push_back("coefficient degrees exceed the Fuchsian bounds");

    {
        PointReport<S> r;
        r.label = "t0";
        r.kind = "infinity";
        detail::check_parabolic(r, indicial_at(eq, SingularPoint<S>::infinity()), cfg.exponents[0]);
        rep.points.push_back(r);
    }
    for (int i = 0; i < n; ++i) {
        PointReport<S> r;
        r.label = "t" + std::to_string(i + 1);
        r.kind = "parabolic";
        try {
            detail::check_parabolic(r, indicial_at(eq, SingularPoint<S>::at(cfg.t[i])), cfg.exponents[i + 1]);
        }
        catch (const Error& e) {
            r.notes.push_back(e.what());
        }
        rep.points.push_back(r);
    }
    for (int j = 0; j < N; ++j) {
        PointReport<S> r;
        r.label = "q" + std::to_string(j + 1);
        r.kind = "apparent";
        const S& q = cfg.q[j];
        try {
            auto d = indicial_at(eq, SingularPoint<S>::at(q));
            r.g0 = d.g0;
            r.h0 = d.h0;
            r.i0 = d.i0;
            r.exponents_ok = d.g0 == S(-1) && is_zero(d.h0) && is_zero(d.i0);
            if (!r.exponents_ok) {
                r.notes.push_back("exponents are not {0, 1, 3}");
                rep.points.push_back(r);
                continue;
            }
            r.defect = S(0 + 1 + 3 - 3);
            r.obstructions = check_log_obstructions(eq, q);
            bool clean = true;
            for (const auto& o : r.obstructions)
                clean = clean && is_zero(o);
            for (int e : {0, 1, 3}) {
                auto s = frobenius_series(eq, q, S(e), order);
                r.series.push_back({e, s.obstruction_step});
                if (!s.exists()) {
                    clean = false;
                    r.notes.push_back("logarithmic term: exponent " + std::to_string(e) + " obstructed at step " +
                                      std::to_string(*s.obstruction_step));
                }
            }
            auto h = laurent_jet_through(eq.H, eq.psi * eq.psi, q, -1);
            r.h1_matches = h.at(-1) == cfg.p[j];
            r.passed = clean && *r.h1_matches;
        }
        catch (const Error& e) {
            r.notes.push_back(e.what());
        }
        rep.points.push_back(r);
    }
    rep.passed = rep.structural.empty();
    for (const auto& r : rep.points)
        rep.passed = rep.passed && r.passed;
    return rep;
}

} // namespace fuchs3
