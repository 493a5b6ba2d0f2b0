#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fuchs3/rational.hpp"

namespace fuchs3 {

// Elementary symmetric functions of the three exponents at a point.
template <class S>
struct ExponentSums {
    S alpha, beta, gamma;
};

template <class S>
ExponentSums<S> exponent_sums(const std::array<S, 3>& r)
{
    return {r[0] + r[1] + r[2], r[0] * r[1] + r[0] * r[2] + r[1] * r[2], r[0] * r[1] * r[2]};
}

// Index 0 of rho/exponents is the point at infinity; its exponents are growth
// exponents, w ~ z^rho.
template <class S>
struct ProblemConfig {
    int n = 0;
    std::vector<S> t;
    std::vector<std::array<S, 3>> rho;      // empty when only sums are given
    std::vector<ExponentSums<S>> exponents; // n + 1 entries
    std::vector<S> q;
    std::vector<S> p;

    int N() const { return 3 * n - 5; }

    void set_rho(std::vector<std::array<S, 3>> r)
    {
        rho = std::move(r);
        exponents.clear();
        for (const auto& row : rho)
            exponents.push_back(exponent_sums(row));
    }
};

template <class T, class S, class F>
ProblemConfig<T> convert_config(const ProblemConfig<S>& c, F&& f)
{
    ProblemConfig<T> out;
    out.n = c.n;
    for (const auto& x : c.t)
        out.t.push_back(f(x));
    for (const auto& r : c.rho)
        out.rho.push_back({f(r[0]), f(r[1]), f(r[2])});
    for (const auto& e : c.exponents)
        out.exponents.push_back({f(e.alpha), f(e.beta), f(e.gamma)});
    for (const auto& x : c.q)
        out.q.push_back(f(x));
    for (const auto& x : c.p)
        out.p.push_back(f(x));
    return out;
}

struct Violation {
    std::string kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool genericity_checked = false;
    bool ok() const { return violations.empty(); }
    std::string summary() const
    {
        std::string s;
        for (const auto& v : violations)
            s += (s.empty() ? "" : "; ") + v.message;
        return s;
    }
};

// sum_{i>=1} alpha_i - alpha_0; must equal 2 for three exponents per point and
// apparent points of defect one.
template <class S>
S fuchs_defect(const ProblemConfig<S>& cfg)
{
    S sum = -cfg.exponents[0].alpha;
    for (int i = 1; i <= cfg.n; ++i)
        sum = sum + cfg.exponents[i].alpha;
    return sum;
}

namespace detail {

template <class S>
void check_genericity(const ProblemConfig<S>& cfg, ValidationReport& report)
{
    std::vector<std::array<Rational, 3>> local;
    for (int i = 0; i <= cfg.n; ++i) {
        std::array<Rational, 3> row;
        for (int k = 0; k < 3; ++k) {
            auto v = rational_value(cfg.rho[i][k]);
            if (!v)
                return;
            row[k] = i == 0 ? -*v : *v;
        }
        local.push_back(row);
    }
    report.genericity_checked = true;

    // Sums over one exponent per point (l = 1) and over two per point (l = 2);
    // picking two is the same as leaving one out.
    const int points = cfg.n + 1;
    long choices = 1;
    for (int i = 0; i < points; ++i)
        choices *= 3;
    for (int l = 1; l <= 2; ++l)
        for (long code = 0; code < choices; ++code) {
            Rational sum;
            std::string picks;
            long c = code;
            for (int i = 0; i < points; ++i, c /= 3) {
                int k = static_cast<int>(c % 3);
                sum += l == 1 ? local[i][k] : local[i][0] + local[i][1] + local[i][2] - local[i][k];
                picks += std::to_string(k + 1);
            }
            if (sum.is_integer()) {
                report.violations.push_back(
                    {"genericity", "genericity: integral partial sum (l=" + std::to_string(l) +
                                       ", choice " + picks + ") = " + sum.str()});
                return;
            }
        }
}

} // namespace detail

template <class S>
ValidationReport validate_config(const ProblemConfig<S>& cfg)
{
    ValidationReport report;
    auto add = [&](std::string kind, std::string msg) {
        report.violations.push_back({std::move(kind), std::move(msg)});
    };
    if (cfg.n < 2) {
        add("size", "size: n must be at least 2");
        return report;
    }
    const size_t n = static_cast<size_t>(cfg.n), N = static_cast<size_t>(cfg.N());
    if (cfg.t.size() != n)
        add("size", "size: expected " + std::to_string(n) + " points t");
    if (cfg.q.size() != N)
        add("size", "size: expected " + std::to_string(N) + " points q");
    if (cfg.p.size() != N)
        add("size", "size: expected " + std::to_string(N) + " parameters p");
    if (cfg.exponents.size() != n + 1)
        add("size", "size: expected exponent data for " + std::to_string(n + 1) + " points");
    if (!cfg.rho.empty() && cfg.rho.size() != n + 1)
        add("size", "size: expected " + std::to_string(n + 1) + " rho rows");
    if (!report.ok())
        return report;

    auto label = [](const char* name, size_t i) { return std::string(name) + std::to_string(i + 1); };
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i + 1; k < n; ++k)
            if (cfg.t[i] == cfg.t[k])
                add("delta", "Delta: coincidence " + label("t", i) + "=" + label("t", k));
    for (size_t j = 0; j < N; ++j) {
        for (size_t l = j + 1; l < N; ++l)
            if (cfg.q[j] == cfg.q[l])
                add("delta", "Delta: coincidence " + label("q", j) + "=" + label("q", l));
        for (size_t i = 0; i < n; ++i)
            if (cfg.q[j] == cfg.t[i])
                add("delta", "Delta: coincidence " + label("q", j) + "=" + label("t", i));
    }

    S defect = fuchs_defect(cfg);
    if (!(defect == S(2)))
        add("fuchs", "Fuchs relation: sum_{i>=1} alpha_i - alpha_0 = " + to_string(defect) +
                         ", expected 2");

    if (!cfg.rho.empty())
        detail::check_genericity(cfg, report);
    return report;
}

template <class S>
void require_valid(const ProblemConfig<S>& cfg)
{
    auto report = validate_config(cfg);
    if (!report.ok())
        throw InvalidConfig(report.summary());
}

} // namespace fuchs3
