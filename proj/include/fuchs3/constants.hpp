#pragma once

#include <vector>

#include "fuchs3/config.hpp"

namespace fuchs3 {

// Per parabolic point i (index 0 is infinity for alpha/beta/gamma; lambda is
// indexed from the first finite point) and per apparent point j.
template <class S>
struct DerivedConstants {
    std::vector<S> lambda;
    std::vector<S> alpha, beta, gamma;
    std::vector<S> eta, mu, mu_tilde, nu, nu_tilde;
    std::vector<S> g1;     // order-0 Laurent coefficient of G/psi at q_j
    std::vector<S> p_eff;  // p_j + g1_j
    std::vector<S> omega;  // p_eff_j nu_j + nu_tilde_j
};

template <class S>
DerivedConstants<S> derive_constants(const ProblemConfig<S>& cfg)
{
    DerivedConstants<S> c;
    const int n = cfg.n, N = cfg.N();
    for (const auto& e : cfg.exponents) {
        c.alpha.push_back(e.alpha);
        c.beta.push_back(e.beta);
        c.gamma.push_back(e.gamma);
    }
    for (int i = 0; i < n; ++i) {
        S prod(1);
        for (int k = 0; k < n; ++k)
            if (k != i)
                prod = prod * (cfg.t[i] - cfg.t[k]);
        for (int l = 0; l < N; ++l)
            prod = prod * (cfg.t[i] - cfg.q[l]);
        c.lambda.push_back(S(1) / prod);
    }
    for (int j = 0; j < N; ++j) {
        const S& qj = cfg.q[j];
        S prod(1), log_sum(0), g1(0);
        for (int k = 0; k < n; ++k) {
            prod = prod * (qj - cfg.t[k]);
            log_sum = log_sum + S(1) / (qj - cfg.t[k]);
            g1 = g1 + (S(3) - c.alpha[k + 1]) / (qj - cfg.t[k]);
        }
        for (int l = 0; l < N; ++l)
            if (l != j) {
                prod = prod * (qj - cfg.q[l]);
                log_sum = log_sum + S(1) / (qj - cfg.q[l]);
                g1 = g1 - S(1) / (qj - cfg.q[l]);
            }
        S eta = S(1) / prod;
        S mu = eta * eta, nu = mu * eta;
        c.eta.push_back(eta);
        c.mu.push_back(mu);
        c.nu.push_back(nu);
        c.mu_tilde.push_back(S(-2) * mu * log_sum);
        c.nu_tilde.push_back(S(-3) * nu * log_sum);
        c.g1.push_back(g1);
        c.p_eff.push_back(cfg.p[j] + g1);
        c.omega.push_back(c.p_eff.back() * nu + c.nu_tilde.back());
    }
    return c;
}

} // namespace fuchs3
