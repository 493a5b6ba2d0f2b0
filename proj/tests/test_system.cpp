#include "doctest.h"
#include "oracles.hpp"

#include "fuchs3/sampling.hpp"
#include "fuchs3/system.hpp"

using namespace fuchs3;
using R = Rational;

namespace {

FuchsianEquation<R> solved(const ProblemConfig<R>& cfg)
{
    auto result = solve_connection(cfg);
    REQUIRE(std::holds_alternative<FuchsianEquation<R>>(result));
    return std::get<FuchsianEquation<R>>(result);
}

} // namespace

TEST_CASE("validate_config")
{
    auto cfg = sample_config(2, 1u);
    CHECK(validate_config(cfg).ok());
    CHECK(validate_config(cfg).genericity_checked);
    CHECK(fuchs_defect(cfg) == R(2));

    auto bad = cfg;
    bad.q[0] = bad.t[0];
    auto rep = validate_config(bad);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].message == "Delta: coincidence q1=t1");

    auto off = cfg;
    off.rho[1][0] += R(1);
    off.set_rho(off.rho);
    rep = validate_config(off);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].kind == "fuchs");

    // -rho_{0,1} + rho_{1,1} + rho_{2,1} = 4 keeps alpha_1 but breaks genericity
    auto integral = cfg;
    R old = integral.rho[1][0];
    integral.rho[1][0] = R(4) + cfg.rho[0][0] - cfg.rho[2][0];
    integral.rho[1][1] += old - integral.rho[1][0];
    integral.set_rho(integral.rho);
    rep = validate_config(integral);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == "genericity");

    auto sums = sample_config(3, 4u, SampleOptions{true});
    CHECK(validate_config(sums).ok());
    CHECK(!validate_config(sums).genericity_checked);
    CHECK(sums.exponents[1].beta == R(0));
}

TEST_CASE("derive_constants")
{
    ProblemConfig<R> cfg;
    cfg.n = 2;
    cfg.t = {R(0), R(1)};
    cfg.q = {R(2)};
    cfg.p = {R(0)};
    cfg.set_rho({{R(1, 3), R(1, 5), R(1, 7)}, {R(1, 2), R(1, 9), R(2, 11)}, {R(5, 13), R(3, 17), R(0)}});
    cfg.rho[2][2] = R(2) + cfg.exponents[0].alpha - cfg.exponents[1].alpha - R(5, 13) - R(3, 17);
    cfg.set_rho(cfg.rho);
    auto c = derive_constants(cfg);
    CHECK(c.mu[0] == R(1, 4));
    CHECK(c.nu[0] == R(1, 8));
    CHECK(c.nu[0] * c.nu[0] == c.mu[0] * c.mu[0] * c.mu[0]);
    CHECK(c.nu[0] * pow(R(2), 3) * pow(R(1), 3) == R(1));
    // mu~, nu~ are q-derivatives of the explicit formulas
    CHECK(c.mu_tilde[0] == R(-2) / (R(8) * R(1)) - R(2) / (R(4) * R(1)));
    CHECK(c.nu_tilde[0] == R(-3) / (R(16)) - R(3) / (R(8)));

    auto shifted = cfg;
    shifted.p[0] = -c.g1[0];
    CHECK(derive_constants(shifted).omega[0] == c.nu_tilde[0]);
}

TEST_CASE("G block")
{
    for (int n = 2; n <= 4; ++n) {
        auto cfg = sample_config(n, 100u + n);
        auto c = derive_constants(cfg);
        Poly<R> G = solve_g(cfg, c);
        CHECK(G.degree() <= 4 * n - 6);
        CHECK(G.coeff(4 * n - 6) == R(3) - c.alpha[0]);
        Poly<R> psi = psi_polynomial(cfg);
        for (int j = 0; j < cfg.N(); ++j) {
            CHECK(G.eval(cfg.q[j]) == R(-1) / c.eta[j]);
            auto jet = laurent_jet(G, psi, cfg.q[j], 2);
            CHECK(jet.at(-1) == R(-1));
            CHECK(jet.at(0) == c.g1[j]);
            CHECK(!c.g1[j].is_zero());
        }
        for (int i = 0; i < n; ++i)
            CHECK(laurent_jet(G, psi, cfg.t[i], 1).at(-1) == R(3) - c.alpha[i + 1]);
    }
}

TEST_CASE("n=2 matrix matches the displayed shape and determinant")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto cfg = sample_config(2, seed);
        auto c = derive_constants(cfg);
        auto sys = build_t_system(cfg, c);
        REQUIRE(sys.t_matrix.rows() == 12);
        R t1 = cfg.t[0], t2 = cfg.t[1], q = cfg.q[0];
        R mu = c.mu[0], nu = c.nu[0];
        R omega = R(-3) / (pow(q - t1, 3) * pow(q - t2, 4)) - R(3) / (pow(q - t1, 4) * pow(q - t2, 3)) +
                  (cfg.p[0] + c.g1[0]) / (pow(q - t1, 3) * pow(q - t2, 3));
        CHECK(omega == c.omega[0]);
        Matrix<R> D = Matrix<R>::Constant(12, 12, R(0));
        D(0, 4) = R(1);
        for (int k = 0; k < 5; ++k) {
            D(1, k) = pow(t1, k);
            D(2, k) = pow(t2, k);
            D(3, k) = pow(q, k);
            if (k >= 1)
                D(4, k) = R(k) * pow(q, k - 1);
        }
        D(5, 2) = mu;
        D(5, 3) = R(3) * mu * q;
        D(5, 4) = R(6) * mu * q * q;
        R nrow[5] = {nu, R(3) * nu * q, R(6) * nu * q * q, R(10) * nu * pow(q, 3), R(15) * nu * pow(q, 4)};
        for (int k = 0; k < 5; ++k)
            D(5, 7 + k) = nrow[k];
        D(6, 11) = R(1);
        for (int k = 0; k < 7; ++k) {
            D(7, 5 + k) = pow(t1, k);
            D(8, 5 + k) = pow(t2, k);
            D(9, 5 + k) = pow(q, k);
            if (k >= 1)
                D(10, 5 + k) = R(k) * pow(q, k - 1);
        }
        R last[5] = {omega, R(3) * omega * q + nu, R(6) * omega * q * q + R(4) * nu * q,
                     R(10) * omega * pow(q, 3) + R(10) * nu * q * q,
                     R(15) * omega * pow(q, 4) + R(20) * nu * pow(q, 3)};
        for (int k = 0; k < 5; ++k)
            D(11, 7 + k) = last[k];
        CHECK(sys.t_matrix == D);
        CHECK(det(sys.t_matrix) == -(t1 - t2) * (t1 - t2));
        CHECK(sys.t_rhs(4) == cfg.p[0] / mu);
    }
}

TEST_CASE("n=3 first common row")
{
    auto cfg = sample_config(3, 33u);
    auto c = derive_constants(cfg);
    auto sys = build_t_system(cfg, c);
    CHECK(sys.t_matrix.rows() == 32);
    CHECK(sys.row_labels[12] == "common1");
    CHECK(sys.column_labels[13] == "I0");
    const R& q = cfg.q[0];
    for (int k = 0; k < 13; ++k)
        CHECK(sys.t_matrix(12, k) == (k < 2 ? R(0) : binomial(k, 2) * c.mu[0] * pow(q, k - 2)));
    for (int k = 0; k < 19; ++k)
        CHECK(sys.t_matrix(12, 13 + k) == (k < 2 ? R(0) : binomial(k, 2) * c.nu[0] * pow(q, k - 2)));
    CHECK(sys.t_matrix(12, 12) == R(66) * c.mu[0] * pow(q, 10));
    CHECK(sys.t_matrix(12, 31) == R(153) * c.nu[0] * pow(q, 16));
    CHECK(!det(sys.t_matrix).is_zero());
    CHECK(rank(sys.t_matrix) == 32);
}

TEST_CASE("round trip: Laurent residuals vanish")
{
    for (int n = 2; n <= 4; ++n)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto cfg = sample_config(n, 500u + 10 * n + seed);
            auto eq = solved(cfg);
            CHECK(eq.G.degree() <= 4 * n - 6);
            CHECK(eq.H.degree() <= 8 * n - 12);
            CHECK(eq.I.degree() <= 12 * n - 18);
            CHECK(eq.psi.degree() == 4 * n - 5);
            auto res = laurent_residuals(eq, cfg);
            CHECK(res.size() == static_cast<size_t>(20 * n - 28));
            for (const auto& r : res)
                CHECK(r == R(0));
        }
}

TEST_CASE("a wrong common-row rhs is caught by the residuals")
{
    auto cfg = sample_config(3, 77u);
    auto c = derive_constants(cfg);
    auto sys = build_t_system(cfg, c);
    sys.t_rhs(sys.layout.common(1)) += R(1);
    auto sol = solve(sys.t_matrix, sys.t_rhs);
    auto eq = equation_from_unknowns(cfg, solve_g(cfg, c), sol.particular);
    auto res = laurent_residuals(eq, cfg);
    CHECK(!res[sys.layout.common(1)].is_zero());
}

TEST_CASE("permutation equivariance")
{
    auto cfg = sample_config(3, 909u);
    auto eq = solved(cfg);
    auto perm = cfg;
    std::vector<int> order{2, 0, 3, 1};
    for (int j = 0; j < 4; ++j) {
        perm.q[j] = cfg.q[order[j]];
        perm.p[j] = cfg.p[order[j]];
    }
    auto eq2 = solved(perm);
    CHECK(eq.G == eq2.G);
    CHECK(eq.H == eq2.H);
    CHECK(eq.I == eq2.I);
    CHECK(eq.psi == eq2.psi);
}
