#include "doctest.h"
#include "oracles.hpp"

#include "fuchs3/frobenius.hpp"
#include "fuchs3/sampling.hpp"

using namespace fuchs3;
using R = Rational;
using P = Poly<Rational>;

namespace {

FuchsianEquation<R> solved(const ProblemConfig<R>& cfg)
{
    auto result = solve_connection(cfg);
    REQUIRE(std::holds_alternative<FuchsianEquation<R>>(result));
    return std::get<FuchsianEquation<R>>(result);
}

std::vector<R> roots_of(const IndicialData<R>& d)
{
    REQUIRE(d.roots);
    return d.roots->rational_roots;
}

// Equation with given local data (g0, h0, i0) at 0 and nothing else: psi = z.
FuchsianEquation<R> local_model(R g0, R h0, R i0)
{
    return {P::constant(g0), P::constant(h0), P::constant(i0), P{R(0), R(1)}};
}

} // namespace

TEST_CASE("root isolation")
{
    auto iso = isolate_roots(P::from_roots({R(1, 3), R(1, 3), R(-2), R(7, 5)}));
    CHECK(iso.rational_roots == std::vector<R>{R(-2), R(1, 3), R(1, 3), R(7, 5)});
    CHECK(iso.irrational.empty());
    CHECK(iso.complex_roots == 0);

    auto irr = isolate_roots(P{R(-2), R(0), R(1)} * P{R(1), R(0), R(1)} * P::linear_root(R(5)));
    CHECK(irr.rational_roots == std::vector<R>{R(5)});
    CHECK(irr.irrational.size() == 2);
    CHECK(irr.complex_roots == 2);
    for (const auto& iv : irr.irrational)
        CHECK(iv.hi - iv.lo < R(1));
}

TEST_CASE("indicial_at on local models")
{
    auto d0 = indicial_at(local_model(R(0), R(0), R(0)), SingularPoint<R>::at(R(0)));
    CHECK(roots_of(d0) == std::vector<R>{R(0), R(1), R(2)});
    auto d1 = indicial_at(local_model(R(-1), R(0), R(0)), SingularPoint<R>::at(R(0)));
    CHECK(roots_of(d1) == std::vector<R>{R(0), R(1), R(3)});
    CHECK_THROWS_AS(indicial_at(local_model(R(0), R(0), R(0)), SingularPoint<R>::at(R(1))), NotASingularPoint);
}

TEST_CASE("solved equations: exponents at parabolic points")
{
    for (int n = 2; n <= 3; ++n) {
        auto cfg = sample_config(n, 40u + n);
        auto eq = solved(cfg);
        for (int i = 0; i <= n; ++i) {
            auto pt = i == 0 ? SingularPoint<R>::infinity() : SingularPoint<R>::at(cfg.t[i - 1]);
            auto d = indicial_at(eq, pt);
            for (int k = 0; k < 3; ++k)
                CHECK(indicial_value(d, cfg.rho[i][k]) == R(0));
            // sampled exponents are rational, so all three are found exactly
            std::vector<R> expect(cfg.rho[i].begin(), cfg.rho[i].end());
            std::sort(expect.begin(), expect.end());
            CHECK(roots_of(d) == expect);
        }
    }
}

TEST_CASE("log obstructions and Frobenius series at apparent points")
{
    auto cfg = sample_config(3, 1234u);
    auto eq = solved(cfg);
    for (int j = 0; j < cfg.N(); ++j) {
        const R& q = cfg.q[j];
        auto obs = check_log_obstructions(eq, q);
        for (const auto& o : obs)
            CHECK(o == R(0));
        CHECK(laurent_jet_through(eq.H, eq.psi * eq.psi, q, -1).at(-1) == cfg.p[j]);
        auto s0 = frobenius_series(eq, q, R(0), 12);
        CHECK(s0.exists());
        CHECK(s0.resonant_steps == std::vector<int>{1, 3});
        auto s0b = frobenius_series(eq, q, R(0), 17);
        CHECK(s0b.exists());
        CHECK(std::equal(s0.coefficients.begin(), s0.coefficients.end(), s0b.coefficients.begin()));
        CHECK(frobenius_series(eq, q, R(1), 12).exists());
        CHECK(frobenius_series(eq, q, R(3), 12).exists());
        CHECK(frobenius_series(eq, q, R(3), 12).resonant_steps.empty());
    }
    CHECK_THROWS_AS(frobenius_series(eq, cfg.q[0], R(2), 12), WrongExponents);
}

TEST_CASE("injected violations are detected")
{
    auto cfg = sample_config(3, 99u);
    auto eq = solved(cfg);
    const R q = cfg.q[0];
    Poly<R> psi3 = eq.psi * eq.psi * eq.psi;

    // I += psi^3 / (z - q)^2 raises I_1 at q by exactly one
    auto bumped = eq;
    Poly<R> tail = psi3;
    strip_root(tail, q);
    Poly<R> one_extra = tail * P::linear_root(q);
    bumped.I = eq.I + one_extra;
    CHECK(check_log_obstructions(bumped, q)[0] == R(1));
    auto s = frobenius_series(bumped, q, R(0), 12);
    CHECK(!s.exists());
    CHECK(*s.obstruction_step == 1);

    // H += psi^2 shifts H_2 at every apparent point: the second condition fails
    auto h2 = eq;
    h2.H = eq.H + eq.psi * eq.psi;
    auto obs = check_log_obstructions(h2, q);
    CHECK(obs[0] == R(0));
    CHECK(obs[1] == R(1));
    auto s1 = frobenius_series(h2, q, R(1), 12);
    CHECK(!s1.exists());
    CHECK(*s1.obstruction_step == 2);  // lands on the root 3
    CHECK(frobenius_series(h2, q, R(1), 17).obstruction_step == s1.obstruction_step);

    auto report = verify_apparent_all(h2, cfg);
    CHECK(!report.passed);
}

TEST_CASE("verify_apparent_all")
{
    for (int n = 2; n <= 3; ++n) {
        auto cfg = sample_config(n, 7u + n);
        auto report = verify_apparent_all(solved(cfg), cfg);
        CHECK(report.passed);
        CHECK(report.structural.empty());
        for (const auto& r : report.points)
            if (r.kind == "apparent")
                CHECK(*r.defect == R(1));
    }

    auto cfg = sample_config(2, 5u);
    auto eq = solved(cfg);
    auto spurious = eq;
    spurious.psi = eq.psi * P{R(-2), R(0), R(1)};  // z^2 - 2 has no rational root
    auto report = verify_apparent_all(spurious, cfg);
    CHECK(!report.passed);
    REQUIRE(!report.structural.empty());
    CHECK(report.structural[0].find("extra singularity") != std::string::npos);

    auto missing = cfg;
    missing.q.clear();
    CHECK(!verify_apparent_all(eq, missing).passed);
}

TEST_CASE("indicial roots at t_i do not depend on the labelling of q")
{
    auto cfg = sample_config(3, 2718u);
    auto eq = solved(cfg);
    auto perm = cfg;
    std::swap(perm.q[0], perm.q[3]);
    std::swap(perm.p[0], perm.p[3]);
    auto eq2 = solved(perm);
    for (const auto& t : cfg.t) {
        auto a = indicial_at(eq, SingularPoint<R>::at(t)), b = indicial_at(eq2, SingularPoint<R>::at(t));
        CHECK(a.cubic() == b.cubic());
    }
}
