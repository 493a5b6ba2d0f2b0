#include "doctest.h"
#include "oracles.hpp"

#include "fuchs3/algebraic.hpp"
#include "fuchs3/laurent.hpp"
#include "fuchs3/matrix.hpp"
#include "fuchs3/poly.hpp"

using namespace fuchs3;
using R = Rational;
using A = AlgebraicNumber;
using P = Poly<Rational>;

TEST_CASE("rational values are canonical")
{
    R a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(R::parse(" -6/4 ") == a);
    CHECK(R::parse("7") == R(7));
    CHECK_THROWS_AS(R::parse("1/0"), ParseError);
    CHECK_THROWS_AS(R(1) / R(0), DivisionByZero);
    CHECK(binomial(16, 2) == R(120));
    CHECK(pow(R(2, 3), -2) == R(9, 4));
}

TEST_CASE("poly_eval")
{
    CHECK(P().eval(R(5)) == R(0));
    CHECK(P().degree() == -1);
    P roots = P::from_roots({R(1), R(2)});
    CHECK(roots.eval(R(1)) == R(0));
    P p{R(1), R(2), R(3)};
    CHECK(p.eval(R(1, 2)) == R(11, 4));
    CHECK((p * roots).degree() == p.degree() + roots.degree());
}

TEST_CASE("poly division, gcd and interpolation")
{
    P a = P::from_roots({R(1), R(2), R(3)});
    P b = P::from_roots({R(2), R(5)});
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(a, b) == P::linear_root(R(2)));
    std::vector<R> xs{R(0), R(1), R(2), R(3)}, ys;
    for (auto& x : xs)
        ys.push_back(a.eval(x));
    CHECK(interpolate(xs, ys) == a);
    P s = taylor_shift(a, R(1));
    CHECK(s.eval(R(0)) == R(0));
    CHECK(s.eval(R(2)) == a.eval(R(3)));
}

TEST_CASE("laurent_jet")
{
    R q(3, 7);
    auto jet = laurent_jet(P::constant(R(1)), P::linear_root(q), q, 2);
    CHECK(jet.lowest_order == -1);
    CHECK(jet.coefficients == std::vector<R>{R(1), R(0)});
    CHECK_THROWS_AS(laurent_jet(P::constant(R(1)), P(), q, 2), ZeroDenominator);

    // 1/((z-1)(z-2)) at 1: -1/(z-1) - 1 - (z-1) - ...
    auto j2 = laurent_jet(P::constant(R(1)), P::from_roots({R(1), R(2)}), R(1), 3);
    CHECK(j2.lowest_order == -1);
    CHECK(j2.at(-1) == R(-1));
    CHECK(j2.at(0) == R(-1));
    CHECK(j2.at(1) == R(-1));
    CHECK(j2.at(-5) == R(0));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        P num{oracle::small_rational(rng), oracle::small_rational(rng), R(1)};
        P den{oracle::small_rational(rng), oracle::small_rational(rng), R(0), R(2)};
        R c = oracle::small_rational(rng);
        den = den * P::linear_root(c);
        auto plain = laurent_jet(num, den, c, 4);
        auto doubled = laurent_jet(num * P::linear_root(c), den * P::linear_root(c), c, 4);
        CHECK(plain.lowest_order == doubled.lowest_order);
        CHECK(plain.coefficients == doubled.coefficients);
        auto shifted = laurent_jet(num * P::linear_root(c), den, c, 4);
        CHECK(shifted.lowest_order == plain.lowest_order + 1);
        CHECK(std::equal(shifted.coefficients.begin(), shifted.coefficients.begin() + 3,
                         plain.coefficients.begin()));
    }
}

TEST_CASE("det agrees with cofactor expansion up to 8x8")
{
    std::mt19937_64 rng(2024);
    CHECK(det(Matrix<R>(Matrix<R>::Identity(5, 5))) == R(1));
    R a(3, 5), b(-7, 2);
    Matrix<R> V(2, 2);
    V << R(1), a, R(1), b;
    CHECK(det(V) == b - a);
    for (Index n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < (n <= 6 ? 6 : 2); ++trial) {
            Matrix<R> M = oracle::random_matrix(rng, n, n);
            if (trial == 1 && n > 1)
                M.row(n - 1) = M.row(0) * R(2, 3);
            R expect = oracle::cofactor_det(M);
            CHECK(det(M) == expect);
            CHECK(det_gauss(M) == expect);
        }
    }
    CHECK_THROWS_AS(det(Matrix<R>(2, 3)), NotSquare);
}

TEST_CASE("rank, nullspace and solve")
{
    Matrix<R> Z = Matrix<R>::Constant(3, 4, R(0));
    CHECK(rank(Z) == 0);
    CHECK(nullspace(Z).size() == 4);

    std::mt19937_64 rng(7);
    Matrix<R> M = oracle::random_matrix(rng, 6, 6);
    M.col(5) = M.col(0) + M.col(2) * R(3);
    CHECK(rank(M) == 5);
    auto ns = nullspace(M);
    REQUIRE(ns.size() == 1);
    for (Index i = 0; i < 6; ++i)
        CHECK(mat_vec(M, ns[0])(i) == R(0));

    Vector<R> x0(6);
    for (Index i = 0; i < 6; ++i)
        x0(i) = oracle::small_rational(rng);
    Vector<R> b = mat_vec(M, x0);
    auto sol = solve(M, b);
    CHECK(sol.rank == 5);
    REQUIRE(sol.free_columns.size() == 1);
    CHECK(sol.free_columns[0] == 5);
    Vector<R> res = mat_vec(M, sol.particular);
    for (Index i = 0; i < 6; ++i)
        CHECK(res(i) == b(i));
    b(0) = b(0) + R(1);
    CHECK_THROWS_AS(solve(M, b), Inconsistent);
}

TEST_CASE("quadratic extension arithmetic")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        R d = oracle::small_rational(rng);
        if (d.is_zero())
            continue;
        auto F = NumberField::quadratic(d);
        R a = oracle::small_rational(rng), b = oracle::small_rational(rng);
        A s = A::generator(F);
        A x = A(a) + A(b) * s, y = A(a) - A(b) * s;
        CHECK(x * y == A(a * a - b * b * d));
        if (!x.is_zero())
            CHECK(x * x.inverse() == A(1));
    }
    auto F = NumberField::quadratic(R(5));
    A v = A::parse("1/2-3/4*sqrt(5)", F);
    CHECK(v.str() == "1/2-3/4*sqrt(5)");
    CHECK(A::parse(v.str()) == v);
    auto G = NumberField::quadratic(R(3));
    CHECK_THROWS_AS(A::generator(F) + A::generator(G), FieldMismatch);
}

TEST_CASE("general number field and zero divisors")
{
    // x^3 - 2 is irreducible
    auto F = NumberField::make(P{R(-2), R(0), R(0), R(1)});
    A th = A::generator(F);
    CHECK(th * th * th == A(2));
    A u = A(1) + th * R(2) - th * th;
    CHECK(u * u.inverse() == A(1));
    CHECK(A::parse(u.str(), F) == u);

    // (x - 1)(x^2 + 1): x - 1 is a zero divisor
    auto K = NumberField::make(P::linear_root(R(1)) * P{R(1), R(0), R(1)});
    A z = A::generator(K) - A(1);
    try {
        (void)z.inverse();
        FAIL("expected ZeroDivisor");
    }
    catch (const ZeroDivisor& e) {
        CHECK(e.factor == P::linear_root(R(1)));
    }
}

TEST_CASE("elimination over a number field")
{
    auto F = NumberField::quadratic(R(2));
    A s = A::generator(F);
    Matrix<A> M(3, 3);
    M << A(1), s, A(2), s, A(3), s * R(2), A(3), A(1), s;
    Matrix<A> N = M;
    CHECK(det(M) == oracle::cofactor_det(N));
    CHECK(!det(M).is_zero());
    M.row(2) = M.row(0) * s;
    CHECK(det(M) == A(0));
    CHECK(rank(M) == 2);
}
