#include "doctest.h"
#include "oracles.hpp"

#include "fuchs3/confvand.hpp"

using namespace fuchs3;
using R = Rational;

namespace {

std::vector<std::vector<int>> compositions(int n)
{
    if (n == 0)
        return {{}};
    std::vector<std::vector<int>> out;
    for (int first = 1; first <= n; ++first)
        for (auto rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

NodeSpec<R> random_spec(std::mt19937_64& rng, const std::vector<int>& mult)
{
    NodeSpec<R> spec;
    for (int m : mult) {
        R x;
        do
            x = oracle::small_rational(rng, 30);
        while (std::find(spec.x.begin(), spec.x.end(), x) != spec.x.end());
        spec.add(x, m);
    }
    return spec;
}

// Three parabolic nodes then four apparent nodes with the given multiplicities.
NodeSpec<R> block_spec(std::mt19937_64& rng, std::vector<int> qmult)
{
    std::vector<int> mult{1, 1, 1};
    mult.insert(mult.end(), qmult.begin(), qmult.end());
    NodeSpec<R> spec = random_spec(rng, mult);
    spec.leading_row = true;
    return spec;
}

RowRef t(int i) { return {i - 1, 0}; }
RowRef q(int j, int k) { return {2 + j, k}; }
const RowRef one{RowRef::leading, 0};

} // namespace

TEST_CASE("build_confvand rows")
{
    NodeSpec<R> spec;
    R x(5, 3);
    spec.add(x, 3);
    Matrix<R> M = build_confvand(spec, standard_sequence(spec));
    Matrix<R> expect(3, 3);
    expect << R(1), x, x * x, R(0), R(1), R(2) * x, R(0), R(0), R(1);
    CHECK(M == expect);
    CHECK(confvand_det(spec) == R(1));

    NodeSpec<R> dup;
    dup.add(R(1), 1);
    dup.add(R(1), 1);
    CHECK_THROWS_AS(build_confvand(dup, standard_sequence(dup)), DuplicateNode);
    CHECK(confvand_det(dup) == R(0));
}

TEST_CASE("small closed forms")
{
    R a(2, 7), b(-3, 4), c(9);
    NodeSpec<R> v;
    v.add(a, 1);
    v.add(b, 1);
    v.add(c, 1);
    CHECK(confvand_det(v) == (b - a) * (c - a) * (c - b));

    NodeSpec<R> s21;
    s21.add(a, 2);
    s21.add(b, 1);
    CHECK(oracle::cofactor_det(build_confvand(s21, standard_sequence(s21))) == (b - a) * (b - a));

    NodeSpec<R> s22;
    s22.add(a, 2);
    s22.add(b, 2);
    CHECK(confvand_det(s22) == pow(b - a, 4));
    CHECK(det(build_confvand(s22, standard_sequence(s22))) == pow(b - a, 4));
}

TEST_CASE("product formula equals brute force for every spec up to size 8")
{
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& mult : compositions(n)) {
            NodeSpec<R> spec = random_spec(rng, mult);
            Matrix<R> M = build_confvand(spec, standard_sequence(spec));
            R brute = n <= 6 ? oracle::cofactor_det(M) : det_gauss(M);
            CHECK(brute == confvand_det(spec));
            ++checked;
        }
    CHECK(checked == 255);
}

TEST_CASE("permuted sequences pick up the inversion sign")
{
    std::mt19937_64 rng(99);
    NodeSpec<R> spec = random_spec(rng, {2, 1, 3});
    spec.leading_row = true;
    RowSequence seq = standard_sequence(spec);
    CHECK(inversion_sign(seq) == 1);
    CHECK(det(build_confvand(spec, seq)) == confvand_det(spec));
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(seq.begin(), seq.end(), rng);
        R d = det(build_confvand(spec, seq));
        CHECK(d == R(inversion_sign(seq)) * confvand_det(spec));
        RowSequence swapped = seq;
        std::swap(swapped[0], swapped[3]);
        CHECK(inversion_sign(swapped) == -inversion_sign(seq));
    }
}

TEST_CASE("row sequences of the n=3 block expansion")
{
    std::mt19937_64 rng(3);
    RowSequence r1{one,     t(1),    t(2),    t(3),    q(1, 0), q(2, 0), q(3, 0),
                   q(4, 0), q(1, 1), q(2, 1), q(3, 1), q(4, 1), q(1, 2)};
    CHECK(inversion_count(r1) == 12);
    CHECK(inversion_sign(r1) == 1);
    NodeSpec<R> rs = block_spec(rng, {3, 2, 2, 2});
    CHECK(det(build_confvand(rs, r1)) == confvand_det(rs));

    RowSequence s1{q(2, 2), q(3, 2), q(4, 2), one,     t(1),    t(2),    t(3),
                   q(1, 0), q(2, 0), q(3, 0), q(4, 0), q(1, 1), q(2, 1), q(3, 1),
                   q(4, 1), q(1, 2), q(2, 3), q(3, 3), q(4, 3)};
    CHECK(inversion_sign(s1) == 1);
    // Only the parity enters the sign.
    CHECK(inversion_count(s1) == 54);
    NodeSpec<R> ss = block_spec(rng, {3, 4, 4, 4});
    CHECK(det(build_confvand(ss, s1)) == confvand_det(ss));
}

TEST_CASE("derivative rule replaces the top derivative row")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        NodeSpec<R> spec = block_spec(rng, {3, 4, 3, 4});
        RowSequence seq = standard_sequence(spec);
        // q1 and q3 are nodes 3 and 5; their rows (0, 1, 2)
        auto replaced = [&](std::vector<int> nodes) {
            RowSequence s = seq;
            for (auto& r : s)
                if (std::find(nodes.begin(), nodes.end(), r.node) != nodes.end() && r.order == 2)
                    r.order = 3;
            return det(build_confvand(spec, s));
        };
        CHECK(replaced({3}) * R(3) == confvand_det_partial(spec, {3}));
        CHECK(replaced({5}) * R(3) == confvand_det_partial(spec, {5}));
        CHECK(replaced({3, 5}) * R(9) == confvand_det_partial(spec, {3, 5}));
    }
}
