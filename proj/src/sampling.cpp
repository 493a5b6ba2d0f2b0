#include "fuchs3/sampling.hpp"

#include <algorithm>

namespace fuchs3 {

Rational sample_rational(Rng& rng)
{
    std::uniform_int_distribution<long> den_dist(1, 40);
    long den = den_dist(rng);
    long lo = (den + 39) / 40;
    std::uniform_int_distribution<long> num_dist(lo, 70 * den);
    return Rational(num_dist(rng), den);
}

static std::vector<Rational> distinct_points(Rng& rng, size_t count, std::vector<Rational> avoid)
{
    std::vector<Rational> out;
    while (out.size() < count) {
        Rational x = sample_rational(rng);
        if (std::find(avoid.begin(), avoid.end(), x) != avoid.end())
            continue;
        avoid.push_back(x);
        out.push_back(x);
    }
    return out;
}

ProblemConfig<Rational> sample_config(int n, Rng& rng, const SampleOptions& opts)
{
    if (n < 2)
        throw InvalidConfig("n must be at least 2");
    for (;;) {
        ProblemConfig<Rational> cfg;
        cfg.n = n;
        cfg.t = distinct_points(rng, static_cast<size_t>(n), {});
        cfg.q = distinct_points(rng, static_cast<size_t>(cfg.N()), cfg.t);
        for (int j = 0; j < cfg.N(); ++j)
            cfg.p.push_back(sample_rational(rng));

        if (opts.beta_zero) {
            cfg.exponents.resize(static_cast<size_t>(n) + 1);
            Rational total;
            for (int i = 1; i <= n; ++i) {
                cfg.exponents[i] = {sample_rational(rng), Rational(0), sample_rational(rng)};
                total += cfg.exponents[i].alpha;
            }
            cfg.exponents[0] = {total - Rational(2), Rational(0), sample_rational(rng)};
        }
        else {
            std::vector<std::array<Rational, 3>> rho(static_cast<size_t>(n) + 1);
            Rational total;
            for (int i = 1; i <= n; ++i) {
                for (auto& r : rho[i])
                    r = sample_rational(rng);
                total += rho[i][0] + rho[i][1] + rho[i][2];
            }
            rho[0][0] = sample_rational(rng);
            rho[0][1] = sample_rational(rng);
            rho[0][2] = total - Rational(2) - rho[0][0] - rho[0][1];
            cfg.set_rho(std::move(rho));
        }
        if (validate_config(cfg).ok())
            return cfg;
    }
}

ProblemConfig<Rational> sample_config(int n, std::uint64_t seed, const SampleOptions& opts)
{
    Rng rng(seed);
    return sample_config(n, rng, opts);
}

} // namespace fuchs3
