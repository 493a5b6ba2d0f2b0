#include "fuchs3/discriminant.hpp"

#include <algorithm>

namespace fuchs3 {

DegreeProbe degree_probe(const std::function<Rational(const Rational&)>& f, int samples,
                         const std::vector<Rational>& avoid, int extra)
{
    if (samples < 1 || extra < 1)
        throw DimensionMismatch("degree_probe needs at least one sample and one check point");
    std::vector<Rational> xs, ys;
    for (long k = 1; static_cast<int>(xs.size()) < samples + extra; ++k) {
        Rational x(k);
        if (std::find(avoid.begin(), avoid.end(), x) != avoid.end())
            continue;
        xs.push_back(x);
        ys.push_back(f(x));
    }
    std::vector<Rational> fx(xs.begin(), xs.begin() + samples), fy(ys.begin(), ys.begin() + samples);
    DegreeProbe out;
    out.poly = interpolate(fx, fy);
    for (size_t i = samples; i < xs.size(); ++i)
        if (out.poly(xs[i]) != ys[i])
            throw InterpolationInconsistent("interpolant through " + std::to_string(samples) +
                                            " samples misses check point x=" + xs[i].str());
    out.degree = out.poly.degree();
    out.leading = out.degree >= 0 ? out.poly.leading() : Rational(0);
    out.saturated = out.degree == samples - 1;
    return out;
}

std::vector<Rational> forbidden_values(const ProblemConfig<Rational>& cfg, const std::string& var)
{
    std::vector<Rational> out;
    if (var.empty() || var[0] == 'p')
        return out;
    const int idx = std::stoi(var.substr(1)) - 1;
    for (size_t i = 0; i < cfg.t.size(); ++i)
        if (!(var[0] == 't' && static_cast<int>(i) == idx))
            out.push_back(cfg.t[i]);
    for (size_t j = 0; j < cfg.q.size(); ++j)
        if (!(var[0] == 'q' && static_cast<int>(j) == idx))
            out.push_back(cfg.q[j]);
    return out;
}

} // namespace fuchs3
