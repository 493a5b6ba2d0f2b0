#include "fuchs3/roots.hpp"

#include <algorithm>

namespace fuchs3 {

Poly<Rational> squarefree_part(const Poly<Rational>& p)
{
    if (p.degree() <= 0)
        return p;
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<Poly<Rational>> sturm_chain(const Poly<Rational>& p)
{
    std::vector<Poly<Rational>> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Poly<Rational> r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero())
            break;
        // keep the leading coefficient's sign, scale to monic magnitude
        Rational lc = abs(r.leading());
        chain.push_back(Rational(-1) / lc * r);
    }
    return chain;
}

static int sign_changes(const std::vector<Poly<Rational>>& chain, const Rational& x)
{
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        int s = q.eval(x).sign();
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

int sturm_count(const std::vector<Poly<Rational>>& chain, const Rational& a, const Rational& b)
{
    return sign_changes(chain, a) - sign_changes(chain, b);
}

static mpz_class ceil_div(const Rational& x)
{
    return -floor(-x);
}

RootIsolation isolate_roots(const Poly<Rational>& p)
{
    RootIsolation out;
    if (p.degree() <= 0)
        return out;
    Poly<Rational> sf = squarefree_part(p);
    auto chain = sturm_chain(sf);

    // Cauchy bound
    Rational bound(0);
    for (int k = 0; k < sf.degree(); ++k)
        bound = std::max(bound, abs(sf.coeff(k) / sf.leading()));
    bound += Rational(1);

    // Integer-scaled leading coefficient: a rational root a/b of the primitive
    // integer multiple has b | lc, so the interval width 1/lc leaves at most
    // two candidates k/lc.
    mpz_class lc = 1;
    for (const auto& c : sf.coeffs())
        mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), c.raw().get_den_mpz_t());
    mpz_class lead_int = (sf.leading() * Rational(lc)).num();
    lead_int = abs(lead_int);
    Rational width_goal(mpz_class(1), lead_int);

    std::vector<RealRootInterval> todo{{-bound, bound}};
    std::vector<Rational> found;
    while (!todo.empty()) {
        auto iv = todo.back();
        todo.pop_back();
        int count = sturm_count(chain, iv.lo, iv.hi);
        if (count == 0)
            continue;
        if (count == 1 && iv.hi - iv.lo < width_goal) {
            bool rational = false;
            for (mpz_class k = ceil_div(iv.lo * Rational(lead_int)); Rational(k, lead_int) <= iv.hi; ++k) {
                Rational x(k, lead_int);
                if (x > iv.lo && sf.eval(x).is_zero()) {
                    found.push_back(x);
                    rational = true;
                }
            }
            if (!rational)
                out.irrational.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        todo.push_back({iv.lo, mid});
        todo.push_back({mid, iv.hi});
    }

    for (const auto& x : found) {
        Poly<Rational> q = p;
        int m = strip_root(q, x);
        out.rational_roots.insert(out.rational_roots.end(), static_cast<size_t>(m), x);
    }
    // p = s_1 s_2 ... with s_k the squarefree part of p / (s_1 ... s_{k-1});
    // summing real-root counts over the levels counts multiplicity.
    int real_total = 0;
    for (Poly<Rational> r = p; r.degree() > 0;) {
        Poly<Rational> level = squarefree_part(r);
        real_total += sturm_count(sturm_chain(level), -bound, bound);
        r = divmod(r, level).first;
    }
    out.complex_roots = p.degree() - real_total;
    std::sort(out.rational_roots.begin(), out.rational_roots.end());
    return out;
}

} // namespace fuchs3
