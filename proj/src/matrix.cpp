#include "fuchs3/matrix.hpp"

namespace fuchs3 {

Rational det_bareiss(const Matrix<Rational>& M)
{
    const Index n = M.rows();
    if (n != M.cols())
        throw NotSquare("det of " + std::to_string(n) + "x" + std::to_string(M.cols()));
    if (n == 0)
        return Rational(1);

    std::vector<mpz_class> a(static_cast<size_t>(n * n));
    mpz_class scale = 1;
    for (Index i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (Index j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M(i, j).raw().get_den_mpz_t());
        scale *= l;
        for (Index j = 0; j < n; ++j)
            a[i * n + j] = M(i, j).num() * (l / M(i, j).den());
    }
    auto at = [&](Index i, Index j) -> mpz_class& { return a[static_cast<size_t>(i * n + j)]; };

    int sign = 1;
    mpz_class prev = 1, t;
    for (Index k = 0; k < n - 1; ++k) {
        Index p = k;
        while (p < n && at(p, k) == 0)
            ++p;
        if (p == n)
            return Rational(0);
        if (p != k) {
            for (Index j = 0; j < n; ++j)
                std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                t = at(i, j) * at(k, k);
                mpz_submul(t.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return Rational(sign * at(n - 1, n - 1), scale);
}

} // namespace fuchs3
