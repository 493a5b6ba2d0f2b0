#include "fuchs3/rational.hpp"

#include <cctype>
#include <ostream>

namespace fuchs3 {

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw DivisionByZero("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

static bool valid_integer(const std::string& s)
{
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rational Rational::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    auto slash = s.find('/');
    std::string a = s.substr(0, slash);
    std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(a) || !valid_integer(b))
        throw ParseError("not a rational: '" + text + "'");
    if (a[0] == '+')
        a.erase(0, 1);
    if (b[0] == '+')
        b.erase(0, 1);
    mpz_class den(b);
    if (den == 0)
        throw ParseError("zero denominator in '" + text + "'");
    return Rational(mpz_class(a), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0)
        return pow(Rational(1) / base, -exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Rational binomial(unsigned long n, unsigned long k)
{
    if (k > n)
        return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

mpz_class floor(const Rational& r)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q;
}

} // namespace fuchs3
