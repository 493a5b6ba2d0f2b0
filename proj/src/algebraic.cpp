#include "fuchs3/algebraic.hpp"

#include <cctype>
#include <ostream>

namespace fuchs3 {

std::shared_ptr<const NumberField> NumberField::make(const Poly<Rational>& minpoly)
{
    if (minpoly.degree() < 2)
        throw InvalidConfig("field polynomial must have degree >= 2");
    return std::shared_ptr<const NumberField>(new NumberField(minpoly.monic()));
}

std::shared_ptr<const NumberField> NumberField::quadratic(const Rational& d)
{
    return make(Poly<Rational>({-d, Rational(0), Rational(1)}));
}

std::optional<Rational> NumberField::sqrt_radicand() const
{
    if (m_.degree() == 2 && m_.coeff(1).is_zero())
        return -m_.coeff(0);
    return std::nullopt;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b)
{
    if (!a)
        return b;
    if (!b || a == b)
        return a;
    if (!a->same(*b))
        throw FieldMismatch("elements of distinct number fields");
    return a;
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, const Poly<Rational>& rep) : field_(std::move(field))
{
    c_ = field_ ? divmod(rep, field_->minpoly()).second : rep;
    if (!field_ && c_.degree() > 0)
        throw FieldMismatch("non-constant representative without a field");
}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field)
{
    return AlgebraicNumber(std::move(field), Poly<Rational>({Rational(0), Rational(1)}));
}

std::optional<Rational> AlgebraicNumber::as_rational() const
{
    if (c_.degree() > 0)
        return std::nullopt;
    return c_.coeff(0);
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    AlgebraicNumber r;
    r.field_ = common_field(a.field_, b.field_);
    r.c_ = a.c_ + b.c_;
    return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a)
{
    AlgebraicNumber r = a;
    r.c_ = -a.c_;
    return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    FieldPtr f = common_field(a.field_, b.field_);
    if (a.c_.degree() <= 0 || b.c_.degree() <= 0) {
        AlgebraicNumber r;
        r.field_ = f;
        r.c_ = a.c_.degree() <= 0 ? a.c_.coeff(0) * b.c_ : b.c_.coeff(0) * a.c_;
        return r;
    }
    return AlgebraicNumber(f, a.c_ * b.c_);
}

AlgebraicNumber AlgebraicNumber::inverse() const
{
    if (is_zero())
        throw DivisionByZero("algebraic division by zero");
    if (c_.degree() == 0) {
        AlgebraicNumber r = *this;
        r.c_ = Poly<Rational>::constant(Rational(1) / c_.coeff(0));
        return r;
    }
    auto [g, u] = gcd_cofactor(c_, field_->minpoly());
    if (g.degree() > 0)
        throw ZeroDivisor(g);
    return AlgebraicNumber(field_, u);
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    FieldPtr f = common_field(a.field_, b.field_);
    AlgebraicNumber r = a * b.inverse();
    r.field_ = f;
    return r;
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    common_field(a.field_, b.field_);
    return a.c_ == b.c_;
}

static void append_term(std::string& out, const Rational& c, const std::string& gen)
{
    if (c.is_zero())
        return;
    if (!out.empty())
        out += c.sign() < 0 ? "-" : "+";
    else if (c.sign() < 0)
        out += "-";
    out += abs(c).str();
    if (!gen.empty())
        out += "*" + gen;
}

std::string AlgebraicNumber::str() const
{
    if (c_.degree() <= 0 && (!field_ || !field_->sqrt_radicand()))
        return c_.coeff(0).str();
    if (field_ && field_->sqrt_radicand()) {
        std::string out = c_.coeff(0).str();
        Rational b = c_.coeff(1);
        out += b.sign() < 0 ? "-" : "+";
        out += abs(b).str() + "*sqrt(" + field_->sqrt_radicand()->str() + ")";
        return out;
    }
    std::string out;
    for (int k = 0; k <= c_.degree(); ++k)
        append_term(out, c_.coeff(k), k == 0 ? "" : (k == 1 ? "theta" : "theta^" + std::to_string(k)));
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a) { return os << a.str(); }

// Terms are separated by top-level '+'/'-' that follow a digit or ')' or a
// generator name; a sign right after '/', '(', '^' or '*' belongs to a number.
AlgebraicNumber AlgebraicNumber::parse(const std::string& text, FieldPtr field)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ParseError("empty scalar");

    std::vector<std::string> terms;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if ((c == '+' || c == '-') && depth == 0 && i > start) {
            char prev = s[i - 1];
            if (prev != '/' && prev != '*' && prev != '^' && prev != '(') {
                terms.push_back(s.substr(start, i - start));
                start = i;
            }
        }
    }
    terms.push_back(s.substr(start));

    Poly<Rational> rep;
    for (std::string term : terms) {
        Rational sign(1);
        if (term[0] == '+' || term[0] == '-') {
            if (term[0] == '-')
                sign = Rational(-1);
            term.erase(0, 1);
        }
        std::string coeff = term, gen;
        auto pos = term.find_first_of("st");
        if (pos != std::string::npos) {
            gen = term.substr(pos);
            coeff = term.substr(0, pos);
            if (!coeff.empty() && coeff.back() == '*')
                coeff.pop_back();
            if (coeff.empty())
                coeff = "1";
        }
        Rational c = sign * Rational::parse(coeff);
        int power = 0;
        if (gen.rfind("sqrt(", 0) == 0 && gen.back() == ')') {
            Rational d = Rational::parse(gen.substr(5, gen.size() - 6));
            if (!field)
                field = NumberField::quadratic(d);
            else if (field->sqrt_radicand() != d)
                throw FieldMismatch("sqrt(" + d.str() + ") outside the current field");
            power = 1;
        }
        else if (gen == "theta") {
            power = 1;
        }
        else if (gen.rfind("theta^", 0) == 0) {
            power = std::stoi(gen.substr(6));
        }
        else if (!gen.empty()) {
            throw ParseError("unknown generator in '" + text + "'");
        }
        if (power > 0 && !field)
            throw ParseError("'" + text + "' needs a field definition");
        rep = rep + Poly<Rational>::monomial(c, power);
    }
    return AlgebraicNumber(field, rep);
}

} // namespace fuchs3
