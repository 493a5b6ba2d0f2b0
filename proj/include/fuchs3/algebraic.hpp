#pragma once

#include <memory>
#include <optional>
#include <string>

#include "fuchs3/poly.hpp"
#include "fuchs3/rational.hpp"

namespace fuchs3 {

// Q[x]/(m) for a monic m of degree >= 2. Arithmetic is exact; if m turns out
// reducible, inverting a zero divisor raises ZeroDivisor carrying gcd(a, m).
class NumberField {
public:
    static std::shared_ptr<const NumberField> make(const Poly<Rational>& minpoly);
    static std::shared_ptr<const NumberField> quadratic(const Rational& d);

    const Poly<Rational>& minpoly() const { return m_; }
    int degree() const { return m_.degree(); }
    // d when the minimal polynomial is x^2 - d.
    std::optional<Rational> sqrt_radicand() const;
    bool same(const NumberField& o) const { return this == &o || m_ == o.m_; }

private:
    explicit NumberField(Poly<Rational> m) : m_(std::move(m)) {}
    Poly<Rational> m_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

struct ZeroDivisor : Error {
    explicit ZeroDivisor(Poly<Rational> f)
        : Error("ZeroDivisor: field polynomial splits"), factor(std::move(f))
    {
    }
    Poly<Rational> factor;
};

// Element of a NumberField, or of Q when field() is null.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    AlgebraicNumber(int v) : c_(Poly<Rational>::constant(Rational(v))) {}
    AlgebraicNumber(long v) : c_(Poly<Rational>::constant(Rational(v))) {}
    AlgebraicNumber(const Rational& v) : c_(Poly<Rational>::constant(v)) {}
    AlgebraicNumber(FieldPtr field, const Poly<Rational>& rep);

    static AlgebraicNumber generator(FieldPtr field);
    static AlgebraicNumber parse(const std::string& s, FieldPtr field = nullptr);

    const FieldPtr& field() const { return field_; }
    const Poly<Rational>& rep() const { return c_; }
    bool is_zero() const { return c_.is_zero(); }
    std::optional<Rational> as_rational() const;
    std::string str() const;

    AlgebraicNumber inverse() const;

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a);
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

    AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
    AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
    AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
    AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this = *this / o; }

private:
    FieldPtr field_;
    Poly<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a);

inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }
inline std::string to_string(const AlgebraicNumber& a) { return a.str(); }
inline std::optional<Rational> rational_value(const AlgebraicNumber& a) { return a.as_rational(); }

// Common field of two elements; throws FieldMismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

} // namespace fuchs3

namespace Eigen {

template <>
struct NumTraits<fuchs3::AlgebraicNumber> : GenericNumTraits<fuchs3::AlgebraicNumber> {
    typedef fuchs3::AlgebraicNumber Real;
    typedef fuchs3::AlgebraicNumber NonInteger;
    typedef fuchs3::AlgebraicNumber Literal;
    typedef fuchs3::AlgebraicNumber Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 16,
        MulCost = 64
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
