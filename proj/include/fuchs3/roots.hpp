#pragma once

#include <vector>

#include "fuchs3/poly.hpp"
#include "fuchs3/rational.hpp"

namespace fuchs3 {

struct RealRootInterval {
    Rational lo, hi;  // exactly one root of the squarefree part in (lo, hi]
};

struct RootIsolation {
    std::vector<Rational> rational_roots;        // with multiplicity, ascending
    std::vector<RealRootInterval> irrational;    // isolating intervals
    int complex_roots = 0;                       // count of non-real roots (with multiplicity)
};

Poly<Rational> squarefree_part(const Poly<Rational>& p);

// Number of distinct real roots in (a, b].
int sturm_count(const std::vector<Poly<Rational>>& chain, const Rational& a, const Rational& b);
std::vector<Poly<Rational>> sturm_chain(const Poly<Rational>& p);

// Exact rational roots plus isolating intervals for the remaining real roots.
RootIsolation isolate_roots(const Poly<Rational>& p);

} // namespace fuchs3
