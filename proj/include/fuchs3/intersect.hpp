#pragma once

#include <string>
#include <vector>

#include "fuchs3/discriminant.hpp"

namespace fuchs3 {

using AConfig = ProblemConfig<AlgebraicNumber>;

ProblemConfig<AlgebraicNumber> lift_config(const ProblemConfig<Rational>& cfg, const FieldPtr& field = nullptr);

// True iff v == 0. A nonzero zero divisor of a reducible modulus throws
// ZeroDivisor so the caller can split.
bool certified_zero(const AlgebraicNumber& v);

struct PointCertificate {
    AlgebraicNumber sigma1, sigma_k, sigma_f;
    int rank_m1 = -1, rank_mb = -1, expected_rank = -1;
    bool certified = false;
};

PointCertificate certify_point(const AConfig& cfg, int k);

struct IntersectionPoint {
    FieldPtr field;      // null for a rational point
    int conjugates = 1;  // complex points represented by this field element
    AlgebraicNumber p1, p2;
    AConfig config;
    PointCertificate certificate;
};

struct IntersectionReport {
    int k = 0;
    std::vector<int> filter;
    // sigma_1 = a + b p1 + c p2 on the (p1, p2) plane; p1* = -(a + c p2) / b
    Rational a, b, c;
    std::vector<std::pair<int, Poly<Rational>>> line_polys;  // sigma_k(p1*(p2), p2)
    Poly<Rational> common;                                   // monic gcd of line_polys
    std::vector<IntersectionPoint> points;

    int certified_count() const;
};

// Points of V_1 cap V_k in the (p1, p2) plane of a base config (other
// coordinates fixed). With a filter, only common zeros of sigma_k for every k
// in {k} + filter are kept, which cuts down towards V_1 cap V-hat.
IntersectionReport intersect_v1_vhat(const ProblemConfig<Rational>& base, int k,
                                     const std::vector<int>& filter = {});

struct ChartCoordinates {
    std::vector<AlgebraicNumber> x;  // (sigma_1, sigma_k / sigma_1, q_2..q_N, p_2..p_N)
    std::vector<AlgebraicNumber> y;  // (sigma_1 / sigma_k, sigma_k, q_2..q_N, p_2..p_N)
    bool y_defined = true;
};

struct BlowupMember {
    AlgebraicNumber s;
    FuchsianEquation<AlgebraicNumber> equation;
    FrobeniusReport<AlgebraicNumber> report;
    bool residuals_zero = false;
    ChartCoordinates chart;
};

struct BlowupResult {
    int k = 0;
    AffineFamily<AlgebraicNumber> family;
    Index chart_column = 0;
    std::string chart_label;
    int rank_m1 = -1, rank_mb = -1;
    AlgebraicNumber sigma_f;
    std::vector<BlowupMember> members;
    bool passed = false;
};

// Solution family of system (T) at a point of V_1 cap V-hat, parametrised by
// the exceptional-divisor coordinate x_2 = value of the unknown in column k-2.
BlowupResult blowup_family(const AConfig& point, int k, const std::vector<AlgebraicNumber>& params = {0, 1, -1},
                           int order = default_series_order);

} // namespace fuchs3
