#include "fuchs3/intersect.hpp"

#include "fuchs3/roots.hpp"

namespace fuchs3 {

ProblemConfig<AlgebraicNumber> lift_config(const ProblemConfig<Rational>& cfg, const FieldPtr& field)
{
    return convert_config<AlgebraicNumber>(cfg, [&](const Rational& r) {
        return AlgebraicNumber(field, Poly<Rational>::constant(r));
    });
}

bool certified_zero(const AlgebraicNumber& v)
{
    if (v.is_zero())
        return true;
    if (v.field()) {
        Poly<Rational> g = gcd(v.rep(), v.field()->minpoly());
        if (g.degree() > 0)
            throw ZeroDivisor(g);
    }
    return false;
}

PointCertificate certify_point(const AConfig& cfg, int k)
{
    auto sys = build_t_system(cfg);
    const int size = sys.layout.size();
    PointCertificate c;
    c.expected_rank = size - 1;
    c.sigma1 = det(sys.t_matrix);
    c.sigma_k = sigma_minor(sys, k);
    Matrix<AlgebraicNumber> Mb(size, size + 1);
    Mb.col(0) = sys.t_rhs;
    Mb.rightCols(size) = sys.t_matrix;
    c.rank_m1 = rank(sys.t_matrix);
    c.rank_mb = rank(Mb);
    c.sigma_f = sigma_f_by_elimination(cfg);
    const bool on_v1 = certified_zero(c.sigma1);
    const bool on_vk = certified_zero(c.sigma_k);
    const bool open = !certified_zero(c.sigma_f);
    c.certified = on_v1 && on_vk && open && c.rank_m1 == c.expected_rank && c.rank_mb == c.expected_rank;
    return c;
}

int IntersectionReport::certified_count() const
{
    int count = 0;
    for (const auto& p : points)
        if (p.certificate.certified)
            count += p.conjugates;
    return count;
}

namespace {

struct Plane {
    const ProblemConfig<Rational>& base;
    Rational a, b, c;

    ProblemConfig<Rational> at(const Rational& p1, const Rational& p2) const
    {
        auto cfg = base;
        cfg.p[0] = p1;
        cfg.p[1] = p2;
        return cfg;
    }
    Rational p1_star(const Rational& p2) const { return -(a + c * p2) / b; }
};

// Represents the roots of the squarefree factor h (no rational roots) by one
// field element per irreducible factor found; splits on zero divisors.
void collect_points(const Plane& plane, int k, const Poly<Rational>& h, IntersectionReport& out)
{
    if (h.degree() < 1)
        return;
    FieldPtr field;
    AlgebraicNumber p2;
    if (h.degree() == 1) {
        p2 = AlgebraicNumber(-h.coeff(0) / h.coeff(1));
    }
    else if (h.degree() == 2) {
        // x^2 + b x + c: x = -b/2 + sqrt(b^2/4 - c)
        Rational half = h.coeff(1) / Rational(2);
        field = NumberField::quadratic(half * half - h.coeff(0));
        p2 = AlgebraicNumber(field, Poly<Rational>({-half, Rational(1)}));
    }
    else {
        field = NumberField::make(h);
        p2 = AlgebraicNumber::generator(field);
    }
    try {
        IntersectionPoint pt;
        pt.field = field;
        pt.conjugates = h.degree();
        pt.p2 = p2;
        const AlgebraicNumber b(field, Poly<Rational>::constant(plane.b));
        pt.p1 = -(AlgebraicNumber(plane.a) + AlgebraicNumber(plane.c) * p2) / b;
        pt.config = lift_config(plane.base, field);
        pt.config.p[0] = pt.p1;
        pt.config.p[1] = pt.p2;
        pt.certificate = certify_point(pt.config, k);
        out.points.push_back(std::move(pt));
    }
    catch (const ZeroDivisor& z) {
        Poly<Rational> f = z.factor.monic();
        collect_points(plane, k, f, out);
        collect_points(plane, k, divmod(h, f).first, out);
    }
}

} // namespace

IntersectionReport intersect_v1_vhat(const ProblemConfig<Rational>& base, int k, const std::vector<int>& filter)
{
    if (base.n < 2 || base.N() < 2)
        throw Unsupported("intersection needs at least two apparent points");
    require_valid(base);
    const int size = Layout(base.n).size();
    for (int kk : filter)
        if (kk < 2 || kk > size + 1)
            throw DimensionMismatch("filter minor index out of range");
    IntersectionReport out;
    out.k = k;
    out.filter = filter;

    auto s1 = [&](const Rational& p1, const Rational& p2) {
        auto cfg = base;
        cfg.p[0] = p1;
        cfg.p[1] = p2;
        return sigma1_by_elimination(cfg);
    };
    out.a = s1(0, 0);
    out.b = s1(1, 0) - out.a;
    out.c = s1(0, 1) - out.a;
    if (s1(2, 3) != out.a + Rational(2) * out.b + Rational(3) * out.c ||
        s1(-1, 5) != out.a - out.b + Rational(5) * out.c)
        throw InterpolationInconsistent("sigma_1 is not affine in (p1, p2)");
    if (out.b.is_zero())
        throw DegenerateLinear("sigma_1 does not depend on p1");
    Plane plane{base, out.a, out.b, out.c};

    std::vector<int> ks{k};
    ks.insert(ks.end(), filter.begin(), filter.end());
    Poly<Rational> g;
    for (int kk : ks) {
        auto probe = degree_probe(
            [&](const Rational& p2) { return sigma_minor(build_t_system(plane.at(plane.p1_star(p2), p2)), kk); }, 6);
        out.line_polys.push_back({kk, probe.poly});
        g = g.is_zero() ? probe.poly : gcd(g, probe.poly);
    }
    if (g.is_zero())
        throw DegenerateLinear("sigma_k vanishes identically along sigma_1 = 0");
    out.common = g.monic();

    Poly<Rational> h = squarefree_part(out.common);
    for (const Rational& r : isolate_roots(h).rational_roots) {
        collect_points(plane, k, Poly<Rational>::linear_root(r), out);
        strip_root(h, r);
    }
    collect_points(plane, k, h.monic(), out);
    return out;
}

BlowupResult blowup_family(const AConfig& point, int k, const std::vector<AlgebraicNumber>& params, int order)
{
    auto sys = build_t_system(point);
    const Layout& L = sys.layout;
    const int size = L.size();
    if (k < 2 || k > size + 1)
        throw DimensionMismatch("minor index out of range");
    BlowupResult out;
    out.k = k;
    out.sigma_f = sigma_f_by_elimination(point);
    if (certified_zero(out.sigma_f))
        throw OutsideOpenSet("sigma_f = 0: point lies outside (V1 cap V-hat)^0");
    Matrix<AlgebraicNumber> Mb(size, size + 1);
    Mb.col(0) = sys.t_rhs;
    Mb.rightCols(size) = sys.t_matrix;
    out.rank_m1 = rank(sys.t_matrix);
    out.rank_mb = rank(Mb);
    if (out.rank_mb > out.rank_m1)
        throw RankMismatch("rank M_b = " + std::to_string(out.rank_mb) + " > rank M_1 = " +
                           std::to_string(out.rank_m1) + ": system (T) is inconsistent here");
    if (out.rank_m1 != size - 1)
        throw RankMismatch("rank M_1 = " + std::to_string(out.rank_m1) + ", expected " + std::to_string(size - 1));

    auto result = solve_connection(point);
    out.family = std::get<AffineFamily<AlgebraicNumber>>(result);
    out.chart_column = k - 2;
    out.chart_label = L.column_label(k - 2);
    const AlgebraicNumber slope = out.family.direction(out.chart_column);
    if (certified_zero(slope))
        throw DegenerateLinear(out.chart_label + " is constant along the family; x_2 is not a chart coordinate");

    std::vector<AlgebraicNumber> z;
    for (int j = 1; j < point.N(); ++j)
        z.push_back(point.q[j]);
    for (int j = 1; j < point.N(); ++j)
        z.push_back(point.p[j]);

    out.passed = true;
    for (const auto& s : params) {
        BlowupMember m;
        m.s = s;
        const AlgebraicNumber shift = (s - out.family.particular(out.chart_column)) / slope;
        Vector<AlgebraicNumber> x = out.family.particular + out.family.direction * shift;
        m.equation = equation_from_unknowns(point, out.family.G, x);
        m.residuals_zero = true;
        for (const auto& r : laurent_residuals(m.equation, point))
            m.residuals_zero = m.residuals_zero && r.is_zero();
        m.report = verify_apparent_all(m.equation, point, order);
        m.chart.x = {AlgebraicNumber(0), s};
        m.chart.x.insert(m.chart.x.end(), z.begin(), z.end());
        m.chart.y_defined = !s.is_zero();
        m.chart.y = {m.chart.y_defined ? s.inverse() : AlgebraicNumber(0), AlgebraicNumber(0)};
        m.chart.y.insert(m.chart.y.end(), z.begin(), z.end());
        out.passed = out.passed && m.residuals_zero && m.report.passed;
        out.members.push_back(std::move(m));
    }
    return out;
}

} // namespace fuchs3
