#include "fuchs3/json_io.hpp"

namespace fuchs3 {

namespace {

std::string scalar_text(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw ParseError("scalars must be strings or integers, got " + v.dump());
}

std::vector<AlgebraicNumber> scalar_list(const json& doc, const char* key, const FieldPtr& field)
{
    if (!doc.contains(key) || !doc[key].is_array())
        throw ParseError(std::string("missing array '") + key + "'");
    std::vector<AlgebraicNumber> out;
    for (const auto& v : doc[key])
        out.push_back(scalar_from_json(v, field));
    return out;
}

json scalar_array(const std::vector<AlgebraicNumber>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(x.str());
    return out;
}

} // namespace

AlgebraicNumber scalar_from_json(const json& v, const FieldPtr& field)
{
    AlgebraicNumber a = AlgebraicNumber::parse(scalar_text(v), field);
    if (field && !a.field())
        return AlgebraicNumber(field, a.rep());
    return a;
}

FieldPtr field_from_json(const json& doc)
{
    if (doc.is_null())
        return nullptr;
    if (doc.contains("sqrt"))
        return NumberField::quadratic(Rational::parse(scalar_text(doc["sqrt"])));
    if (doc.contains("minpoly")) {
        std::vector<Rational> c;
        for (const auto& v : doc["minpoly"])
            c.push_back(Rational::parse(scalar_text(v)));
        return NumberField::make(Poly<Rational>(c));
    }
    throw ParseError("field needs 'sqrt' or 'minpoly'");
}

json field_to_json(const FieldPtr& field)
{
    if (!field)
        return nullptr;
    if (auto d = field->sqrt_radicand())
        return {{"sqrt", d->str()}};
    return {{"minpoly", poly_json(field->minpoly())}};
}

AConfig config_from_json(const json& doc)
{
    if (!doc.is_object())
        throw ParseError("config must be a JSON object");
    FieldPtr field = doc.contains("field") ? field_from_json(doc["field"]) : nullptr;
    AConfig cfg;
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("missing integer 'n'");
    cfg.n = doc["n"].get<int>();
    if (cfg.n < 2)
        throw InvalidConfig("n must be at least 2");
    cfg.t = scalar_list(doc, "t", field);
    cfg.q = scalar_list(doc, "q", field);
    cfg.p = scalar_list(doc, "p", field);
    if (doc.contains("rho")) {
        std::vector<std::array<AlgebraicNumber, 3>> rho;
        for (const auto& row : doc["rho"]) {
            if (!row.is_array() || row.size() != 3)
                throw ParseError("each rho entry needs three exponents");
            rho.push_back({scalar_from_json(row[0], field), scalar_from_json(row[1], field),
                           scalar_from_json(row[2], field)});
        }
        cfg.set_rho(rho);
    }
    else if (doc.contains("exponent_sums")) {
        for (const auto& e : doc["exponent_sums"])
            cfg.exponents.push_back({scalar_from_json(e.at("alpha"), field), scalar_from_json(e.at("beta"), field),
                                     scalar_from_json(e.at("gamma"), field)});
    }
    else {
        throw ParseError("config needs 'rho' or 'exponent_sums'");
    }
    if (static_cast<int>(cfg.t.size()) != cfg.n || static_cast<int>(cfg.exponents.size()) != cfg.n + 1 ||
        static_cast<int>(cfg.q.size()) != cfg.N() || static_cast<int>(cfg.p.size()) != cfg.N())
        throw DimensionMismatch("config sizes must be t: n, rho: n+1, q and p: 3n-5");
    return cfg;
}

json config_to_json(const AConfig& cfg)
{
    FieldPtr field;
    auto note = [&](const AlgebraicNumber& a) {
        if (a.field())
            field = a.field();
    };
    for (const auto& v : cfg.p)
        note(v);
    for (const auto& v : cfg.q)
        note(v);
    for (const auto& v : cfg.t)
        note(v);
    json doc{{"n", cfg.n}, {"t", scalar_array(cfg.t)}};
    if (!cfg.rho.empty()) {
        json rho = json::array();
        for (const auto& r : cfg.rho)
            rho.push_back({r[0].str(), r[1].str(), r[2].str()});
        doc["rho"] = rho;
    }
    else {
        json sums = json::array();
        for (const auto& e : cfg.exponents)
            sums.push_back({{"alpha", e.alpha.str()}, {"beta", e.beta.str()}, {"gamma", e.gamma.str()}});
        doc["exponent_sums"] = sums;
    }
    doc["q"] = scalar_array(cfg.q);
    doc["p"] = scalar_array(cfg.p);
    if (field)
        doc["field"] = field_to_json(field);
    return doc;
}

json config_to_json(const ProblemConfig<Rational>& cfg) { return config_to_json(lift_config(cfg)); }

std::optional<ProblemConfig<Rational>> rational_config(const AConfig& cfg)
{
    bool ok = true;
    auto out = convert_config<Rational>(cfg, [&](const AlgebraicNumber& a) {
        auto r = a.as_rational();
        ok = ok && r.has_value();
        return r.value_or(Rational(0));
    });
    if (!ok)
        return std::nullopt;
    return out;
}

FuchsianEquation<AlgebraicNumber> equation_from_json(const json& doc, const FieldPtr& field)
{
    auto poly = [&](const char* key) {
        if (!doc.contains(key))
            throw ParseError(std::string("equation lacks '") + key + "'");
        std::vector<AlgebraicNumber> c;
        for (const auto& v : doc[key])
            c.push_back(scalar_from_json(v, field));
        return Poly<AlgebraicNumber>(c);
    };
    FuchsianEquation<AlgebraicNumber> eq;
    eq.G = poly("G");
    eq.H = poly("H");
    eq.I = poly("I");
    eq.psi = poly("psi");
    return eq;
}

json validation_to_json(const ValidationReport& rep)
{
    json v = json::array();
    for (const auto& x : rep.violations)
        v.push_back({{"kind", x.kind}, {"message", x.message}});
    return {{"ok", rep.ok()}, {"genericity_checked", rep.genericity_checked}, {"violations", v}};
}

json degree_probe_to_json(const DegreeProbe& p)
{
    return {{"degree", p.degree}, {"leading", p.leading.str()}, {"saturated", p.saturated}, {"poly", poly_json(p.poly)}};
}

json intersection_to_json(const IntersectionReport& rep)
{
    json lines = json::array();
    for (const auto& [k, poly] : rep.line_polys)
        lines.push_back({{"k", k}, {"degree", poly.degree()}, {"poly", poly_json(poly)}});
    json points = json::array();
    for (const auto& pt : rep.points) {
        const auto& c = pt.certificate;
        json j{{"field", field_to_json(pt.field)},
               {"field_degree", pt.field ? pt.field->degree() : 1},
               {"conjugates", pt.conjugates},
               {"p1", pt.p1.str()},
               {"p2", pt.p2.str()},
               {"sigma1", c.sigma1.str()},
               {"sigma_k", c.sigma_k.str()},
               {"sigma_f", c.sigma_f.str()},
               {"rank_m1", c.rank_m1},
               {"rank_mb", c.rank_mb},
               {"expected_rank", c.expected_rank},
               {"certified", c.certified}};
        if (pt.field)
            if (auto d = pt.field->sqrt_radicand())
                j["d"] = d->str();
        j["config"] = config_to_json(pt.config);
        points.push_back(j);
    }
    return {{"k", rep.k},
            {"filter", rep.filter},
            {"sigma1_affine", {{"const", rep.a.str()}, {"p1", rep.b.str()}, {"p2", rep.c.str()}}},
            {"p1_star", {{"const", (-rep.a / rep.b).str()}, {"p2", (-rep.c / rep.b).str()}}},
            {"line_polys", lines},
            {"common_factor", poly_json(rep.common)},
            {"points", points},
            {"certified_points", rep.certified_count()}};
}

json blowup_to_json(const BlowupResult& res, const Layout& L)
{
    json members = json::array();
    for (const auto& m : res.members) {
        json y = nullptr;
        if (m.chart.y_defined)
            y = scalar_array(m.chart.y);
        members.push_back({{"s", m.s.str()},
                           {"equation", equation_to_json(m.equation)},
                           {"residuals_zero", m.residuals_zero},
                           {"verification", frobenius_to_json(m.report)},
                           {"chart_x", scalar_array(m.chart.x)},
                           {"chart_y", y}});
    }
    return {{"k", res.k},
            {"chart_coordinate", res.chart_label},
            {"rank_m1", res.rank_m1},
            {"rank_mb", res.rank_mb},
            {"sigma_f", res.sigma_f.str()},
            {"family", family_to_json(res.family, L)},
            {"members", members},
            {"passed", res.passed}};
}

} // namespace fuchs3
