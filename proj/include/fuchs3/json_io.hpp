#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fuchs3/discriminant.hpp"
#include "fuchs3/intersect.hpp"

namespace fuchs3 {

using json = nlohmann::ordered_json;

// Config documents:
//   {"n": 3, "t": [...], "rho": [[r,r,r], ...] | "exponent_sums": [{"alpha","beta","gamma"}, ...],
//    "q": [...], "p": [...], "field": {"minpoly": [c0, c1, ...]} | {"sqrt": d}}
// Scalars are strings ("p/q", "a+b*sqrt(d)", "c0+c1*theta"); integers are accepted too.
AConfig config_from_json(const json& doc);
json config_to_json(const AConfig& cfg);
json config_to_json(const ProblemConfig<Rational>& cfg);

// The rational config, when every entry is rational.
std::optional<ProblemConfig<Rational>> rational_config(const AConfig& cfg);

json field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const json& doc);

AlgebraicNumber scalar_from_json(const json& v, const FieldPtr& field);

template <class S>
json scalar_json(const S& v)
{
    return to_string(v);
}

template <class S>
json poly_json(const Poly<S>& p)
{
    json out = json::array();
    for (int k = 0; k <= p.degree(); ++k)
        out.push_back(to_string(p.coeff(k)));
    return out;
}

template <class S>
json equation_to_json(const FuchsianEquation<S>& eq)
{
    return {{"G", poly_json(eq.G)}, {"H", poly_json(eq.H)}, {"I", poly_json(eq.I)}, {"psi", poly_json(eq.psi)}};
}

FuchsianEquation<AlgebraicNumber> equation_from_json(const json& doc, const FieldPtr& field);

json validation_to_json(const ValidationReport& rep);

template <class S>
json frobenius_to_json(const FrobeniusReport<S>& rep)
{
    json points = json::array();
    for (const auto& p : rep.points) {
        json j{{"point", p.label}, {"kind", p.kind}, {"g0", scalar_json(p.g0)}, {"h0", scalar_json(p.h0)},
               {"i0", scalar_json(p.i0)}, {"exponents_ok", p.exponents_ok}};
        if (p.defect)
            j["defect"] = scalar_json(*p.defect);
        if (p.kind == "apparent") {
            j["log_obstructions"] = {scalar_json(p.obstructions[0]), scalar_json(p.obstructions[1]),
                                     scalar_json(p.obstructions[2])};
            json series = json::array();
            for (const auto& [e, step] : p.series)
                series.push_back({{"exponent", e}, {"obstruction_step", step ? json(*step) : json(nullptr)}});
            j["series"] = series;
        }
        if (p.h1_matches)
            j["h1_matches_p"] = *p.h1_matches;
        j["notes"] = p.notes;
        j["passed"] = p.passed;
        points.push_back(j);
    }
    return {{"order", rep.order}, {"points", points}, {"structural", rep.structural}, {"passed", rep.passed}};
}

template <class S>
json family_to_json(const AffineFamily<S>& fam, const Layout& L)
{
    json part = json::object(), dir = json::object();
    for (Index k = 0; k < fam.particular.size(); ++k) {
        part[L.column_label(static_cast<int>(k))] = scalar_json(fam.particular(k));
        dir[L.column_label(static_cast<int>(k))] = scalar_json(fam.direction(k));
    }
    return {{"free_column", fam.free_label}, {"G", poly_json(fam.G)}, {"particular", part}, {"direction", dir}};
}

json degree_probe_to_json(const DegreeProbe& p);
json intersection_to_json(const IntersectionReport& rep);
json blowup_to_json(const BlowupResult& res, const Layout& L);

} // namespace fuchs3
