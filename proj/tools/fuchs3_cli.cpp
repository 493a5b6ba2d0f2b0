#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fuchs3/json_io.hpp"
#include "fuchs3/sampling.hpp"

using namespace fuchs3;

namespace {

constexpr int exit_ok = 0, exit_failed = 1, exit_degenerate = 2;

struct Common {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    int n = 3;
    std::string output;
    int order = default_series_order;
};

json read_json(const std::string& path)
{
    try {
        if (path == "-")
            return json::parse(std::cin);
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open " + path);
        return json::parse(in);
    }
    catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json manifest(const std::string& command, const Common& c, json extra = json::object())
{
    json m{{"command", command},
           {"config", c.config_path.empty() ? json(nullptr) : json(c.config_path)},
           {"seed", c.seed ? json(*c.seed) : json(nullptr)},
           {"n", c.config_path.empty() ? json(c.n) : json(nullptr)},
           {"output", c.output.empty() ? json("-") : json(c.output)},
           {"order", c.order}};
    for (auto& [k, v] : extra.items())
        m[k] = v;
    return m;
}

void emit(const json& doc, const Common& c)
{
    if (c.output.empty() || c.output == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(c.output);
    if (!out)
        throw ParseError("cannot write " + c.output);
    out << doc.dump(2) << "\n";
}

// A config from --config, or a random valid one from --seed.
AConfig load_config(const Common& c)
{
    if (!c.config_path.empty()) {
        json doc = read_json(c.config_path);
        return config_from_json(doc.contains("config") ? doc["config"] : doc);
    }
    if (!c.seed)
        throw InvalidConfig("give --config or --seed");
    return lift_config(sample_config(c.n, *c.seed));
}

ProblemConfig<Rational> load_rational(const Common& c)
{
    auto cfg = rational_config(load_config(c));
    if (!cfg)
        throw Unsupported("this command needs a rational config");
    return *cfg;
}

void add_common(CLI::App* sub, Common& c, bool with_seed = true)
{
    sub->add_option("-c,--config", c.config_path, "config JSON file ('-' for stdin)");
    if (with_seed) {
        sub->add_option("--seed", c.seed, "sample a random valid config instead of reading one");
        sub->add_option("-n", c.n, "number of finite parabolic points for --seed")->check(CLI::Range(2, 8));
    }
    sub->add_option("-o,--output", c.output, "output file (default stdout)");
}

int cmd_solve(const Common& c)
{
    AConfig cfg = load_config(c);
    json doc{{"manifest", manifest("solve", c)}, {"config", config_to_json(cfg)}};
    auto rep = validate_config(cfg);
    doc["validation"] = validation_to_json(rep);
    if (!rep.ok()) {
        emit(doc, c);
        return exit_failed;
    }
    int code = exit_ok;
    try {
        auto result = solve_connection(cfg);
        if (auto* eq = std::get_if<FuchsianEquation<AlgebraicNumber>>(&result)) {
            doc["status"] = "unique";
            doc["equation"] = equation_to_json(*eq);
        }
        else {
            doc["status"] = "family";
            doc["family"] = family_to_json(std::get<AffineFamily<AlgebraicNumber>>(result), Layout(cfg.n));
            code = exit_degenerate;
        }
    }
    catch (const Inconsistent& e) {
        doc["status"] = "inconsistent";
        doc["error"] = e.what();
        code = exit_failed;
    }
    emit(doc, c);
    return code;
}

int cmd_verify(const Common& c, const std::string& equation_path)
{
    AConfig cfg = load_config(c);
    json eqdoc = read_json(equation_path);
    if (eqdoc.contains("equation"))
        eqdoc = eqdoc["equation"];
    FieldPtr field;
    for (const auto& v : cfg.p)
        if (v.field())
            field = v.field();
    auto eq = equation_from_json(eqdoc, field);
    auto rep = verify_apparent_all(eq, cfg, c.order);
    emit({{"manifest", manifest("verify", c, {{"equation", equation_path}})}, {"report", frobenius_to_json(rep)}}, c);
    return rep.passed ? exit_ok : exit_failed;
}

struct DiscriminantFlags {
    bool blocks = false, factor = false, minors = false;
    std::string degree;
    int samples = 0;
};

int cmd_discriminant(const Common& c, const DiscriminantFlags& f)
{
    auto cfg = load_rational(c);
    require_valid(cfg);
    json checks = json::object();
    bool all = true;
    auto check = [&](const std::string& name, bool ok) {
        checks[name] = ok;
        all = all && ok;
    };
    const Rational sigma1 = sigma1_by_elimination(cfg);
    json doc{{"manifest", manifest("discriminant", c,
                                   {{"blocks", f.blocks}, {"factor", f.factor}, {"minors", f.minors},
                                    {"degree", f.degree.empty() ? json(nullptr) : json(f.degree)},
                                    {"samples", f.samples}})},
             {"config", config_to_json(cfg)},
             {"sigma1", sigma1.str()}};
    if (f.blocks) {
        auto [total, terms] = sigma1_by_blocks(cfg);
        json t = json::array();
        for (const auto& term : terms)
            t.push_back({{"J", term.J}, {"laplace_sign", term.laplace_sign}, {"det_R", term.det_R.str()},
                         {"det_S", term.det_S.str()}, {"contribution", term.contribution.str()}});
        doc["blocks"] = {{"sigma1", total.str()}, {"terms", t}};
        check("blocks_equal_elimination", total == sigma1);
    }
    if (f.factor) {
        if (cfg.n != 3)
            throw Unsupported("--factor needs n = 3");
        auto c1 = derive_constants(cfg);
        const Rational chi = chi1(cfg), phi = phi1(cfg, c1.p_eff);
        auto sf_blocks = sigma_f_by_blocks(cfg);
        const Rational sf = sigma_f_by_elimination(cfg), cf = chi_f(cfg), pf = phi_f(cfg, c1.p_eff[0]);
        doc["factor"] = {{"chi1", chi.str()}, {"phi1", phi.str()}, {"sigma_f", sf.str()},
                         {"sigma_f_blocks", sf_blocks.value.str()}, {"chi_f", cf.str()}, {"phi_f", pf.str()}};
        check("sigma1_eq_chi1_phi1", chi * phi == sigma1);
        check("sigma_f_blocks_eq_elimination", sf_blocks.value == sf);
        check("sigma_f_eq_chi_f_phi_f", cf * pf == sf);
    }
    if (f.minors) {
        auto sys = build_t_system(cfg);
        const auto& e0 = cfg.exponents[0];
        json m = json::object();
        for (int k = 2; k <= sys.layout.size() + 1; ++k) {
            const Rational s = sigma_minor(sys, k);
            m[std::to_string(k)] = {{"unknown", minor_unknown(sys.layout, k)},
                                    {"sigma", s.str()},
                                    {"ratio", sigma1.is_zero() ? json(nullptr) : json((s / sigma1).str())}};
        }
        doc["minors"] = m;
        if (cfg.n == 3 && !sigma1.is_zero()) {
            const Rational r14 = sigma_minor(sys, 14) / sigma1, r33 = sigma_minor(sys, 33) / sigma1;
            doc["ratio_constants"] = {{"k14", r14.str()}, {"k33", r33.str()}};
            check("sigma14_eq_(beta0-alpha0+1)_sigma1", r14 == e0.beta - e0.alpha + Rational(1));
            check("sigma33_eq_-gamma0_sigma1", r33 == -e0.gamma);
        }
    }
    if (!f.degree.empty()) {
        const int samples = f.samples > 0 ? f.samples : 23 * cfg.n - 45 + 3;
        auto probe = degree_probe(
            [&](const Rational& x) { return sigma1_by_elimination(with_variable(cfg, f.degree, x)); }, samples,
            forbidden_values(cfg, f.degree));
        doc["degree"] = degree_probe_to_json(probe);
        doc["degree"]["variable"] = f.degree;
        check("degree_not_saturated", !probe.saturated);
        if (f.degree == "q1")
            check("degree_q1_eq_23n-45", probe.degree == 23 * cfg.n - 45);
    }
    doc["checks"] = checks;
    doc["passed"] = all;
    emit(doc, c);
    return all ? exit_ok : exit_failed;
}

int cmd_intersect(const Common& c, int k, const std::vector<int>& filter)
{
    auto base = load_rational(c);
    auto rep = intersect_v1_vhat(base, k, filter);
    emit({{"manifest", manifest("intersect", c, {{"k", k}, {"filter", filter}})},
          {"base", config_to_json(base)},
          {"intersection", intersection_to_json(rep)}},
         c);
    return rep.certified_count() > 0 ? exit_ok : exit_failed;
}

int cmd_blowup(const Common& c, int k, int point_index)
{
    json doc = read_json(c.config_path);
    json cfgdoc;
    if (doc.contains("intersection")) {
        const auto& pts = doc["intersection"]["points"];
        if (point_index < 0 || point_index >= static_cast<int>(pts.size()))
            throw DimensionMismatch("--point out of range");
        cfgdoc = pts[point_index]["config"];
        if (k == 0)
            k = doc["intersection"]["k"].get<int>();
    }
    else {
        cfgdoc = doc.contains("config") ? doc["config"] : doc;
    }
    if (k == 0)
        throw InvalidConfig("give --k");
    AConfig point = config_from_json(cfgdoc);
    json out{{"manifest", manifest("blowup", c, {{"k", k}, {"point", point_index}})}, {"point", config_to_json(point)}};
    try {
        auto res = blowup_family(point, k, {0, 1, -1}, c.order);
        out["blowup"] = blowup_to_json(res, Layout(point.n));
        emit(out, c);
        return res.passed ? exit_ok : exit_failed;
    }
    catch (const OutsideOpenSet& e) {
        out["status"] = "outside (V1 cap V-hat)^0";
        out["error"] = e.what();
    }
    catch (const RankMismatch& e) {
        out["status"] = "rank mismatch";
        out["error"] = e.what();
    }
    emit(out, c);
    return exit_degenerate;
}

// "x:m,x:m,..." with rational x
int cmd_confvand(const std::string& nodes, bool leading)
{
    NodeSpec<Rational> spec;
    spec.leading_row = leading;
    std::stringstream ss(nodes);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("node '" + item + "' must be x:multiplicity");
        spec.add(Rational::parse(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    Matrix<Rational> M = build_confvand(spec, standard_sequence(spec));
    json rows = json::array();
    for (Index i = 0; i < M.rows(); ++i) {
        json r = json::array();
        for (Index j = 0; j < M.cols(); ++j)
            r.push_back(M(i, j).str());
        rows.push_back(r);
    }
    const Rational formula = confvand_det(spec), direct = det(M);
    std::cout << json{{"size", spec.size()}, {"matrix", rows}, {"det_formula", formula.str()},
                      {"det_elimination", direct.str()}, {"agree", formula == direct}}
                     .dump(2)
              << "\n";
    return formula == direct ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Third-order Fuchsian equations with apparent singularities"};
    app.require_subcommand(1);
    Common c;

    auto* solve = app.add_subcommand("solve", "solve system (T) for a config");
    add_common(solve, c);

    auto* verify = app.add_subcommand("verify", "check an equation against a config");
    std::string equation_path;
    add_common(verify, c, false);
    verify->add_option("-e,--equation", equation_path, "equation JSON (solve output accepted)")->required();
    verify->add_option("--order", c.order, "Frobenius series truncation order");

    auto* disc = app.add_subcommand("discriminant", "sigma_1 and its block, factor and minor checks");
    DiscriminantFlags df;
    add_common(disc, c);
    disc->add_flag("--blocks", df.blocks, "block (Laplace) expansion");
    disc->add_flag("--factor", df.factor, "chi/phi factorizations (n = 3)");
    disc->add_flag("--minors", df.minors, "all sigma_k minors of M_b");
    disc->add_option("--degree", df.degree, "probe the degree of sigma_1 in a variable (q1, p2, t3, ...)");
    disc->add_option("--samples", df.samples, "interpolation samples for --degree");

    auto* inter = app.add_subcommand("intersect", "points of V_1 cap V-hat in the (p1, p2) plane");
    int k = 3;
    std::vector<int> filter{4, 16};
    add_common(inter, c);
    inter->add_option("-k", k, "minor index")->capture_default_str();
    inter->add_option("--filter", filter, "further minors whose common zeros are kept")->capture_default_str();

    auto* blow = app.add_subcommand("blowup", "solution family at a point of V_1 cap V-hat");
    int blow_k = 0, point_index = 0;
    blow->add_option("-c,--config", c.config_path, "point config, or intersect output")->required();
    blow->add_option("-k", blow_k, "minor index of the chart (default: the intersect k)");
    blow->add_option("--point", point_index, "point index within intersect output");
    blow->add_option("--order", c.order, "Frobenius series truncation order");
    blow->add_option("-o,--output", c.output, "output file (default stdout)");

    auto* conf = app.add_subcommand("confvand", "print a confluent Vandermonde matrix and its determinant");
    std::string nodes;
    bool leading = false;
    conf->add_option("nodes", nodes, "x:m,x:m,...")->required();
    conf->add_flag("--leading", leading, "prepend the leading-coefficient row");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve)
            return cmd_solve(c);
        if (*verify)
            return cmd_verify(c, equation_path);
        if (*disc)
            return cmd_discriminant(c, df);
        if (*inter)
            return cmd_intersect(c, k, filter);
        if (*blow)
            return cmd_blowup(c, blow_k, point_index);
        if (*conf)
            return cmd_confvand(nodes, leading);
    }
    catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_failed;
    }
    return exit_failed;
}
