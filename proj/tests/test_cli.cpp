#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fuchs3/json_io.hpp"
#include "fuchs3/sampling.hpp"

using namespace fuchs3;
using R = Rational;
namespace fs = std::filesystem;

namespace {

const fs::path workdir = fs::temp_directory_path() / "fuchs3_cli_test";

struct Run {
    int code;
    json out;
};

Run run(const std::string& args)
{
    fs::create_directories(workdir);
    const fs::path out = workdir / "out.json";
    fs::remove(out);
    const std::string cmd = std::string(FUCHS3_CLI) + " " + args + " -o " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Run r{WEXITSTATUS(status), json()};
    if (fs::exists(out)) {
        std::ifstream in(out);
        r.out = json::parse(in);
    }
    return r;
}

std::string write(const std::string& name, const json& doc)
{
    const fs::path p = workdir / name;
    fs::create_directories(workdir);
    std::ofstream(p) << doc.dump();
    return p.string();
}

} // namespace

TEST_CASE("solve and verify")
{
    auto r = run("solve --seed 5 -n 2");
    REQUIRE(r.code == 0);
    CHECK(r.out["status"] == "unique");
    CHECK(r.out["equation"]["G"].size() == 3);
    CHECK(r.out["equation"]["H"].size() == 5);
    CHECK(r.out["equation"]["I"].size() == 7);
    CHECK(r.out["manifest"]["seed"] == 5);

    auto again = run("solve --seed 5 -n 2");
    CHECK(again.out.dump() == r.out.dump());

    const auto solved = write("solved.json", r.out);
    auto v = run("verify -c " + solved + " -e " + solved);
    CHECK(v.code == 0);
    CHECK(v.out["report"]["passed"] == true);

    CHECK(run("solve --seed 2 -n 3").code == 0);

    json bad = r.out["config"];
    bad["rho"][1][0] = (R::parse(bad["rho"][1][0].get<std::string>()) + R(1)).str();
    auto f = run("solve -c " + write("fuchs.json", bad));
    CHECK(f.code == 1);
    CHECK(f.out["validation"]["violations"][0]["kind"] == "fuchs");

    // drop q_1 from psi: the equation no longer matches the config
    json eq = r.out["equation"];
    json cfg = r.out["config"];
    cfg["q"][0] = (R::parse(cfg["q"][0].get<std::string>()) + R(1, 3)).str();
    auto m = run("verify -c " + write("moved.json", cfg) + " -e " + solved);
    CHECK(m.code == 1);
    CHECK(!m.out["report"]["structural"].empty());
}

TEST_CASE("discriminant flags")
{
    auto r = run("discriminant --seed 9 -n 3 --blocks --factor --minors --degree q1");
    CHECK(r.code == 0);
    CHECK(r.out["passed"] == true);
    CHECK(r.out["degree"]["degree"] == 24);
    CHECK(r.out["blocks"]["terms"].size() == 4);
    CHECK(r.out["ratio_constants"].contains("k14"));
}

TEST_CASE("intersect, blowup and the sigma_f gate")
{
    auto r = run("intersect --seed 6 -n 3 -k 3 --filter 4 16");
    REQUIRE(r.code == 0);
    CHECK(r.out["intersection"]["certified_points"].get<int>() >= 1);
    const auto inter = write("inter.json", r.out);
    auto b = run("blowup -c " + inter + " --point 0");
    CHECK(b.code == 0);
    CHECK(b.out["blowup"]["members"].size() == 3);
    CHECK(b.out["blowup"]["members"][0]["chart_x"].size() == 8);

    auto cfg = sample_config(3, 12u);
    auto phi = [&](const R& p1) {
        auto c = with_variable(cfg, "p1", p1);
        return phi_f(c, derive_constants(c).p_eff[0]);
    };
    cfg.p[0] = -phi(R(0)) / (phi(R(1)) - phi(R(0)));
    auto s1 = [&](const R& p2) { return sigma1_by_elimination(with_variable(cfg, "p2", p2)); };
    cfg.p[1] = -s1(R(0)) / (s1(R(1)) - s1(R(0)));
    auto gate = run("blowup -k 3 -c " + write("gate.json", config_to_json(cfg)));
    CHECK(gate.code == 2);
    CHECK(gate.out["status"] == "outside (V1 cap V-hat)^0");
}

TEST_CASE("confvand debug command")
{
    const std::string cmd = std::string(FUCHS3_CLI) + " confvand 1/2:3,2:1,-1:2 --leading > /dev/null";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
}
