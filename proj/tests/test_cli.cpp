#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "zwire/errors.hpp"

using namespace zwire;
using namespace zwire::cli;

namespace {

SweepConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, ZWIRE_TEST_DATA);
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string f; std::getline(in, f, ',');) out.push_back(f);
    return out;
}

}  // namespace

TEST_CASE("real-number parsing accepts multiples of pi") {
    constexpr double pi = std::numbers::pi;
    CHECK(parse_real("1.5") == 1.5);
    CHECK(parse_real("pi") == pi);
    CHECK(parse_real("pi/2") == doctest::Approx(pi / 2));
    CHECK(parse_real("-3pi/4") == doctest::Approx(-3 * pi / 4));
    CHECK(parse_real("2*pi") == doctest::Approx(2 * pi));
    CHECK(parse_real("1e-3") == 1e-3);
    CHECK_THROWS_AS(parse_real("two"), ConfigError);
    CHECK_THROWS_AS(parse_real(""), ConfigError);
}

TEST_CASE("config parsing") {
    const SweepConfig c = parse(
        "# comment\n"
        "scheme = scheme2\n"
        "q1 = 1   # trailing comment\n"
        "L = 6\n"
        "E_min = 0.5\nE_max = 4\npoints = 8\n"
        "outputs = probabilities, conductance\n"
        "validate_energies = 2, 5, 7\n");
    CHECK(c.scheme == "scheme2");
    CHECK(c.q1 == 1);
    CHECK(c.L == 6.0);
    CHECK(c.points == 8);
    CHECK(c.out_probabilities);
    CHECK_FALSE(c.out_distances);
    CHECK(c.out_conductance);
    CHECK(c.validate_energies == std::vector<double>{2, 5, 7});

    SUBCASE("unknown keys name the line") {
        try {
            parse("scheme = scheme1\nbogus = 3\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("bad values") {
        CHECK_THROWS_AS(parse("scheme = spiral\n"), ConfigError);
        CHECK_THROWS_AS(parse("points = many\n"), ConfigError);
        CHECK_THROWS_AS(parse("no equals sign\n"), ConfigError);
    }
    SUBCASE("field construction") {
        CHECK(build_field(parse("scheme = scheme1\n")).kind() == FieldKind::Scheme1);
        CHECK(build_field(parse("scheme = wall\nL = 2\ntheta_right = pi/2\n")).kind() == FieldKind::MagneticWall);
        CHECK(build_field(parse("scheme = tabulated:twist.dat\n")).kind() == FieldKind::Tabulated);
    }
}

TEST_CASE("number formatting") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.5) == "1.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(1e-20) == "1e-20");
    CHECK(format_double(NAN) == "nan");
}

TEST_CASE("sweep output") {
    SweepConfig c = parse("scheme = scheme1\nL = 3\nE_min = 0.5\nE_max = 6\npoints = 12\nsegments = 512\n");
    SUBCASE("identical across thread counts") {
        std::ostringstream a, b, d;
        c.threads = 1;
        CHECK(run_sweep(c, a, d) == kOk);
        c.threads = 4;
        CHECK(run_sweep(c, b, d) == kOk);
        CHECK(a.str() == b.str());
        const auto rows = lines(a.str());
        REQUIRE(rows.size() == 13);
        CHECK(rows[0] == csv_header(c));
        CHECK(split(rows[1]).size() == split(rows[0]).size());
        CHECK(split(rows[1]).back() == "0");
        CHECK(split(rows[1])[split(rows[1]).size() - 2] == "single");
        CHECK(split(rows[12])[split(rows[12]).size() - 2] == "two");
    }
    SUBCASE("threshold energies are nudged with a note outside the CSV") {
        c.E_min = -1.0;
        c.E_max = 1.0;
        c.points = 3;
        std::ostringstream out, diag;
        CHECK(run_sweep(c, out, diag) == kOk);
        CHECK(out.str().find("note") == std::string::npos);
        CHECK(diag.str().find("threshold") != std::string::npos);
        const auto rows = lines(out.str());
        REQUIRE(rows.size() == 4);
        CHECK(split(rows[1])[0] == "-0.999999999");
    }
    SUBCASE("closed-regime rows are zero") {
        c.E_min = -3.0;
        c.E_max = -2.0;
        c.points = 2;
        std::ostringstream out, diag;
        CHECK(run_sweep(c, out, diag) == kOk);
        const auto f = split(lines(out.str())[1]);
        CHECK(f[1] == "0");
        CHECK(f[f.size() - 2] == "closed");
    }
    SUBCASE("uniform field transmits fully") {
        SweepConfig u = parse("scheme = uniform\nL = 2\nE_min = 2\nE_max = 9\npoints = 5\nsegments = 64\n");
        std::ostringstream out, diag;
        CHECK(run_sweep(u, out, diag) == kOk);
        for (std::size_t i = 1; i < 6; ++i) {
            const auto f = split(lines(out.str())[i]);
            CHECK(std::stod(f[1]) == doctest::Approx(1.0));
            CHECK(std::stod(f[2]) == doctest::Approx(0.0));
        }
    }
    SUBCASE("column groups can be switched off") {
        c.out_distances = false;
        c.out_probabilities = false;
        CHECK(csv_header(c) == "E,unitarity_defect,conductance,regime,defect_flag");
    }
}

TEST_CASE("overflow surfaces as a numeric failure") {
    SweepConfig c = parse("scheme = uniform\nL = 200\nE_min = 0\nE_max = 0\npoints = 1\n");
    std::ostringstream out, diag;
    CHECK(run_sweep(c, out, diag) == kNumericFailure);
    CHECK(diag.str().find("overflow") != std::string::npos);
}

TEST_CASE("dump-profile") {
    SweepConfig c = parse("scheme = wall\nL = 2\ntheta_right = pi/2\npoints = 5\n");
    std::ostringstream out, diag;
    CHECK(run_dump_profile(c, out, diag) == kOk);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "# y b1 b3 theta |B|");
    CHECK(rows[1] == "0 0 1 0 1");
    CHECK(rows[3] == "1 0 0 nan 0");
}

TEST_CASE("current") {
    SweepConfig c = parse("scheme = uniform\nL = 1\nE_min = 2\nE_max = 4\npoints = 401\nsegments = 32\n");
    std::ostringstream out, diag;
    CHECK(run_current(c, 3.2, 3.0, 0.0, out, diag) == kOk);
    const std::string first = lines(out.str())[0];
    REQUIRE(first.rfind("current ", 0) == 0);
    const double I = std::stod(first.substr(8));
    CHECK(I == doctest::Approx(2 * 0.2 / (2 * std::numbers::pi)).epsilon(0.01));

    SUBCASE("doubling the grid leaves a smooth-profile current unchanged") {
        SweepConfig s = parse("scheme = scheme1\nL = 3\nE_min = 1.01\nE_max = 6\npoints = 201\nsegments = 512\n");
        std::ostringstream o1, o2, dd;
        run_current(s, 3.5, 3.0, 0.2, o1, dd);
        s.points = 401;
        run_current(s, 3.5, 3.0, 0.2, o2, dd);
        const double i1 = std::stod(lines(o1.str())[0].substr(8));
        const double i2 = std::stod(lines(o2.str())[0].substr(8));
        CHECK(i1 == doctest::Approx(i2).epsilon(1e-3));
    }
}

TEST_CASE("validate modes report PASS and FAIL through exit codes") {
    std::ostringstream out, diag;
    SweepConfig wall = parse("scheme = wall\nL = 2\ntheta_right = pi/2\nE_min = 1.01\nE_max = 50\npoints = 10\nsegments = 64\n");
    CHECK(run_validate(wall, "wall", out, diag) == kOk);
    CHECK(run_validate(wall, "delta", out, diag) == kOk);
    SweepConfig s1 = parse("scheme = scheme1\nL = 3\nsegments = 4096\n");
    CHECK(run_validate(s1, "berry", out, diag) == kOk);
    CHECK(out.str().find("PASS") != std::string::npos);
    // A coarse lattice misses the oracle tolerance.
    s1.lattice_divisions = 256;
    std::ostringstream fail;
    CHECK(run_validate(s1, "oracle", fail, diag) == kValidationFail);
    CHECK(fail.str().find("FAIL") != std::string::npos);
    CHECK_THROWS_AS(run_validate(s1, "nonsense", out, diag), ConfigError);
}
