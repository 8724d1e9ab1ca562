#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "besselhit/cli.hpp"

namespace cli = besselhit::cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, sep)) {
        cells.push_back(cell);
    }
    return cells;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string at(std::size_t row, const std::string& column) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == column) {
                return rows.at(row).at(i);
            }
        }
        FAIL("no column " << column);
        return {};
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::stringstream ss(text);
    std::string line;
    std::getline(ss, line);
    csv.header = split(line, ',');
    while (std::getline(ss, line)) {
        if (!line.empty()) {
            csv.rows.push_back(split(line, ','));
        }
    }
    return csv;
}

// Re-run a CSV row from its input columns (everything before `first_output`)
// and return the new row.
Csv replay(const Csv& csv, std::size_t row, const std::string& first_output = "value") {
    std::vector<std::string> args{csv.rows[row][0]};
    for (std::size_t i = 1; i < csv.header.size() && csv.header[i] != first_output; ++i) {
        args.push_back("--" + csv.header[i]);
        args.push_back(csv.rows[row][i]);
    }
    args.push_back("--format");
    args.push_back("csv");
    const Outcome again = run(args);
    REQUIRE(again.code == 0);
    return parse_csv(again.out);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("besselhit_cli_" + name);
}

}  // namespace

TEST_CASE("closed-form tail example") {
    const Outcome r = run({"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "10", "--method",
                           "closed-form", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(0.1240851829770754).epsilon(1e-15));
    CHECK(j["err"].get<double>() == 0.0);
    CHECK(j["hit_ever"].get<double>() == 0.5);
    CHECK(j["method"] == "closed-form");
}

TEST_CASE("inversion tail example") {
    const Outcome r =
        run({"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "10", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["value"].get<double>() - 0.1240858) < 1e-6);
    CHECK(j["precision"] == "extended");
    CHECK(j["ladder-low"] == 24);
    CHECK(j["ladder-high"] == 28);
}

TEST_CASE("asymptote and laplace examples") {
    const Outcome asym = run({"asymptote", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "10",
                              "--format", "json"});
    REQUIRE(asym.code == 0);
    CHECK(json::parse(asym.out)["value"].get<double>() ==
          doctest::Approx(0.126156626101008).epsilon(1e-14));

    const Outcome lap = run({"laplace", "--nu", "0.5", "--a", "2", "--b", "1", "--lambda", "0.5",
                             "--format", "json"});
    REQUIRE(lap.code == 0);
    CHECK(json::parse(lap.out)["value"].get<double>() ==
          doctest::Approx(0.18393972058572116).epsilon(1e-14));
}

TEST_CASE("moment reports its bounds") {
    const Outcome r = run({"moment", "--nu", "0.5", "--a", "2", "--p", "0.5", "--t", "100",
                           "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["lower"].get<double>() <= j["value"].get<double>());
    CHECK(j["value"].get<double>() <= j["upper"].get<double>());
    CHECK(j["terms_used"].get<int>() >= 1);
}

TEST_CASE("t-grid emits one row per point") {
    const Outcome r = run({"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t-grid", "1:1000:7",
                           "--method", "closed-form", "--format", "csv"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 7);
    double prev = 0.0;
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        const double t = std::stod(csv.at(i, "t"));
        CHECK(t > prev);
        prev = t;
    }
    CHECK(std::stod(csv.at(0, "t")) == 1.0);
    CHECK(std::stod(csv.at(6, "t")) == 1000.0);

    const Outcome lin = run({"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t-grid",
                             "1:3:5-lin", "--method", "closed-form", "--format", "csv"});
    REQUIRE(lin.code == 0);
    CHECK(std::stod(parse_csv(lin.out).at(1, "t")) == 1.5);
}

TEST_CASE("csv rows replay bit for bit") {
    const std::vector<std::vector<std::string>> cases{
        {"tail", "--nu", "1", "--a", "2", "--b", "1", "--t-grid", "0.3:300:4"},
        {"tail", "--nu", "-0.5", "--a", "2", "--b", "1", "--t", "3.7"},
        {"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "2", "--method", "mc-lemma22",
         "--paths", "300", "--seed", "9"},
        {"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "2", "--method", "mc-indicator",
         "--paths", "100", "--horizon", "50"},
        {"density", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "1"},
        {"moment", "--nu", "0.5", "--a", "2", "--p", "0.3", "--t", "7"},
    };
    for (std::vector<std::string> args : cases) {
        args.push_back("--format");
        args.push_back("csv");
        const Outcome first = run(args);
        REQUIRE_MESSAGE(first.code == 0, first.err);
        const Csv csv = parse_csv(first.out);
        for (std::size_t i = 0; i < csv.rows.size(); ++i) {
            const Csv again = replay(csv, i);
            REQUIRE(again.rows.size() == 1);
            CHECK(again.header == csv.header);
            CHECK(again.rows[0] == csv.rows[i]);
        }
    }
}

TEST_CASE("simulate with both estimators") {
    const Outcome r = run({"simulate", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "2",
                           "--estimator", "both", "--paths", "200", "--format", "csv"});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 2);
    CHECK(csv.at(0, "estimator") == "indicator");
    CHECK(csv.at(1, "estimator") == "lemma22");
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(csv.rows[i].size() == csv.header.size());
        const Csv again = replay(csv, i, "mean");
        REQUIRE(again.rows.size() == 1);
        CHECK(again.rows[0] == csv.rows[i]);
    }

    const Outcome neg = run({"simulate", "--nu", "-0.5", "--a", "2", "--b", "1", "--t", "2",
                             "--estimator", "both", "--paths", "100", "--format", "json"});
    REQUIRE(neg.code == 0);
    CHECK(json::parse(neg.out)["estimator"] == "indicator");
}

TEST_CASE("verify subcommands report a verdict") {
    const Outcome slope = run({"verify-slope", "--nu", "0.5", "--a", "2", "--b", "1", "--t-grid",
                               "100:100000:7", "--format", "json"});
    REQUIRE(slope.code == 0);
    const json s = json::parse(slope.out);
    CHECK(s["rows"].size() == 7);
    CHECK(s["summary"]["pass"] == true);
    CHECK(s["summary"]["slope"].get<double>() < -0.55);

    const Outcome constant =
        run({"verify-constant", "--nu", "0.5", "--a", "2", "--b", "1", "--format", "json"});
    REQUIRE(constant.code == 0);
    CHECK(json::parse(constant.out)["summary"]["target"].get<double>() == 0.5);

    const Outcome moment =
        run({"verify-moment", "--nu", "0.5", "--a", "2", "--p", "0.75", "--format", "csv"});
    REQUIRE(moment.code == 0);
    const Csv csv = parse_csv(moment.out);
    CHECK(csv.rows.size() == 4);
    CHECK(csv.at(3, "pass") == "true");
}

TEST_CASE("config file supplies flags and command line overrides it") {
    const auto path = temp_file("config.json");
    {
        std::ofstream f(path);
        f << R"({"nu": 0.5, "a": 2, "b": 1, "t": 10, "method": "closed-form", "format": "json"})";
    }
    const Outcome base = run({"tail", "--config", path.string()});
    REQUIRE(base.code == 0);
    CHECK(json::parse(base.out)["t"].get<double>() == 10.0);

    const Outcome over = run({"tail", "--config", path.string(), "--t", "100"});
    REQUIRE(over.code == 0);
    CHECK(json::parse(over.out)["t"].get<double>() == 100.0);

    {
        std::ofstream f(path);
        f << R"({"nu": 0.5, "colour": "red"})";
    }
    CHECK(run({"tail", "--config", path.string(), "--a", "2", "--b", "1", "--t", "1"}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("output flag writes a file") {
    const auto path = temp_file("out.csv");
    const Outcome r = run({"asymptote", "--nu", "1", "--a", "2", "--b", "1", "--t", "50",
                           "--format", "csv", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream text;
    text << f.rdbuf();
    CHECK(parse_csv(text.str()).rows.size() == 1);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    SUBCASE("usage and parameter errors exit 2") {
        CHECK(run({"tail", "--nu", "0.5", "--a", "1", "--b", "2", "--t", "1"}).code == 2);
        CHECK(run({"moment", "--nu", "0.5", "--a", "2", "--p", "0", "--t", "1"}).code == 2);
        CHECK(run({"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "1", "--bogus"}).code ==
              2);
        CHECK(run({"tail", "--nu", "0.5", "--a", "2", "--b", "1"}).code == 2);
        CHECK(run({"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "-1"}).code == 2);
        CHECK(run({"nonsense"}).code == 2);
        CHECK(run({"tail", "--nu", "1", "--a", "2", "--b", "1", "--t", "1", "--method",
                   "closed-form"})
                  .code == 2);
    }
    SUBCASE("instability exits 3") {
        const Outcome r = run({"tail", "--nu", "0.5", "--a", "2", "--b", "1", "--t", "1e9",
                               "--precision", "double"});
        CHECK(r.code == 3);
        CHECK(r.err.find("Gaver-Stehfest") != std::string::npos);
    }
    SUBCASE("help exits 0") {
        const Outcome r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("verify-slope") != std::string::npos);
    }
}

TEST_CASE("near-zero index warns on stderr") {
    const Outcome r = run({"tail", "--nu", "1e-9", "--a", "2", "--b", "1", "--t", "5"});
    REQUIRE(r.code == 0);
    CHECK_FALSE(r.err.empty());
}
