#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lpheat/io.hpp"

using namespace lpheat;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(line);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    double at(std::size_t row, const std::string& column) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == column) return rows.at(row).at(i);
        }
        FAIL("missing column " << column);
        return 0.0;
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    csv.header = split(line, ',');
    while (std::getline(in, line) && !line.empty()) {
        std::vector<double> row;
        for (const auto& cell : split(line, ',')) row.push_back(parse_real(cell));
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

const std::string kDirac = R"({"p": 2, "atoms": [[1, -1], [-1, 1]]})";

}  // namespace

TEST_CASE("constants table") {
    const auto r = run({"constants", "--p", "2", "--q", "1"});
    REQUIRE(r.code == 0);
    const auto csv = parse_csv(r.out);
    CHECK(csv.header == std::vector<std::string>{"p", "q", "r", "alpha_q", "delta_q", "c_p", "C", "K", "L", "M", "beta"});
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.at(0, "r") == 2.0);
    CHECK(csv.at(0, "K") == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(csv.at(0, "L") == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));

    const auto one = parse_csv(run({"constants", "--p", "1", "--q", "1"}).out);
    CHECK(one.at(0, "C") == 1.0);

    const auto lists = parse_csv(run({"constants", "--p", "1.5,2", "--q", "1,1.5"}).out);
    CHECK(lists.rows.size() == 4);

    const auto json = nlohmann::json::parse(run({"constants", "--p", "2", "--q", "2", "--format", "json"}).out);
    CHECK(json[0]["r"] == "inf");
}

TEST_CASE("constants reject bad exponents") {
    const auto r = run({"constants", "--p", "0.5", "--q", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("exponent out of range") != std::string::npos);
    CHECK(run({"constants", "--p", "3", "--q", "3"}).code == 2);
    CHECK(run({"constants", "--p", "2"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("evolve emits an antisymmetric column for symmetric Dirac data") {
    const auto r = run({"evolve", "--data", kDirac, "--t", "1", "--grid", "-5:5:101"});
    REQUIRE(r.code == 0);
    const auto csv = parse_csv(r.out);
    CHECK(csv.header == std::vector<std::string>{"x", "t=1"});
    REQUIRE(csv.rows.size() == 101);
    for (std::size_t i = 0; i < 101; ++i) {
        CHECK(csv.rows[i][1] == doctest::Approx(-csv.rows[100 - i][1]).epsilon(1e-13).scale(1e-15));
    }
    CHECK(csv.rows[40][1] > 0.0);
}

TEST_CASE("evolve: zero data and dual routes") {
    const auto zero = parse_csv(run({"evolve", "--data", R"({"p": 2, "atoms": []})", "--t", "1,0.5", "--grid",
                                     "-2:2:9"}).out);
    REQUIRE(zero.rows.size() == 9);
    for (const auto& row : zero.rows) {
        CHECK(row[1] == 0.0);
        CHECK(row[2] == 0.0);
    }
    const auto atoms = parse_csv(run({"evolve", "--data", kDirac, "--t", "0.3", "--grid", "-4:4:33"}).out);
    const auto steps = parse_csv(run({"evolve", "--data",
                                      R"({"p": 2, "primitive": {"type": "indicator", "a": -1, "b": 1}})", "--t",
                                      "0.3", "--grid", "-4:4:33"})
                                     .out);
    REQUIRE(atoms.rows.size() == steps.rows.size());
    for (std::size_t i = 0; i < atoms.rows.size(); ++i) {
        CHECK(std::abs(atoms.rows[i][1] - steps.rows[i][1]) < 1e-8);
    }
}

TEST_CASE("evolve errors") {
    CHECK(run({"evolve", "--data", "{not json", "--t", "1", "--grid", "0:1:3"}).code == 2);
    CHECK(run({"evolve", "--data", kDirac, "--t", "-1", "--grid", "0:1:3"}).code == 2);
    CHECK(run({"evolve", "--data", kDirac, "--t", "1", "--grid", "0:1:1"}).code == 2);
    CHECK(run({"evolve", "--data", "/nonexistent/file.json", "--t", "1", "--grid", "0:1:3"}).code == 2);
}

TEST_CASE("output is deterministic and round-trips") {
    const std::vector<std::string> args{"evolve", "--data", kDirac, "--t", "0.7,2", "--grid", "-3:3:61"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    const auto csv = parse_csv(a.out);
    std::string rebuilt = "x,t=0.7,t=2\n";
    for (const auto& row : csv.rows) {
        rebuilt += format_real(row[0]) + "," + format_real(row[1]) + "," + format_real(row[2]) + "\n";
    }
    CHECK(rebuilt == a.out);
}

TEST_CASE("verify suites") {
    const auto young = run({"verify", "--suite", "young"});
    CHECK(young.code == 0);
    const auto csv_lines = split(young.out, '\n');
    CHECK(csv_lines.at(0) == "name,measured,bound,ratio,passed,tolerance,params");
    CHECK(csv_lines.size() > 5);

    CHECK(run({"verify", "--suite", "variation"}).code == 0);
    CHECK(run({"verify", "--suite", "kernel"}).code == 0);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("verify writes JSON reports") {
    const auto path = std::filesystem::temp_directory_path() / "lpheat_cli_report.json";
    std::filesystem::remove(path);
    const auto r = run({"verify", "--suite", "decay", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    REQUIRE(doc.is_array());
    REQUIRE(!doc.empty());
    for (const auto& row : doc) {
        CHECK(row.contains("name"));
        CHECK(row.contains("measured"));
        CHECK(row.contains("bound"));
        CHECK(row["passed"].is_boolean());
    }
    std::filesystem::remove(path);
}

TEST_CASE("forced tolerance on sampled data fails") {
    std::string values;
    for (int i = 0; i <= 40; ++i) values += (i ? "," : "") + format_real(1.0 - std::abs(i - 20) / 20.0);
    const std::string hat = R"({"p": 2, "primitive": {"type": "samples", "x0": -1, "dx": 0.05, "values": [)" + values + "]}}";
    const auto loose = run({"verify", "--suite", "bounds", "--data", hat});
    CHECK(loose.code == 0);
    const auto tight = run({"verify", "--suite", "bounds", "--data", hat, "--tol", "1e-15"});
    CHECK(tight.code == 1);
    CHECK(tight.err.find("FAIL") != std::string::npos);
}

TEST_CASE("example-dirac") {
    const auto r = run({"example-dirac", "--a", "1", "--t", "0.25", "--grid", "-2:2:5"});
    REQUIRE(r.code == 0);
    const auto blocks = r.out.find("\n\n");
    REQUIRE(blocks != std::string::npos);
    const auto solution = parse_csv(r.out.substr(0, blocks + 1));
    CHECK(solution.rows.size() == 5);
    const auto variation = parse_csv(r.out.substr(blocks + 2));
    CHECK(variation.at(0, "a_over_sqrt_t") == 2.0);
    CHECK(variation.at(0, "variation_lower_bound") == doctest::Approx(0.4976611325094764).epsilon(1e-12));
}
