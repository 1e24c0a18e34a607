#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

const std::string kCli = GRIDMIX_CLI;
const std::string kData = GRIDMIX_TEST_DATA;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(fields);
    }
    return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("list") {
    const auto all = run("list");
    CHECK(all.code == 0);
    CHECK(all.out.find("m3_shared_space") != std::string::npos);

    const auto printed = run("list --variant as-printed");
    CHECK(printed.out.find("table-derived") == std::string::npos);

    const auto json = nlohmann::json::parse(run("list --format json").out);
    CHECK(json.size() == 18);
    CHECK(run("list --variant nope").code == 1);

    const auto extra = run("list", "GRIDMIX_CATALOG_DIR='" + kData + "/catalog'");
    CHECK(extra.code == 0);
    CHECK(extra.out.find("two_sources") != std::string::npos);
}

TEST_CASE("solve") {
    const auto m1 = run("solve m1_flat_demand");
    CHECK(m1.code == 0);
    CHECK(m1.out.find("25,621,059") != std::string::npos);
    CHECK(m1.out.find("968,476,030") != std::string::npos);
    CHECK(m1.out == run("solve m1_flat_demand").out);

    const auto em = nlohmann::json::parse(run("solve m1_flat_demand --objective emissions --format json").out);
    CHECK(em["values"]["solar"].get<double>() == 0.0);
    CHECK(em["values"]["wind"].get<double>() > 0.0);

    const auto oracle = run("solve m3_shared_space --oracle");
    CHECK(oracle.code == 0);
    CHECK(oracle.out.find("agrees") != std::string::npos);

    CHECK(run("solve m4_tight_space --variant table-derived").code == 2);
    CHECK(run("solve '" + kData + "/infeasible.json'").code == 2);
    CHECK(run("solve '" + kData + "/two_sources.json'").code == 0);
    CHECK(run("solve '" + kData + "/tight_land_patch.json' --base m4_nuclear").code == 0);
}

TEST_CASE("solve input errors exit 1") {
    CHECK(run("solve missing.json").code == 1);
    CHECK(run("solve '" + kData + "/syntax_error.json'").code == 1);
    CHECK(run("solve '" + kData + "/unknown_key.json'").code == 1);
    CHECK(run("solve m1_flat_demand --variant bogus").code == 1);
    CHECK(run("solve m1_flat_demand --objective bogus").code == 1);
    CHECK(run("solve m1_flat_demand --format xml").code == 1);
    CHECK(run("solve m0_cost_only --oracle").code == 1);
    CHECK(run("solve").code == 1);
    CHECK(run("frobnicate").code == 1);
}

TEST_CASE("sweep") {
    const auto r = run("sweep m4_nuclear --param land_ft2 --from 2.06e8 --to 5.06e10 --steps 20");
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 21);
    CHECK(rows[0][0] == "land_ft2");
    CHECK(rows[0][3] == "wind_mwh");
    double previous = 1e300;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][1] == "optimal");
        const double nuclear = std::stod(rows[i][5]);
        CHECK(nuclear <= previous * (1.0 + 1e-9));
        previous = nuclear;
    }

    const auto one = csv_rows(run("sweep m4_nuclear --param land_ft2 --from 3e8 --to 3e8 --steps 1").out);
    CHECK(one.size() == 2);

    CHECK(run("sweep m4_nuclear --param land_ft2 --from 5 --to 1 --steps 3").code == 1);
    CHECK(run("sweep m4_nuclear --param wind_lcoe --from 1 --to 5 --steps 3").code == 1);
    CHECK(run("sweep m4_nuclear --param land_ft2 --from 1 --to 5 --steps 0").code == 1);
}

TEST_CASE("audit") {
    const auto text = run("audit");
    CHECK(text.code == 0);
    const auto json = nlohmann::json::parse(run("audit --format json").out);
    CHECK(json["rows"].size() == 7);
    const auto t5 = nlohmann::json::parse(run("audit --table 5 --format json").out);
    REQUIRE(t5["rows"].size() == 1);
    CHECK(t5["rows"][0]["classification"] == "match");
    CHECK(run("audit --table 42").code == 1);
    CHECK(run("audit --format csv").out.rfind("table,title", 0) == 0);
    // The shared-space row sits at -0.83% against a 1% tolerance, so strict mode still passes.
    CHECK(run("audit --strict").code == 0);
}

TEST_CASE("derive") {
    const auto csv = run("derive --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("annual_need_mwh") != std::string::npos);
    const auto json = nlohmann::json::parse(run("derive --format json").out);
    CHECK_FALSE(json["deltas"].empty());
}

TEST_CASE("corners") {
    const auto r = run("corners --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["argmin"]["lcoe"] == j["argmin"]["om"]);
}

}  // TEST_SUITE
