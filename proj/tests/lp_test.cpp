#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "gridmix/analysis.hpp"
#include "gridmix/lp.hpp"
#include "gridmix/model.hpp"

using namespace gridmix;
using lp::Relation;

namespace {

lp::LinearProgram two_var_example() {
    auto p = lp::LinearProgram::with_variables({"x1", "x2"});
    p.objective = {37.80, 58.62};
    p.add({1, 1}, Relation::GreaterEqual, 10, "demand");
    p.add({1, 0}, Relation::LessEqual, 4, "cap");
    return p;
}

// Beale's instance: cycles under the textbook most-negative rule.
lp::LinearProgram beale() {
    auto p = lp::LinearProgram::with_variables({"x4", "x5", "x6", "x7"});
    p.objective = {-0.75, 20.0, -0.5, 6.0};
    p.add({0.25, -8.0, -1.0, 9.0}, Relation::LessEqual, 0.0, "r1");
    p.add({0.5, -12.0, -0.5, 3.0}, Relation::LessEqual, 0.0, "r2");
    p.add({0.0, 0.0, 1.0, 0.0}, Relation::LessEqual, 1.0, "r3");
    return p;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("two binding constraints give (4, 6)") {
    const auto sol = lp::solve(two_var_example());
    REQUIRE(sol.optimal());
    CHECK(sol.values[0] == doctest::Approx(4.0));
    CHECK(sol.values[1] == doctest::Approx(6.0));
    CHECK(sol.objective_value == doctest::Approx(502.92));
    CHECK(sol.binding == std::vector<std::string>{"demand", "cap"});
}

TEST_CASE("minimizing a single variable stops at its lower bound") {
    auto p = lp::LinearProgram::with_variables({"x1"});
    p.objective = {1.0};
    p.add({1.0}, Relation::GreaterEqual, 0.0, "nonneg");
    const auto sol = lp::solve(p);
    REQUIRE(sol.optimal());
    CHECK(sol.values[0] == 0.0);
    CHECK(sol.objective_value == 0.0);
}

TEST_CASE("m1 solves to the demand vertex") {
    const auto s = *model::find_builtin("m1_flat_demand");
    const auto sol = lp::solve(model::compile(s));
    REQUIRE(sol.optimal());
    CHECK(sol.values[0] == doctest::Approx(25'621'059.0).epsilon(1e-12));
    CHECK(sol.values[1] == doctest::Approx(0.0));
    CHECK(std::abs(sol.objective_value - 968'476'030.0) < 1000.0);
}

TEST_CASE("objective value is the dot product of objective and values") {
    for (const auto& s : model::builtin_scenarios()) {
        const auto p = model::compile(s);
        const auto sol = lp::solve(p);
        if (!sol.optimal()) continue;
        CHECK(sol.objective_value == doctest::Approx(lp::dot(p.objective, sol.values)).epsilon(1e-9));
    }
}

TEST_CASE("infeasible and unbounded programs") {
    auto p = lp::LinearProgram::with_variables({"x1"});
    p.objective = {1.0};
    p.add({1.0}, Relation::GreaterEqual, 5.0, "lo");
    p.add({1.0}, Relation::LessEqual, 3.0, "hi");
    CHECK(lp::solve(p).status == lp::Status::Infeasible);

    auto q = lp::LinearProgram::with_variables({"x1", "x2"});
    q.objective = {-1.0, 0.0};
    q.add({1.0, -1.0}, Relation::LessEqual, 1.0, "r");
    CHECK(lp::solve(q).status == lp::Status::Unbounded);

    q.sense = lp::Sense::Maximize;
    q.objective = {0.0, 1.0};
    CHECK(lp::solve(q).status == lp::Status::Unbounded);
}

TEST_CASE("maximization returns the maximum") {
    auto p = lp::LinearProgram::with_variables({"x1", "x2"}, lp::Sense::Maximize);
    p.objective = {3.0, 2.0};
    p.add({1, 1}, Relation::LessEqual, 4, "sum");
    p.add({1, 3}, Relation::LessEqual, 6, "mix");
    p.add({1, 0}, Relation::LessEqual, 3, "cap");
    const auto sol = lp::solve(p);
    REQUIRE(sol.optimal());
    CHECK(sol.objective_value == doctest::Approx(11.0));
    CHECK(sol.values[0] == doctest::Approx(3.0));
    CHECK(sol.values[1] == doctest::Approx(1.0));
}

TEST_CASE("equality rows and negative right-hand sides") {
    auto p = lp::LinearProgram::with_variables({"x1", "x2"});
    p.objective = {1.0, 1.0};
    p.add({1, -1}, Relation::Equal, -2, "diff");
    p.add({-1, 0}, Relation::LessEqual, -1, "x1_at_least_1");
    const auto sol = lp::solve(p);
    REQUIRE(sol.optimal());
    CHECK(sol.values[0] == doctest::Approx(1.0));
    CHECK(sol.values[1] == doctest::Approx(3.0));
}

TEST_CASE("Beale's cycling instance terminates with the Bland fallback") {
    const auto p = beale();
    const auto sol = lp::solve(p);
    REQUIRE(sol.optimal());
    CHECK(sol.iterations <= 100);
    const auto oracle = analysis::oracle_solve(p);
    REQUIRE(oracle.status == lp::Status::Optimal);
    CHECK(sol.objective_value == doctest::Approx(oracle.objective).epsilon(1e-9));

    lp::SolverOptions bland_early;
    bland_early.stall_limit = 1;
    const auto b = lp::solve(p, bland_early);
    REQUIRE(b.optimal());
    CHECK(b.iterations <= 100);
    CHECK(b.objective_value == doctest::Approx(oracle.objective).epsilon(1e-9));
}

TEST_CASE("iteration limit is reported") {
    lp::SolverOptions opts;
    opts.max_iterations = 1;
    const auto sol = lp::solve(two_var_example(), opts);
    CHECK(sol.status == lp::Status::IterationLimit);
}

TEST_CASE("standard form of one <= row over two variables") {
    auto p = lp::LinearProgram::with_variables({"x1", "x2"});
    p.objective = {1.0, 1.0};
    p.add({1, 2}, Relation::LessEqual, 8, "r");
    const auto t = lp::standardize(p);
    CHECK(t.rows == 1);
    CHECK(t.cols == 3);
    CHECK(t.slack_count == 1);
    CHECK(t.surplus_count == 0);
    CHECK(t.artificial_count == 0);
}

TEST_CASE("m2 has three surplus and four slack columns") {
    const auto t = lp::standardize(model::compile(*model::find_builtin("m2_period_demand")));
    CHECK(t.surplus_count == 3);
    CHECK(t.slack_count == 4);
    CHECK(t.artificial_count == 3);
}

TEST_CASE("m4 lower bound is shifted out and restored") {
    const auto s = *model::find_builtin("m4_nuclear");
    const auto p = model::compile(s);
    const auto t = lp::standardize(p);
    REQUIRE(t.shift.size() == 3);
    CHECK(t.shift[2] == 2'628'000.0);
    const auto sol = lp::solve(p);
    REQUIRE(sol.optimal());
    CHECK(sol.values[2] >= 2'628'000.0 - 1e-6);
}

TEST_CASE("equilibrated rows have unit max coefficient") {
    const auto t = lp::standardize(model::compile(*model::find_builtin("m3_shared_space")));
    for (std::size_t r = 0; r < t.rows; ++r) {
        double mx = 0.0;
        for (std::size_t c = 0; c < t.structural_count; ++c) mx = std::max(mx, std::abs(t.at(r, c)));
        CHECK(mx == doctest::Approx(1.0));
    }
}

TEST_CASE("pivot choice") {
    auto p = lp::LinearProgram::with_variables({"x1", "x2"});
    p.objective = {1.0, 1.0};
    p.add({1, 1}, Relation::LessEqual, 4, "r");
    auto t = lp::standardize(p, false);

    SUBCASE("no negative reduced cost means optimal") {
        t.at(t.rows, 0) = 1.0;
        t.at(t.rows, 1) = 0.0;
        const auto c = lp::choose_pivot(t, lp::PivotRule::Dantzig, 1e-9, 1e-9);
        CHECK_FALSE(c.pivot);
        CHECK_FALSE(c.unbounded);
    }
    SUBCASE("single negative column with one positive ratio is forced") {
        t.at(t.rows, 0) = 0.0;
        t.at(t.rows, 1) = -2.0;
        const auto c = lp::choose_pivot(t, lp::PivotRule::Dantzig, 1e-9, 1e-9);
        REQUIRE(c.pivot);
        CHECK(*c.pivot == lp::Pivot{0, 1});
    }
    SUBCASE("Dantzig takes the most negative, Bland the lowest index") {
        t.at(t.rows, 0) = -1.0;
        t.at(t.rows, 1) = -3.0;
        CHECK(lp::choose_pivot(t, lp::PivotRule::Dantzig, 1e-9, 1e-9).pivot->col == 1);
        CHECK(lp::choose_pivot(t, lp::PivotRule::Bland, 1e-9, 1e-9).pivot->col == 0);
    }
    SUBCASE("improving column without a positive entry is unbounded") {
        t.at(0, 0) = -1.0;
        t.at(t.rows, 0) = -1.0;
        t.at(t.rows, 1) = 0.0;
        const auto c = lp::choose_pivot(t, lp::PivotRule::Dantzig, 1e-9, 1e-9);
        CHECK(c.unbounded);
        CHECK(c.entering == 0);
    }
}

TEST_CASE("ratio ties break to the lowest row") {
    auto p = lp::LinearProgram::with_variables({"x1"});
    p.objective = {-1.0};
    p.add({1.0}, Relation::LessEqual, 2.0, "a");
    p.add({2.0}, Relation::LessEqual, 4.0, "b");
    auto t = lp::standardize(p, false);
    t.at(t.rows, 0) = -1.0;
    const auto c = lp::choose_pivot(t, lp::PivotRule::Dantzig, 1e-9, 1e-9);
    REQUIRE(c.pivot);
    CHECK(c.pivot->row == 0);
}

TEST_CASE("check_feasible on m1") {
    const auto p = model::compile(*model::find_builtin("m1_flat_demand"));
    const auto ok = lp::check_feasible(p, {25'621'059.0, 0.0});
    CHECK(ok.feasible);
    CHECK(ok.binding == std::vector<std::string>{"demand"});

    const auto bad = lp::check_feasible(p, {0.0, 0.0});
    CHECK_FALSE(bad.feasible);
    CHECK(bad.violated == std::vector<std::string>{"demand"});
}

TEST_CASE("check_feasible on the published shared-space point") {
    const auto p = model::compile(*model::find_builtin("m3_shared_space"));
    const auto rep = lp::check_feasible(p, {24'862'479.0, 3'900'512.0});
    CHECK(rep.feasible);
    const auto it = std::find_if(rep.rows.begin(), rep.rows.end(),
                                 [](const lp::RowCheck& r) { return r.label == "demand_daytime"; });
    REQUIRE(it != rep.rows.end());
    // 14,917 against the rounded 13.192e6; the row carries need x 0.5149 = 13,192,283.
    CHECK(it->slack == doctest::Approx(14'917.0 - 283.0).epsilon(1e-3));
}

TEST_CASE("validation errors") {
    auto p = two_var_example();
    SUBCASE("objective length mismatch") {
        p.objective.push_back(1.0);
        CHECK_THROWS_AS(lp::solve(p), lp::ContractError);
    }
    SUBCASE("row length mismatch") {
        p.constraints[0].coefficients.pop_back();
        CHECK_THROWS_AS(lp::solve(p), lp::ContractError);
    }
    SUBCASE("NaN coefficient") {
        p.constraints[0].coefficients[0] = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(lp::solve(p), lp::ValidationError);
    }
    SUBCASE("infinite rhs") {
        p.constraints[1].rhs = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(lp::solve(p), lp::ValidationError);
    }
    SUBCASE("all-zero row") {
        p.constraints[0].coefficients = {0.0, 0.0};
        CHECK_THROWS_AS(lp::solve(p), lp::ValidationError);
    }
    SUBCASE("unit mismatch") {
        p.constraints[0].coefficient_unit = lp::Unit::MWh;
        p.constraints[0].rhs_unit = lp::Unit::Usd;
        CHECK_THROWS_AS(lp::solve(p), lp::ValidationError);
    }
}

}  // TEST_SUITE
