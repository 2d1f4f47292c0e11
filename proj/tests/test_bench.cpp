#include <doctest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "monge/bench.hpp"

using namespace monge;
using namespace monge::bench;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_value(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

} // namespace

TEST_CASE("method names round-trip") {
    for (MethodId m : {MethodId::kAEuler, MethodId::kANewton, MethodId::kB, MethodId::kC})
        CHECK(parse_method(method_name(m)) == m);
    CHECK(parse_method("a-NEWTON") == MethodId::kANewton);
    CHECK_FALSE(parse_method("D").has_value());
    CHECK_THROWS_AS(example_problem(4), std::invalid_argument);
}

TEST_CASE("run_solve smoke and failure rows") {
    const BenchRow r = run_solve(MethodId::kB, 1, 5, MethodConfig{});
    CHECK_FALSE(r.failed());
    CHECK(std::isfinite(r.error));
    CHECK(r.seconds < 1.0);
    CHECK(r.n == 5);

    const BenchRow bad = run_solve(MethodId::kB, 1, 2, MethodConfig{});
    CHECK(bad.failed());
    CHECK(std::isnan(bad.error));
}

TEST_CASE("Method A on example 3") {
    SolveReport rep(build_grid({0, 0, 1, 1}, 31));
    const BenchRow r = run_solve(MethodId::kANewton, 3, 31, MethodConfig{}, &rep);
    CHECK(r.converged);
    CHECK(r.error <= 4.0 * 1.7e-3);
    CHECK(r.error >= 1.7e-3 / 4.0);
    CHECK(rep.iterations == r.iterations);
}

TEST_CASE("tables") {
    BenchSpec spec;
    spec.sizes = {31, 45, 63};
    spec.methods = {MethodId::kB, MethodId::kC};
    const auto rows = run_table(spec);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].method == MethodId::kB);
    CHECK(rows[0].n == 31);
    CHECK(rows[3].method == MethodId::kC);
    CHECK(rows[0].error > rows[1].error);
    CHECK(rows[1].error > rows[2].error);
    const double cmin = std::min({rows[3].error, rows[4].error, rows[5].error});
    const double cmax = std::max({rows[3].error, rows[4].error, rows[5].error});
    CHECK((cmax - cmin) / cmin < 0.5);

    SUBCASE("CSV round-trip") {
        const std::string csv = format_csv(rows);
        CHECK(csv.rfind(std::string(kTableHeader), 0) == 0);
        const auto back = parse_csv(csv);
        REQUIRE(back.size() == rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k) {
            CHECK(back[k].method == rows[k].method);
            CHECK(back[k].example == rows[k].example);
            CHECK(back[k].n == rows[k].n);
            CHECK(back[k].iterations == rows[k].iterations);
            CHECK(back[k].converged == rows[k].converged);
            CHECK(same_value(back[k].error, rows[k].error));
            CHECK(same_value(back[k].seconds, rows[k].seconds));
            CHECK(same_value(back[k].min_lambda1, rows[k].min_lambda1));
            CHECK(same_value(back[k].min_gtilde, rows[k].min_gtilde));
        }
        CHECK(format_csv(back) == csv);
    }

    SUBCASE("determinism") {
        const auto again = run_table(spec);
        for (std::size_t k = 0; k < rows.size(); ++k) CHECK(same_bits(again[k].error, rows[k].error));
    }

    SUBCASE("text layout") {
        const std::string text = format_text(rows);
        CHECK(text.find("B") != std::string::npos);
        CHECK(text.find("45") != std::string::npos);
    }
}

TEST_CASE("empty size list gives a header-only CSV") {
    BenchSpec spec;
    spec.sizes.clear();
    const auto rows = run_table(spec);
    CHECK(rows.empty());
    CHECK(format_csv(rows) == std::string(kTableHeader) + "\n");
    CHECK(parse_csv(format_csv(rows)).empty());
    CHECK_THROWS_AS(parse_csv("nonsense\n1,2"), std::invalid_argument);
}

TEST_CASE("timing rows") {
    BenchSpec spec;
    spec.sizes = {9, 31};
    spec.methods = {MethodId::kANewton, MethodId::kB};
    const auto rows = run_timing(spec);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK_FALSE(r.failed());
        CHECK(r.seconds >= 0.0);
    }
    CHECK(rows[0].seconds <= rows[1].seconds);
    CHECK(rows[2].seconds <= rows[3].seconds);
    const auto back = parse_timing_csv(format_timing_csv(rows));
    REQUIRE(back.size() == rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(back[k].method == rows[k].method);
        CHECK(back[k].n == rows[k].n);
        CHECK(back[k].seconds == rows[k].seconds);
    }
}

TEST_CASE("history CSV") {
    SolveReport rep(build_grid({0, 0, 1, 1}, 9));
    run_solve(MethodId::kB, 1, 9, MethodConfig{}, &rep);
    const std::string h = format_history_csv(rep);
    CHECK(h.rfind("iteration,residual,increment\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : h) lines += c == '\n';
    CHECK(lines == rep.residual_history.size() + 1);
}
