#include "duffing/sweep.hpp"

#include "duffing/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace duffing;

namespace {

std::string csv_of(const SweepConfig& cfg) {
    std::ostringstream os;
    write_csv(run_sweep(cfg), os);
    return os.str();
}

}  // namespace

TEST_CASE("config validation") {
    SweepConfig cfg;
    cfg.lambda_min = -2.0;
    CHECK_THROWS_AS(validate(cfg), DomainError);
    cfg = SweepConfig{};
    cfg.points = 1;
    CHECK_THROWS_AS(validate(cfg), DomainError);
    cfg = SweepConfig{};
    cfg.lambda_min = 0.0;
    CHECK_THROWS_AS(validate(cfg), DomainError);  // log spacing needs min > 0
    cfg.spacing = Spacing::Linear;
    CHECK_NOTHROW(validate(cfg));
    cfg.methods = {Method::Naive};
    CHECK_THROWS_AS(validate(cfg), DomainError);
}

TEST_CASE("CSV output is deterministic and carries the schema header") {
    SweepConfig cfg;
    cfg.lambda_min = 0.1;
    cfg.lambda_max = 10.0;
    cfg.points = 9;
    const std::string a = csv_of(cfg);
    const std::string b = csv_of(cfg);
    CHECK(a == b);
    CHECK(a.rfind("lambda,T_exact,T_lp,err_lp,T_alp,err_alp,T_vlp,err_vlp,error\n",
                  0) == 0);

    SweepConfig lp_only = cfg;
    lp_only.methods = {Method::LP};
    CHECK(csv_of(lp_only).rfind("lambda,T_exact,T_lp,err_lp,error\n", 0) == 0);

    SweepConfig exact_only = cfg;
    exact_only.methods.clear();
    CHECK(csv_of(exact_only).rfind("lambda,T_exact,error\n", 0) == 0);
    CHECK(!all_rows_errored(run_sweep(exact_only)));
}

TEST_CASE("every method is exact at lambda = 0") {
    SweepConfig cfg;
    cfg.lambda_min = 0.0;
    cfg.lambda_max = 0.0;
    cfg.points = 2;
    cfg.spacing = Spacing::Linear;
    const SweepTable table = run_sweep(cfg);
    for (const SweepRow& row : table.rows)
        for (const SweepCell& cell : row.cells) {
            REQUIRE(cell.ok);
            CHECK(cell.abs_error < 1e-12);
        }
}

TEST_CASE("LP error dominates on a log grid at third order") {
    SweepConfig cfg;
    cfg.lambda_min = 0.1;
    cfg.lambda_max = 10.0;
    cfg.points = 10;
    const SweepTable table = run_sweep(cfg);
    REQUIRE(table.methods.size() == 3);
    for (const SweepRow& row : table.rows) {
        REQUIRE(row.cells[0].ok);  // LP column
        for (std::size_t c = 1; c < row.cells.size(); ++c) {
            REQUIRE(row.cells[c].ok);
            CHECK(row.cells[0].abs_error > row.cells[c].abs_error);
        }
    }
}

TEST_CASE("engine failures are recorded per row, the sweep continues") {
    SweepConfig cfg;
    cfg.lambda_min = -0.5;
    cfg.lambda_max = -0.1;
    cfg.points = 3;
    cfg.spacing = Spacing::Linear;
    const SweepTable table = run_sweep(cfg);
    CHECK(!all_rows_errored(table));
    for (const SweepRow& row : table.rows) {
        CHECK(row.cells[0].ok);   // LP handles soft springs
        CHECK(!row.cells[2].ok);  // VLP refuses lambda < 0
        CHECK(!row.cells[2].failure.empty());
    }
    std::ostringstream os;
    write_csv(table, os);
    CHECK(os.str().find("vlp:") != std::string::npos);
    CHECK(os.str().find("nan,nan") != std::string::npos);
}

TEST_CASE("SVG chart is self-contained and plots the selected methods") {
    SweepConfig cfg;
    cfg.lambda_min = 0.1;
    cfg.lambda_max = 10.0;
    cfg.points = 12;
    const SweepTable table = run_sweep(cfg);
    std::ostringstream os;
    write_svg(table, os);
    const std::string svg = os.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);  // no external assets
    CHECK(svg.find(">lp<") != std::string::npos);
    CHECK(svg.find(">alp<") != std::string::npos);
    CHECK(svg.find(">vlp<") != std::string::npos);

    std::ostringstream os2;
    write_svg(table, os2);
    CHECK(svg == os2.str());
}

TEST_CASE("exact large-coupling limit by Richardson extrapolation") {
    CHECK(std::abs(estimate_limit(Method::Exact, 3) - 7.4162987) < 1e-5);
}
