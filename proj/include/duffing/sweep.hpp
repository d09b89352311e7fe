#pragma once

#include "duffing/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace duffing {

enum class Spacing { Linear, Log };

/// Configuration for a lambda sweep comparing engine periods against the
/// exact one (the data behind the error chart).
struct SweepConfig {
    double lambda_min = 0.01;
    double lambda_max = 100.0;
    int points = 100;
    Spacing spacing = Spacing::Log;
    int order = 3;
    std::vector<Method> methods{Method::LP, Method::ALP, Method::VLP};
    std::string out_path;  // CSV destination; empty = stdout
    std::string svg_path;  // optional chart
};

/// Throws DomainError on invalid configuration (lambda_min <= -1, points < 2,
/// log spacing with lambda_min <= 0, bad order, empty methods).
void validate(const SweepConfig& cfg);

struct SweepCell {
    bool ok = false;
    double period = 0.0;
    double abs_error = 0.0;
    std::string failure;  // engine error message; empty when ok
};

struct SweepRow {
    double lambda = 0.0;
    double t_exact = 0.0;
    std::vector<SweepCell> cells;  // parallel to SweepTable::methods
};

struct SweepTable {
    std::vector<Method> methods;  // engine columns, in LP, ALP, VLP order
    int order = 3;
    std::vector<SweepRow> rows;   // ascending lambda
};

/// Evaluates every selected engine on the grid.  Engine failures are recorded
/// per row, never thrown.
SweepTable run_sweep(const SweepConfig& cfg);

bool all_rows_errored(const SweepTable& table);

/// Header "lambda,T_exact[,T_lp,err_lp][,T_alp,err_alp][,T_vlp,err_vlp],error";
/// byte-identical across runs for a fixed config.
void write_csv(const SweepTable& table, std::ostream& os);

/// Self-contained log-log SVG chart of the error columns.
void write_svg(const SweepTable& table, std::ostream& os);

/// Limit of sqrt(lambda) * T as lambda -> infinity: evaluates at lambda = 1e6
/// and 1e7 and Richardson-extrapolates in 1/lambda.
double estimate_limit(Method method, int N);

}  // namespace duffing
