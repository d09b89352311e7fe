#include "duffing/sweep.hpp"

#include "duffing/engines.hpp"
#include "duffing/errors.hpp"
#include "duffing/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace duffing {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

void validate(const SweepConfig& cfg) {
    if (!(cfg.lambda_min > -1.0)) throw DomainError("lambda-min must exceed -1");
    if (!(cfg.lambda_max >= cfg.lambda_min))
        throw DomainError("lambda-max must be >= lambda-min");
    if (cfg.points < 2) throw DomainError("points must be >= 2");
    if (cfg.spacing == Spacing::Log && !(cfg.lambda_min > 0.0))
        throw DomainError("log spacing requires lambda-min > 0");
    if (cfg.order < 1 || cfg.order > kMaxOrder)
        throw DomainError("order must lie in [1, 8]");
    // An empty engine list is allowed: the exact column is always emitted.
    for (Method m : cfg.methods)
        if (m == Method::Naive)
            throw DomainError("the naive expansion defines no period");
}

SweepTable run_sweep(const SweepConfig& cfg) {
    validate(cfg);

    // Engine columns in fixed LP, ALP, VLP order; Exact is always computed.
    SweepTable table;
    table.order = cfg.order;
    for (Method m : {Method::LP, Method::ALP, Method::VLP})
        if (std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end())
            table.methods.push_back(m);

    table.rows.reserve(cfg.points);
    for (int i = 0; i < cfg.points; ++i) {
        const double frac = static_cast<double>(i) / (cfg.points - 1);
        SweepRow row;
        row.lambda = cfg.spacing == Spacing::Log
                         ? cfg.lambda_min *
                               std::pow(cfg.lambda_max / cfg.lambda_min, frac)
                         : cfg.lambda_min + frac * (cfg.lambda_max - cfg.lambda_min);
        row.t_exact = exact_period(DuffingParams{row.lambda}).value;
        for (Method m : table.methods) {
            SweepCell cell;
            try {
                cell.period = period_by_method(m, row.lambda, cfg.order).value;
                cell.abs_error = std::abs(row.t_exact - cell.period);
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.failure = method_name(m) + ": " + e.what();
            }
            row.cells.push_back(std::move(cell));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

bool all_rows_errored(const SweepTable& table) {
    bool any_cell = false;
    for (const SweepRow& row : table.rows)
        for (const SweepCell& cell : row.cells) {
            any_cell = true;
            if (cell.ok) return false;
        }
    return any_cell;
}

void write_csv(const SweepTable& table, std::ostream& os) {
    os << "lambda,T_exact";
    for (Method m : table.methods)
        os << ",T_" << method_name(m) << ",err_" << method_name(m);
    os << ",error\n";

    for (const SweepRow& row : table.rows) {
        os << fmt(row.lambda) << ',' << fmt(row.t_exact);
        std::string failures;
        for (const SweepCell& cell : row.cells) {
            if (cell.ok) {
                os << ',' << fmt(cell.period) << ',' << fmt(cell.abs_error);
            } else {
                os << ",nan,nan";
                if (!failures.empty()) failures += "; ";
                failures += cell.failure;
            }
        }
        // Keep the CSV parseable: no commas inside the message cell.
        std::replace(failures.begin(), failures.end(), ',', ';');
        os << ',' << failures << '\n';
    }
}

namespace {

struct ChartSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;  // (lambda, error), both > 0
};

}  // namespace

void write_svg(const SweepTable& table, std::ostream& os) {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c"};

    std::vector<ChartSeries> series;
    for (std::size_t c = 0; c < table.methods.size(); ++c) {
        ChartSeries s;
        s.label = method_name(table.methods[c]);
        s.color = kColors[c % 3];
        for (const SweepRow& row : table.rows)
            if (row.lambda > 0.0 && row.cells[c].ok && row.cells[c].abs_error > 0.0)
                s.points.emplace_back(row.lambda, row.cells[c].abs_error);
        if (!s.points.empty()) series.push_back(std::move(s));
    }

    const int width = 760, height = 520;
    const int ml = 70, mr = 20, mt = 40, mb = 50;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
       << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2
       << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"16\">Absolute period error vs coupling (order "
       << table.order << ")</text>\n";

    if (series.empty()) {
        os << "<text x=\"" << width / 2 << "\" y=\"" << height / 2
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"14\">no plottable error data</text>\n</svg>\n";
        return;
    }

    double xmin = std::numeric_limits<double>::max(), xmax = 0.0;
    double ymin = std::numeric_limits<double>::max(), ymax = 0.0;
    for (const ChartSeries& s : series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    // Round the ranges out to whole decades.
    const double lx0 = std::floor(std::log10(xmin)), lx1 = std::ceil(std::log10(xmax));
    const double ly0 = std::floor(std::log10(ymin)), ly1 = std::ceil(std::log10(ymax));
    const double xspan = std::max(lx1 - lx0, 1.0), yspan = std::max(ly1 - ly0, 1.0);

    auto px = [&](double lambda) {
        return ml + (std::log10(lambda) - lx0) / xspan * (width - ml - mr);
    };
    auto py = [&](double err) {
        return height - mb - (std::log10(err) - ly0) / yspan * (height - mt - mb);
    };

    // Decade grid and tick labels.
    for (int d = static_cast<int>(lx0); d <= static_cast<int>(lx1); ++d) {
        const double x = px(std::pow(10.0, d));
        os << "<line x1=\"" << fmt2(x) << "\" y1=\"" << mt << "\" x2=\"" << fmt2(x)
           << "\" y2=\"" << height - mb << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << fmt2(x) << "\" y=\"" << height - mb + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"11\">1e"
           << d << "</text>\n";
    }
    for (int d = static_cast<int>(ly0); d <= static_cast<int>(ly1); ++d) {
        const double y = py(std::pow(10.0, d));
        os << "<line x1=\"" << ml << "\" y1=\"" << fmt2(y) << "\" x2=\"" << width - mr
           << "\" y2=\"" << fmt2(y) << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << ml - 6 << "\" y=\"" << fmt2(y + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e"
           << d << "</text>\n";
    }
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << width - ml - mr
       << "\" height=\"" << height - mt - mb
       << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    os << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 10
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"13\">lambda</text>\n";
    os << "<text x=\"18\" y=\"" << (mt + height - mb) / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
          "transform=\"rotate(-90 18 "
       << (mt + height - mb) / 2 << ")\">|T_exact - T_approx|</text>\n";

    for (const ChartSeries& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color
           << "\" stroke-width=\"1.8\" points=\"";
        for (const auto& [x, y] : s.points)
            os << fmt2(px(x)) << ',' << fmt2(py(y)) << ' ';
        os << "\"/>\n";
    }

    // Legend.
    int ly = mt + 14;
    for (const ChartSeries& s : series) {
        os << "<line x1=\"" << width - mr - 120 << "\" y1=\"" << ly << "\" x2=\""
           << width - mr - 90 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << width - mr - 84 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
           << "</text>\n";
        ly += 18;
    }
    os << "</svg>\n";
}

double estimate_limit(Method method, int N) {
    auto scaled = [&](double lambda) {
        return std::sqrt(lambda) * period_by_method(method, lambda, N).value;
    };
    const double f1 = scaled(1e6);
    const double f2 = scaled(1e7);
    // sqrt(lambda) T = L + c / lambda + O(1/lambda^2); eliminate the c term.
    return f2 + (f2 - f1) / 9.0;
}

}  // namespace duffing
