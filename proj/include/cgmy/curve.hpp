#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cgmy::curve {

struct TimeGrid {
    double start = 0, stop = 0;
    int count = 0;
    bool log_scale = false;

    std::vector<double> points() const;
};

// "START:STOP:COUNT:log|lin"; throws std::invalid_argument
TimeGrid parse_grid(const std::string& text);

struct Row {
    double t = 0;
    double kappa = 0;
    std::optional<double> p1, p2, p3, mc_mean, mc_se, ift;

    bool operator==(const Row&) const = default;
};

struct PriceCurve {
    std::vector<Row> rows;

    bool operator==(const PriceCurve&) const = default;
};

inline constexpr const char* kCsvHeader = "t,kappa,p1,p2,p3,mc_mean,mc_se,ift";
inline constexpr const char* kIvHeader = "t,iv_expansion,iv_from_price";

// %.17g cells; absent values are empty
std::string format_cell(double x);
std::string to_csv(const PriceCurve& c);
PriceCurve parse_csv(const std::string& text);

} // namespace cgmy::curve
