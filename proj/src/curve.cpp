#include "cgmy/curve.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cgmy::curve {

std::vector<double> TimeGrid::points() const
{
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        const double f = count > 1 ? static_cast<double>(i) / (count - 1) : 0.0;
        out[i] = log_scale ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                           : start + f * (stop - start);
    }
    if (count > 0) out.front() = start;
    if (count > 1) out.back() = stop;
    return out;
}

namespace {

double parse_number(const std::string& s, const char* what)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0') throw std::invalid_argument(std::string("bad ") + what + ": \"" + s + "\"");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

} // namespace

TimeGrid parse_grid(const std::string& text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw std::invalid_argument("grid must be START:STOP:COUNT:log|lin, got \"" + text + "\"");
    TimeGrid g;
    g.start = parse_number(parts[0], "grid start");
    g.stop = parse_number(parts[1], "grid stop");
    const double n = parse_number(parts[2], "grid count");
    if (n < 1 || n != std::floor(n)) throw std::invalid_argument("grid count must be a positive integer");
    g.count = static_cast<int>(n);
    if (parts[3] == "log") g.log_scale = true;
    else if (parts[3] != "lin") throw std::invalid_argument("grid scale must be log or lin");
    if (!(g.start > 0)) throw std::invalid_argument("grid start must be > 0");
    if (g.count > 1 && !(g.stop > g.start)) throw std::invalid_argument("grid stop must exceed start");
    return g;
}

std::string format_cell(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_csv(const PriceCurve& c)
{
    std::string out = kCsvHeader;
    out += '\n';
    auto cell = [&](const std::optional<double>& v) {
        out += ',';
        if (v) out += format_cell(*v);
    };
    for (const auto& r : c.rows) {
        out += format_cell(r.t);
        out += ',';
        out += format_cell(r.kappa);
        cell(r.p1);
        cell(r.p2);
        cell(r.p3);
        cell(r.mc_mean);
        cell(r.mc_se);
        cell(r.ift);
        out += '\n';
    }
    return out;
}

PriceCurve parse_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("unexpected CSV header");
    PriceCurve c;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 8) throw std::invalid_argument("CSV row must have 8 fields");
        auto opt = [&](int i) -> std::optional<double> {
            if (f[i].empty()) return std::nullopt;
            return parse_number(f[i], "cell");
        };
        Row r;
        r.t = parse_number(f[0], "t");
        r.kappa = parse_number(f[1], "kappa");
        r.p1 = opt(2);
        r.p2 = opt(3);
        r.p3 = opt(4);
        r.mc_mean = opt(5);
        r.mc_se = opt(6);
        r.ift = opt(7);
        c.rows.push_back(r);
    }
    return c;
}

} // namespace cgmy::curve
