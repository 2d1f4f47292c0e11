#include "monge/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace monge::bench {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) out.push_back(line);
        start = end + 1;
    }
    return out;
}

double to_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("bad number in CSV: '" + s + "'");
    return v;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer in CSV: '" + s + "'");
    return v;
}

MethodId to_method(const std::string& s) {
    const auto m = parse_method(s);
    if (!m) throw std::invalid_argument("unknown method in CSV: '" + s + "'");
    return *m;
}

SolveReport dispatch(MethodId method, const Problem& problem, int n, const MethodConfig& config) {
    switch (method) {
        case MethodId::kAEuler: return method_a_euler(problem, n, config);
        case MethodId::kANewton: return method_a_newton(problem, n, config);
        case MethodId::kB: return method_b_solve(problem, n, config);
        case MethodId::kC: return method_c_solve(problem, n, config);
    }
    throw std::invalid_argument("unknown method");
}

} // namespace

std::string_view method_name(MethodId method) noexcept {
    switch (method) {
        case MethodId::kAEuler: return "A-euler";
        case MethodId::kANewton: return "A-newton";
        case MethodId::kB: return "B";
        case MethodId::kC: return "C";
    }
    return "?";
}

std::optional<MethodId> parse_method(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "a-euler") return MethodId::kAEuler;
    if (lower == "a-newton") return MethodId::kANewton;
    if (lower == "b") return MethodId::kB;
    if (lower == "c") return MethodId::kC;
    return std::nullopt;
}

Problem example_problem(int example) {
    switch (example) {
        case 1: return example1();
        case 2: return example2();
        case 3: return example3();
    }
    throw std::invalid_argument("example must be 1, 2 or 3, got " + std::to_string(example));
}

void BenchSpec::validate() const {
    example_problem(example);
    for (int n : sizes)
        if (n < 3) throw std::invalid_argument("grid size must be >= 3, got " + std::to_string(n));
    if (methods.empty()) throw std::invalid_argument("at least one method is required");
    config.validate();
}

BenchRow run_solve(MethodId method, int example, int n, const MethodConfig& config, SolveReport* report_out) {
    BenchRow row;
    row.method = method;
    row.example = example;
    row.n = n;
    try {
        const Problem problem = example_problem(example);
        SolveReport rep = dispatch(method, problem, n, config);
        row.error = linf_error(rep.u, problem);
        row.iterations = rep.iterations;
        row.seconds = rep.seconds;
        row.converged = rep.converged;
        row.min_lambda1 = rep.min_lambda1;
        row.min_gtilde = rep.min_gtilde;
        if (report_out) *report_out = std::move(rep);
    } catch (const std::exception& e) {
        row.failure = e.what();
        if (row.failure.empty()) row.failure = "solver failure";
        row.error = row.seconds = row.min_lambda1 = row.min_gtilde = kNaN;
        row.converged = false;
    }
    return row;
}

std::vector<BenchRow> run_table(const BenchSpec& spec) {
    spec.validate();
    std::vector<BenchRow> rows;
    for (MethodId m : spec.methods)
        for (int n : spec.sizes) rows.push_back(run_solve(m, spec.example, n, spec.config));
    return rows;
}

std::vector<TimingRow> run_timing(const BenchSpec& spec) {
    std::vector<TimingRow> out;
    for (const BenchRow& row : run_table(spec)) out.push_back({row.method, row.n, row.seconds, row.failure});
    return out;
}

std::string format_csv(const std::vector<BenchRow>& rows) {
    std::string out(kTableHeader);
    out += '\n';
    for (const BenchRow& r : rows) {
        out += std::string(method_name(r.method)) + ',' + std::to_string(r.example) + ',' + std::to_string(r.n) +
               ',' + sci(r.error) + ',' + std::to_string(r.iterations) + ',' + sci(r.seconds) + ',' +
               (r.converged ? "true" : "false") + ',' + sci(r.min_lambda1) + ',' + sci(r.min_gtilde) + '\n';
    }
    return out;
}

std::vector<BenchRow> parse_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines.front() != kTableHeader) throw std::invalid_argument("missing CSV header");
    std::vector<BenchRow> rows;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto f = split(lines[k], ',');
        if (f.size() != 9) throw std::invalid_argument("expected 9 fields in CSV row");
        BenchRow r;
        r.method = to_method(f[0]);
        r.example = to_int(f[1]);
        r.n = to_int(f[2]);
        r.error = to_double(f[3]);
        r.iterations = to_int(f[4]);
        r.seconds = to_double(f[5]);
        if (f[6] != "true" && f[6] != "false") throw std::invalid_argument("bad converged flag in CSV");
        r.converged = f[6] == "true";
        r.min_lambda1 = to_double(f[7]);
        r.min_gtilde = to_double(f[8]);
        rows.push_back(r);
    }
    return rows;
}

std::string format_text(const std::vector<BenchRow>& rows) {
    std::vector<MethodId> methods;
    std::vector<int> sizes;
    std::map<std::pair<int, int>, const BenchRow*> cell;
    for (const BenchRow& r : rows) {
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
        if (std::find(sizes.begin(), sizes.end(), r.n) == sizes.end()) sizes.push_back(r.n);
        cell[{static_cast<int>(r.method), r.n}] = &r;
    }
    std::ostringstream os;
    if (!rows.empty())
        os << "Errors ||u - u_N||_inf, example " << rows.front().example << ", N x N grid\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%6s", "N");
    os << buf;
    for (MethodId m : methods) {
        std::snprintf(buf, sizeof buf, " | %-30s", std::string(method_name(m)).c_str());
        os << buf;
    }
    os << '\n';
    for (int n : sizes) {
        std::snprintf(buf, sizeof buf, "%6d", n);
        os << buf;
        for (MethodId m : methods) {
            const auto it = cell.find({static_cast<int>(m), n});
            std::string text;
            if (it == cell.end()) {
                text = "-";
            } else if (it->second->failed()) {
                text = "failed";
            } else {
                const BenchRow& r = *it->second;
                std::snprintf(buf, sizeof buf, "%.4e %5d it %7.2fs%s", r.error, r.iterations, r.seconds,
                              r.converged ? "" : "*");
                text = buf;
            }
            std::snprintf(buf, sizeof buf, " | %-30s", text.c_str());
            os << buf;
        }
        os << '\n';
    }
    if (std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return !r.converged && !r.failed(); }))
        os << "* not converged (best iterate reported)\n";
    return os.str();
}

std::string format_timing_csv(const std::vector<TimingRow>& rows) {
    std::string out(kTimingHeader);
    out += '\n';
    for (const TimingRow& r : rows)
        out += std::string(method_name(r.method)) + ',' + std::to_string(r.n) + ',' + sci(r.seconds) + '\n';
    return out;
}

std::vector<TimingRow> parse_timing_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines.front() != kTimingHeader) throw std::invalid_argument("missing CSV header");
    std::vector<TimingRow> rows;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto f = split(lines[k], ',');
        if (f.size() != 3) throw std::invalid_argument("expected 3 fields in timing CSV row");
        rows.push_back({to_method(f[0]), to_int(f[1]), to_double(f[2]), {}});
    }
    return rows;
}

std::string format_timing_text(const std::vector<TimingRow>& rows) {
    std::ostringstream os;
    char buf[64];
    os << "method        N    seconds\n";
    for (const TimingRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%-10s %4d %10.3f\n", std::string(method_name(r.method)).c_str(), r.n,
                      r.seconds);
        os << buf;
    }
    return os.str();
}

std::string format_history_csv(const SolveReport& report) {
    std::string out = "iteration,residual,increment\n";
    for (std::size_t k = 0; k < report.residual_history.size(); ++k) {
        const double inc = k < report.increment_history.size() ? report.increment_history[k] : kNaN;
        out += std::to_string(k) + ',' + sci(report.residual_history[k]) + ',' + sci(inc) + '\n';
    }
    return out;
}

} // namespace monge::bench
