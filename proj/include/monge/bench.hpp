#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monge/methods.hpp"
#include "monge/problems.hpp"

namespace monge::bench {

enum class MethodId { kAEuler, kANewton, kB, kC };
enum class OutputFormat { kCsv, kText };

std::string_view method_name(MethodId method) noexcept;
/// Accepts "A-euler", "A-newton", "B", "C" (case-insensitive).
std::optional<MethodId> parse_method(std::string_view text);

/// Benchmark problems by number: 1, 2, 3. Throws std::invalid_argument otherwise.
Problem example_problem(int example);

struct BenchSpec {
    std::vector<MethodId> methods{MethodId::kB};
    int example = 1;
    std::vector<int> sizes{31, 45, 63, 89, 127};
    MethodConfig config{};
    std::string output_path;  // empty: stdout
    OutputFormat format = OutputFormat::kCsv;

    void validate() const;
};

struct BenchRow {
    MethodId method = MethodId::kB;
    int example = 1;
    int n = 0;
    double error = 0.0;
    int iterations = 0;
    double seconds = 0.0;
    bool converged = false;
    double min_lambda1 = 0.0;
    double min_gtilde = 0.0;
    /// Non-empty when the solve threw; numeric fields are then NaN.
    std::string failure;

    bool failed() const noexcept { return !failure.empty(); }
};

/// Solves one (method, example, N) cell. Solver exceptions are caught and
/// recorded in the row; non-convergence is a normal row with converged = false.
BenchRow run_solve(MethodId method, int example, int n, const MethodConfig& config,
                   SolveReport* report_out = nullptr);

/// One row per (method, N), methods outermost.
std::vector<BenchRow> run_table(const BenchSpec& spec);

struct TimingRow {
    MethodId method = MethodId::kB;
    int n = 0;
    double seconds = 0.0;
    std::string failure;  // copied from the underlying BenchRow; seconds is NaN then

    bool failed() const noexcept { return !failure.empty(); }
};

std::vector<TimingRow> run_timing(const BenchSpec& spec);

inline constexpr std::string_view kTableHeader =
    "method,example,N,error,iters,seconds,converged,min_lambda1,min_gtilde";
inline constexpr std::string_view kTimingHeader = "method,N,seconds";

std::string format_csv(const std::vector<BenchRow>& rows);
/// Inverse of format_csv; throws std::invalid_argument on malformed input.
std::vector<BenchRow> parse_csv(std::string_view text);
/// Aligned text layout: one line per N, one column per method.
std::string format_text(const std::vector<BenchRow>& rows);

std::string format_timing_csv(const std::vector<TimingRow>& rows);
std::vector<TimingRow> parse_timing_csv(std::string_view text);
std::string format_timing_text(const std::vector<TimingRow>& rows);

/// iteration,residual,increment
std::string format_history_csv(const SolveReport& report);

} // namespace monge::bench
