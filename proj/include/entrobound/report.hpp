/*
 * Run reports: one row per evaluated inequality plus a constants section
 * for regression values. Serialized as "entrobound-report/1" JSON or as
 * an aligned human-readable table.
 *
 * Row conventions: slack >= 0 means the instance sits inside the
 * inequality; a row passes when slack >= -tolerance. Theorem rows use
 * slack = lhs - rhs; equality-style rows (saturation, dilation
 * residuals) use slack = -|deviation|. Informational rows never fail
 * and stay out of the min-slack summary.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entrobound/scenario.hpp"

namespace entrobound {

struct ReportRow {
    std::string check;
    std::string instance;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = true;
    bool informational = false;
};

struct ConstantRow {
    std::string name;
    double value = 0.0;
    double lo = 0.0;   // pass iff lo <= value <= hi
    double hi = 0.0;
    bool pass = false;
    bool equality = false;  // formatting: show expected/dev instead of range
    double expected = 0.0;
};

ConstantRow expect_equal(std::string name, double value, double expected, double tol);
ConstantRow expect_range(std::string name, double value, double lo, double hi);

struct RunReport {
    std::string kind;  // "scenario" | "campaign" | "paper-regression"
    std::vector<ConstantRow> constants;
    std::vector<ReportRow> rows;
    Json config;          // campaign config echo, null otherwise
    Json worst_instance;  // reproducer for the minimum-slack trial, null otherwise
    std::string worst_id;
    std::vector<Json> failures;  // reproducing instances of failed trials

    std::size_t pass_count() const;
    std::size_t fail_count() const;
    double min_slack() const;  // over non-informational rows
    bool all_pass() const;
};

enum class ReportFormat { Human, Json };

ReportFormat parse_report_format(const std::string& name);

Json report_to_json(const RunReport& report);
std::string emit_report(const RunReport& report, ReportFormat format);

} // namespace entrobound
