#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chernslope/base_change.hpp"
#include "chernslope/degeneracy.hpp"
#include "chernslope/family.hpp"
#include "chernslope/scenario.hpp"

namespace chernslope {

struct BaseChangeReport {
    BaseChangeParams params;
    Rational relative_omega_1;
    Rational relative_omega_2;
    Rational sigma_tilde_sq_1;
    Rational sigma_tilde_sq_2;
    /// delta_0 correction plus the new delta_1 contribution A_1.A_2.
    Rational delta_correction;
    PullbackSlope pullback;
};

struct CheckResult {
    std::string name;
    Rational expected;
    Rational actual;
    bool passed = false;
};

struct Report {
    std::string scenario;
    ProductSpace space;
    TangentClasses tangent;
    long rank_a = 0;
    long rank_b = 0;
    long difference_rank = 0;
    /// c_1 .. c_4 of B - A.
    std::array<ChowElement, 4> difference_chern;
    VirtualChernNumbers numbers;
    ChowElement degeneracy_class;
    /// Integral of the degeneracy class against each complementary monomial.
    std::vector<std::pair<Exponents, Rational>> degeneracy_pairings;
    FamilyInvariants family;
    std::optional<BaseChangeReport> base_change;
    std::vector<CheckResult> checks;

    bool checks_passed() const;
};

struct RunOptions {
    /// Also evaluate the double point formula and the sigma~/correction
    /// identity and record them in Report::checks.
    bool check = false;
};

/// Runs every stage. Errors from inner modules come back as ScenarioError
/// keyed "stage:<name>"; InternalError is rethrown with the stage prefixed.
Report run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// One row per reported value, in output order: key, exact text, decimal text.
struct ReportLine {
    std::string key;
    std::string exact;
    std::string decimal;
};

std::vector<ReportLine> report_lines(const Report& report);

enum class OutputFormat { exact, decimal, json };

std::string render_report(const Report& report, OutputFormat format);

}  // namespace chernslope
