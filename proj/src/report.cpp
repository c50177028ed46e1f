#include "chernslope/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "chernslope/errors.hpp"

namespace chernslope {

namespace {

template <typename F>
auto run_stage(const char* name, F&& body) {
    const std::string label = std::string("stage:") + name;
    try {
        return body();
    } catch (const InternalError& e) {
        throw InternalError(label + ": " + e.what());
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        throw ScenarioError(label, e.what());
    }
}

// All exponent vectors of total degree d inside the truncation box, in
// lexicographic order.
std::vector<Exponents> monomials_of_degree(const ProductSpace& space, int d) {
    std::vector<Exponents> out;
    Exponents e(space.factors(), 0);
    const auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == e.size()) {
            if (remaining == 0) out.push_back(e);
            return;
        }
        for (int k = 0; k <= std::min(remaining, space.dims()[i]); ++k) {
            e[i] = k;
            self(self, i + 1, remaining - k);
        }
        e[i] = 0;
    };
    recurse(recurse, 0, d);
    return out;
}

std::string monomial_name(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "H" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

ReportLine rational_line(std::string key, const Rational& q) {
    return {std::move(key), to_string(q), to_decimal(q)};
}

ReportLine class_line(std::string key, const ChowElement& x) {
    return {std::move(key), serialize(x), serialize_decimal(x)};
}

ReportLine text_line(std::string key, const std::string& text) {
    return {std::move(key), text, text};
}

}  // namespace

bool Report::checks_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Report run_scenario(const Scenario& scenario, const RunOptions& options) {
    const ProductSpace& space = scenario.space;

    const DegeneracyInput input = run_stage("degeneracy", [&] {
        return DegeneracyInput::on_product(space, scenario.a(), scenario.b());
    });
    const BundleClass difference = input.difference();
    const VirtualChernNumbers numbers = run_stage("degeneracy", [&] { return virtual_chern_numbers(input); });
    const ChowElement locus = degeneracy_class(input);

    std::vector<std::pair<Exponents, Rational>> pairings;
    for (const Exponents& e : monomials_of_degree(space, space.dimension() - 2)) {
        const ChowElement monomial(space, ChowElement::Terms{{e, Rational(1)}});
        pairings.emplace_back(e, integrate(locus * monomial));
    }

    FamilyInvariants family = run_stage("family", [&] {
        FamilyOptions opts;
        opts.allow_low_genus = scenario.family.allow_low_genus;
        return invariants_from_chern_numbers(numbers.c1_sq, numbers.c2, scenario.family.fiber_genus,
                                             scenario.family.base_genus, opts);
    });

    std::optional<BaseChangeReport> base_change;
    if (scenario.base_change) {
        base_change = run_stage("base_change", [&] {
            BaseChangeParams params = scenario.base_change->params;
            if (!scenario.base_change->has_base_lambda) params.base_lambda = family.lambda_;
            if (!scenario.base_change->has_base_delta0) params.base_delta0 = family.delta;
            BaseChangeReport r{params,
                               relative_omega_degree(params, 1),
                               relative_omega_degree(params, 2),
                               sigma_tilde_self_intersection(params, 1),
                               sigma_tilde_self_intersection(params, 2),
                               Rational(0),
                               pullback_slope(params)};
            r.delta_correction = r.pullback.correction + r.pullback.delta1_B;
            return r;
        });
    }

    std::vector<CheckResult> checks;
    if (options.check) {
        const Rational double_point = run_stage("check", [&] { return double_point_check(input); });
        checks.push_back({"double_point", numbers.c2, double_point, double_point == numbers.c2});
        const Rational twelve_lambda = 12 * family.lambda_;
        const Rational kappa_delta = family.kappa + family.delta;
        checks.push_back({"mumford", kappa_delta, twelve_lambda, twelve_lambda == kappa_delta});
        if (base_change) {
            const Rational sigma_sum = base_change->sigma_tilde_sq_1 + base_change->sigma_tilde_sq_2;
            checks.push_back({"sigma_tilde_identity", base_change->pullback.correction, sigma_sum,
                              sigma_sum == base_change->pullback.correction});
            const Rational swapped = pullback_slope(base_change->params.swapped()).slope;
            checks.push_back(
                {"swap_symmetry", base_change->pullback.slope, swapped, swapped == base_change->pullback.slope});
        }
    }

    return Report{scenario.name,
                  space,
                  ambient_tangent_of_product(space),
                  scenario.a().rank(),
                  scenario.b().rank(),
                  difference.rank(),
                  {chern(difference, 1), chern(difference, 2), chern(difference, 3), chern(difference, 4)},
                  numbers,
                  locus,
                  std::move(pairings),
                  std::move(family),
                  std::move(base_change),
                  std::move(checks)};
}

std::vector<ReportLine> report_lines(const Report& r) {
    std::vector<ReportLine> lines;
    lines.push_back(text_line("scenario", r.scenario));
    lines.push_back(text_line("space", r.space.to_string()));
    lines.push_back(class_line("ambient.c1", r.tangent.c1));
    lines.push_back(class_line("ambient.c2", r.tangent.c2));
    lines.push_back(rational_line("bundle.A.rank", r.rank_a));
    lines.push_back(rational_line("bundle.B.rank", r.rank_b));
    lines.push_back(rational_line("difference.rank", r.difference_rank));
    for (std::size_t i = 0; i < r.difference_chern.size(); ++i)
        lines.push_back(class_line("difference.c" + std::to_string(i + 1), r.difference_chern[i]));
    lines.push_back(rational_line("degeneracy.c1_sq", r.numbers.c1_sq));
    lines.push_back(rational_line("degeneracy.c2", r.numbers.c2));
    lines.push_back(class_line("degeneracy.class", r.degeneracy_class));
    for (const auto& [e, value] : r.degeneracy_pairings)
        lines.push_back(rational_line("degeneracy.class.pairing[" + monomial_name(e) + "]", value));

    lines.push_back(rational_line("family.fiber_genus", r.family.fiber_genus));
    lines.push_back(rational_line("family.base_genus", r.family.base_genus));
    lines.push_back(rational_line("family.kappa", r.family.kappa));
    lines.push_back(rational_line("family.delta", r.family.delta));
    lines.push_back(rational_line("family.lambda", r.family.lambda_));
    if (r.family.slope)
        lines.push_back(rational_line("family.slope", *r.family.slope));
    else
        lines.push_back(text_line("family.slope", "undefined"));
    for (const std::string& w : r.family.warnings) lines.push_back(text_line("family.warning", w));

    if (r.base_change) {
        const BaseChangeReport& b = *r.base_change;
        lines.push_back(rational_line("base_change.relative_omega.1", b.relative_omega_1));
        lines.push_back(rational_line("base_change.relative_omega.2", b.relative_omega_2));
        lines.push_back(rational_line("base_change.sigma_tilde_sq.1", b.sigma_tilde_sq_1));
        lines.push_back(rational_line("base_change.sigma_tilde_sq.2", b.sigma_tilde_sq_2));
        lines.push_back(rational_line("base_change.delta0_correction", b.pullback.correction));
        lines.push_back(rational_line("base_change.delta_correction", b.delta_correction));
        lines.push_back(rational_line("base_change.lambda", b.pullback.lambda_B));
        lines.push_back(rational_line("base_change.delta0", b.pullback.delta0_B));
        lines.push_back(rational_line("base_change.delta1", b.pullback.delta1_B));
        for (const BoundaryTerm& t : b.pullback.delta_rest_B)
            lines.push_back(rational_line("base_change.delta[" + t.label + "]", t.value));
        lines.push_back(rational_line("base_change.slope", b.pullback.slope));
    }

    for (const CheckResult& c : r.checks) {
        const std::string verdict = c.passed ? "ok" : "MISMATCH";
        lines.push_back({"check." + c.name, to_string(c.actual) + " vs " + to_string(c.expected) + " " + verdict,
                         to_decimal(c.actual) + " vs " + to_decimal(c.expected) + " " + verdict});
    }
    return lines;
}

std::string render_report(const Report& report, OutputFormat format) {
    const std::vector<ReportLine> lines = report_lines(report);
    if (format == OutputFormat::json) {
        nlohmann::ordered_json values = nlohmann::ordered_json::object();
        for (const ReportLine& line : lines) {
            // Repeated keys (warnings) collect into arrays.
            const nlohmann::ordered_json entry{{"exact", line.exact}, {"decimal", line.decimal}};
            if (!values.contains(line.key)) {
                values[line.key] = entry;
            } else {
                nlohmann::ordered_json& slot = values[line.key];
                if (!slot.is_array()) slot = nlohmann::ordered_json::array({slot});
                slot.push_back(entry);
            }
        }
        return values.dump(2) + "\n";
    }
    std::ostringstream out;
    for (const ReportLine& line : lines)
        out << line.key << ": " << (format == OutputFormat::exact ? line.exact : line.decimal) << '\n';
    return out.str();
}

}  // namespace chernslope
