// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chernslope/cli.hpp"
#include "chernslope/report.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace chernslope;

namespace {

constexpr int kPropertyCases = 200;

struct Criterion {
    std::string name;
    std::function<bool(std::ostream&)> body;
};

template <typename T, typename U>
bool expect_eq(std::ostream& log, const std::string& what, const T& actual, const U& expected) {
    const bool ok = actual == expected;
    if (!ok) log << "    " << what << ": got " << actual << ", expected " << expected << '\n';
    return ok;
}

Report bundled(const char* name) {
    return run_scenario(parse_scenario_text(*bundled_scenario(name), name));
}

bool criterion_m15(std::ostream& log) {
    const Report r = bundled("m15");
    bool ok = expect_eq(log, "c1(Z)^2", r.numbers.c1_sq, Rational(216));
    ok &= expect_eq(log, "c2(Z)", r.numbers.c2, Rational(336));
    ok &= expect_eq(log, "kappa", r.family.kappa, Rational(328));
    ok &= expect_eq(log, "delta", r.family.delta, Rational(392));
    ok &= expect_eq(log, "lambda", r.family.lambda_, Rational(60));
    ok &= r.family.slope && expect_eq(log, "slope", *r.family.slope, Rational(98, 15));
    return ok;
}

bool criterion_m16(std::ostream& log) {
    const Report r = bundled("m16");
    if (!r.base_change) return false;
    const BaseChangeReport& b = *r.base_change;
    bool ok = expect_eq(log, "sigma~_1^2", b.sigma_tilde_sq_1, Rational(-3096));
    ok &= expect_eq(log, "sigma~_2^2", b.sigma_tilde_sq_2, Rational(-3096));
    ok &= expect_eq(log, "lambda_B", b.pullback.lambda_B, Rational(60 * 14 * 14));
    ok &= expect_eq(log, "lambda_B", b.pullback.lambda_B, Rational(11760));
    ok &= expect_eq(log, "delta1_B", b.pullback.delta1_B, Rational(16));
    ok &= expect_eq(log, "slope", b.pullback.slope, Rational(1472, 245));
    ok &= expect_eq(log, "slope decimal", to_decimal(b.pullback.slope), std::string("6.00816"));
    return ok;
}

bool criterion_correction(std::ostream& log) {
    const Report r = bundled("m16");
    if (!r.base_change) return false;
    bool ok = expect_eq(log, "delta0 correction", r.base_change->pullback.correction, Rational(-6192));
    ok &= expect_eq(log, "combined correction", r.base_change->delta_correction, Rational(-2 * (14 * 220 + 16) + 16));
    ok &= expect_eq(log, "combined correction", r.base_change->delta_correction, Rational(-6176));
    return ok;
}

bool criterion_degrees(std::ostream& log) {
    const ChowElement z = degeneracy_class(fixtures::m15_input());
    bool ok = expect_eq(log, "[Z].H1H2", integrate(z * fixtures::h(1) * fixtures::h(2)), Rational(14));
    ok &= expect_eq(log, "[Z].H2^2", integrate(z * fixtures::h(2) * fixtures::h(2)), Rational(16));
    return ok;
}

bool criterion_oracles(std::ostream& log) {
    bool ok = expect_eq(log, "double point (m15)", double_point_check(fixtures::m15_input()), Rational(336));
    ok &= expect_eq(log, "c2(Z) (m15)", virtual_chern_numbers(fixtures::m15_input()).c2, Rational(336));

    const oracle::ChernNumbers brute = oracle::brute_force_chern_numbers({{{1, 0}, {0, 1}}, {}}, {{{0, 0}}, {}});
    ok &= expect_eq(log, "brute force c2(Z) (small)", brute.c2, Rational(3));
    ok &= expect_eq(log, "brute force double point (small)", brute.double_point, Rational(3));
    ok &= expect_eq(log, "c2(Z) (small)", virtual_chern_numbers(fixtures::small_input()).c2, Rational(3));
    ok &= expect_eq(log, "double point (small)", double_point_check(fixtures::small_input()), Rational(3));
    return ok;
}

bool criterion_properties(std::ostream& log) {
    int failures = 0;
    const auto fail = [&](const char* what) {
        if (failures++ < 10) log << "    property failed: " << what << '\n';
    };

    gen::Engine rng(0xacce0006);
    for (int n = 0; n < kPropertyCases; ++n) {
        const ProductSpace s = gen::space(rng);
        const ChowElement x = gen::element(rng, s), y = gen::element(rng, s), z = gen::element(rng, s);
        if (!(x * y == y * x)) fail("commutativity");
        if (!((x * y) * z == x * (y * z))) fail("associativity");
        if (!(x * (y + z) == x * y + x * z)) fail("distributivity");
        if (!(ChowElement(s, x.terms()) == x)) fail("truncation idempotence");
        const ChowElement u = gen::unit(rng, s);
        if (!(u * invert_unit_series(u) == ChowElement::one(s))) fail("mul(x, invert(x)) = 1");
    }
    for (int n = 0; n < kPropertyCases; ++n) {
        const ProductSpace s = gen::space(rng);
        const BundleClass e = gen::line_sum(rng, s), f = gen::line_sum(rng, s);
        if (!(kernel_from_sequence(direct_sum(e, f), f).total_chern() == e.total_chern())) fail("Whitney cancellation");
        const BundleClass quotient = gen::line_sum(rng, s, 2);
        BundleClass middle = gen::line_sum(rng, s);
        while (middle.rank() < quotient.rank()) middle = direct_sum(middle, gen::line_sum(rng, s));
        const BundleClass l = line_bundle(s, gen::degrees(rng, s));
        if (!(kernel_from_sequence(twist(middle, l), twist(quotient, l)) ==
              twist(kernel_from_sequence(middle, quotient), l)))
            fail("twist-sequence commutation");
    }
    for (int n = 0; n < kPropertyCases; ++n) {
        const BaseChangeParams p = gen::base_change_params(rng);
        if (beta_delta0_correction(p) != sigma_tilde_self_intersection(p, 1) + sigma_tilde_self_intersection(p, 2))
            fail("beta/sigma~ identity");
        const BaseChangeParams q = p.swapped();
        if (beta_delta0_correction(q) != beta_delta0_correction(p) || pullback_slope(q).slope != pullback_slope(p).slope)
            fail("index-swap symmetry");
    }
    for (int n = 0; n < kPropertyCases; ++n) {
        const Rational c1_sq = gen::uniform(rng, -500, 500), c2 = gen::uniform(rng, -500, 500);
        const FamilyInvariants f = invariants_from_chern_numbers(c1_sq, c2, gen::uniform(rng, 2, 40), gen::uniform(rng, 0, 6));
        if (12 * f.lambda_ != f.kappa + f.delta) fail("12 lambda = kappa + delta");
    }
    log << "    " << kPropertyCases << " cases per suite, " << failures << " failures\n";
    return failures == 0;
}

bool criterion_determinism(std::ostream& log) {
    bool ok = true;
    for (const char* name : {"m15", "m16"}) {
        for (const char* format : {"exact", "decimal", "json"}) {
            std::ostringstream a, b, err;
            const int ca = run_cli({"--scenario", name, "--format", format, "--check"}, a, err);
            const int cb = run_cli({"--scenario", name, "--format", format, "--check"}, b, err);
            if (ca != kExitOk || cb != kExitOk || a.str() != b.str()) {
                log << "    " << name << " --format " << format << " differs between runs\n";
                ok = false;
            }
        }
        // Exact serializations reproduce themselves through the parser.
        const Report r = bundled(name);
        for (const ChowElement& c : r.difference_chern) {
            if (serialize(parse_chow_element(r.space, serialize(c))) != serialize(c)) {
                log << "    serialization round trip failed for " << serialize(c) << '\n';
                ok = false;
            }
        }
        if (render_report(r, OutputFormat::exact) != render_report(bundled(name), OutputFormat::exact)) ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1 m15 pipeline: 216, 336, 328, 392, 60, 98/15", criterion_m15},
        {"2 m16 pipeline: -3096 x2, 11760, 16, 1472/245 (6.00816)", criterion_m16},
        {"3 corrected delta_0 formula: -6192, -6176", criterion_correction},
        {"4 degeneracy class degrees: 14, 16", criterion_degrees},
        {"5 oracle equivalence: double point 336; small instance 3", criterion_oracles},
        {"6 property suites", criterion_properties},
        {"7 determinism", criterion_determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << '\n';
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        if (ms >= 1000) {
            log << "    runtime " << ms << " ms exceeds the 1 s budget\n";
            ok = false;
        }
        std::cout << (ok ? "PASS " : "FAIL ") << "criterion " << c.name << " (" << ms << " ms)\n" << log.str();
        if (!ok) ++failed;
    }
    std::cout << (failed ? "acceptance FAILED" : "acceptance passed") << " (" << criteria.size() - failed << "/"
              << criteria.size() << ")\n";
    return failed ? 1 : 0;
}
