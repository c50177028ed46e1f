#pragma once

// Scenario files: JSON documents describing one end-to-end computation.
//
//   {
//     "name": "m15",
//     "space": [1, 3],
//     "bundles": { "A": "O(0,0)^4", "E": "ker(...)", "B": "twist(E, O(0,2))" },
//     "degeneracy": { "A": "A", "B": "B" },
//     "family": { "fiber_genus": 15, "base_genus": 0, "allow_low_genus": false },
//     "base_change": {                      optional
//       "m1": 14, "m2": 14, "g_A1": 105, "g_A2": 105,
//       "A1_sq": 16, "A2_sq": 16, "A12": 16,
//       "base_genus": 0,                    optional, defaults to family.base_genus
//       "base_lambda": "60",                optional, defaults to family lambda
//       "base_delta0": "392",               optional, defaults to family delta
//       "base_delta_rest": [ { "label": "i>1", "value": 0 } ]
//     }
//   }
//
// Rationals may be JSON integers or strings "p/q". The full schema lives in
// docs/scenario.schema.json.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chernslope/base_change.hpp"
#include "chernslope/bundle.hpp"

namespace chernslope {

/// Invalid scenario, tagged with the JSON key (or pipeline stage) at fault.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

struct FamilySpec {
    long fiber_genus = 0;
    long base_genus = 0;
    bool allow_low_genus = false;
};

struct BaseChangeSpec {
    /// base_lambda / base_delta0 in here are only meaningful when the
    /// matching flag below is set.
    BaseChangeParams params;
    bool has_base_lambda = false;
    bool has_base_delta0 = false;
};

struct Scenario {
    std::string name;
    ProductSpace space;
    std::map<std::string, std::string> definitions;
    std::map<std::string, BundleClass> bundles;
    std::string a_name;
    std::string b_name;
    FamilySpec family;
    std::optional<BaseChangeSpec> base_change;

    const BundleClass& a() const { return bundles.at(a_name); }
    const BundleClass& b() const { return bundles.at(b_name); }
};

/// Reads and validates a scenario file.
Scenario parse_scenario(const std::string& path);

/// Same, from an in-memory document. `source` only appears in diagnostics.
Scenario parse_scenario_text(std::string_view text, const std::string& source = "<memory>");

/// Bundled scenario documents by name ("m15", "m16"); nullopt if unknown.
std::optional<std::string_view> bundled_scenario(std::string_view name);

}  // namespace chernslope
