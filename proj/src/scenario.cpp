#include "chernslope/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bundled_scenarios.inc"
#include "chernslope/bundle_expr.hpp"
#include "chernslope/errors.hpp"

namespace chernslope {

namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ScenarioError(path + key, "missing required key");
    return *it;
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_string()) throw ScenarioError(path + key, "expected a string");
    return v.get<std::string>();
}

long as_integer(const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw ScenarioError(key, "expected an integer");
    return v.get<long>();
}

long require_integer(const json& obj, const std::string& key, const std::string& path) {
    return as_integer(require(obj, key, path), path + key);
}

Rational as_rational(const json& v, const std::string& key) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ScenarioError(key, e.what());
        }
    }
    throw ScenarioError(key, "expected an integer or a \"p/q\" string");
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known, const std::string& path) {
    for (const auto& [key, value] : obj.items())
        if (!known.contains(key)) throw ScenarioError(path + key, "unknown key");
}

ProductSpace parse_space(const json& root) {
    const json& v = require(root, "space", "");
    if (!v.is_array() || v.empty()) throw ScenarioError("space", "expected a nonempty array of dimensions");
    std::vector<int> dims;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const long n = as_integer(v[i], "space[" + std::to_string(i) + "]");
        if (n < 1) throw ScenarioError("space[" + std::to_string(i) + "]", "dimension must be >= 1");
        dims.push_back(static_cast<int>(n));
    }
    return ProductSpace(std::move(dims));
}

// Evaluates every definition, resolving references between them on demand.
class BundleTable {
public:
    BundleTable(const ProductSpace& space, const std::map<std::string, std::string>& definitions)
        : space_(space), definitions_(definitions) {}

    std::map<std::string, BundleClass> evaluate_all() {
        for (const auto& [name, text] : definitions_) resolve(name, "bundles." + name);
        return std::move(done_);
    }

private:
    BundleClass resolve(const std::string& name, const std::string& referrer) {
        if (const auto it = done_.find(name); it != done_.end()) return it->second;
        const auto def = definitions_.find(name);
        if (def == definitions_.end()) throw ScenarioError(referrer, "unresolved bundle name '" + name + "'");
        const std::string key = "bundles." + name;
        if (!active_.insert(name).second) throw ScenarioError(key, "cyclic bundle definition");

        BundleClass value = [&] {
            try {
                return evaluate_bundle_expression(space_, def->second,
                                                  [&](const std::string& ref) { return resolve(ref, key); });
            } catch (const ScenarioError&) {
                throw;
            } catch (const InternalError&) {
                throw;
            } catch (const std::exception& e) {
                throw ScenarioError(key, e.what());
            }
        }();
        active_.erase(name);
        return done_.emplace(name, std::move(value)).first->second;
    }

    const ProductSpace& space_;
    const std::map<std::string, std::string>& definitions_;
    std::map<std::string, BundleClass> done_;
    std::set<std::string> active_;
};

BaseChangeSpec parse_base_change(const json& v, const FamilySpec& family) {
    const std::string path = "base_change.";
    if (!v.is_object()) throw ScenarioError("base_change", "expected an object");
    reject_unknown_keys(v,
                        {"m1", "m2", "g_A1", "g_A2", "A1_sq", "A2_sq", "A12", "base_genus", "base_lambda",
                         "base_delta0", "base_delta_rest"},
                        path);
    BaseChangeSpec spec;
    BaseChangeParams& p = spec.params;
    p.m1 = require_integer(v, "m1", path);
    p.m2 = require_integer(v, "m2", path);
    p.g_A1 = require_integer(v, "g_A1", path);
    p.g_A2 = require_integer(v, "g_A2", path);
    p.A1_sq = require_integer(v, "A1_sq", path);
    p.A2_sq = require_integer(v, "A2_sq", path);
    p.A12 = require_integer(v, "A12", path);
    p.base_genus = v.contains("base_genus") ? as_integer(v["base_genus"], path + "base_genus") : family.base_genus;
    if (v.contains("base_lambda")) {
        p.base_lambda = as_rational(v["base_lambda"], path + "base_lambda");
        spec.has_base_lambda = true;
    }
    if (v.contains("base_delta0")) {
        p.base_delta0 = as_rational(v["base_delta0"], path + "base_delta0");
        spec.has_base_delta0 = true;
    }
    if (v.contains("base_delta_rest")) {
        const json& rest = v["base_delta_rest"];
        if (!rest.is_array()) throw ScenarioError(path + "base_delta_rest", "expected an array");
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const std::string item = path + "base_delta_rest[" + std::to_string(i) + "].";
            if (!rest[i].is_object()) throw ScenarioError(item, "expected an object");
            p.base_delta_rest.push_back(
                {require_string(rest[i], "label", item), as_rational(require(rest[i], "value", item), item + "value")});
        }
    }
    if (p.m1 < 1) throw ScenarioError(path + "m1", "multisection degree must be >= 1");
    if (p.m2 < 1) throw ScenarioError(path + "m2", "multisection degree must be >= 1");
    if (p.A12 < 0) throw ScenarioError(path + "A12", "must be >= 0");
    return spec;
}

}  // namespace

Scenario parse_scenario_text(std::string_view text, const std::string& source) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ScenarioError("(root)", source + " is not valid JSON: " + e.what());
    }
    if (!root.is_object()) throw ScenarioError("(root)", "expected a JSON object");
    reject_unknown_keys(root, {"name", "space", "bundles", "degeneracy", "family", "base_change"}, "");

    std::string name = require_string(root, "name", "");
    ProductSpace space = parse_space(root);

    const json& bundles = require(root, "bundles", "");
    if (!bundles.is_object() || bundles.empty()) throw ScenarioError("bundles", "expected a nonempty object");
    std::map<std::string, std::string> definitions;
    for (const auto& [key, value] : bundles.items()) {
        if (!value.is_string()) throw ScenarioError("bundles." + key, "expected a bundle expression string");
        definitions.emplace(key, value.get<std::string>());
    }

    const json& degeneracy = require(root, "degeneracy", "");
    if (!degeneracy.is_object()) throw ScenarioError("degeneracy", "expected an object");
    reject_unknown_keys(degeneracy, {"A", "B"}, "degeneracy.");
    std::string a_name = require_string(degeneracy, "A", "degeneracy.");
    std::string b_name = require_string(degeneracy, "B", "degeneracy.");

    const json& family_json = require(root, "family", "");
    if (!family_json.is_object()) throw ScenarioError("family", "expected an object");
    reject_unknown_keys(family_json, {"fiber_genus", "base_genus", "allow_low_genus"}, "family.");
    FamilySpec family;
    family.fiber_genus = require_integer(family_json, "fiber_genus", "family.");
    family.base_genus = require_integer(family_json, "base_genus", "family.");
    if (family_json.contains("allow_low_genus")) {
        if (!family_json["allow_low_genus"].is_boolean())
            throw ScenarioError("family.allow_low_genus", "expected a boolean");
        family.allow_low_genus = family_json["allow_low_genus"].get<bool>();
    }
    if (family.fiber_genus < 0) throw ScenarioError("family.fiber_genus", "must be >= 0");
    if (family.fiber_genus < 2 && !family.allow_low_genus)
        throw ScenarioError("family.fiber_genus", "genus < 2 requires allow_low_genus");
    if (family.base_genus < 0) throw ScenarioError("family.base_genus", "must be >= 0");

    std::optional<BaseChangeSpec> base_change;
    if (root.contains("base_change")) base_change = parse_base_change(root["base_change"], family);

    std::map<std::string, BundleClass> resolved = BundleTable(space, definitions).evaluate_all();

    const auto a = resolved.find(a_name);
    if (a == resolved.end()) throw ScenarioError("degeneracy.A", "unresolved bundle name '" + a_name + "'");
    const auto b = resolved.find(b_name);
    if (b == resolved.end()) throw ScenarioError("degeneracy.B", "unresolved bundle name '" + b_name + "'");
    if (b->second.rank() != a->second.rank() + 1)
        throw ScenarioError("degeneracy", "rank mismatch: rank B = " + std::to_string(b->second.rank()) +
                                              " must equal rank A + 1 = " + std::to_string(a->second.rank() + 1));
    if (space.dimension() != 4)
        throw ScenarioError("space", "ambient dimension is " + std::to_string(space.dimension()) + ", expected 4");

    return Scenario{std::move(name),   std::move(space),  std::move(definitions), std::move(resolved),
                    std::move(a_name), std::move(b_name), family,                 std::move(base_change)};
}

Scenario parse_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioError("config", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), path);
}

std::optional<std::string_view> bundled_scenario(std::string_view name) {
    for (const auto& [bundled_name, text] : kBundledScenarios)
        if (bundled_name == name) return text;
    return std::nullopt;
}

}  // namespace chernslope
