// Copyright 2026 The isored Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isored/dynamics.hpp"

#include <algorithm>

namespace isored {

std::optional<Rule> builtin_rule(const std::string& name) {
    if (name == "tau1") return Rule{"tau1", Characteristic::Degree, Rational(1, 2), true};
    if (name == "tau2") return Rule{"tau2", Characteristic::Indegree, Rational(1, 2), false};
    if (name == "tau3") return Rule{"tau3", Characteristic::Indegree, Rational(1, 4), true};
    return std::nullopt;
}

Rule parse_rule(const std::string& spec) {
    if (auto rule = builtin_rule(spec)) return *rule;

    auto first = spec.find(':');
    auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
    if (second == std::string::npos)
        throw Error("invalid rule '" + spec + "' (expected tau1|tau2|tau3 or characteristic:fraction:gt|ge)");

    Rule rule;
    rule.name = spec;
    auto characteristic = characteristic_from_string(spec.substr(0, first));
    if (!characteristic) throw Error("unknown characteristic in rule '" + spec + "'");
    rule.characteristic = *characteristic;

    std::string fraction = spec.substr(first + 1, second - first - 1);
    try {
        auto slash = fraction.find('/');
        if (slash == std::string::npos)
            rule.fraction = Rational(Integer(fraction));
        else
            rule.fraction = Rational(Integer(fraction.substr(0, slash)), Integer(fraction.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error("invalid fraction in rule '" + spec + "'");
    }
    if (rule.fraction < 0) throw Error("rule fraction must be nonnegative");

    std::string comparison = spec.substr(second + 1);
    if (comparison == "gt")
        rule.strict = true;
    else if (comparison == "ge")
        rule.strict = false;
    else
        throw Error("invalid comparison '" + comparison + "' in rule (use gt or ge)");
    return rule;
}

std::set<Label> apply_rule(const Rule& rule, const Graph& g) {
    if (g.size() == 0) throw std::invalid_argument("rule applied to an empty graph");
    CharacteristicVector cv = characteristic_values(g, rule.characteristic, rule.convention);

    Rational max_value = cv.values.begin()->second;
    for (const auto& [l, v] : cv.values) max_value = std::max(max_value, v);
    Rational threshold = rule.fraction * max_value;

    std::set<Label> selected;
    for (const auto& [l, v] : cv.values)
        if (rule.strict ? v > threshold : v >= threshold) selected.insert(l);
    if (selected.empty()) throw EmptySelection(rule.name);
    return selected;
}

Graph step(const Rule& rule, const Graph& g) { return reduce_to(g, apply_rule(rule, g)); }

const char* to_string(TerminationReason reason) {
    switch (reason) {
        case TerminationReason::FixedPoint: return "fixed-point";
        case TerminationReason::SingleVertex: return "single-vertex";
        case TerminationReason::StepCap: return "step-cap";
        case TerminationReason::Error: return "error";
    }
    return "?";
}

OrbitResult orbit(const Rule& rule, const Graph& g, std::optional<std::size_t> max_steps) {
    if (g.size() == 0) throw std::invalid_argument("orbit of an empty graph");
    const std::size_t cap = max_steps.value_or(g.size());

    OrbitResult result;
    Orbit& orb = result.orbit;
    orb.graphs.push_back(g);
    for (;;) {
        const Graph& current = orb.graphs.back();
        if (current.size() == 1) {
            // Try the rule anyway: a selected single vertex is a fixed
            // point; a rule that selects nothing still terminates here.
            try {
                if (apply_rule(rule, current).size() == 1) {
                    orb.selections.push_back({current.labels().front()});
                    orb.terminated = TerminationReason::FixedPoint;
                    break;
                }
            } catch (const EmptySelection&) {
            }
            orb.terminated = TerminationReason::SingleVertex;
            break;
        }
        std::set<Label> selected = apply_rule(rule, current);
        orb.selections.push_back(selected);
        if (selected.size() == current.size()) {
            orb.terminated = TerminationReason::FixedPoint;
            break;
        }
        if (orb.steps() >= cap) throw StepCapExceeded(cap);
        orb.graphs.push_back(reduce_to(current, selected));
    }

    result.report.attractor = orb.attractor();
    result.report.steps = orb.steps();
    UniformityCheck u = uniformity(rule.characteristic, orb.attractor(), rule.convention);
    result.report.uniform = u.uniform;
    result.report.values = std::move(u.values);
    return result;
}

bool is_attractor(const Rule& rule, const Graph& g) {
    if (g.size() == 1) return true;
    try {
        return apply_rule(rule, g).size() == g.size();
    } catch (const EmptySelection&) {
        return false;
    }
}

UniformityCheck uniformity(Characteristic which, const Graph& g, PairConvention convention) {
    UniformityCheck out;
    out.values = characteristic_values(g, which, convention);
    out.uniform = true;
    for (const auto& [l, v] : out.values.values)
        out.uniform = out.uniform && v == out.values.values.begin()->second;
    return out;
}

}  // namespace isored
