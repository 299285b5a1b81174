#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace tcflow {

/// One pass/fail comparison of a computed value against a bound.
struct Check {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

/// Named inputs, outputs and checks of one computation.
struct Report {
    std::string title;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<std::pair<std::string, double>> outputs;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void input(std::string name, double v) { inputs.emplace_back(std::move(name), v); }
    void output(std::string name, double v) { outputs.emplace_back(std::move(name), v); }
    void note(std::string text) { notes.push_back(std::move(text)); }

    /// Records value <= bound.
    const Check& check_le(std::string name, double value, double bound) {
        checks.push_back({std::move(name), value, bound, value <= bound});
        return checks.back();
    }
    const Check& check(std::string name, double value, double bound, bool pass) {
        checks.push_back({std::move(name), value, bound, pass});
        return checks.back();
    }

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    void append(const Report& other, const std::string& prefix = {}) {
        for (const auto& [k, v] : other.inputs) inputs.emplace_back(prefix + k, v);
        for (const auto& [k, v] : other.outputs) outputs.emplace_back(prefix + k, v);
        for (Check c : other.checks) {
            c.name = prefix + c.name;
            checks.push_back(std::move(c));
        }
        for (const auto& n : other.notes) notes.push_back(prefix + n);
    }

    double output_value(const std::string& name) const {
        for (const auto& [k, v] : outputs)
            if (k == name) return v;
        return std::numeric_limits<double>::quiet_NaN();
    }
};

}  // namespace tcflow
