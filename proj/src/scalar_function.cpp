// SPDX-License-Identifier: Apache-2.0
#include "schatten/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schatten {

std::string to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::nondecreasing: return "nondecreasing";
        case Monotonicity::strictly_increasing: return "strictly-increasing";
        default: return "general";
    }
}

std::string ScalarFunction::name() const {
    std::string kind = descriptor_.at("kind").get<std::string>();
    if (kind == "monotone-split")
        return kind + "-" + descriptor_.at("part").get<std::string>() + "(" +
               from_descriptor(descriptor_.at("base")).name() + ")";
    if (kind == "strictified")
        return kind + "(" + from_descriptor(descriptor_.at("base")).name() + ")";
    return kind;
}

ScalarFunction ScalarFunction::identity() {
    return ScalarFunction([](double x) { return x; }, 1.0, Monotonicity::strictly_increasing,
                          nlohmann::json{{"kind", "identity"}});
}

ScalarFunction ScalarFunction::absolute_value() {
    return ScalarFunction([](double x) { return std::fabs(x); }, 1.0, Monotonicity::general,
                          nlohmann::json{{"kind", "absolute-value"}});
}

ScalarFunction ScalarFunction::piecewise_linear(std::vector<double> breakpoints, std::vector<double> slopes) {
    if (slopes.size() != breakpoints.size() + 1)
        throw std::invalid_argument("piecewise_linear: need breakpoints.size() + 1 slopes");
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
        throw std::invalid_argument("piecewise_linear: breakpoints must be ascending");
    for (double& s : slopes) s = std::clamp(s, -1.0, 1.0);

    // values at the breakpoints, anchored by f(0) = 0
    const std::size_t m = breakpoints.size();
    std::vector<double> values(m, 0.0);
    if (m > 0) {
        values[0] = 0.0;
        for (std::size_t i = 1; i < m; ++i)
            values[i] = values[i - 1] + slopes[i] * (breakpoints[i] - breakpoints[i - 1]);
        double at_zero;
        if (0.0 <= breakpoints[0]) {
            at_zero = values[0] - slopes[0] * (breakpoints[0] - 0.0);
        } else if (0.0 >= breakpoints[m - 1]) {
            at_zero = values[m - 1] + slopes[m] * (0.0 - breakpoints[m - 1]);
        } else {
            std::size_t seg = 0;
            while (seg + 1 < m && breakpoints[seg + 1] < 0.0) ++seg;
            at_zero = values[seg] + slopes[seg + 1] * (0.0 - breakpoints[seg]);
        }
        for (double& v : values) v -= at_zero;
    }

    double lip = 0.0;
    bool nondec = true, strict = true;
    for (double s : slopes) {
        lip = std::max(lip, std::fabs(s));
        nondec = nondec && s >= 0.0;
        strict = strict && s > 0.0;
    }
    Monotonicity mono = nondec ? (strict ? Monotonicity::strictly_increasing : Monotonicity::nondecreasing)
                               : Monotonicity::general;

    auto eval = [breakpoints, slopes, values](double x) {
        if (breakpoints.empty()) return slopes[0] * x;
        if (x <= breakpoints.front()) return values.front() + slopes.front() * (x - breakpoints.front());
        if (x >= breakpoints.back()) return values.back() + slopes.back() * (x - breakpoints.back());
        auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
        std::size_t seg = static_cast<std::size_t>(it - breakpoints.begin());
        return values[seg - 1] + slopes[seg] * (x - breakpoints[seg - 1]);
    };

    nlohmann::json d{{"kind", "piecewise-linear"}, {"breakpoints", breakpoints}, {"slopes", slopes}};
    return ScalarFunction(eval, lip, mono, std::move(d));
}

ScalarFunction ScalarFunction::scaled_sine(double amplitude) {
    if (!(amplitude > 0.0)) throw std::invalid_argument("scaled_sine: amplitude > 0 required");
    auto eval = [amplitude](double x) { return amplitude * std::sin(x / amplitude); };
    return ScalarFunction(eval, 1.0, Monotonicity::general,
                          nlohmann::json{{"kind", "scaled-sine"}, {"amplitude", amplitude}});
}

ScalarFunction ScalarFunction::shifted(const ScalarFunction& base, double x_shift, double y_shift) {
    auto b = base.eval_;
    auto eval = [b, x_shift, y_shift](double x) { return b(x - x_shift) + y_shift; };
    nlohmann::json d{{"kind", "shifted"}, {"x-shift", x_shift}, {"y-shift", y_shift}, {"base", base.descriptor()}};
    return ScalarFunction(eval, base.lipschitz_, base.mono_, std::move(d));
}

ScalarFunction ScalarFunction::scaled(const ScalarFunction& base, double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("scaled: factor > 0 required");
    auto b = base.eval_;
    auto eval = [b, factor](double x) { return factor * b(x); };
    nlohmann::json d{{"kind", "scaled"}, {"factor", factor}, {"base", base.descriptor()}};
    return ScalarFunction(eval, factor * base.lipschitz_, base.mono_, std::move(d));
}

ScalarFunction ScalarFunction::from_descriptor(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") return identity();
    if (kind == "absolute-value") return absolute_value();
    if (kind == "piecewise-linear")
        return piecewise_linear(j.at("breakpoints").get<std::vector<double>>(),
                                j.at("slopes").get<std::vector<double>>());
    if (kind == "scaled-sine") return scaled_sine(j.at("amplitude").get<double>());
    if (kind == "shifted")
        return shifted(from_descriptor(j.at("base")), j.at("x-shift").get<double>(), j.at("y-shift").get<double>());
    if (kind == "scaled") return scaled(from_descriptor(j.at("base")), j.at("factor").get<double>());
    if (kind == "monotone-split") {
        auto parts = split_monotone(from_descriptor(j.at("base")));
        return j.at("part").get<std::string>() == "plus" ? parts.first : parts.second;
    }
    if (kind == "strictified")
        return strictify(from_descriptor(j.at("base")), j.at("epsilon").get<double>());
    throw std::invalid_argument("unknown scalar function kind: " + kind);
}

std::vector<ScalarFunction> ScalarFunction::stock_set() {
    return {identity(), absolute_value(),
            piecewise_linear({-2.0, 0.0, 2.0}, {0.5, -1.0, 1.0, 0.25}), scaled_sine(1.0)};
}

std::pair<ScalarFunction, ScalarFunction> split_monotone(const ScalarFunction& f) {
    if (f.lipschitz_bound() > 1.0)
        throw std::invalid_argument("split_monotone: lipschitz_bound > 1; rescale first");
    auto base = f.eval_;
    auto plus = [base](double x) { return 0.5 * (x + base(x)); };
    auto minus = [base](double x) { return 0.5 * (x - base(x)); };
    nlohmann::json dp{{"kind", "monotone-split"}, {"part", "plus"}, {"base", f.descriptor()}};
    nlohmann::json dm{{"kind", "monotone-split"}, {"part", "minus"}, {"base", f.descriptor()}};
    return {ScalarFunction(plus, 1.0, Monotonicity::nondecreasing, std::move(dp)),
            ScalarFunction(minus, 1.0, Monotonicity::nondecreasing, std::move(dm))};
}

ScalarFunction strictify(const ScalarFunction& f, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("strictify: epsilon > 0 required");
    if (f.monotonicity() == Monotonicity::general)
        throw std::invalid_argument("strictify: requires a non-decreasing function");
    auto base = f.eval_;
    auto eval = [base, epsilon](double x) { return (base(x) + epsilon * x) / (1.0 + epsilon); };
    nlohmann::json d{{"kind", "strictified"}, {"epsilon", epsilon}, {"base", f.descriptor()}};
    return ScalarFunction(eval, 1.0, Monotonicity::strictly_increasing, std::move(d));
}

} // namespace schatten
