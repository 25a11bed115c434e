// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_SCALAR_FUNCTION_HPP
#define SCHATTEN_SCALAR_FUNCTION_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace schatten {

enum class Monotonicity { nondecreasing, strictly_increasing, general };

std::string to_string(Monotonicity m);

// A 1-Lipschitz (or sub-Lipschitz) real function together with the
// metadata the experiments need: a certified Lipschitz bound, a
// monotonicity tag, and a structured descriptor that serializes to JSON
// and round-trips through from_descriptor. Descriptors are what configs
// and reports carry; the evaluator is derived from them.
class ScalarFunction {
public:
    double operator()(double x) const { return eval_(x); }
    double lipschitz_bound() const { return lipschitz_; }
    Monotonicity monotonicity() const { return mono_; }
    const nlohmann::json& descriptor() const { return descriptor_; }
    std::string name() const;

    static ScalarFunction identity();
    static ScalarFunction absolute_value();
    // slopes.size() == breakpoints.size() + 1; slopes are clamped into
    // [-1, 1]; the function is anchored by f(0) = 0
    static ScalarFunction piecewise_linear(std::vector<double> breakpoints, std::vector<double> slopes);
    // a * sin(x / a), 1-Lipschitz for any a > 0
    static ScalarFunction scaled_sine(double amplitude);
    // base(x - x_shift) + y_shift
    static ScalarFunction shifted(const ScalarFunction& base, double x_shift, double y_shift);
    // factor * base(x) for factor > 0; the rescale knob callers use to
    // bring a function into the 1-Lipschitz range
    static ScalarFunction scaled(const ScalarFunction& base, double factor);

    static ScalarFunction from_descriptor(const nlohmann::json& j);

    // the four functions the experiment suites cycle through
    static std::vector<ScalarFunction> stock_set();

    friend std::pair<ScalarFunction, ScalarFunction> split_monotone(const ScalarFunction& f);
    friend ScalarFunction strictify(const ScalarFunction& f, double epsilon);

private:
    ScalarFunction(std::function<double(double)> eval, double lipschitz, Monotonicity mono, nlohmann::json descriptor)
        : eval_(std::move(eval)), lipschitz_(lipschitz), mono_(mono), descriptor_(std::move(descriptor)) {}

    std::function<double(double)> eval_;
    double lipschitz_;
    Monotonicity mono_;
    nlohmann::json descriptor_;
};

// f = g1 - g2 with g1 = (x + f(x))/2 and g2 = (x - f(x))/2, both
// non-decreasing and 1-Lipschitz. Rejects lipschitz_bound > 1.
std::pair<ScalarFunction, ScalarFunction> split_monotone(const ScalarFunction& f);

// x -> (f(x) + eps*x) / (1 + eps): strictly increasing, 1-Lipschitz,
// uniformly within 2*eps*R/(1+eps) of f on [-R, R] for f with |f| <= |x|.
// Requires f non-decreasing and eps > 0.
ScalarFunction strictify(const ScalarFunction& f, double epsilon);

} // namespace schatten

#endif
