// quadrature.hpp - adaptive Simpson quadrature for smooth integrands

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <utility>

#include "ecsim/errors.hpp"

namespace ecsim::quadrature {

namespace detail {

template <class F, class V>
V simpson_recurse(F& f, double a, double b, V fa, V fm, V fb, V whole,
                  double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const V flm = f(lm);
    const V frm = f(rm);
    const V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const V delta = left + right - whole;
    if (depth <= 0) {
        throw NumericalError("adaptive Simpson: max recursion depth reached");
    }
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Integrates f over [a, b] to absolute tolerance tol. Works for real- or
// complex-valued integrands; throws NumericalError when refinement stalls.
template <class F>
auto adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 60) {
    using V = std::invoke_result_t<F&, double>;
    if (!(b > a)) return V{};
    const V fa = f(a);
    const double m = 0.5 * (a + b);
    const V fm = f(m);
    const V fb = f(b);
    const V whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

} // namespace ecsim::quadrature
