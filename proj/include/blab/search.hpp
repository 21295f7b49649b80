#pragma once

#include <cmath>
#include <utility>

namespace blab {

/// Golden-section maximization of a unimodal-ish f on [lo, hi].
/// Returns {argmax, max}. Deterministic; iters ~ 80 shrinks the bracket
/// by 0.618^80, far below double resolution for O(1) intervals.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters = 80) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && b - a > 0.0; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    const double fm = f(xm);
    if (fm >= f1 && fm >= f2) return {xm, fm};
    return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace blab
