#include <blab/regions.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>

namespace blab {

namespace {

double intercept_for(double t, double sin_theta, double cos_theta) {
    if (std::isinf(t)) return 0.0;  // diameter convention
    // Image of the point diametrically opposite xi on the arc's circle:
    // w = e^{-i theta}/T - 1, projected to intercept form c = Im w - kappa Re w.
    const double c = cos_theta / sin_theta - 1.0 / (t * sin_theta);
    if (!std::isfinite(c))
        throw std::domain_error("cone_to_strip: degenerate arc arithmetic");
    return c;
}

}  // namespace

StripCone::StripCone(BoundaryPoint xi, double theta, double t1, double t2)
    : xi_(xi), theta_(theta), t1_(t1), t2_(t2) {
    if (!(theta > 0.0 && theta < 3.141592653589793))
        throw std::invalid_argument("StripCone: theta must lie strictly in (0, pi)");
    if (t1 == 0.0 || t2 == 0.0 || std::isnan(t1) || std::isnan(t2))
        throw std::invalid_argument("StripCone: T1, T2 must be nonzero");

    const double st = std::sin(theta), ct = std::cos(theta);
    double ca = intercept_for(t1, st, ct);
    double cb = intercept_for(t2, st, ct);
    strip_.slope_angle = 1.5707963267948966 - theta;
    strip_.order_swapped = ca > cb;
    strip_.c1 = std::min(ca, cb);
    strip_.c2 = std::max(ca, cb);
}

StripRegion cone_to_strip(const StripCone& cone) { return cone.strip(); }

bool stolz_contains(const BoundaryPoint& xi, double big_c, const DiskPoint& z) {
    if (!(big_c >= 1.0))
        throw std::invalid_argument("stolz_contains: C must be >= 1");
    return std::abs(1.0 - std::conj(xi.value()) * z.value()) <= big_c * (1.0 - z.abs());
}

StolzTail cone_tail_stolz_constant(const StripCone& cone) {
    if (cone.strip().degenerate() && !(std::isinf(cone.t1()) && std::isinf(cone.t2())))
        throw std::invalid_argument("cone_tail_stolz_constant: degenerate arc cone");
    // For a cone point with Re w >= x0 the Stolz condition |1 - conj(xi) z| <= C (1 - |z|)
    // reads 2 <= C (|w+1| - |w-1|) in the half plane; bounding |y| <= |kappa| x + c_max
    // gives |w+1| - |w-1| >= 2x / ((1+|kappa|) x + c_max + 1).
    const StripRegion& s = cone.strip();
    const double k = std::fabs(s.kappa());
    const double c_max = std::max(std::fabs(s.c1), std::fabs(s.c2));
    const double x0 = std::max(1.0, 2.0 * (c_max + 1.0));
    const double big_c = (1.0 + k) + (c_max + 1.0) / x0;
    const double threshold = 2.0 / (x0 * (1.0 + k) + 1.0 + c_max);
    return {big_c, threshold};
}

nlohmann::json cone_json(const StripCone& cone) {
    auto t_val = [](double t) -> nlohmann::json {
        if (std::isinf(t)) return t > 0 ? "inf" : "-inf";
        return t;
    };
    return {{"xi", {cone.xi().re(), cone.xi().im()}},
            {"theta", cone.theta()},
            {"t1", t_val(cone.t1())},
            {"t2", t_val(cone.t2())}};
}

StripCone cone_from_json(const nlohmann::json& j) {
    auto t_of = [](const nlohmann::json& v) -> double {
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s == "inf") return std::numeric_limits<double>::infinity();
            if (s == "-inf") return -std::numeric_limits<double>::infinity();
            throw std::invalid_argument("cone_from_json: bad T sentinel '" + s + "'");
        }
        return v.get<double>();
    };
    const auto& xi = j.at("xi");
    return StripCone(BoundaryPoint(xi.at(0).get<double>(), xi.at(1).get<double>()),
                     j.at("theta").get<double>(), t_of(j.at("t1")), t_of(j.at("t2")));
}

}  // namespace blab
