#pragma once

#include <blab/disk.hpp>

#include <nlohmann/json_fwd.hpp>

namespace blab {

/// Cayley image of a strip cone: the region between two parallel lines
/// y = tan(slope_angle) * x + c in the right half plane. Intercepts are
/// stored ordered (c1 <= c2); order_swapped remembers whether the cone's
/// (T1, T2) arrived in the opposite order.
struct StripRegion {
    double slope_angle = 0.0;  // pi/2 - theta
    double c1 = 0.0;
    double c2 = 0.0;
    bool order_swapped = false;

    double kappa() const { return std::tan(slope_angle); }
    double width() const { return c2 - c1; }
    bool degenerate() const { return c1 == c2; }

    /// Signed offset of w against the line family: Im w - kappa * Re w.
    double offset(complex w) const { return w.imag() - kappa() * w.real(); }
    bool contains(complex w) const {
        if (!(w.real() > 0.0)) return false;
        const double o = offset(w);
        return o > c1 - kDefaultTol && o < c2 + kDefaultTol;
    }
};

/// SC(xi, theta, T1, T2): the disk region bounded by two circular arcs through xi
/// (circles |z - (1 - T_i e^{i theta}) xi| = |T_i|) and the far boundary arc.
/// Infinite T_i degenerates that side to the "diameter" line through the origin
/// of the half-plane picture (intercept 0), matching the segment case at theta = pi/2.
class StripCone {
public:
    StripCone(BoundaryPoint xi, double theta, double t1, double t2);

    const BoundaryPoint& xi() const { return xi_; }
    double theta() const { return theta_; }
    double t1() const { return t1_; }
    double t2() const { return t2_; }
    const StripRegion& strip() const { return strip_; }

    bool contains(const DiskPoint& z) const {
        return strip_.contains(CayleyMap(xi_).forward(z));
    }

private:
    BoundaryPoint xi_;
    double theta_;
    double t1_, t2_;
    StripRegion strip_;
};

StripRegion cone_to_strip(const StripCone& cone);

inline bool cone_contains(const StripCone& cone, const DiskPoint& z) {
    return cone.contains(z);
}

/// Tse's nontangential region test: |1 - conj(xi) z| <= C (1 - |z|).
bool stolz_contains(const BoundaryPoint& xi, double big_c, const DiskPoint& z);

/// A Stolz constant valid for the whole cone tail: every cone point with
/// |xi - z| <= dist_threshold lies in the Stolz domain at xi with constant big_c.
struct StolzTail {
    double big_c;
    double dist_threshold;
};

StolzTail cone_tail_stolz_constant(const StripCone& cone);

nlohmann::json cone_json(const StripCone& cone);
StripCone cone_from_json(const nlohmann::json& j);

}  // namespace blab
