#pragma once

#include <blab/blaschke.hpp>
#include <blab/regions.hpp>
#include <blab/sequence_lab.hpp>

#include <cmath>
#include <optional>
#include <random>
#include <vector>

namespace testutil {

using blab::complex;

/// z_n = 1 - 2^{-n}, n = 1..count, with exact geometric tail metadata.
inline blab::ZeroSequence dyadic_fixture(std::size_t count) {
    return blab::generate_radial_geometric(blab::BoundaryPoint(1.0, 0.0), 1.0, 0.5, count);
}

inline blab::StripCone horizontal_cone() {
    return blab::StripCone(blab::BoundaryPoint(1.0, 0.0), 1.5707963267948966, 1.0, -1.0);
}

inline blab::StripCone diameter_cone() {
    const double inf = std::numeric_limits<double>::infinity();
    return blab::StripCone(blab::BoundaryPoint(1.0, 0.0), 1.5707963267948966, inf, inf);
}

inline blab::BlaschkeProduct normalized_product(blab::ZeroSequence zs) {
    return blab::BlaschkeProduct(0, blab::BoundaryPoint(1.0, 0.0), std::move(zs));
}

inline blab::BlaschkeProduct single_zero_product(double a) {
    return normalized_product(blab::ZeroSequence({blab::DiskPoint(a, 0.0)}));
}

inline blab::DiskPoint random_disk_point(std::mt19937& rng, double max_radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = max_radius * std::sqrt(unit(rng));
    const double phi = 6.283185307179586 * unit(rng);
    return blab::DiskPoint(r * std::cos(phi), r * std::sin(phi));
}

/// Direct geometric membership oracle: sides against the two arc circles,
/// oriented per cone by mapping each circle's center through phi_xi.
/// Independent of the strip-offset test used by StripCone::contains.
class CircleSideOracle {
public:
    explicit CircleSideOracle(const blab::StripCone& cone) : cone_(cone) {
        const complex xi = cone.xi().value();
        const double theta = cone.theta();
        const blab::StripRegion& s = cone.strip();
        for (int i = 0; i < 2; ++i) {
            const double t = i == 0 ? cone.t1() : cone.t2();
            center_[i] = (1.0 - t * std::polar(1.0, theta)) * xi;
            radius_[i] = std::fabs(t);
            const double c_line = i == 0 ? (s.order_swapped ? s.c2 : s.c1)
                                         : (s.order_swapped ? s.c1 : s.c2);
            const double c_other = i == 0 ? (s.order_swapped ? s.c1 : s.c2)
                                          : (s.order_swapped ? s.c2 : s.c1);
            const complex m = (xi + center_[i]) / (xi - center_[i]);
            const double off = m.imag() - s.kappa() * m.real();
            inside_wanted_[i] = ((off > c_line) == (c_other > c_line));
        }
    }

    bool contains(const blab::DiskPoint& z) const {
        if (!(z.abs() < 1.0)) return false;
        for (int i = 0; i < 2; ++i) {
            const bool inside = std::abs(z.value() - center_[i]) < radius_[i];
            if (inside != inside_wanted_[i]) return false;
        }
        return true;
    }

private:
    blab::StripCone cone_;
    complex center_[2];
    double radius_[2];
    bool inside_wanted_[2];
};

/// Random admitted strip-cone truncation: half-plane points with geometric
/// Re growth and offsets wandering inside the strip, rejected/retried until
/// |xi - z_n| is monotone. Deterministic for a given rng state.
struct RandomHsc {
    blab::StripCone cone;
    blab::ZeroSequence zeros;
};

inline RandomHsc random_hsc(std::mt19937& rng, std::size_t count) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double theta = 0.6 + 1.9 * unit(rng);
        const double st = std::sin(theta), ct = std::cos(theta);
        const double c_lo = -(0.2 + 1.3 * unit(rng));
        const double c_hi = 0.2 + 1.3 * unit(rng);
        // T from the intercept relation c = cot(theta) - 1/(T sin theta).
        const double den1 = ct - c_lo * st, den2 = ct - c_hi * st;
        if (std::fabs(den1) < 0.05 || std::fabs(den2) < 0.05) continue;
        const blab::BoundaryPoint xi(std::polar(1.0, 6.283185307179586 * unit(rng)));
        blab::StripCone cone(xi, theta, 1.0 / den1, 1.0 / den2);
        const blab::StripRegion& s = cone.strip();
        const double margin = 0.15 * s.width();

        const blab::CayleyMap phi(xi);
        std::vector<blab::DiskPoint> pts;
        double x = 1.5 + 1.5 * unit(rng);
        double prev_dist = std::numeric_limits<double>::infinity();
        bool ok = true;
        for (std::size_t n = 0; n < count && ok; ++n) {
            ok = false;
            for (int tries = 0; tries < 40; ++tries) {
                const double off = s.c1 + margin + (s.width() - 2.0 * margin) * unit(rng);
                const complex w(x, s.kappa() * x + off);
                const double dist = 2.0 / std::abs(w + 1.0);
                if (dist <= prev_dist * (1.0 - 1e-9)) {
                    pts.push_back(phi.inverse(w));
                    prev_dist = dist;
                    ok = true;
                    break;
                }
            }
            x *= 1.35 + 0.85 * unit(rng);
        }
        if (!ok || pts.size() != count) continue;
        blab::ZeroSequence zs(std::move(pts));
        if (!blab::admit_hsc(zs, cone).pass()) continue;
        return {cone, std::move(zs)};
    }
    throw std::runtime_error("random_hsc: generation failed (seed exhausted retries)");
}

}  // namespace testutil
