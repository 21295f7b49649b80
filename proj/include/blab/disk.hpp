#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace blab {

using complex = std::complex<double>;

inline constexpr double kDiskRim = 1.0 - 1e-15;   // strict modulus cap for interior points
inline constexpr double kCircleTol = 1e-12;       // admissible drift from the unit circle
inline constexpr double kDefaultTol = 1e-12;

/// Point strictly inside the open unit disk. Construction rejects (never clamps)
/// anything with modulus >= 1 - 1e-15, so near-rim zeros stay where they are.
class DiskPoint {
public:
    DiskPoint(double re, double im) : DiskPoint(complex(re, im)) {}
    explicit DiskPoint(complex z) : z_(z) {
        if (!(std::abs(z) < kDiskRim))
            throw std::domain_error("DiskPoint: modulus must be < 1 - 1e-15");
    }
    complex value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    double abs() const { return std::abs(z_); }

private:
    complex z_;
};

/// Point of the unit circle, renormalized to exact unit modulus on construction.
class BoundaryPoint {
public:
    BoundaryPoint(double re, double im) : BoundaryPoint(complex(re, im)) {}
    explicit BoundaryPoint(complex z) {
        const double m = std::abs(z);
        if (!(std::fabs(m - 1.0) <= kCircleTol))
            throw std::domain_error("BoundaryPoint: modulus must be 1 within 1e-12");
        z_ = z / m;
    }
    complex value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }

private:
    complex z_;
};

/// rho(z, w) = |(z - w) / (1 - conj(z) w)|, exactly symmetric in floating point.
double pseudo_hyperbolic(complex z, complex w);
inline double pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w) {
    return pseudo_hyperbolic(z.value(), w.value());
}

/// Principal branch of the argument, in (-pi, pi]. z = 0 is a domain error.
double principal_arg(complex z);

/// phi_xi(z) = (xi + z)/(xi - z): bijection from the disk onto the right half plane,
/// with inverse z = xi (w - 1)/(w + 1).
class CayleyMap {
public:
    explicit CayleyMap(BoundaryPoint base) : xi_(base) {}

    complex forward(complex z) const {
        const complex xi = xi_.value();
        return (xi + z) / (xi - z);
    }
    complex forward(const DiskPoint& z) const { return forward(z.value()); }

    DiskPoint inverse(complex w) const {
        if (!(w.real() > 0.0))
            throw std::domain_error("CayleyMap::inverse: Re w must be positive");
        return DiskPoint(xi_.value() * (w - 1.0) / (w + 1.0));
    }

    const BoundaryPoint& base() const { return xi_; }

private:
    BoundaryPoint xi_;
};

}  // namespace blab
