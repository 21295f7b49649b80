#include <blab/disk.hpp>

namespace blab {

double pseudo_hyperbolic(complex z, complex w) {
    // abs(z - w) = abs(w - z) and abs(1 - conj(z)w) = abs(conj(1 - conj(w)z))
    // hold exactly in IEEE arithmetic, so the metric is exactly symmetric.
    return std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
}

double principal_arg(complex z) {
    if (z.real() == 0.0 && z.imag() == 0.0)
        throw std::domain_error("principal_arg: argument of zero is undefined");
    return std::arg(z);
}

}  // namespace blab
