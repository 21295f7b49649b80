#pragma once

#include <blab/blaschke.hpp>
#include <blab/errors.hpp>
#include <blab/regions.hpp>
#include <blab/sequence_lab.hpp>

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace blab {

/// Zero path between consecutive tail products: alpha_n(t) is the disk point
/// with phi(alpha_n(t)) = (1-t) phi(z_n) + t phi(z_{n+1}), so B_0 is the tail
/// product from start_n and B_1 the tail from start_n + 1 over shared indices
/// (path factors run over n = start_n .. size-1; endpoints are returned
/// bit-exactly, not through the Cayley round trip).
class HomotopyPath {
public:
    HomotopyPath(ZeroSequence base, FineCertificate cert, BoundaryPoint xi,
                 std::size_t start_n);

    DiskPoint alpha(std::size_t n, double t) const;  // n is 1-based into the base list
    BlaschkeProduct product(double t) const;

    const ZeroSequence& base() const { return base_; }
    const FineCertificate& certificate() const { return cert_; }
    const BoundaryPoint& xi() const { return xi_; }
    std::size_t start_n() const { return start_; }
    std::size_t last_pair() const { return base_.size() - 1; }

    HomotopyPath rebased(std::size_t new_start) const {
        return HomotopyPath(base_, cert_, xi_, new_start);
    }

private:
    ZeroSequence base_;
    FineCertificate cert_;
    BoundaryPoint xi_;
    std::size_t start_;
};

struct YSearchConfig {
    std::size_t coarse_samples = 1024;  // uniform over [-Y, Y], Y = 10 max |phi(zero)|
    std::size_t refine_top = 4;
    int refine_iters = 80;
};

/// The three argument sums of the sup-norm inequality for matched normalized
/// products (m = 0, lambda = 1, so both values at 0 are positive):
///   total = sum |arg a_n/b_n| + 2 sum |arg (1-a_n)/(1-b_n)|
///           + 2 sup_y sum |arg (phi(a_n) - iy)/(phi(b_n) - iy)|.
/// Every summand is required to stay inside (-pi/2, pi/2); a violation raises
/// certificate_error instead of silently wrapping the branch.
struct NestoridisBreakdown {
    double term_arg_ratio = 0.0;
    double term_one_minus = 0.0;
    double term_iy = 0.0;
    double y_star = 0.0;
    double total = 0.0;
};

NestoridisBreakdown nestoridis_bound(const BlaschkeProduct& left, const BlaschkeProduct& right,
                                     const YSearchConfig& cfg = {});

/// K1 = (R1^2 pi / (r^2 C1)) sum |xi - z_n| with the certificate's C1 and the
/// truncation sum closed by the geometric tail |xi - z_M| C2/(1 - C2). The
/// user-supplied r (|alpha_n(t)| >= r) and R1 (|phi(z_n)+1| <= R1 (Re phi(z_n)+1))
/// are verified on a 32-point t-sample per index; failures carry the witness.
double k1_constant(const HomotopyPath& path, double r, double big_r1);

struct GrowthConstant {
    double value = 0.0;
    std::size_t start_n = 0;  // first index from which the angle window held
};

/// K2: max of the two case bounds of the iy-sum estimate, built from the
/// certificate's Re-phi ratio window, the strip geometry and the verified
/// angle window (1-eps) sin theta <= sin vartheta_n <= (1+eps) sin theta.
GrowthConstant k2_constant(const ZeroSequence& zs, const BoundaryPoint& xi,
                           const FineCertificate& cert, const StripRegion& strip,
                           double eps_geom);

/// K3: the K2 machinery applied to the unit-shifted data phi(z_n) + 1 with its
/// own ratio window; bounds the arg (1 - alpha) sums via the y = 0 case.
GrowthConstant k3_constant(const HomotopyPath& path, const StripRegion& strip,
                           double eps_geom);

struct ContinuityStep {
    double dt;
    double t;
    double measured;
    double lipschitz_bound;
    double nestoridis_total;
    bool pass;
};

struct ContinuityCertificate {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double lipschitz = 0.0;  // k1 + 2 k3 + 2 k2, in the inequality's term order
    std::vector<double> dt_grid;
    std::vector<ContinuityStep> steps;
    std::vector<double> measured_increments;
    bool pass = false;
    std::size_t effective_start = 0;
    double r = 0.0;
    double big_r1 = 0.0;
    double eps_geom = 0.0;
    std::vector<std::string> notes;
};

/// Measures ||B_t - B_{t+dt}|| over a t-grid for every dt and compares against
/// min(lipschitz * dt, per-step breakdown total) + 1e-8. When the verified
/// angle windows start later than the path, the path is rebased at the max
/// start index and the dropped head factors are noted.
ContinuityCertificate continuity_certificate(const HomotopyPath& path, const StripRegion& strip,
                                             const std::vector<double>& dt_list,
                                             std::size_t samples, double r, double big_r1,
                                             double eps_geom = 0.2);

nlohmann::json breakdown_json(const NestoridisBreakdown& b);
nlohmann::json continuity_json(const ContinuityCertificate& c);
void write_continuity_csv(const ContinuityCertificate& c, std::ostream& out);

}  // namespace blab
