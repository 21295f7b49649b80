#include <blab/homotopy.hpp>
#include <blab/search.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace blab {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kArgGuard = 1.5707963267948966 - 1e-9;

double guarded_abs_arg(complex num, complex den, const char* where) {
    const double a = principal_arg(num / den);
    if (!(std::fabs(a) < kArgGuard))
        throw certificate_error(std::string(where) + ": arg summand left (-pi/2, pi/2)");
    return std::fabs(a);
}

void require_normalized(const BlaschkeProduct& b, const char* where) {
    if (b.order_m() != 0 || std::abs(b.lambda().value() - complex(1.0, 0.0)) > 1e-12)
        throw std::invalid_argument(std::string(where) +
                                    ": products must be normalized (m = 0, lambda = 1) so the "
                                    "value at 0 is positive");
}

}  // namespace

HomotopyPath::HomotopyPath(ZeroSequence base, FineCertificate cert, BoundaryPoint xi,
                           std::size_t start_n)
    : base_(std::move(base)), cert_(std::move(cert)), xi_(xi), start_(start_n) {
    if (!cert_.pass())
        throw std::invalid_argument("HomotopyPath: base truncation must be certified fine");
    if (start_ < 1 || start_ + 1 > base_.size())
        throw std::invalid_argument("HomotopyPath: start_n must leave at least one zero pair");
}

DiskPoint HomotopyPath::alpha(std::size_t n, double t) const {
    if (n < start_ || n > last_pair())
        throw std::invalid_argument("HomotopyPath::alpha: index outside the path range");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("HomotopyPath::alpha: t must lie in [0, 1]");
    if (t == 0.0) return base_.at(n);
    if (t == 1.0) return base_.at(n + 1);
    const CayleyMap phi(xi_);
    const complex w = (1.0 - t) * phi.forward(base_.at(n)) + t * phi.forward(base_.at(n + 1));
    return phi.inverse(w);
}

BlaschkeProduct HomotopyPath::product(double t) const {
    std::vector<DiskPoint> zeros;
    zeros.reserve(last_pair() - start_ + 1);
    for (std::size_t n = start_; n <= last_pair(); ++n) zeros.push_back(alpha(n, t));
    return BlaschkeProduct(0, BoundaryPoint(1.0, 0.0), ZeroSequence(std::move(zeros)));
}

NestoridisBreakdown nestoridis_bound(const BlaschkeProduct& left, const BlaschkeProduct& right,
                                     const YSearchConfig& cfg) {
    require_normalized(left, "nestoridis_bound");
    require_normalized(right, "nestoridis_bound");
    if (left.zero_count() != right.zero_count())
        throw std::invalid_argument("nestoridis_bound: zero lists must be matched in order");
    const auto& as = left.zero_sequence().zeros();
    const auto& bs = right.zero_sequence().zeros();
    const std::size_t n = as.size();

    NestoridisBreakdown out;
    if (n == 0) return out;

    const CayleyMap phi{BoundaryPoint(1.0, 0.0)};
    std::vector<complex> pa(n), pb(n);
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        pa[k] = phi.forward(as[k]);
        pb[k] = phi.forward(bs[k]);
        scale = std::max({scale, std::abs(pa[k]), std::abs(pb[k])});
        out.term_arg_ratio += guarded_abs_arg(as[k].value(), bs[k].value(), "nestoridis arg a/b");
        out.term_one_minus +=
            2.0 * guarded_abs_arg(1.0 - as[k].value(), 1.0 - bs[k].value(), "nestoridis arg (1-a)/(1-b)");
    }

    auto sum_at = [&](double y) {
        const complex iy(0.0, y);
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            s += guarded_abs_arg(pa[k] - iy, pb[k] - iy, "nestoridis arg (phi-iy)");
        return s;
    };

    // Coarse scan of [-Y, Y] plus per-scale anchors, so peaks living at the
    // scale of each |phi(zero)| are not stepped over, then golden refinement.
    const double big_y = 10.0 * scale;
    std::set<double> ys{0.0};
    const double step = 2.0 * big_y / static_cast<double>(cfg.coarse_samples);
    for (std::size_t j = 0; j <= cfg.coarse_samples; ++j) ys.insert(-big_y + step * static_cast<double>(j));
    for (std::size_t k = 0; k < n; ++k) {
        for (double base : {std::abs(pa[k]), std::abs(pb[k])}) {
            for (double f : {0.25, 0.5, 1.0, 1.7320508075688772, 2.0, 3.4641016151377544, 6.0}) {
                ys.insert(base * f);
                ys.insert(-base * f);
            }
        }
    }
    std::vector<double> grid(ys.begin(), ys.end());
    std::vector<double> vals(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) vals[j] = sum_at(grid[j]);

    std::vector<std::pair<double, std::size_t>> peaks;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const bool up = j == 0 || vals[j] >= vals[j - 1];
        const bool down = j + 1 == grid.size() || vals[j] >= vals[j + 1];
        if (up && down) peaks.emplace_back(vals[j], j);
    }
    std::sort(peaks.begin(), peaks.end(), std::greater<>());

    double best = 0.0, best_y = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
        if (vals[j] > best) {
            best = vals[j];
            best_y = grid[j];
        }
    const std::size_t top = std::min(cfg.refine_top, peaks.size());
    for (std::size_t p = 0; p < top; ++p) {
        const std::size_t j = peaks[p].second;
        const double lo = j == 0 ? grid[j] - step : grid[j - 1];
        const double hi = j + 1 == grid.size() ? grid[j] + step : grid[j + 1];
        const auto [y, v] = golden_max(sum_at, lo, hi, cfg.refine_iters);
        if (v > best) {
            best = v;
            best_y = y;
        }
    }

    out.term_iy = 2.0 * best;
    out.y_star = best_y;
    out.total = out.term_arg_ratio + out.term_one_minus + out.term_iy;
    return out;
}

double k1_constant(const HomotopyPath& path, double r, double big_r1) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("k1_constant: r must lie in (0, 1)");
    if (!(big_r1 >= 1.0))
        throw std::invalid_argument("k1_constant: R1 must be >= 1");

    const CayleyMap phi(path.xi());
    const complex xi = path.xi().value();
    const auto& zs = path.base();

    const FineCertificate& cert = path.certificate();
    for (std::size_t n = path.start_n(); n <= path.last_pair(); ++n) {
        // the C1 ratio bound is certified from start_n on; head factors must
        // also satisfy it for the per-factor displacement estimate
        const double ratio = std::abs(xi - zs.at(n + 1).value()) / std::abs(xi - zs.at(n).value());
        if (!(ratio >= cert.c1))
            throw certificate_error("k1_constant: distance ratio below the certificate c1 at n = " +
                                    std::to_string(n));
        for (int j = 0; j < 32; ++j) {
            const double t = static_cast<double>(j) / 31.0;
            const DiskPoint a = path.alpha(n, t);
            if (!(a.abs() >= r - 1e-12))
                throw certificate_error("k1_constant: |alpha_" + std::to_string(n) + "(" +
                                        std::to_string(t) + ")| < r");
            const complex pn = phi.forward(zs.at(n));
            if (!(std::abs(phi.forward(a) + 1.0) >=
                  std::abs(pn + 1.0) / big_r1 * (1.0 - 1e-12)))
                throw certificate_error("k1_constant: |phi(alpha)+1| >= |phi(z_n)+1|/R1 fails at n = " +
                                        std::to_string(n) + ", t = " + std::to_string(t));
        }
    }

    double sum = 0.0;
    for (const auto& z : zs.zeros()) sum += std::abs(xi - z.value());
    sum += std::abs(xi - zs.zeros().back().value()) * cert.c2 / (1.0 - cert.c2);
    return big_r1 * big_r1 * kPi / (r * r * cert.c1) * sum;
}

namespace {

/// First index >= cert start from which both the angle window and Re z_n > 0
/// hold through the truncation end.
std::size_t verified_angle_start(const std::vector<complex>& phis,
                                 const std::vector<complex>& points, std::size_t cert_start,
                                 double sin_theta, double eps_geom, const char* where) {
    const std::size_t pairs = phis.size() - 1;
    std::size_t start = pairs + 1;  // sentinel
    for (std::size_t n = pairs; n >= cert_start; --n) {
        const complex d = phis[n] - phis[n - 1];
        const double sin_local = std::fabs(d.real()) / std::abs(d);
        const bool ok = sin_local >= (1.0 - eps_geom) * sin_theta - 1e-12 &&
                        sin_local <= (1.0 + eps_geom) * sin_theta + 1e-12 &&
                        points[n - 1].real() > 0.0;
        if (ok)
            start = n;
        else
            break;
        if (n == cert_start) break;
    }
    if (start > pairs)
        throw certificate_error(std::string(where) +
                                ": angle window (1±eps) sin theta unverifiable at the tail (n = " +
                                std::to_string(pairs) + ")");
    return start;
}

double k2_branches(double eps, double ct1, double ct2, double width, double sin_theta,
                   double tail_sum) {
    const double branch1 = kPi * (1.0 + eps) * (1.0 - ct1) * width /
                           (ct1 * (1.0 - eps) * (1.0 - eps) * sin_theta) * tail_sum;
    const double branch2 = 2.0 * kPi * (1.0 + eps) / ((1.0 - eps) * ct1 * sin_theta * sin_theta) +
                           kPi * (1.0 + eps) * (1.0 - ct1) / (ct1 * (1.0 - eps) * (1.0 - ct2));
    return std::max(branch1, branch2);
}

}  // namespace

GrowthConstant k2_constant(const ZeroSequence& zs, const BoundaryPoint& xi,
                           const FineCertificate& cert, const StripRegion& strip,
                           double eps_geom) {
    if (!cert.pass())
        throw std::invalid_argument("k2_constant: certificate did not pass");
    if (!(eps_geom > 0.0 && eps_geom < 1.0))
        throw std::invalid_argument("k2_constant: eps_geom must lie in (0, 1)");

    const CayleyMap phi(xi);
    const std::size_t m = zs.size();
    std::vector<complex> phis(m), pts(m);
    for (std::size_t n = 0; n < m; ++n) {
        pts[n] = zs.zeros()[n].value();
        phis[n] = phi.forward(zs.zeros()[n]);
    }
    const double sin_theta = std::cos(strip.slope_angle);
    const std::size_t n2 =
        verified_angle_start(phis, pts, cert.start_n, sin_theta, eps_geom, "k2_constant");

    double tail = 0.0;
    for (std::size_t n = n2; n <= m; ++n) tail += std::abs(xi.value() - pts[n - 1]);
    tail += std::abs(xi.value() - pts[m - 1]) * cert.c2 / (1.0 - cert.c2);

    return {k2_branches(eps_geom, cert.ctilde1, cert.ctilde2, strip.width(), sin_theta, tail), n2};
}

GrowthConstant k3_constant(const HomotopyPath& path, const StripRegion& strip,
                           double eps_geom) {
    if (!(eps_geom > 0.0 && eps_geom < 1.0))
        throw std::invalid_argument("k3_constant: eps_geom must lie in (0, 1)");
    const FineCertificate& cert = path.certificate();
    const CayleyMap phi(path.xi());
    const ZeroSequence& zs = path.base();
    const std::size_t m = zs.size();

    // Shifted data: phi(z^_n) = phi(z_n) + 1; differences and hence the angle
    // window are unchanged, the translated strip keeps its width.
    std::vector<complex> shifted(m), shifted_pts(m);
    for (std::size_t n = 0; n < m; ++n) {
        shifted[n] = phi.forward(zs.zeros()[n]) + 1.0;
        shifted_pts[n] = (shifted[n] - 1.0) / (shifted[n] + 1.0);  // z^_n for phi at 1
    }
    const double sin_theta = std::cos(strip.slope_angle);
    const std::size_t n3 = verified_angle_start(shifted, shifted_pts, cert.start_n, sin_theta,
                                                eps_geom, "k3_constant");

    double d1 = 1.0, d2 = 0.0;
    for (std::size_t n = cert.start_n; n <= m - 1; ++n) {
        const double q = shifted[n - 1].real() / shifted[n].real();
        d1 = std::min(d1, q);
        d2 = std::max(d2, q);
    }
    d1 = std::max(d1 - 1e-12, 1e-300);
    d2 += 1e-12;
    if (!(d2 < 1.0))
        throw certificate_error("k3_constant: shifted Re phi ratios not bounded away from 1");

    double tail = 0.0;
    if (strip.width() > 0.0) {
        std::vector<double> dist(m);
        double ratio_max = 0.0;
        for (std::size_t n = 0; n < m; ++n) dist[n] = 2.0 / std::abs(shifted[n] + 1.0);
        for (std::size_t n = n3; n <= m - 1; ++n)
            ratio_max = std::max(ratio_max, dist[n] / dist[n - 1]);
        ratio_max += 1e-12;
        if (!(ratio_max < 1.0))
            throw certificate_error("k3_constant: shifted distance ratios not summable");
        for (std::size_t n = n3; n <= m; ++n) tail += dist[n - 1];
        tail += dist[m - 1] * ratio_max / (1.0 - ratio_max);
    }

    return {k2_branches(eps_geom, d1, d2, strip.width(), sin_theta, tail), n3};
}

ContinuityCertificate continuity_certificate(const HomotopyPath& path, const StripRegion& strip,
                                             const std::vector<double>& dt_list,
                                             std::size_t samples, double r, double big_r1,
                                             double eps_geom) {
    if (dt_list.empty())
        throw std::invalid_argument("continuity_certificate: dt list must be nonempty");
    for (double dt : dt_list)
        if (!(dt > 0.0 && dt <= 0.1))
            throw std::invalid_argument("continuity_certificate: every dt must lie in (0, 0.1]");

    ContinuityCertificate cert;
    cert.dt_grid = dt_list;
    cert.r = r;
    cert.big_r1 = big_r1;
    cert.eps_geom = eps_geom;
    cert.k1 = k1_constant(path, r, big_r1);
    const GrowthConstant k2 =
        k2_constant(path.base(), path.xi(), path.certificate(), strip, eps_geom);
    const GrowthConstant k3 = k3_constant(path, strip, eps_geom);
    cert.k2 = k2.value;
    cert.k3 = k3.value;
    cert.lipschitz = cert.k1 + 2.0 * cert.k3 + 2.0 * cert.k2;

    cert.effective_start = std::max({path.start_n(), k2.start_n, k3.start_n});
    const HomotopyPath run =
        cert.effective_start > path.start_n() ? path.rebased(cert.effective_start) : path;
    if (cert.effective_start > path.start_n())
        cert.notes.push_back("dropped head factors below n = " +
                             std::to_string(cert.effective_start) +
                             " (angle windows start there)");

    bool all_pass = true;
    for (double dt : dt_list) {
        const auto steps = static_cast<std::size_t>(std::floor((1.0 - dt) / dt + 1e-9)) + 1;
        for (std::size_t k = 0; k < steps; ++k) {
            const double t = std::min(static_cast<double>(k) * dt, 1.0 - dt);
            const BlaschkeProduct bt = run.product(t);
            const BlaschkeProduct bt_next = run.product(t + dt);
            const double measured = sup_norm_distance(bt, bt_next, samples);
            const double nb = nestoridis_bound(bt, bt_next).total;
            const double lip = cert.lipschitz * dt;
            const bool ok = measured <= std::min(lip, nb) + 1e-8;
            all_pass = all_pass && ok;
            cert.steps.push_back({dt, t, measured, lip, nb, ok});
            cert.measured_increments.push_back(measured);
        }
    }
    cert.pass = all_pass;
    return cert;
}

nlohmann::json breakdown_json(const NestoridisBreakdown& b) {
    return {{"term_arg_ratio", b.term_arg_ratio},
            {"term_one_minus", b.term_one_minus},
            {"term_iy", b.term_iy},
            {"y_star", b.y_star},
            {"total", b.total}};
}

nlohmann::json continuity_json(const ContinuityCertificate& c) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : c.steps)
        steps.push_back({{"dt", s.dt},
                         {"t", s.t},
                         {"measured", s.measured},
                         {"lipschitz_bound", s.lipschitz_bound},
                         {"nestoridis_total", s.nestoridis_total},
                         {"pass", s.pass}});
    return {{"k1", c.k1},
            {"k2", c.k2},
            {"k3", c.k3},
            {"lipschitz", c.lipschitz},
            {"dt_grid", c.dt_grid},
            {"effective_start", c.effective_start},
            {"r", c.r},
            {"big_r1", c.big_r1},
            {"eps_geom", c.eps_geom},
            {"measured_increments", c.measured_increments},
            {"steps", std::move(steps)},
            {"notes", c.notes},
            {"pass", c.pass}};
}

void write_continuity_csv(const ContinuityCertificate& c, std::ostream& out) {
    out << "t,dt,measured,bound\n";
    for (const auto& s : c.steps)
        out << s.t << ',' << s.dt << ',' << s.measured << ','
            << std::min(s.lipschitz_bound, s.nestoridis_total) << '\n';
}

}  // namespace blab
