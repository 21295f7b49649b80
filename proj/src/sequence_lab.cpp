#include <blab/sequence_lab.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace blab {

namespace {

constexpr double kMonotoneSlack = 1e-14;
constexpr double kPad = 1e-12;

nlohmann::json verdict_json(const ConditionVerdict& v) {
    nlohmann::json j{{"pass", v.pass}};
    if (v.witness) j["witness"] = *v.witness;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

}  // namespace

HscAdmission admit_hsc(const ZeroSequence& zs, const StripCone& cone) {
    if (zs.size() < 2)
        throw std::invalid_argument("admit_hsc: need at least 2 zeros");
    HscAdmission adm{cone, 0.0, {}, {}, {}};
    const auto& z = zs.zeros();
    const complex xi = cone.xi().value();

    adm.cone_membership.pass = true;
    for (std::size_t n = 0; n < z.size(); ++n) {
        if (!cone.contains(z[n])) {
            adm.cone_membership = {false, n + 1, "zero outside the strip cone"};
            break;
        }
    }

    adm.monotone_dist.pass = true;
    for (std::size_t n = 0; n + 1 < z.size(); ++n) {
        const double d0 = std::abs(xi - z[n].value());
        const double d1 = std::abs(xi - z[n + 1].value());
        if (d1 > d0 * (1.0 + kMonotoneSlack)) {
            adm.monotone_dist = {false, n + 2, "|xi - z_n| increases"};
            break;
        }
    }
    if (adm.monotone_dist.pass &&
        !(std::abs(xi - z.back().value()) < std::abs(xi - z.front().value()))) {
        adm.monotone_dist = {false, 1, "no overall decrease of |xi - z_n| on the truncation"};
    }

    double delta = 0.0;
    std::size_t worst = 1;
    for (std::size_t n = 0; n + 1 < z.size(); ++n) {
        const double rho = pseudo_hyperbolic(z[n], z[n + 1]);
        if (rho > delta) {
            delta = rho;
            worst = n + 1;
        }
    }
    adm.delta = delta;
    adm.consecutive_rho.pass = delta < 1.0;
    adm.consecutive_rho.witness = worst;
    if (!adm.consecutive_rho.pass) adm.consecutive_rho.note = "consecutive rho reaches 1";
    return adm;
}

ZeroSequence generate_halfplane_geometric(const StripCone& cone, complex w0, double ratio,
                                          std::size_t count) {
    if (!(ratio > 1.0))
        throw std::invalid_argument("generate_halfplane_geometric: ratio must exceed 1");
    const CayleyMap phi(cone.xi());
    std::vector<DiskPoint> zeros;
    zeros.reserve(count);
    complex w = w0;
    for (std::size_t n = 1; n <= count; ++n) {
        w *= ratio;
        if (!cone.strip().contains(w))
            throw std::invalid_argument("generate_halfplane_geometric: ray leaves the strip at n = " +
                                        std::to_string(n));
        zeros.push_back(phi.inverse(w));
    }
    GeneratorMeta meta;
    meta.family = GeneratorMeta::Family::halfplane_geometric;
    meta.xi = cone.xi().value();
    meta.w0 = w0;
    meta.ratio = ratio;
    meta.listed = count;
    return ZeroSequence(std::move(zeros), meta);
}

ZeroSequence generate_radial_geometric(const BoundaryPoint& xi, double a, double q,
                                       std::size_t count) {
    if (!(a > 0.0) || !(q > 0.0 && q < 1.0))
        throw std::invalid_argument("generate_radial_geometric: need a > 0 and q in (0, 1)");
    std::vector<DiskPoint> zeros;
    zeros.reserve(count);
    double qn = 1.0;
    for (std::size_t n = 1; n <= count; ++n) {
        qn *= q;
        zeros.push_back(DiskPoint(xi.value() * (1.0 - a * qn)));
    }
    GeneratorMeta meta;
    meta.family = GeneratorMeta::Family::radial_geometric;
    meta.xi = xi.value();
    meta.a = a;
    meta.q = q;
    meta.listed = count;
    return ZeroSequence(std::move(zeros), meta);
}

std::pair<double, double> mediant_monotone(double a, double a2, double b, double b2) {
    if (!(0.0 <= a && a <= a2 && a2 < 1.0) || !(0.0 <= b && b <= b2 && b2 < 1.0))
        throw std::invalid_argument("mediant_monotone: need 0 <= a <= a' < 1 and 0 <= b <= b' < 1");
    return {(a + b) / (1.0 + a * b), (a2 + b2) / (1.0 + a2 * b2)};
}

std::vector<std::size_t> greedy_fine_subsequence(const ZeroSequence& zs, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("greedy_fine_subsequence: epsilon must lie in (0, 1)");
    std::vector<std::size_t> picked;
    if (zs.size() == 0) return picked;
    picked.push_back(1);
    std::size_t cur = 1;
    for (std::size_t i = 2; i <= zs.size(); ++i) {
        if (pseudo_hyperbolic(zs.at(cur), zs.at(i)) >= epsilon) {
            picked.push_back(i);
            cur = i;
        }
    }
    return picked;
}

double LemmaAbParams::cap_c() const {
    const double cot0 = std::cos(theta0) / std::sin(theta0);
    return std::sqrt(1.0 + cot0 * cot0);
}

double lemma_ab_tau_cap(double cap_c, double epsilon) {
    const double c2 = cap_c * cap_c, e2 = epsilon * epsilon;
    return std::sqrt(3.0 * c2 * e2 / (16.0 * c2 * (1.0 - e2) + 3.0 * e2));
}

std::pair<double, double> lemma_ab_closed_form(double epsilon, double delta, double cap_c,
                                               double tau, double eta) {
    const double cm = cap_c - tau, cp = cap_c + tau;
    const double d2 = delta * delta, e2 = epsilon * epsilon;
    const double a1 = cm / cp + (2.0 * d2 - 2.0 * std::sqrt(d2 * d2 + d2 * (cap_c * cap_c - tau * tau) * (1.0 - d2))) /
                                    (cp * cp * (1.0 - d2));
    const double c1 = (cm / cp) * a1;
    const double te = 2.0 - eta;
    const double big_a1 =
        cp / cm + (te * e2 - std::sqrt(te * te * e2 * e2 + 2.0 * e2 * te * (cap_c * cap_c - tau * tau) * (1.0 - e2))) /
                      (cm * cm * (1.0 - e2));
    const double c2 = (cp / cm) * big_a1;
    return {c1, c2};
}

std::pair<double, double> lemma_ab_bounds(const LemmaAbParams& p) {
    const double dist_a = std::abs(1.0 - p.alpha.value());
    const double dist_b = std::abs(1.0 - p.beta.value());
    if (!(dist_a < dist_b))
        throw std::invalid_argument("lemma_ab_bounds: need |1 - alpha| < |1 - beta|");
    const double rho = pseudo_hyperbolic(p.alpha, p.beta);
    if (!(0.0 < p.epsilon && p.epsilon <= rho && rho <= p.delta && p.delta < 1.0))
        throw std::invalid_argument("lemma_ab_bounds: condition (1) fails: rho(alpha, beta) "
                                    "outside [epsilon, delta]");
    if (!(p.theta0 > 0.0 && p.theta0 < 3.141592653589793))
        throw std::invalid_argument("lemma_ab_bounds: condition (2) fails: theta0 outside (0, pi)");
    const double cap_c = p.cap_c();
    const double cot0 = std::cos(p.theta0) / std::sin(p.theta0);
    const double cap = lemma_ab_tau_cap(cap_c, p.epsilon);
    if (!(std::fabs(p.cot1() - cot0) < p.tau && std::fabs(p.cot2() - cot0) < p.tau && p.tau < cap))
        throw std::invalid_argument("lemma_ab_bounds: condition (3) fails: cot drift vs tau cap");
    const double ww = p.w1() * p.w2();
    if (!(3.0 <= 4.0 - 2.0 * p.eta && 4.0 - 2.0 * p.eta <= ww && ww <= 4.0))
        throw std::invalid_argument("lemma_ab_bounds: condition (4) fails: W1 W2 window");

    const auto [c1, c2] = lemma_ab_closed_form(p.epsilon, p.delta, cap_c, p.tau, p.eta);
    return {c1, c2};
}

FineCertificate certify_fine(const ZeroSequence& zs, const StripCone& cone, double epsilon,
                             double delta) {
    const std::size_t m = zs.size();
    if (m < 2)
        throw std::invalid_argument("certify_fine: need at least 2 zeros");
    if (!(epsilon > 0.0 && epsilon <= delta && delta < 1.0))
        throw std::invalid_argument("certify_fine: need 0 < epsilon <= delta < 1");

    FineCertificate cert;
    cert.epsilon = epsilon;
    cert.delta = delta;
    const auto& z = zs.zeros();
    const complex xi = cone.xi().value();
    const CayleyMap phi(cone.xi());

    std::vector<double> dist(m), re(m);
    for (std::size_t n = 0; n < m; ++n) {
        dist[n] = std::abs(xi - z[n].value());
        re[n] = phi.forward(z[n]).real();
    }

    cert.cond_cone.pass = true;
    for (std::size_t n = 0; n < m; ++n) {
        if (!cone.contains(z[n])) {
            cert.cond_cone = {false, n + 1, "zero outside the strip cone"};
            break;
        }
    }

    cert.cond_monotone.pass = true;
    for (std::size_t n = 0; n + 1 < m; ++n) {
        if (dist[n + 1] > dist[n] * (1.0 + kMonotoneSlack)) {
            cert.cond_monotone = {false, n + 2, "|xi - z_n| increases"};
            break;
        }
    }
    if (cert.cond_monotone.pass && !(dist.back() < dist.front()))
        cert.cond_monotone = {false, 1, "no overall decrease of |xi - z_n| on the truncation"};

    cert.cond_rho_window.pass = true;
    for (std::size_t n = 0; n + 1 < m; ++n) {
        const double rho = pseudo_hyperbolic(z[n], z[n + 1]);
        if (rho < epsilon - kPad || rho > delta + kPad) {
            cert.cond_rho_window = {false, n + 1, "consecutive rho outside [epsilon, delta]"};
            break;
        }
    }

    // Suffix of indices from which the distance ratios stay strictly below 1.
    std::size_t start = m;  // sentinel: no admissible suffix
    for (std::size_t n = m - 1; n >= 1; --n) {
        const double r = dist[n] / dist[n - 1];
        if (r < 1.0 - kPad)
            start = n;
        else
            break;
        if (n == 1) break;
    }
    if (start == m) {
        cert.cond_ratio = {false, m - 1, "distance ratios never settle below 1"};
        cert.cond_re_phi = {false, m - 1, "no ratio window available"};
        return cert;
    }
    cert.start_n = start;

    double rmin = 1.0, rmax = 0.0;
    for (std::size_t n = start; n <= m - 1; ++n) {
        const double r = dist[n] / dist[n - 1];
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    cert.c1 = std::max(rmin - kPad, 1e-300);
    cert.c2 = rmax + kPad;
    cert.cond_ratio.pass = cert.c2 < 1.0;
    if (!cert.cond_ratio.pass) cert.cond_ratio.note = "c2 reached 1 after padding";

    cert.cond_re_phi.pass = true;
    for (std::size_t n = 0; n + 1 < m; ++n) {
        if (!(re[n + 1] > re[n])) {
            cert.cond_re_phi = {false, n + 2, "Re phi(z_n) not strictly increasing"};
            break;
        }
    }
    if (cert.cond_re_phi.pass) {
        double qmin = 1.0, qmax = 0.0;
        for (std::size_t n = start; n <= m - 1; ++n) {
            const double q = re[n - 1] / re[n];
            qmin = std::min(qmin, q);
            qmax = std::max(qmax, q);
        }
        cert.ctilde1 = std::max(qmin - kPad, 1e-300);
        cert.ctilde2 = qmax + kPad;
        if (!(cert.ctilde2 < 1.0))
            cert.cond_re_phi = {false, start, "Re phi ratios not bounded away from 1"};
    }

    cert.tail_sum_bound = dist[start - 1] / (1.0 - cert.c2);
    return cert;
}

double shift_ratio_floor(const ZeroSequence& zs, const BoundaryPoint& xi) {
    if (zs.size() < 2)
        throw std::invalid_argument("shift_ratio_floor: need at least 2 zeros");
    const auto& z = zs.zeros();
    const complex xiv = xi.value();
    for (std::size_t n = 0; n + 1 < z.size(); ++n) {
        const double d0 = std::abs(xiv - z[n].value());
        const double d1 = std::abs(xiv - z[n + 1].value());
        if (d1 > d0 * (1.0 + kMonotoneSlack))
            throw std::invalid_argument("shift_ratio_floor: |xi - z_n| must be nonincreasing");
    }
    const CayleyMap phi(xi);
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n + 1 < z.size(); ++n) {
        const double m0 = std::abs(phi.forward(z[n]));
        const double m1 = std::abs(phi.forward(z[n + 1]));
        slack = std::min(slack, m1 - m0 + 2.0);
    }
    return slack;
}

nlohmann::json admission_json(const HscAdmission& adm) {
    return {{"cone", cone_json(adm.cone)},
            {"delta", adm.delta},
            {"pass", adm.pass()},
            {"verdicts",
             {{"cone_membership", verdict_json(adm.cone_membership)},
              {"monotone_dist", verdict_json(adm.monotone_dist)},
              {"consecutive_rho", verdict_json(adm.consecutive_rho)}}}};
}

nlohmann::json certificate_json(const FineCertificate& cert) {
    return {{"epsilon", cert.epsilon},
            {"delta", cert.delta},
            {"start_n", cert.start_n},
            {"c1", cert.c1},
            {"c2", cert.c2},
            {"ctilde1", cert.ctilde1},
            {"ctilde2", cert.ctilde2},
            {"tail_sum_bound", cert.tail_sum_bound},
            {"pass", cert.pass()},
            {"verdicts",
             {{"cone", verdict_json(cert.cond_cone)},
              {"monotone", verdict_json(cert.cond_monotone)},
              {"rho_window", verdict_json(cert.cond_rho_window)},
              {"ratio", verdict_json(cert.cond_ratio)},
              {"re_phi", verdict_json(cert.cond_re_phi)}}}};
}

}  // namespace blab
