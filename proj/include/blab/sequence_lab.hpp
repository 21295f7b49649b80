#pragma once

#include <blab/blaschke.hpp>
#include <blab/regions.hpp>

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blab {

struct ConditionVerdict {
    bool pass = false;
    std::optional<std::size_t> witness;  // 1-based index of the first offender
    std::string note;
};

/// Admission verdicts for the strip-cone class: (i) cone membership,
/// (ii) |xi - z_n| nonincreasing and trending down, (iii) consecutive
/// rho bounded by some delta < 1 (delta is reported as the measured max).
struct HscAdmission {
    StripCone cone;
    double delta = 0.0;
    ConditionVerdict cone_membership;
    ConditionVerdict monotone_dist;
    ConditionVerdict consecutive_rho;

    bool pass() const {
        return cone_membership.pass && monotone_dist.pass && consecutive_rho.pass;
    }
};

HscAdmission admit_hsc(const ZeroSequence& zs, const StripCone& cone);

/// Places phi_xi(z_n) = w0 g^n on a ray inside the cone's strip, n = 1..count.
/// Errors name the first n whose image leaves the strip.
ZeroSequence generate_halfplane_geometric(const StripCone& cone, complex w0, double ratio,
                                          std::size_t count);

/// z_n = xi (1 - a q^n), n = 1..count, with exact geometric tail metadata.
ZeroSequence generate_radial_geometric(const BoundaryPoint& xi, double a, double q,
                                       std::size_t count);

/// ((a+b)/(1+ab), (a'+b')/(1+a'b')) for 0 <= a <= a' < 1, 0 <= b <= b' < 1;
/// the first component never exceeds the second.
std::pair<double, double> mediant_monotone(double a, double a2, double b, double b2);

/// Greedy minimal-index selection: n_1 = 1, n_{k+1} = min{ i > n_k :
/// rho(z_{n_k}, z_i) >= epsilon }. Returns 1-based indices; stops when no
/// index qualifies. Consecutive selected rho lands in
/// [epsilon, (epsilon+delta)/(1+epsilon delta)] whenever consecutive rho of
/// the input is bounded by delta.
std::vector<std::size_t> greedy_fine_subsequence(const ZeroSequence& zs, double epsilon);

/// Inputs of the two-point ratio bounds: alpha, beta with |1-alpha| < |1-beta|,
/// decomposed as z = s + i (1 - s) cot(theta_z), plus the window (epsilon, delta),
/// reference angle theta0 (C = |1 - i cot theta0|), slack tau and eta.
struct LemmaAbParams {
    DiskPoint alpha;
    DiskPoint beta;
    double epsilon;
    double delta;
    double theta0;
    double tau;
    double eta;

    double s1() const { return alpha.re(); }
    double s2() const { return beta.re(); }
    double cot1() const { return alpha.im() / (1.0 - alpha.re()); }
    double cot2() const { return beta.im() / (1.0 - beta.re()); }
    double cap_c() const;
    double w1() const { return 1.0 + s1() - (1.0 - s1()) * cot1() * cot1(); }
    double w2() const { return 1.0 + s2() - (1.0 - s2()) * cot2() * cot2(); }
};

/// Largest admissible tau for given C and epsilon:
/// sqrt(3 C^2 eps^2 / (16 C^2 (1 - eps^2) + 3 eps^2)).
double lemma_ab_tau_cap(double cap_c, double epsilon);

/// Raw closed forms (no condition checks; used for limiting-case regressions):
///   C1 = ((C-tau)/(C+tau)) a1,  C2 = ((C+tau)/(C-tau)) A1.
std::pair<double, double> lemma_ab_closed_form(double epsilon, double delta, double cap_c,
                                               double tau, double eta);

/// Checks the four admission conditions and returns (C1, C2) with
/// 0 < C1 <= |1-alpha|/|1-beta| <= C2 < 1. Violations raise invalid_argument
/// naming the failed condition.
std::pair<double, double> lemma_ab_bounds(const LemmaAbParams& params);

/// Verdicts and constants for a fine truncation: cone membership, monotone
/// |xi - z_n|, the consecutive-rho window, the geometric ratio window
/// [c1, c2] of |xi - z_{n+1}|/|xi - z_n| from start_n on, the Re phi ratio
/// window [ctilde1, ctilde2], and the implied tail bound
/// sum_{n >= start_n} |xi - z_n| <= |xi - z_start| / (1 - c2).
struct FineCertificate {
    double epsilon = 0.0;
    double delta = 0.0;
    std::size_t start_n = 0;  // 1-based
    double c1 = 0.0;
    double c2 = 0.0;
    double ctilde1 = 0.0;
    double ctilde2 = 0.0;
    double tail_sum_bound = 0.0;
    ConditionVerdict cond_cone;
    ConditionVerdict cond_monotone;
    ConditionVerdict cond_rho_window;
    ConditionVerdict cond_ratio;
    ConditionVerdict cond_re_phi;

    bool pass() const {
        return cond_cone.pass && cond_monotone.pass && cond_rho_window.pass &&
               cond_ratio.pass && cond_re_phi.pass;
    }
};

FineCertificate certify_fine(const ZeroSequence& zs, const StripCone& cone, double epsilon,
                             double delta);

/// Verifies |phi(z_{n+1})| >= |phi(z_n)| - 2 along the truncation and returns
/// the minimal slack |phi(z_{n+1})| - |phi(z_n)| + 2 (>= -1e-12 when the
/// distance monotonicity hypothesis holds).
double shift_ratio_floor(const ZeroSequence& zs, const BoundaryPoint& xi);

nlohmann::json admission_json(const HscAdmission& adm);
nlohmann::json certificate_json(const FineCertificate& cert);

}  // namespace blab
