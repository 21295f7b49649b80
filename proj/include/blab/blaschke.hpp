#pragma once

#include <blab/disk.hpp>

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace blab {

/// Describes how a finite zero list was produced, so tail sums of the ideal
/// infinite sequence can be certified beyond the listed truncation.
///   radial_geometric:     z_n = xi (1 - a q^n), exact geometric tails.
///   halfplane_geometric:  phi_xi(z_n) = w0 g^n; tails are certified upper
///                         bounds via 1 - |z| <= |xi - z| = 2/|w + 1|.
struct GeneratorMeta {
    enum class Family { radial_geometric, halfplane_geometric };

    Family family = Family::radial_geometric;
    complex xi{1.0, 0.0};
    double a = 0.0;
    double q = 0.0;
    complex w0{};
    double ratio = 0.0;
    std::size_t listed = 0;

    bool exact_tail() const { return family == Family::radial_geometric; }

    /// sum_{n > beyond} (1 - |z_n|), exact for radial tails, an upper bound otherwise.
    double tail_one_minus_mod(std::size_t beyond) const;
    /// sum_{n > beyond} |xi - z_n|.
    double tail_xi_dist(std::size_t beyond) const;
};

/// Finite (truncated) zero list; the origin is excluded so the normalizing
/// factor |z_n|/z_n is always defined. Zeros at the origin belong in
/// BlaschkeProduct::order_m instead.
class ZeroSequence {
public:
    explicit ZeroSequence(std::vector<DiskPoint> zeros,
                          std::optional<GeneratorMeta> meta = std::nullopt);

    const std::vector<DiskPoint>& zeros() const { return zeros_; }
    std::size_t size() const { return zeros_.size(); }
    const DiskPoint& at(std::size_t n) const { return zeros_.at(n - 1); }  // 1-based
    const std::optional<GeneratorMeta>& meta() const { return meta_; }

private:
    std::vector<DiskPoint> zeros_;
    std::optional<GeneratorMeta> meta_;
};

/// sum (1 - |z_n|) over the listed zeros only.
double blaschke_sum(const ZeroSequence& zs);
/// Listed sum plus the generator's analytic tail (listed-only when no meta).
double blaschke_sum_with_tail(const ZeroSequence& zs);

/// Truncated Blaschke product lambda z^m prod (|z_n|/z_n)(z_n - z)/(1 - conj(z_n) z).
class BlaschkeProduct {
public:
    BlaschkeProduct(unsigned order_m, BoundaryPoint lambda, ZeroSequence zeros);

    complex evaluate(complex z) const;
    complex evaluate(const DiskPoint& z) const { return evaluate(z.value()); }
    complex evaluate(const BoundaryPoint& z) const { return evaluate(z.value()); }

    unsigned order_m() const { return m_; }
    const BoundaryPoint& lambda() const { return lambda_; }
    const ZeroSequence& zero_sequence() const { return zeros_; }
    std::size_t zero_count() const { return zeros_.size(); }

private:
    unsigned m_;
    BoundaryPoint lambda_;
    ZeroSequence zeros_;
};

/// Certified truncation error: sup_{|z| <= r} |B_full - B_index| <= bound,
/// from the factor estimate |1 - b_a(z)| <= 2 (1 - |a|)/(1 - |z|). partial
/// means no generator tail was available, so only listed zeros are covered.
struct TailBound {
    double radius_r;
    std::size_t truncation_index;
    double bound;
    bool partial;
};

TailBound tail_bound(const BlaschkeProduct& b, double r, std::size_t index);

/// Estimate of ||f - g||_inf: max of |f - g| over `samples` equispaced circle
/// points, then golden-section refinement around the top 8 local maxima.
/// Reported values are truncation sups, not the ideal ess-sup.
double sup_norm_distance(const BlaschkeProduct& f, const BlaschkeProduct& g,
                         std::size_t samples);

/// inf over distinct pairs of rho(z_m, z_n), brute force on the truncation.
double separation(const ZeroSequence& zs);

/// min over n of prod_{k != n} rho(z_k, z_n) (uniform separation measure).
double carleson_inf_product(const ZeroSequence& zs);

/// The per-n products behind carleson_inf_product, for thinness inspection.
std::vector<double> thinness_profile(const ZeroSequence& zs);

nlohmann::json zeros_json(const ZeroSequence& zs);
ZeroSequence zeros_from_json(const nlohmann::json& j);
nlohmann::json product_json(const BlaschkeProduct& b);
BlaschkeProduct product_from_json(const nlohmann::json& j);

/// CSV of boundary samples: theta, re, im, modulus.
void write_boundary_samples_csv(const BlaschkeProduct& b, std::size_t samples,
                                std::ostream& out);

}  // namespace blab
