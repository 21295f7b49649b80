#pragma once

#include <blab/blaschke.hpp>
#include <blab/regions.hpp>
#include <blab/sequence_lab.hpp>

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace blab {

/// Separation-based interpolation verdict, valid at truncation scale only:
/// any finite set of distinct points is separated, so the verdict combines
/// the measured infimum with a trend check (min consecutive rho over the
/// first half vs the last half; a drop below kTrendFactor reads as
/// "separation collapsing along the truncation").
struct InterpolatingVerdict {
    enum class Status { yes, no, inconclusive };
    Status status = Status::inconclusive;
    double witness_separation = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> offending_pair;  // 1-based
    std::vector<std::string> notes;
};

inline constexpr double kTrendFactor = 0.75;

InterpolatingVerdict interpolating_verdict(const ZeroSequence& zs, const StripCone& cone);

/// (1 - C2)/(3 + C2), the separation floor implied by a passing fine certificate.
double separation_floor(const FineCertificate& cert);

struct LevelSetCell {
    double x;
    double y;
    double modulus;
    int component;
};

/// Rasterized sublevel set {|B| < eta} on a grid over [-1,1]^2, cells hugging
/// the boundary (|center| >= 1 - margin) excluded, components counted by
/// 4-connected flood fill. Cells are retained only when keep_cells is set.
struct LevelSetReport {
    double eta = 0.0;
    int grid = 0;
    int component_count = 0;
    long covered_cells = 0;
    double boundary_margin = 0.0;
    std::string warning;
    std::vector<LevelSetCell> cells;
};

LevelSetReport level_set_components(const BlaschkeProduct& b, double eta, int grid,
                                    double margin, bool keep_cells = false);

void write_level_set_csv(const LevelSetReport& report, std::ostream& out);

/// Aggregate of the selection -> certification -> separation -> level-set chain.
struct FactorVerdict {
    bool interpolating = false;
    double separated_inf = 0.0;
    double separation_floor = 0.0;
    std::optional<double> one_component_eta;
    std::vector<std::size_t> selected_indices;  // 1-based into the input sequence
    FineCertificate certificate;
    std::vector<std::string> notes;
    std::string failed_stage;  // empty when the whole chain passed

    bool pass() const { return failed_stage.empty(); }
};

/// Runs greedy selection, fine certification, the separation-floor check and a
/// level-set sweep over eta in {0.5, 0.7, 0.9} on the selected factor.
FactorVerdict theorem_2_9_pipeline(const ZeroSequence& zs, const StripCone& cone,
                                   double epsilon, int grid = 512, double margin = 0.02);

nlohmann::json interpolating_json(const InterpolatingVerdict& v);
nlohmann::json level_set_json(const LevelSetReport& r);
nlohmann::json factor_verdict_json(const FactorVerdict& v);

}  // namespace blab
