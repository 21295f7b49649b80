#include <blab/factor_checks.hpp>
#include <blab/parallel.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace blab {

InterpolatingVerdict interpolating_verdict(const ZeroSequence& zs, const StripCone& cone) {
    InterpolatingVerdict v;
    if (zs.size() < 2) {
        v.notes.push_back("truncation too short for a separation verdict");
        return v;
    }
    const complex xi = cone.xi().value();
    const auto& z = zs.zeros();

    // Tse's criterion needs a Stolz domain holding the tail.
    const StolzTail stolz = cone_tail_stolz_constant(cone);
    std::size_t tail_start = zs.size() + 1;
    for (std::size_t n = zs.size(); n >= 1; --n) {
        if (std::abs(xi - z[n - 1].value()) <= stolz.dist_threshold)
            tail_start = n;
        else
            break;
        if (n == 1) break;
    }
    if (tail_start > zs.size()) {
        v.notes.push_back("no truncation tail inside the Stolz threshold; Tse inapplicable");
        return v;
    }
    for (std::size_t n = tail_start; n <= zs.size(); ++n) {
        if (!stolz_contains(cone.xi(), stolz.big_c, z[n - 1])) {
            v.notes.push_back("tail point escapes the certified Stolz domain (index " +
                              std::to_string(n) + ")");
            return v;
        }
    }

    double sep = std::numeric_limits<double>::infinity();
    std::pair<std::size_t, std::size_t> argmin{1, 2};
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            const double rho = pseudo_hyperbolic(z[i], z[j]);
            if (rho < sep) {
                sep = rho;
                argmin = {i + 1, j + 1};
            }
        }
    }
    v.witness_separation = sep;
    if (sep == 0.0) {
        v.status = InterpolatingVerdict::Status::no;
        v.offending_pair = argmin;
        v.notes.push_back("coincident zero pair");
        return v;
    }

    // Trend at truncation scale: compare min consecutive rho over the two halves.
    const std::size_t pairs = z.size() - 1;
    double first_half = std::numeric_limits<double>::infinity();
    double last_half = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < pairs; ++n) {
        const double rho = pseudo_hyperbolic(z[n], z[n + 1]);
        (n < pairs / 2 ? first_half : last_half) = std::min(n < pairs / 2 ? first_half : last_half, rho);
    }
    if (pairs >= 4 && last_half < kTrendFactor * first_half) {
        v.status = InterpolatingVerdict::Status::no;
        v.offending_pair = argmin;
        v.notes.push_back("consecutive rho collapsing along the truncation (" +
                          std::to_string(last_half) + " vs " + std::to_string(first_half) + ")");
    } else {
        v.status = InterpolatingVerdict::Status::yes;
    }

    // Flag slowly-summing Blaschke sums: the full sequence may not be Blaschke.
    double s_half = 0.0, s_full = 0.0;
    for (std::size_t n = 0; n < z.size(); ++n) {
        const double t = 1.0 - z[n].abs();
        s_full += t;
        if (n < z.size() / 2) s_half += t;
    }
    if (s_half > 0.0 && s_full - s_half >= 0.4 * s_half)
        v.notes.push_back("sum (1 - |z_n|) not settling at truncation scale; "
                          "the full sequence may violate the Blaschke condition");
    return v;
}

double separation_floor(const FineCertificate& cert) {
    if (!cert.pass())
        throw std::invalid_argument("separation_floor: certificate did not pass");
    return (1.0 - cert.c2) / (3.0 + cert.c2);
}

LevelSetReport level_set_components(const BlaschkeProduct& b, double eta, int grid,
                                    double margin, bool keep_cells) {
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("level_set_components: eta must lie in (0, 1)");
    if (grid < 128)
        throw std::invalid_argument("level_set_components: grid must be >= 128");
    if (!(margin > 0.0 && margin < 0.5))
        throw std::invalid_argument("level_set_components: margin must lie in (0, 0.5)");

    const std::size_t g = static_cast<std::size_t>(grid);
    const double h = 2.0 / static_cast<double>(g);
    const double rim = 1.0 - margin;
    std::vector<double> modulus(g * g, 2.0);
    std::vector<int> label(g * g, -1);

    parallel_for(g, [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t j = row_begin; j < row_end; ++j) {
            const double y = -1.0 + (static_cast<double>(j) + 0.5) * h;
            for (std::size_t i = 0; i < g; ++i) {
                const double x = -1.0 + (static_cast<double>(i) + 0.5) * h;
                if (x * x + y * y >= rim * rim) continue;
                modulus[j * g + i] = std::abs(b.evaluate(complex(x, y)));
            }
        }
    });

    auto covered = [&](std::size_t idx) { return modulus[idx] < eta; };

    int components = 0;
    long covered_cells = 0;
    std::deque<std::size_t> queue;
    for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t i = 0; i < g; ++i) {
            const std::size_t idx = j * g + i;
            if (!covered(idx) || label[idx] >= 0) continue;
            const int comp = components++;
            label[idx] = comp;
            queue.push_back(idx);
            while (!queue.empty()) {
                const std::size_t cur = queue.front();
                queue.pop_front();
                ++covered_cells;
                const std::size_t ci = cur % g, cj = cur / g;
                const std::size_t nbs[4] = {cur - 1, cur + 1, cur - g, cur + g};
                const bool ok[4] = {ci > 0, ci + 1 < g, cj > 0, cj + 1 < g};
                for (int k = 0; k < 4; ++k) {
                    if (!ok[k]) continue;
                    const std::size_t nb = nbs[k];
                    if (covered(nb) && label[nb] < 0) {
                        label[nb] = comp;
                        queue.push_back(nb);
                    }
                }
            }
        }
    }

    LevelSetReport report;
    report.eta = eta;
    report.grid = grid;
    report.component_count = components;
    report.covered_cells = covered_cells;
    report.boundary_margin = margin;
    if (covered_cells == 0)
        report.warning = "no covered cells: eta below the minimum grid modulus";
    if (keep_cells) {
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t i = 0; i < g; ++i) {
                const std::size_t idx = j * g + i;
                if (label[idx] < 0) continue;
                report.cells.push_back({-1.0 + (static_cast<double>(i) + 0.5) * h,
                                        -1.0 + (static_cast<double>(j) + 0.5) * h,
                                        modulus[idx], label[idx]});
            }
    }
    return report;
}

void write_level_set_csv(const LevelSetReport& report, std::ostream& out) {
    out << "x,y,modulus,component_id\n";
    for (const auto& c : report.cells)
        out << c.x << ',' << c.y << ',' << c.modulus << ',' << c.component << '\n';
}

FactorVerdict theorem_2_9_pipeline(const ZeroSequence& zs, const StripCone& cone,
                                   double epsilon, int grid, double margin) {
    FactorVerdict v;
    const HscAdmission adm = admit_hsc(zs, cone);
    if (!adm.pass()) {
        v.failed_stage = "admission";
        v.notes.push_back("sequence not admitted to the strip-cone class");
        return v;
    }

    v.selected_indices = greedy_fine_subsequence(zs, epsilon);
    if (v.selected_indices.size() < 3) {
        v.failed_stage = "selection";
        v.notes.push_back("truncation too short: greedy selection kept fewer than 3 zeros");
        return v;
    }
    std::vector<DiskPoint> picked;
    picked.reserve(v.selected_indices.size());
    for (std::size_t idx : v.selected_indices) picked.push_back(zs.at(idx));
    const ZeroSequence selected(std::move(picked));

    // Selected consecutive rho lives in the window [epsilon, (eps+delta)/(1+eps delta)].
    const double window_hi = (epsilon + adm.delta) / (1.0 + epsilon * adm.delta) + 1e-12;
    v.certificate = certify_fine(selected, cone, std::max(epsilon - 1e-12, 1e-15),
                                 std::min(window_hi, 1.0 - 1e-9));
    if (!v.certificate.pass()) {
        v.failed_stage = "certification";
        v.notes.push_back("selected subsequence failed fine certification");
        return v;
    }

    v.separated_inf = separation(selected);
    v.separation_floor = blab::separation_floor(v.certificate);
    if (!(v.separated_inf >= v.separation_floor - 1e-9)) {
        v.failed_stage = "separation";
        v.notes.push_back("measured separation fell below the certificate floor");
        return v;
    }
    const InterpolatingVerdict iv = interpolating_verdict(selected, cone);
    v.interpolating = iv.status == InterpolatingVerdict::Status::yes;
    for (const auto& n : iv.notes) v.notes.push_back(n);
    if (iv.status == InterpolatingVerdict::Status::inconclusive) {
        v.failed_stage = "interpolation";
        return v;
    }
    if (!v.interpolating) {
        v.failed_stage = "interpolation";
        v.notes.push_back("selected subsequence not separated at truncation scale");
        return v;
    }

    const BlaschkeProduct factor(0, BoundaryPoint(1.0, 0.0), selected);
    for (double eta : {0.5, 0.7, 0.9}) {
        const LevelSetReport r = level_set_components(factor, eta, grid, margin);
        v.notes.push_back("level set eta=" + std::to_string(eta) + ": " +
                          std::to_string(r.component_count) + " component(s)");
        if (r.component_count == 1 && !v.one_component_eta) v.one_component_eta = eta;
    }
    if (!v.one_component_eta) {
        v.failed_stage = "level-set";
        v.notes.push_back("no eta in the sweep produced a single component");
    }
    return v;
}

nlohmann::json interpolating_json(const InterpolatingVerdict& v) {
    nlohmann::json j{{"witness_separation", v.witness_separation}, {"notes", v.notes}};
    switch (v.status) {
        case InterpolatingVerdict::Status::yes: j["status"] = "yes"; break;
        case InterpolatingVerdict::Status::no: j["status"] = "no"; break;
        case InterpolatingVerdict::Status::inconclusive: j["status"] = "inconclusive"; break;
    }
    if (v.offending_pair) j["offending_pair"] = {v.offending_pair->first, v.offending_pair->second};
    return j;
}

nlohmann::json level_set_json(const LevelSetReport& r) {
    nlohmann::json j{{"eta", r.eta},
                     {"grid", r.grid},
                     {"component_count", r.component_count},
                     {"covered_cells", r.covered_cells},
                     {"boundary_margin", r.boundary_margin}};
    if (!r.warning.empty()) j["warning"] = r.warning;
    return j;
}

nlohmann::json factor_verdict_json(const FactorVerdict& v) {
    nlohmann::json j{{"interpolating", v.interpolating},
                     {"separated_inf", v.separated_inf},
                     {"separation_floor", v.separation_floor},
                     {"selected_indices", v.selected_indices},
                     {"certificate", certificate_json(v.certificate)},
                     {"notes", v.notes},
                     {"pass", v.pass()}};
    if (v.one_component_eta) j["one_component_eta"] = *v.one_component_eta;
    if (!v.failed_stage.empty()) j["failed_stage"] = v.failed_stage;
    return j;
}

}  // namespace blab
