#include <blab/blaschke.hpp>
#include <blab/search.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace blab {

namespace {
constexpr double kTwoPi = 6.283185307179586;
}

double GeneratorMeta::tail_one_minus_mod(std::size_t beyond) const {
    if (family == Family::radial_geometric) {
        // sum_{n > beyond} a q^n = a q^{beyond+1} / (1 - q)
        return a * std::pow(q, static_cast<double>(beyond) + 1.0) / (1.0 - q);
    }
    return tail_xi_dist(beyond);
}

double GeneratorMeta::tail_xi_dist(std::size_t beyond) const {
    if (family == Family::radial_geometric)
        return a * std::pow(q, static_cast<double>(beyond) + 1.0) / (1.0 - q);
    // |xi - z_n| = 2 / |w0 g^n + 1|; terms decay like 1/g once |w0 g^n| dominates.
    double sum = 0.0;
    double gn = std::pow(ratio, static_cast<double>(beyond));
    for (std::size_t k = 0; k < 100000; ++k) {
        gn *= ratio;
        const double term = 2.0 / std::abs(w0 * gn + 1.0);
        sum += term;
        if (term < sum * 1e-18 || term < 1e-300) break;
    }
    return sum;
}

ZeroSequence::ZeroSequence(std::vector<DiskPoint> zeros, std::optional<GeneratorMeta> meta)
    : zeros_(std::move(zeros)), meta_(std::move(meta)) {
    for (std::size_t i = 0; i < zeros_.size(); ++i)
        if (zeros_[i].value() == complex(0.0, 0.0))
            throw std::invalid_argument("ZeroSequence: zero at the origin (index " +
                                        std::to_string(i + 1) + "); carry it in order_m");
}

double blaschke_sum(const ZeroSequence& zs) {
    double sum = 0.0;
    for (const auto& z : zs.zeros()) sum += 1.0 - z.abs();
    return sum;
}

double blaschke_sum_with_tail(const ZeroSequence& zs) {
    double sum = blaschke_sum(zs);
    if (zs.meta()) sum += zs.meta()->tail_one_minus_mod(zs.size());
    return sum;
}

BlaschkeProduct::BlaschkeProduct(unsigned order_m, BoundaryPoint lambda, ZeroSequence zeros)
    : m_(order_m), lambda_(lambda), zeros_(std::move(zeros)) {}

complex BlaschkeProduct::evaluate(complex z) const {
    complex acc = lambda_.value();
    for (unsigned k = 0; k < m_; ++k) acc *= z;
    for (const auto& zp : zeros_.zeros()) {
        const complex a = zp.value();
        acc *= (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
    }
    return acc;
}

TailBound tail_bound(const BlaschkeProduct& b, double r, std::size_t index) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("tail_bound: radius must lie in (0, 1)");
    const auto& zs = b.zero_sequence();
    double tail = 0.0;
    for (std::size_t n = index; n < zs.size(); ++n) tail += 1.0 - zs.zeros()[n].abs();
    bool partial = true;
    if (zs.meta()) {
        tail += zs.meta()->tail_one_minus_mod(std::max(index, zs.size()));
        partial = false;
    }
    return {r, index, 2.0 / (1.0 - r) * tail, partial};
}

double sup_norm_distance(const BlaschkeProduct& f, const BlaschkeProduct& g,
                         std::size_t samples) {
    if (samples < 256)
        throw std::invalid_argument("sup_norm_distance: need at least 256 samples");

    auto diff = [&](double theta) {
        const complex z = std::polar(1.0, theta);
        return std::abs(f.evaluate(z) - g.evaluate(z));
    };

    std::vector<double> vals(samples);
    const double step = kTwoPi / static_cast<double>(samples);
    for (std::size_t j = 0; j < samples; ++j) vals[j] = diff(step * static_cast<double>(j));

    double best = 0.0;
    for (double v : vals) best = std::max(best, v);

    // Refine the top local maxima of the scan.
    std::vector<std::pair<double, std::size_t>> peaks;
    for (std::size_t j = 0; j < samples; ++j) {
        const double prev = vals[(j + samples - 1) % samples];
        const double next = vals[(j + 1) % samples];
        if (vals[j] >= prev && vals[j] >= next) peaks.emplace_back(vals[j], j);
    }
    std::sort(peaks.begin(), peaks.end(), std::greater<>());
    const std::size_t top = std::min<std::size_t>(8, peaks.size());
    for (std::size_t p = 0; p < top; ++p) {
        const double center = step * static_cast<double>(peaks[p].second);
        best = std::max(best, golden_max(diff, center - step, center + step).second);
    }
    return best;
}

double separation(const ZeroSequence& zs) {
    if (zs.size() < 2)
        throw std::invalid_argument("separation: need at least 2 zeros");
    double best = std::numeric_limits<double>::infinity();
    const auto& z = zs.zeros();
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            best = std::min(best, pseudo_hyperbolic(z[i], z[j]));
    return best;
}

std::vector<double> thinness_profile(const ZeroSequence& zs) {
    if (zs.size() < 2)
        throw std::invalid_argument("thinness_profile: need at least 2 zeros");
    const auto& z = zs.zeros();
    std::vector<double> prof(z.size(), 1.0);
    for (std::size_t n = 0; n < z.size(); ++n)
        for (std::size_t k = 0; k < z.size(); ++k)
            if (k != n) prof[n] *= pseudo_hyperbolic(z[k], z[n]);
    return prof;
}

double carleson_inf_product(const ZeroSequence& zs) {
    const auto prof = thinness_profile(zs);
    return *std::min_element(prof.begin(), prof.end());
}

nlohmann::json zeros_json(const ZeroSequence& zs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& z : zs.zeros()) arr.push_back({z.re(), z.im()});
    nlohmann::json j{{"zeros", std::move(arr)}};
    if (zs.meta()) {
        const auto& m = *zs.meta();
        nlohmann::json mj{{"xi", {m.xi.real(), m.xi.imag()}}, {"listed", m.listed}};
        if (m.family == GeneratorMeta::Family::radial_geometric) {
            mj["family"] = "radial_geometric";
            mj["a"] = m.a;
            mj["q"] = m.q;
        } else {
            mj["family"] = "halfplane_geometric";
            mj["w0"] = {m.w0.real(), m.w0.imag()};
            mj["ratio"] = m.ratio;
        }
        j["meta"] = std::move(mj);
    }
    return j;
}

ZeroSequence zeros_from_json(const nlohmann::json& j) {
    std::vector<DiskPoint> zeros;
    for (const auto& z : j.at("zeros"))
        zeros.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    std::optional<GeneratorMeta> meta;
    if (j.contains("meta") && j["meta"].contains("family")) {
        const auto& mj = j["meta"];
        GeneratorMeta m;
        m.xi = complex(mj.at("xi").at(0).get<double>(), mj.at("xi").at(1).get<double>());
        m.listed = mj.at("listed").get<std::size_t>();
        const std::string fam = mj.at("family").get<std::string>();
        if (fam == "radial_geometric") {
            m.family = GeneratorMeta::Family::radial_geometric;
            m.a = mj.at("a").get<double>();
            m.q = mj.at("q").get<double>();
        } else if (fam == "halfplane_geometric") {
            m.family = GeneratorMeta::Family::halfplane_geometric;
            m.w0 = complex(mj.at("w0").at(0).get<double>(), mj.at("w0").at(1).get<double>());
            m.ratio = mj.at("ratio").get<double>();
        } else {
            throw std::invalid_argument("zeros_from_json: unknown meta family '" + fam + "'");
        }
        meta = m;
    }
    return ZeroSequence(std::move(zeros), std::move(meta));
}

nlohmann::json product_json(const BlaschkeProduct& b) {
    nlohmann::json j = zeros_json(b.zero_sequence());
    j["m"] = b.order_m();
    j["lambda"] = {b.lambda().re(), b.lambda().im()};
    return j;
}

BlaschkeProduct product_from_json(const nlohmann::json& j) {
    const unsigned m = j.contains("m") ? j["m"].get<unsigned>() : 0u;
    BoundaryPoint lambda(1.0, 0.0);
    if (j.contains("lambda"))
        lambda = BoundaryPoint(j["lambda"].at(0).get<double>(), j["lambda"].at(1).get<double>());
    return BlaschkeProduct(m, lambda, zeros_from_json(j));
}

void write_boundary_samples_csv(const BlaschkeProduct& b, std::size_t samples,
                                std::ostream& out) {
    out << "theta,re,im,modulus\n";
    const double step = kTwoPi / static_cast<double>(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const double theta = step * static_cast<double>(j);
        const complex v = b.evaluate(std::polar(1.0, theta));
        out << theta << ',' << v.real() << ',' << v.imag() << ',' << std::abs(v) << '\n';
    }
}

}  // namespace blab
