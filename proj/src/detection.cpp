#include "smsmx/detection.hpp"

#include <Eigen/SVD>
#include <limits>

namespace smsmx {

namespace {

constexpr double kRankTolerance = 1e-10;

void check_dimensions(const Eigen::VectorXcd& y, const ChannelRealization& h,
                      const SmSmxConfig& cfg) {
    if (h.gains.rows() != cfg.n_rx || h.gains.cols() != cfg.n_tx) {
        throw std::invalid_argument("channel matrix is " + std::to_string(h.gains.rows()) + "x" +
                                    std::to_string(h.gains.cols()) + ", config expects " +
                                    std::to_string(cfg.n_rx) + "x" + std::to_string(cfg.n_tx));
    }
    if (y.size() != cfg.n_rx) {
        throw std::invalid_argument("received vector length " + std::to_string(y.size()) +
                                    " != Nr = " + std::to_string(cfg.n_rx));
    }
}

}  // namespace

const char* to_string(DetectorKind d) noexcept {
    switch (d) {
        case DetectorKind::Ml: return "ml";
        case DetectorKind::TwoStage: return "two_stage";
        case DetectorKind::SmMrrc: return "sm_mrrc";
    }
    return "?";
}

DetectorKind detector_from_string(const std::string& s) {
    if (s == "ml") return DetectorKind::Ml;
    if (s == "two_stage") return DetectorKind::TwoStage;
    if (s == "sm_mrrc") return DetectorKind::SmMrrc;
    throw std::invalid_argument("unknown detector '" + s + "' (expected ml, two_stage or sm_mrrc)");
}

Codebook Codebook::build(const SmSmxConfig& cfg, const Constellation& c, std::size_t cap) {
    auto entries = enumerate_codebook(cfg, c, cap);
    std::vector<Hypothesis> hyps;
    hyps.reserve(entries.size());
    const double scale = cfg.antenna_scale();
    for (auto& e : entries) {
        Hypothesis h;
        h.group = e.tx.group;
        h.labels = frame_symbol_labels(cfg, e.frame);
        h.active.resize(cfg.n_active);
        for (int j = 0; j < cfg.n_active; ++j) {
            h.active(j) = e.tx.symbols[static_cast<std::size_t>(j)] * scale;
        }
        h.frame = std::move(e.frame);
        hyps.push_back(std::move(h));
    }
    return Codebook(cfg, c, std::move(hyps));
}

DetectionResult ml_detect(const Eigen::VectorXcd& y, const ChannelRealization& h,
                          const Codebook& codebook) {
    const SmSmxConfig& cfg = codebook.config();
    check_dimensions(y, h, cfg);

    const int k = cfg.n_active;
    const Codebook::Hypothesis* best = nullptr;
    double best_metric = std::numeric_limits<double>::infinity();
    Eigen::VectorXcd yhat(cfg.n_rx);
    for (const auto& hyp : codebook.hypotheses()) {
        yhat.noalias() = h.gains.middleCols(hyp.group * k, k) * hyp.active;
        const double metric = (y - yhat).squaredNorm();
        if (metric < best_metric) {
            best_metric = metric;
            best = &hyp;
        }
    }
    return {best->group, best->labels, best->frame, best_metric};
}

DetectionResult ml_detect(const Eigen::VectorXcd& y, const ChannelRealization& h,
                          const SmSmxConfig& cfg, const Constellation& c) {
    return ml_detect(y, h, Codebook::build(cfg, c));
}

DetectionResult two_stage_detect(const Eigen::VectorXcd& y, const ChannelRealization& h,
                                 const SmSmxConfig& cfg, const Constellation& c) {
    check_dimensions(y, h, cfg);
    if (cfg.n_rx < cfg.n_active) {
        throw std::invalid_argument("two_stage detector requires Nr >= K");
    }
    if (c.order() != cfg.mod_order) {
        throw std::invalid_argument("constellation order does not match config");
    }

    const int k = cfg.n_active;
    const double scale = cfg.antenna_scale();
    int best_group = -1;
    double best_metric = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> best_labels;

    std::vector<std::uint32_t> labels(static_cast<std::size_t>(k));
    Eigen::VectorXcd quantized(k);
    for (int g = 0; g < cfg.group_count(); ++g) {
        const auto hg = h.gains.middleCols(g * k, k);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(hg, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        if (sv(0) <= 0.0 || sv(k - 1) < kRankTolerance * sv(0)) {
            throw RankDeficientError("group " + std::to_string(g) +
                                     " channel block is numerically rank-deficient");
        }
        // zero-forcing estimate pinv(H_g) y
        Eigen::VectorXcd est =
            svd.matrixV() * (svd.matrixU().adjoint() * y).cwiseQuotient(sv.cast<cplx>());
        for (int j = 0; j < k; ++j) {
            labels[static_cast<std::size_t>(j)] = c.demap_index(est(j) / scale);
            quantized(j) = c.points()[labels[static_cast<std::size_t>(j)]] * scale;
        }
        const double metric = (y - hg * quantized).squaredNorm();
        if (metric < best_metric) {
            best_metric = metric;
            best_group = g;
            best_labels = labels;
        }
    }
    return {best_group, best_labels, decode(cfg, best_group, best_labels), best_metric};
}

DetectionResult sm_mrrc_detect(const Eigen::VectorXcd& y, const ChannelRealization& h,
                               const SmSmxConfig& cfg, const Constellation& c) {
    if (cfg.scheme != Scheme::PureSm) {
        throw std::invalid_argument("sm_mrrc detector requires the pure_sm scheme");
    }
    check_dimensions(y, h, cfg);
    if (c.order() != cfg.mod_order) {
        throw std::invalid_argument("constellation order does not match config");
    }

    int best = 0;
    double best_score = -1.0;
    for (int j = 0; j < cfg.n_tx; ++j) {
        const double nrm = h.gains.col(j).norm();
        const double score = nrm > 0.0 ? std::abs(h.gains.col(j).dot(y)) / nrm : 0.0;
        if (score > best_score) {
            best_score = score;
            best = j;
        }
    }
    const auto col = h.gains.col(best);
    const double energy = col.squaredNorm();
    const cplx combined = energy > 0.0 ? col.dot(y) / energy : cplx{0.0, 0.0};
    const std::uint32_t label = c.demap_index(combined);
    const double metric = (y - col * c.points()[label]).squaredNorm();
    return {best, {label}, decode(cfg, best, std::vector<std::uint32_t>{label}), metric};
}

}  // namespace smsmx
