#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smsmx/channel.hpp"
#include "smsmx/codec.hpp"

namespace smsmx {

enum class DetectorKind {
    Ml,        // joint ML over the full codebook
    TwoStage,  // per-group zero-forcing + residual comparison
    SmMrrc,    // matched-filter antenna estimate, then symbol demap (pure SM only)
};

const char* to_string(DetectorKind d) noexcept;
// Accepts "ml" | "two_stage" | "sm_mrrc"; throws std::invalid_argument otherwise.
DetectorKind detector_from_string(const std::string& s);

struct RankDeficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DetectionResult {
    int group = 0;
    std::vector<std::uint32_t> symbol_labels;  // one label value per active antenna
    BitFrame frame;                            // decode(group, symbol_labels)
    double metric = 0.0;                       // residual energy ||y - H_g s||^2
};

// Hypothesis set for the joint ML search, in ascending frame order. Immutable
// after build; share freely across workers.
class Codebook {
public:
    struct Hypothesis {
        BitFrame frame;
        int group;
        std::vector<std::uint32_t> labels;
        Eigen::VectorXcd active;  // K scaled symbols (the dense form's nonzeros)
    };

    static Codebook build(const SmSmxConfig& cfg, const Constellation& c,
                          std::size_t cap = kDefaultEnumerationCap);

    const SmSmxConfig& config() const noexcept { return cfg_; }
    const Constellation& constellation() const noexcept { return constellation_; }
    const std::vector<Hypothesis>& hypotheses() const noexcept { return hypotheses_; }

private:
    Codebook(SmSmxConfig cfg, Constellation c, std::vector<Hypothesis> h)
        : cfg_(cfg), constellation_(std::move(c)), hypotheses_(std::move(h)) {}

    SmSmxConfig cfg_;
    Constellation constellation_;
    std::vector<Hypothesis> hypotheses_;
};

// argmin over all codebook entries of ||y - H x||^2; ties resolve to the
// smallest frame value.
DetectionResult ml_detect(const Eigen::VectorXcd& y, const ChannelRealization& h,
                          const Codebook& codebook);
DetectionResult ml_detect(const Eigen::VectorXcd& y, const ChannelRealization& h,
                          const SmSmxConfig& cfg, const Constellation& c);

// For each group: zero-force through pinv(H_g), quantize per component, score
// the residual; the smallest residual wins. Needs Nr >= K. Throws
// RankDeficientError if any H_g has a singular value below 1e-10 of its
// largest.
DetectionResult two_stage_detect(const Eigen::VectorXcd& y, const ChannelRealization& h,
                                 const SmSmxConfig& cfg, const Constellation& c);

// Pure-SM baseline: antenna index by maximum |h_j^H y| / ||h_j||, then demap
// of the MRC-combined symbol h_j^H y / ||h_j||^2.
DetectionResult sm_mrrc_detect(const Eigen::VectorXcd& y, const ChannelRealization& h,
                               const SmSmxConfig& cfg, const Constellation& c);

}  // namespace smsmx
