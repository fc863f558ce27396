#include "smsmx/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace smsmx {

NoiseSpec NoiseSpec::from_snr_db(double snr_db) {
    if (std::isnan(snr_db)) throw std::invalid_argument("snr_db must not be NaN");
    if (std::isinf(snr_db) && snr_db > 0) return noiseless();
    return {snr_db, std::pow(10.0, -snr_db / 10.0)};
}

NoiseSpec NoiseSpec::noiseless() {
    return {std::numeric_limits<double>::infinity(), 0.0};
}

ChannelRealization sample_channel(int n_rx, int n_tx, Rng& rng) {
    if (n_rx < 1 || n_tx < 1) throw std::invalid_argument("channel dimensions must be >= 1");
    Eigen::MatrixXcd h(n_rx, n_tx);
    for (int r = 0; r < n_rx; ++r) {
        for (int c = 0; c < n_tx; ++c) h(r, c) = rng.next_cnormal();
    }
    return {std::move(h)};
}

Eigen::VectorXcd apply_channel(const ChannelRealization& h, const Eigen::VectorXcd& x,
                               const NoiseSpec& noise, Rng& rng) {
    if (h.gains.cols() != x.size()) {
        throw std::invalid_argument("channel/transmit dimension mismatch: H is " +
                                    std::to_string(h.gains.rows()) + "x" +
                                    std::to_string(h.gains.cols()) + ", x has " +
                                    std::to_string(x.size()) + " entries");
    }
    Eigen::VectorXcd y = h.gains * x;
    if (!noise.is_noiseless()) {
        const double amp = std::sqrt(noise.sigma2);
        for (Eigen::Index i = 0; i < y.size(); ++i) y(i) += amp * rng.next_cnormal();
    }
    return y;
}

double ebn0_db_from_snr_db(double snr_db, int bits_per_frame) {
    return snr_db - 10.0 * std::log10(static_cast<double>(bits_per_frame));
}

}  // namespace smsmx
