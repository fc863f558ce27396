#pragma once

#include <Eigen/Dense>

#include "smsmx/rng.hpp"

namespace smsmx {

// Quasi-static flat Rayleigh fading: Nr x N i.i.d. CN(0,1) gains, redrawn
// once per frame.
struct ChannelRealization {
    Eigen::MatrixXcd gains;
};

// Average received SNR per receive antenna, with total transmit energy
// normalized to 1: sigma2 = 10^(-snr_db/10) is the noise variance per complex
// receive sample. sigma2 = 0 is the first-class noiseless sentinel.
struct NoiseSpec {
    double snr_db;
    double sigma2;

    static NoiseSpec from_snr_db(double snr_db);
    static NoiseSpec noiseless();

    bool is_noiseless() const noexcept { return sigma2 == 0.0; }
};

// Entries drawn row-major, one CN(0,1) per entry (two uniforms each).
ChannelRealization sample_channel(int n_rx, int n_tx, Rng& rng);

// y = H x + n with n i.i.d. CN(0, sigma2). Noiseless mode draws nothing from
// the stream.
Eigen::VectorXcd apply_channel(const ChannelRealization& h, const Eigen::VectorXcd& x,
                               const NoiseSpec& noise, Rng& rng);

// Eb/N0 (dB) = SNR (dB) - 10 log10(eta)
double ebn0_db_from_snr_db(double snr_db, int bits_per_frame);

}  // namespace smsmx
