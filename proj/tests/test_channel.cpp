#include <doctest.h>

#include <cmath>
#include <limits>

#include "smsmx/channel.hpp"
#include "smsmx/codec.hpp"

using namespace smsmx;

TEST_CASE("noise spec calibration") {
    CHECK(NoiseSpec::from_snr_db(0.0).sigma2 == doctest::Approx(1.0));
    CHECK(NoiseSpec::from_snr_db(10.0).sigma2 == doctest::Approx(0.1));
    CHECK(NoiseSpec::from_snr_db(-10.0).sigma2 == doctest::Approx(10.0));
    CHECK(NoiseSpec::noiseless().sigma2 == 0.0);
    CHECK(NoiseSpec::noiseless().is_noiseless());
    CHECK(NoiseSpec::from_snr_db(std::numeric_limits<double>::infinity()).is_noiseless());
    CHECK_THROWS_AS(NoiseSpec::from_snr_db(std::nan("")), std::invalid_argument);
}

TEST_CASE("sample_channel is deterministic for a fixed seed") {
    Rng a(42), b(42);
    const auto h1 = sample_channel(4, 4, a);
    const auto h2 = sample_channel(4, 4, b);
    CHECK(h1.gains == h2.gains);
    Rng c(43);
    CHECK(sample_channel(4, 4, c).gains != h1.gains);
    CHECK_THROWS_AS(sample_channel(0, 4, a), std::invalid_argument);
}

TEST_CASE("fading statistics over 1e5 draws") {
    Rng rng(7);
    const auto h = sample_channel(250, 400, rng);  // 1e5 entries
    const double n = 1e5;
    const double mean_re = h.gains.real().mean();
    const double mean_im = h.gains.imag().mean();
    const double power = h.gains.squaredNorm() / n;
    CHECK(std::abs(mean_re) < 3.0 / std::sqrt(n));
    CHECK(std::abs(mean_im) < 3.0 / std::sqrt(n));
    CHECK(power > 0.97);
    CHECK(power < 1.03);
}

TEST_CASE("apply_channel: noiseless is exact, identity channel passes x through") {
    Rng rng(5);
    const auto h = sample_channel(4, 4, rng);
    Eigen::VectorXcd x(4);
    x << cplx{1, 0}, cplx{0, -1}, cplx{0.5, 0.5}, cplx{0, 0};
    const auto y = apply_channel(h, x, NoiseSpec::noiseless(), rng);
    CHECK((y - h.gains * x).norm() == 0.0);

    ChannelRealization eye{Eigen::MatrixXcd::Identity(4, 4)};
    CHECK(apply_channel(eye, x, NoiseSpec::noiseless(), rng) == x);

    Eigen::VectorXcd bad(3);
    bad.setZero();
    CHECK_THROWS_AS(apply_channel(h, bad, NoiseSpec::noiseless(), rng), std::invalid_argument);
}

TEST_CASE("noise variance matches sigma2 within 3%") {
    Rng rng(11);
    const ChannelRealization silent{Eigen::MatrixXcd::Zero(1000, 1)};
    const Eigen::VectorXcd x = Eigen::VectorXcd::Zero(1);
    const NoiseSpec noise = NoiseSpec::from_snr_db(10.0);  // sigma2 = 0.1
    double acc = 0.0;
    const int reps = 100;  // 1e5 noise samples in total
    for (int i = 0; i < reps; ++i) {
        acc += apply_channel(silent, x, noise, rng).squaredNorm();
    }
    const double measured = acc / (1000.0 * reps);
    CHECK(measured == doctest::Approx(noise.sigma2).epsilon(0.03));
}

TEST_CASE("received signal power per antenna is 1 at unit transmit energy") {
    const SmSmxConfig cfg(4, 2, 4, 4, Scheme::SmSmx);
    const auto c = Constellation::build(4);
    double acc = 0.0;
    const int frames = 20000;
    for (int i = 0; i < frames; ++i) {
        Rng rng = frame_stream(99, static_cast<std::uint64_t>(i));
        const BitFrame f = random_frame(cfg, rng);
        const auto h = sample_channel(cfg.n_rx, cfg.n_tx, rng);
        const auto y = apply_channel(h, encode(cfg, f, c).dense(cfg), NoiseSpec::noiseless(), rng);
        acc += y.squaredNorm();
    }
    const double per_antenna = acc / (static_cast<double>(frames) * cfg.n_rx);
    CHECK(per_antenna == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("eb/n0 conversion") {
    CHECK(ebn0_db_from_snr_db(10.0, 5) == doctest::Approx(10.0 - 10.0 * std::log10(5.0)));
    CHECK(ebn0_db_from_snr_db(3.0, 1) == doctest::Approx(3.0));
}

TEST_CASE("draw sequence is pinned: channel then noise, two words per sample") {
    // consuming H then noise must equal consuming the same words by hand
    Rng a(123), b(123);
    const auto h = sample_channel(2, 1, a);
    Eigen::MatrixXcd manual(2, 1);
    manual(0, 0) = b.next_cnormal();
    manual(1, 0) = b.next_cnormal();
    CHECK(h.gains == manual);
}
