#include "smsmx/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace smsmx {

namespace {

// Everything a frame simulation needs, built once per point and read-only
// afterwards.
struct PointContext {
    explicit PointContext(const SimPoint& point)
        : constellation(Constellation::build(point.cfg.mod_order)),
          noise(NoiseSpec::from_snr_db(point.snr_db)) {
        if (point.detector == DetectorKind::Ml) {
            codebook.emplace(Codebook::build(point.cfg, constellation));
        }
        if (point.channel_override) {
            fixed_channel = ChannelRealization{*point.channel_override};
        }
    }

    Constellation constellation;
    NoiseSpec noise;
    std::optional<Codebook> codebook;
    std::optional<ChannelRealization> fixed_channel;
};

FrameOutcome simulate_frame(const SimPoint& point, const PointContext& ctx,
                            std::uint64_t frame_index) {
    const SmSmxConfig& cfg = point.cfg;
    Rng rng = frame_stream(point.master_seed, frame_index);

    const BitFrame sent = random_frame(cfg, rng);
    const TransmitVector tx = encode(cfg, sent, ctx.constellation);
    const ChannelRealization channel =
        ctx.fixed_channel ? *ctx.fixed_channel : sample_channel(cfg.n_rx, cfg.n_tx, rng);
    const Eigen::VectorXcd y = apply_channel(channel, tx.dense(cfg), ctx.noise, rng);

    DetectionResult det;
    switch (point.detector) {
        case DetectorKind::Ml: det = ml_detect(y, channel, *ctx.codebook); break;
        case DetectorKind::TwoStage:
            det = two_stage_detect(y, channel, cfg, ctx.constellation);
            break;
        case DetectorKind::SmMrrc: det = sm_mrrc_detect(y, channel, cfg, ctx.constellation); break;
    }

    FrameOutcome out;
    out.bit_errors = static_cast<std::uint32_t>(hamming_distance(sent, det.frame));
    out.group_error = det.group != tx.group;
    const auto sent_labels = frame_symbol_labels(cfg, sent);
    for (std::size_t j = 0; j < sent_labels.size(); ++j) {
        if (det.symbol_labels[j] != sent_labels[j]) ++out.symbol_errors;
    }
    return out;
}

struct Counts {
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t group_errors = 0;
    std::uint64_t symbol_errors = 0;

    void absorb(const FrameOutcome& o) {
        bit_errors += o.bit_errors;
        frame_errors += o.bit_errors > 0 ? 1 : 0;
        group_errors += o.group_error ? 1 : 0;
        symbol_errors += o.symbol_errors;
    }

    void add(const Counts& c) {
        bit_errors += c.bit_errors;
        frame_errors += c.frame_errors;
        group_errors += c.group_errors;
        symbol_errors += c.symbol_errors;
    }
};

Counts run_range(const SimPoint& point, const PointContext& ctx, std::uint64_t first,
                 std::uint64_t last) {
    Counts c;
    for (std::uint64_t i = first; i < last; ++i) c.absorb(simulate_frame(point, ctx, i));
    return c;
}

}  // namespace

void validate(const SimPoint& point) {
    if (point.max_frames < 1) throw std::invalid_argument("max_frames must be >= 1");
    if (point.detector == DetectorKind::SmMrrc && point.cfg.scheme != Scheme::PureSm) {
        throw std::invalid_argument("sm_mrrc detector requires the pure_sm scheme");
    }
    if (point.detector == DetectorKind::TwoStage && point.cfg.n_rx < point.cfg.n_active) {
        throw std::invalid_argument("two_stage detector requires Nr >= K");
    }
    if (point.channel_override && (point.channel_override->rows() != point.cfg.n_rx ||
                                   point.channel_override->cols() != point.cfg.n_tx)) {
        throw std::invalid_argument("channel_override must be Nr x N");
    }
    NoiseSpec::from_snr_db(point.snr_db);  // rejects NaN
}

FrameOutcome run_frame(const SimPoint& point, std::uint64_t frame_index) {
    validate(point);
    PointContext ctx(point);
    return simulate_frame(point, ctx, frame_index);
}

int worker_count() {
    if (const char* env = std::getenv("SMSMX_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<int>(std::min(v, 64L));
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

ErrorRecord run_point(const SimPoint& point, const ProgressFn& progress) {
    validate(point);
    const PointContext ctx(point);
    const auto t0 = std::chrono::steady_clock::now();

    Counts totals;
    std::uint64_t frames_done = 0;
    while (frames_done < point.max_frames) {
        const std::uint64_t chunk = std::min(kChunkFrames, point.max_frames - frames_done);
        const int workers =
            static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count()), chunk));
        if (workers <= 1) {
            totals.add(run_range(point, ctx, frames_done, frames_done + chunk));
        } else {
            std::vector<Counts> parts(static_cast<std::size_t>(workers));
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            const std::uint64_t per = chunk / static_cast<std::uint64_t>(workers);
            const std::uint64_t extra = chunk % static_cast<std::uint64_t>(workers);
            std::uint64_t lo = frames_done;
            for (int t = 0; t < workers; ++t) {
                const std::uint64_t hi = lo + per + (static_cast<std::uint64_t>(t) < extra ? 1 : 0);
                pool.emplace_back([&point, &ctx, &parts, t, lo, hi] {
                    parts[static_cast<std::size_t>(t)] = run_range(point, ctx, lo, hi);
                });
                lo = hi;
            }
            for (auto& th : pool) th.join();
            for (const auto& p : parts) totals.add(p);
        }
        frames_done += chunk;
        if (progress) progress(point, frames_done, totals.bit_errors);
        if (point.target_bit_errors > 0 && totals.bit_errors >= point.target_bit_errors) break;
    }

    const auto t1 = std::chrono::steady_clock::now();
    const std::uint64_t eta = static_cast<std::uint64_t>(point.cfg.bits_per_frame());
    ErrorRecord rec;
    rec.frames = frames_done;
    rec.bit_errors = totals.bit_errors;
    rec.frame_errors = totals.frame_errors;
    rec.group_errors = totals.group_errors;
    rec.symbol_errors = totals.symbol_errors;
    rec.ber = static_cast<double>(totals.bit_errors) / static_cast<double>(frames_done * eta);
    rec.fer = static_cast<double>(totals.frame_errors) / static_cast<double>(frames_done);
    rec.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    return rec;
}

std::vector<ErrorRecord> run_sweep(std::span<const SimPoint> points, const RecordFn& on_record,
                                   const ProgressFn& progress) {
    if (points.empty()) throw std::invalid_argument("run_sweep needs at least one point");
    std::vector<ErrorRecord> records;
    records.reserve(points.size());
    for (const SimPoint& p : points) {
        ErrorRecord rec = run_point(p, progress);
        records.push_back(rec);
        if (on_record) on_record(p, rec);
    }
    return records;
}

}  // namespace smsmx
