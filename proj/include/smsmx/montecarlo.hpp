#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "smsmx/detection.hpp"

namespace smsmx {

// One simulation point: a configuration, detector and SNR, plus the stopping
// rule and the master seed that fully determines every frame.
struct SimPoint {
    SmSmxConfig cfg;
    DetectorKind detector = DetectorKind::Ml;
    double snr_db = 0.0;
    std::uint64_t master_seed = 1;
    std::uint64_t max_frames = 1'000'000;
    std::uint64_t target_bit_errors = 200;  // 0 disables early stopping

    // Test hook: use this fixed Nr x N matrix for every frame instead of
    // drawing Rayleigh fading (the channel draw is skipped entirely).
    std::optional<Eigen::MatrixXcd> channel_override;
};

// Throws std::invalid_argument on an unusable point (bad stopping rule,
// detector/scheme mismatch, two_stage with Nr < K, override shape).
void validate(const SimPoint& point);

struct FrameOutcome {
    std::uint32_t bit_errors = 0;
    bool group_error = false;
    std::uint32_t symbol_errors = 0;
};

struct ErrorRecord {
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t group_errors = 0;
    std::uint64_t symbol_errors = 0;
    double ber = 0.0;
    double fer = 0.0;
    double elapsed_seconds = 0.0;
};

// Stopping is evaluated only at chunk boundaries, so the frame count is a
// multiple of this unless max_frames intervenes. Keeps results independent of
// how frames are scheduled across workers.
inline constexpr std::uint64_t kChunkFrames = 1024;

// Simulate frame `frame_index` of `point`: draw bits, channel and noise from
// frame_stream(master_seed, frame_index), detect, and compare.
FrameOutcome run_frame(const SimPoint& point, std::uint64_t frame_index);

using ProgressFn =
    std::function<void(const SimPoint& point, std::uint64_t frames_done, std::uint64_t bit_errors)>;

// Frames 0, 1, 2, ... until max_frames or (target_bit_errors > 0 and
// bit_errors >= target). The record depends only on (point contents); worker
// count and scheduling never change it.
ErrorRecord run_point(const SimPoint& point, const ProgressFn& progress = {});

using RecordFn = std::function<void(const SimPoint& point, const ErrorRecord& record)>;

// Points in order, each independent. on_record fires as each point finishes,
// so partial results are flushed before any later failure aborts the sweep.
std::vector<ErrorRecord> run_sweep(std::span<const SimPoint> points, const RecordFn& on_record = {},
                                   const ProgressFn& progress = {});

// Worker threads for intra-point parallelism: SMSMX_THREADS if set (>= 1),
// otherwise hardware concurrency.
int worker_count();

}  // namespace smsmx
