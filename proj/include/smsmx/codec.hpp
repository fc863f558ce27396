#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "smsmx/config.hpp"
#include "smsmx/constellation.hpp"
#include "smsmx/rng.hpp"

namespace smsmx {

// Thrown when a full codebook enumeration would exceed the configured cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20;

// One frame's information bits, MSB first: group-selection bits, then K
// blocks of log2(M) symbol bits.
struct BitFrame {
    std::vector<std::uint8_t> bits;

    static BitFrame from_value(std::uint64_t value, int length);
    std::uint64_t value() const noexcept;
    int size() const noexcept { return static_cast<int>(bits.size()); }
    std::string to_string() const;

    friend bool operator==(const BitFrame&, const BitFrame&) = default;
};

int hamming_distance(const BitFrame& a, const BitFrame& b);

// Uniform random frame for cfg, consuming ceil(eta/64) words from the stream;
// bit i of the frame is bit (i mod 64) of word floor(i/64).
BitFrame random_frame(const SmSmxConfig& cfg, Rng& rng);

// Sparse transmit vector: K constellation symbols on one aligned antenna
// group. `symbols` holds the unscaled constellation points; the dense form
// scales each by 1/sqrt(K) and is zero off the active group.
struct TransmitVector {
    int group = 0;
    std::vector<cplx> symbols;

    Eigen::VectorXcd dense(const SmSmxConfig& cfg) const;
};

// Bit partition of the frame without mapping to symbols.
int frame_group(const SmSmxConfig& cfg, const BitFrame& frame);
std::vector<std::uint32_t> frame_symbol_labels(const SmSmxConfig& cfg, const BitFrame& frame);

TransmitVector encode(const SmSmxConfig& cfg, const BitFrame& frame, const Constellation& c);

// Exact inverse of encode's bit partition.
BitFrame decode(const SmSmxConfig& cfg, int group, std::span<const std::uint32_t> symbol_labels);
BitFrame decode(const SmSmxConfig& cfg, int group,
                const std::vector<std::vector<std::uint8_t>>& symbol_labels);

struct CodebookEntry {
    BitFrame frame;
    TransmitVector tx;
};

// All 2^eta frames with their encodings, in ascending frame order.
std::vector<CodebookEntry> enumerate_codebook(const SmSmxConfig& cfg, const Constellation& c,
                                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace smsmx
