#include "smsmx/constellation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace smsmx {

namespace {

int int_log2_exact(int v) {
    int b = 0;
    while ((1 << b) < v) ++b;
    return b;
}

// Inverse of the reflected binary Gray code g = p ^ (p >> 1).
std::uint32_t gray_decode(std::uint32_t g) {
    std::uint32_t p = 0;
    for (; g; g >>= 1) p ^= g;
    return p;
}

// Coordinate on one axis for a Gray-labeled bit group of `bits` bits:
// ascending odd levels -(L-1), ..., -1, +1, ..., +(L-1).
double axis_level(std::uint32_t label, int bits) {
    const int levels = 1 << bits;
    const int pos = static_cast<int>(gray_decode(label));
    return static_cast<double>(2 * pos - (levels - 1));
}

}  // namespace

Constellation Constellation::build(int order) {
    if (order != 2 && order != 4 && order != 16 && order != 64) {
        throw std::invalid_argument("unsupported constellation order " + std::to_string(order) +
                                    " (supported: 2, 4, 16, 64)");
    }
    const int bits = int_log2_exact(order);
    // Mean energy of the unnormalized odd-integer grid: 1 for BPSK, else
    // 2(M-1)/3, exact in integer arithmetic for M in {4, 16, 64}.
    const double energy = (order == 2) ? 1.0 : static_cast<double>(2 * (order - 1) / 3);
    const double scale = 1.0 / std::sqrt(energy);

    std::vector<cplx> points(static_cast<std::size_t>(order));
    if (order == 2) {
        points[0] = {-1.0, 0.0};
        points[1] = {+1.0, 0.0};
    } else {
        const int half = bits / 2;
        const std::uint32_t mask = (1u << half) - 1u;
        for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(order); ++v) {
            const double i = axis_level(v >> half, half);  // leading bits: I axis
            const double q = axis_level(v & mask, half);
            points[v] = cplx{i * scale, q * scale};
        }
    }
    return Constellation(order, bits, std::move(points));
}

cplx Constellation::point_of(std::uint32_t label) const {
    if (label >= points_.size()) {
        throw std::invalid_argument("label value out of range for order " + std::to_string(order_));
    }
    return points_[label];
}

cplx Constellation::map_bits(std::span<const std::uint8_t> bits) const {
    if (static_cast<int>(bits.size()) != bits_) {
        throw std::invalid_argument("map_bits: expected " + std::to_string(bits_) + " bits, got " +
                                    std::to_string(bits.size()));
    }
    std::uint32_t v = 0;
    for (std::uint8_t b : bits) v = (v << 1) | (b & 1u);
    return points_[v];
}

std::uint32_t Constellation::demap_index(cplx y) const noexcept {
    std::uint32_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::uint32_t i = 0; i < points_.size(); ++i) {
        const double d = std::norm(y - points_[i]);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

std::vector<std::uint8_t> Constellation::demap_symbol(cplx y) const {
    return label_bits(demap_index(y));
}

std::vector<std::uint8_t> Constellation::label_bits(std::uint32_t label) const {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(bits_));
    for (int i = 0; i < bits_; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((label >> (bits_ - 1 - i)) & 1u);
    }
    return out;
}

}  // namespace smsmx
