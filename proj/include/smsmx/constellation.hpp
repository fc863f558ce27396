#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace smsmx {

using cplx = std::complex<double>;

// Square M-QAM (plus BPSK) with unit average energy and per-axis reflected
// Gray labels. Points are stored indexed by label value; the first half of a
// label selects the I coordinate, the second half the Q coordinate, with axis
// levels ordered ascending (most negative first). BPSK: 0 -> -1, 1 -> +1.
class Constellation {
public:
    // order must be one of {2, 4, 16, 64}
    static Constellation build(int order);

    int order() const noexcept { return order_; }
    int bits_per_symbol() const noexcept { return bits_; }

    // point_of(v) is the point labeled by the bit pattern v; points()[v] is
    // the same lookup in bulk form.
    const std::vector<cplx>& points() const noexcept { return points_; }
    cplx point_of(std::uint32_t label) const;
    cplx map_bits(std::span<const std::uint8_t> bits) const;

    // Euclidean-nearest hard decision; ties go to the lowest label value.
    std::uint32_t demap_index(cplx y) const noexcept;
    std::vector<std::uint8_t> demap_symbol(cplx y) const;

    // MSB-first bit pattern of a label value.
    std::vector<std::uint8_t> label_bits(std::uint32_t label) const;

private:
    Constellation(int order, int bits, std::vector<cplx> points)
        : order_(order), bits_(bits), points_(std::move(points)) {}

    int order_;
    int bits_;
    std::vector<cplx> points_;
};

}  // namespace smsmx
