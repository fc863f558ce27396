#include "smsmx/codec.hpp"

namespace smsmx {

BitFrame BitFrame::from_value(std::uint64_t value, int length) {
    if (length < 0 || length > 64) throw std::invalid_argument("frame length must be in [0, 64]");
    if (length < 64 && (value >> length) != 0) {
        throw std::invalid_argument("frame value does not fit in " + std::to_string(length) + " bits");
    }
    BitFrame f;
    f.bits.resize(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        f.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1u);
    }
    return f;
}

std::uint64_t BitFrame::value() const noexcept {
    std::uint64_t v = 0;
    for (std::uint8_t b : bits) v = (v << 1) | (b & 1u);
    return v;
}

std::string BitFrame::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

int hamming_distance(const BitFrame& a, const BitFrame& b) {
    if (a.bits.size() != b.bits.size()) {
        throw std::invalid_argument("hamming_distance: frame lengths differ");
    }
    int d = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) d += (a.bits[i] ^ b.bits[i]) & 1;
    return d;
}

BitFrame random_frame(const SmSmxConfig& cfg, Rng& rng) {
    const int eta = cfg.bits_per_frame();
    BitFrame f;
    f.bits.resize(static_cast<std::size_t>(eta));
    std::uint64_t word = 0;
    for (int i = 0; i < eta; ++i) {
        if (i % 64 == 0) word = rng.next_u64();
        f.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
    }
    return f;
}

Eigen::VectorXcd TransmitVector::dense(const SmSmxConfig& cfg) const {
    if (static_cast<int>(symbols.size()) != cfg.n_active) {
        throw std::invalid_argument("transmit vector has wrong symbol count for config");
    }
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(cfg.n_tx);
    const double s = cfg.antenna_scale();
    for (int j = 0; j < cfg.n_active; ++j) {
        x(group * cfg.n_active + j) = symbols[static_cast<std::size_t>(j)] * s;
    }
    return x;
}

int frame_group(const SmSmxConfig& cfg, const BitFrame& frame) {
    if (frame.size() != cfg.bits_per_frame()) {
        throw std::invalid_argument("frame length " + std::to_string(frame.size()) + " != eta " +
                                    std::to_string(cfg.bits_per_frame()));
    }
    int g = 0;
    for (int i = 0; i < cfg.group_bits(); ++i) g = (g << 1) | frame.bits[static_cast<std::size_t>(i)];
    return g;
}

std::vector<std::uint32_t> frame_symbol_labels(const SmSmxConfig& cfg, const BitFrame& frame) {
    if (frame.size() != cfg.bits_per_frame()) {
        throw std::invalid_argument("frame length " + std::to_string(frame.size()) + " != eta " +
                                    std::to_string(cfg.bits_per_frame()));
    }
    const int sb = cfg.symbol_bits();
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(cfg.n_active));
    int pos = cfg.group_bits();
    for (int j = 0; j < cfg.n_active; ++j) {
        std::uint32_t v = 0;
        for (int i = 0; i < sb; ++i) v = (v << 1) | frame.bits[static_cast<std::size_t>(pos++)];
        labels[static_cast<std::size_t>(j)] = v;
    }
    return labels;
}

TransmitVector encode(const SmSmxConfig& cfg, const BitFrame& frame, const Constellation& c) {
    if (c.order() != cfg.mod_order) {
        throw std::invalid_argument("constellation order does not match config");
    }
    TransmitVector tx;
    tx.group = frame_group(cfg, frame);
    const auto labels = frame_symbol_labels(cfg, frame);
    tx.symbols.reserve(labels.size());
    for (std::uint32_t v : labels) tx.symbols.push_back(c.point_of(v));
    return tx;
}

BitFrame decode(const SmSmxConfig& cfg, int group, std::span<const std::uint32_t> symbol_labels) {
    if (group < 0 || group >= cfg.group_count()) {
        throw std::invalid_argument("group index " + std::to_string(group) + " out of range [0, " +
                                    std::to_string(cfg.group_count()) + ")");
    }
    if (static_cast<int>(symbol_labels.size()) != cfg.n_active) {
        throw std::invalid_argument("expected " + std::to_string(cfg.n_active) + " symbol labels");
    }
    const int sb = cfg.symbol_bits();
    BitFrame f;
    f.bits.reserve(static_cast<std::size_t>(cfg.bits_per_frame()));
    for (int i = cfg.group_bits() - 1; i >= 0; --i) {
        f.bits.push_back(static_cast<std::uint8_t>((group >> i) & 1));
    }
    for (std::uint32_t v : symbol_labels) {
        if (v >> sb) throw std::invalid_argument("symbol label value out of range");
        for (int i = sb - 1; i >= 0; --i) f.bits.push_back(static_cast<std::uint8_t>((v >> i) & 1u));
    }
    return f;
}

BitFrame decode(const SmSmxConfig& cfg, int group,
                const std::vector<std::vector<std::uint8_t>>& symbol_labels) {
    const int sb = cfg.symbol_bits();
    std::vector<std::uint32_t> values;
    values.reserve(symbol_labels.size());
    for (const auto& label : symbol_labels) {
        if (static_cast<int>(label.size()) != sb) {
            throw std::invalid_argument("symbol label must have log2(M) = " + std::to_string(sb) +
                                        " bits");
        }
        std::uint32_t v = 0;
        for (std::uint8_t b : label) v = (v << 1) | (b & 1u);
        values.push_back(v);
    }
    return decode(cfg, group, values);
}

std::vector<CodebookEntry> enumerate_codebook(const SmSmxConfig& cfg, const Constellation& c,
                                              std::size_t cap) {
    const int eta = cfg.bits_per_frame();
    if (eta >= 64 || (std::uint64_t{1} << eta) > cap) {
        throw CapExceededError("codebook size 2^" + std::to_string(eta) +
                               " exceeds enumeration cap " + std::to_string(cap));
    }
    const std::uint64_t count = std::uint64_t{1} << eta;
    std::vector<CodebookEntry> entries;
    entries.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) {
        BitFrame f = BitFrame::from_value(v, eta);
        TransmitVector tx = encode(cfg, f, c);
        entries.push_back({std::move(f), std::move(tx)});
    }
    return entries;
}

}  // namespace smsmx
