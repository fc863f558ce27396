#include "smsmx/config.hpp"

#include <stdexcept>

namespace smsmx {

const char* to_string(Scheme s) noexcept {
    switch (s) {
        case Scheme::SmSmx: return "sm_smx";
        case Scheme::PureSm: return "pure_sm";
        case Scheme::PureSmx: return "pure_smx";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "sm_smx") return Scheme::SmSmx;
    if (s == "pure_sm") return Scheme::PureSm;
    if (s == "pure_smx") return Scheme::PureSmx;
    throw std::invalid_argument("unknown scheme '" + s + "' (expected sm_smx, pure_sm or pure_smx)");
}

SmSmxConfig::SmSmxConfig(int n_tx_, int n_active_, int mod_order_, int n_rx_, Scheme scheme_)
    : n_tx(n_tx_), n_active(n_active_), mod_order(mod_order_), n_rx(n_rx_), scheme(scheme_) {
    if (n_tx < 1) throw std::invalid_argument("N must be >= 1");
    if (n_active < 1) throw std::invalid_argument("K must be >= 1");
    if (n_rx < 1) throw std::invalid_argument("Nr must be >= 1");
    if (n_tx % n_active != 0) throw std::invalid_argument("K must divide N");
    if (!is_power_of_two(n_tx / n_active)) {
        throw std::invalid_argument("N/K must be a power of two");
    }
    if (mod_order != 2 && mod_order != 4 && mod_order != 16 && mod_order != 64) {
        throw std::invalid_argument("M must be one of 2, 4, 16, 64");
    }
    if (scheme == Scheme::PureSm && n_active != 1) {
        throw std::invalid_argument("pure_sm requires K = 1");
    }
    if (scheme == Scheme::PureSmx && n_active != n_tx) {
        throw std::invalid_argument("pure_smx requires K = N");
    }
}

int SmSmxConfig::bits_per_frame() const noexcept {
    switch (scheme) {
        case Scheme::SmSmx: return group_bits() + n_active * symbol_bits();
        case Scheme::PureSm: return int_log2(n_tx) + symbol_bits();
        case Scheme::PureSmx: return n_tx * symbol_bits();
    }
    return 0;
}

}  // namespace smsmx
