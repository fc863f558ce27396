#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "smsmx/montecarlo.hpp"

namespace smsmx {

struct SweepRow {
    SimPoint point;
    ErrorRecord record;
};

// CSV schema, fixed:
//   scheme,detector,n,k,m,nr,eta,snr_db,ebn0_db,frames,bit_errors,ber,group_errors,fer,seed
// Floats carry 6 significant digits; output bytes are deterministic for
// identical inputs.
std::string csv_header();
std::string csv_row(const SimPoint& point, const ErrorRecord& record);
void emit_csv(std::span<const SweepRow> rows, std::ostream& out);

// One row per codebook entry, ascending frame order:
//   frame bits | group | active antennas | symbols
void dump_mapping_table(const SmSmxConfig& cfg, const Constellation& c, std::ostream& out,
                        std::size_t cap = kDefaultEnumerationCap);

}  // namespace smsmx
