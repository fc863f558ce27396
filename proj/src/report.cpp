#include "smsmx/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace smsmx {

namespace {

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string csv_header() {
    return "scheme,detector,n,k,m,nr,eta,snr_db,ebn0_db,frames,bit_errors,ber,group_errors,fer,"
           "seed\n";
}

std::string csv_row(const SimPoint& point, const ErrorRecord& record) {
    const SmSmxConfig& cfg = point.cfg;
    std::ostringstream out;
    out << to_string(cfg.scheme) << ',' << to_string(point.detector) << ',' << cfg.n_tx << ','
        << cfg.n_active << ',' << cfg.mod_order << ',' << cfg.n_rx << ',' << cfg.bits_per_frame()
        << ',' << fmt6(point.snr_db) << ','
        << fmt6(ebn0_db_from_snr_db(point.snr_db, cfg.bits_per_frame())) << ',' << record.frames
        << ',' << record.bit_errors << ',' << fmt6(record.ber) << ',' << record.group_errors << ','
        << fmt6(record.fer) << ',' << point.master_seed << '\n';
    return out.str();
}

void emit_csv(std::span<const SweepRow> rows, std::ostream& out) {
    out << csv_header();
    for (const SweepRow& r : rows) out << csv_row(r.point, r.record);
}

void dump_mapping_table(const SmSmxConfig& cfg, const Constellation& c, std::ostream& out,
                        std::size_t cap) {
    const auto entries = enumerate_codebook(cfg, c, cap);
    out << "frame | group | antennas | symbols\n";
    for (const auto& e : entries) {
        out << e.frame.to_string() << " | " << e.tx.group << " | ";
        for (int j = 0; j < cfg.n_active; ++j) {
            if (j) out << ',';
            out << e.tx.group * cfg.n_active + j;
        }
        out << " | ";
        for (std::size_t j = 0; j < e.tx.symbols.size(); ++j) {
            if (j) out << ',';
            const cplx s = e.tx.symbols[j];
            out << fmt6(s.real()) << (s.imag() < 0 ? "-" : "+") << fmt6(std::abs(s.imag())) << "j";
        }
        out << '\n';
    }
}

}  // namespace smsmx
