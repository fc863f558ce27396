#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "smsmx/report.hpp"

using namespace smsmx;

namespace {

SimPoint flagship_point(double snr_db, std::uint64_t seed) {
    return SimPoint{.cfg = SmSmxConfig(4, 2, 4, 4, Scheme::SmSmx),
                    .detector = DetectorKind::Ml,
                    .snr_db = snr_db,
                    .master_seed = seed,
                    .max_frames = 1024,
                    .target_bit_errors = 0};
}

ErrorRecord record_with(std::uint64_t frames, std::uint64_t bit_errors, std::uint64_t frame_errors,
                        std::uint64_t group_errors, std::uint64_t eta) {
    ErrorRecord rec;
    rec.frames = frames;
    rec.bit_errors = bit_errors;
    rec.frame_errors = frame_errors;
    rec.group_errors = group_errors;
    rec.ber = static_cast<double>(bit_errors) / static_cast<double>(frames * eta);
    rec.fer = static_cast<double>(frame_errors) / static_cast<double>(frames);
    return rec;
}

}  // namespace

TEST_CASE("empty record list emits the header only") {
    std::ostringstream out;
    emit_csv(std::vector<SweepRow>{}, out);
    CHECK(out.str() ==
          "scheme,detector,n,k,m,nr,eta,snr_db,ebn0_db,frames,bit_errors,ber,group_errors,fer,"
          "seed\n");
}

TEST_CASE("row fields: eta and eb/n0 for the flagship config") {
    const auto row = csv_row(flagship_point(10.0, 42), record_with(1024, 123, 7, 7, 5));
    // eta column (7th) is 5
    std::istringstream fields(row);
    std::string f;
    std::vector<std::string> cols;
    while (std::getline(fields, f, ',')) cols.push_back(f);
    REQUIRE(cols.size() == 15);
    CHECK(cols[6] == "5");

    char expect_ebn0[32];
    std::snprintf(expect_ebn0, sizeof(expect_ebn0), "%.6g", 10.0 - 10.0 * std::log10(5.0));
    CHECK(cols[8] == expect_ebn0);
    CHECK(std::string(expect_ebn0) == "3.0103");
}

TEST_CASE("csv output is byte-exact") {
    const std::vector<SweepRow> rows{
        {flagship_point(10.0, 42), record_with(1024, 123, 7, 7, 5)},
        {flagship_point(0.0, 42), record_with(2048, 2222, 900, 500, 5)},
    };
    std::ostringstream out;
    emit_csv(rows, out);
    const std::string expected =
        "scheme,detector,n,k,m,nr,eta,snr_db,ebn0_db,frames,bit_errors,ber,group_errors,fer,seed\n"
        "sm_smx,ml,4,2,4,4,5,10,3.0103,1024,123,0.0240234,7,0.00683594,42\n"
        "sm_smx,ml,4,2,4,4,5,0,-6.9897,2048,2222,0.216992,500,0.439453,42\n";
    CHECK(out.str() == expected);

    std::ostringstream again;
    emit_csv(rows, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("mapping table for the flagship config") {
    const SmSmxConfig cfg(4, 2, 4, 4, Scheme::SmSmx);
    const auto c = Constellation::build(4);
    std::ostringstream out;
    dump_mapping_table(cfg, c, out);

    std::istringstream lines(out.str());
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 33);  // header + 32 entries
    CHECK(rows[0] == "frame | group | antennas | symbols");
    CHECK(rows[1].starts_with("00000 | 0 | 0,1 | "));
    for (int i = 1; i <= 16; ++i) CHECK(rows[static_cast<std::size_t>(i)].find("| 0,1 |") != std::string::npos);
    for (int i = 17; i <= 32; ++i) CHECK(rows[static_cast<std::size_t>(i)].find("| 2,3 |") != std::string::npos);
}

TEST_CASE("mapping table respects the enumeration cap") {
    const SmSmxConfig cfg(4, 2, 4, 4, Scheme::SmSmx);
    const auto c = Constellation::build(4);
    std::ostringstream out;
    CHECK_THROWS_AS(dump_mapping_table(cfg, c, out, 8), CapExceededError);
}
