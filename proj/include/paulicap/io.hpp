#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "paulicap/codes.hpp"
#include "paulicap/errors.hpp"
#include "paulicap/optim.hpp"
#include "paulicap/scan.hpp"

namespace paulicap {

namespace detail {

inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace detail

// Writes via a sibling temp file plus rename so readers never observe a
// half-written table.
inline void write_text_atomic(const std::filesystem::path& path,
                              const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
}

inline std::string scan_csv(const std::vector<ScanRecord>& records) {
    std::string out = "p1,p2,p3,q1_raw,best_rate,best_code,gap,superadditive\n";
    for (const auto& r : records) {
        out += detail::fmt12(r.p1) + ',' + detail::fmt12(r.p2) + ',' +
               detail::fmt12(r.p3) + ',' + detail::fmt12(r.q1_raw) + ',' +
               detail::fmt12(r.best_rate) + ',' + code_name(r.best_code) + ',' +
               detail::fmt12(r.gap) + ',' + (r.superadditive ? '1' : '0') + '\n';
    }
    return out;
}

inline std::string slice_csv(const SliceResult& slice) {
    std::string out = "p1,p2,value\n";
    for (std::size_t i = 0; i < slice.p1.size(); ++i)
        for (std::size_t j = 0; j < slice.p2.size(); ++j)
            out += detail::fmt12(slice.p1[i]) + ',' + detail::fmt12(slice.p2[j]) +
                   ',' + detail::fmt12(slice.values[i][j]) + '\n';
    return out;
}

inline std::string compare_csv(const std::vector<CompareRecord>& records) {
    std::string out = "p1,p2,p3,winner,phi_rate,chi_rate\n";
    for (const auto& r : records)
        out += detail::fmt12(r.p1) + ',' + detail::fmt12(r.p2) + ',' +
               detail::fmt12(r.p3) + ',' + family_name(r.winner) + ',' +
               detail::fmt12(r.phi_rate) + ',' + detail::fmt12(r.chi_rate) + '\n';
    return out;
}

inline std::string curve_csv(const LearningCurve& curve) {
    std::string out = "generation,mean_fitness,gen_best,best_so_far\n";
    for (const auto& pt : curve)
        out += std::to_string(pt.generation) + ',' +
               detail::fmt12(pt.mean_fitness) + ',' +
               detail::fmt12(pt.gen_best) + ',' +
               detail::fmt12(pt.best_so_far) + '\n';
    return out;
}

inline void write_scan_csv(const std::filesystem::path& path,
                           const std::vector<ScanRecord>& records) {
    write_text_atomic(path, scan_csv(records));
}

inline void write_slice_csv(const std::filesystem::path& path,
                            const SliceResult& slice) {
    write_text_atomic(path, slice_csv(slice));
}

inline void write_compare_csv(const std::filesystem::path& path,
                              const std::vector<CompareRecord>& records) {
    write_text_atomic(path, compare_csv(records));
}

inline void write_curve_csv(const std::filesystem::path& path,
                            const LearningCurve& curve) {
    write_text_atomic(path, curve_csv(curve));
}

} // namespace paulicap
