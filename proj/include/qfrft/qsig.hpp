#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qfrft/field.hpp"

namespace qfr {

// QSIG binary signal file, version 1, little-endian throughout:
//   magic "QSIG" | u32 version = 1 | u32 n1 | u32 n2
//   f64 x1_min, x1_max, x2_min, x2_max
//   payload: 4 * n1 * n2 f64, planar (all q0 row-major with x2 fastest,
//   then q1, then q2, then q3)

namespace detail {

inline void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_f64(std::string& out, double d) {
    const auto v = std::bit_cast<std::uint64_t>(d);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

inline double get_f64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return std::bit_cast<double>(v);
}

/// Write a whole file atomically: temp file in the same directory, then
/// rename over the target.
inline void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) fail(Errc::format_error, "cannot open for writing: " + tmp.string());
        os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!os) fail(Errc::format_error, "short write: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace detail

inline void write_qsig(const std::filesystem::path& path, const QField& f) {
    std::string bytes;
    bytes.reserve(48 + 32 * f.grid.size());
    bytes += "QSIG";
    detail::put_u32(bytes, 1);
    detail::put_u32(bytes, static_cast<std::uint32_t>(f.grid.n1));
    detail::put_u32(bytes, static_cast<std::uint32_t>(f.grid.n2));
    detail::put_f64(bytes, f.grid.x1_min);
    detail::put_f64(bytes, f.grid.x1_max);
    detail::put_f64(bytes, f.grid.x2_min);
    detail::put_f64(bytes, f.grid.x2_max);
    for (const auto& q : f.values) detail::put_f64(bytes, q.q0);
    for (const auto& q : f.values) detail::put_f64(bytes, q.q1);
    for (const auto& q : f.values) detail::put_f64(bytes, q.q2);
    for (const auto& q : f.values) detail::put_f64(bytes, q.q3);
    detail::atomic_write(path, bytes);
}

inline QField read_qsig(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) fail(Errc::format_error, "cannot open: " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)),
                                     std::istreambuf_iterator<char>());
    if (bytes.size() < 48) fail(Errc::format_error, "QSIG header truncated");
    if (!(bytes[0] == 'Q' && bytes[1] == 'S' && bytes[2] == 'I' && bytes[3] == 'G'))
        fail(Errc::format_error, "bad QSIG magic");
    if (detail::get_u32(&bytes[4]) != 1) fail(Errc::format_error, "unsupported QSIG version");
    const std::uint32_t n1 = detail::get_u32(&bytes[8]);
    const std::uint32_t n2 = detail::get_u32(&bytes[12]);
    if (n1 < 4 || n2 < 4 || n1 > (1u << 20) || n2 > (1u << 20))
        fail(Errc::format_error, "QSIG node counts out of range");
    Grid2D g;
    g.n1 = static_cast<int>(n1);
    g.n2 = static_cast<int>(n2);
    g.x1_min = detail::get_f64(&bytes[16]);
    g.x1_max = detail::get_f64(&bytes[24]);
    g.x2_min = detail::get_f64(&bytes[32]);
    g.x2_max = detail::get_f64(&bytes[40]);
    if (!(g.x1_min < g.x1_max) || !(g.x2_min < g.x2_max))
        fail(Errc::format_error, "QSIG extents out of order");
    const std::size_t count = g.size();
    if (bytes.size() != 48 + 32 * count)
        fail(Errc::format_error, "QSIG payload length mismatch");
    QField f{g, std::vector<Quaternion>(count)};
    const unsigned char* p = bytes.data() + 48;
    for (std::size_t i = 0; i < count; ++i) f.values[i].q0 = detail::get_f64(p + 8 * i);
    p += 8 * count;
    for (std::size_t i = 0; i < count; ++i) f.values[i].q1 = detail::get_f64(p + 8 * i);
    p += 8 * count;
    for (std::size_t i = 0; i < count; ++i) f.values[i].q2 = detail::get_f64(p + 8 * i);
    p += 8 * count;
    for (std::size_t i = 0; i < count; ++i) f.values[i].q3 = detail::get_f64(p + 8 * i);
    for (const auto& q : f.values)
        if (!is_finite(q)) fail(Errc::format_error, "QSIG payload contains non-finite values");
    return f;
}

} // namespace qfr
