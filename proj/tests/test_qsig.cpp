#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "qfrft/qsig.hpp"
#include "qfrft/random_fields.hpp"

using namespace qfr;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qfrft_qsig_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& bytes) {
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

bool read_fails_with_format_error(const fs::path& p) {
    try {
        read_qsig(p);
    } catch (const Error& e) {
        return e.code() == Errc::format_error;
    }
    return false;
}

} // namespace

TEST_CASE("QSIG round trip is bit exact") {
    TempDir tmp;
    const Grid2D g = make_grid(33, 49, 5.5);
    const QField f = random_smooth_field(g, 777);
    const fs::path a = tmp.path / "a.qsig";
    const fs::path b = tmp.path / "b.qsig";
    write_qsig(a, f);
    const QField back = read_qsig(a);
    REQUIRE(back.grid == f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(back.values[i] == f.values[i]);
    write_qsig(b, back);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(fs::exists(tmp.path / "a.qsig.tmp"));
}

TEST_CASE("QSIG header layout") {
    TempDir tmp;
    const Grid2D g = make_grid(4, 5, 1.0);
    QField f = zero_field(g);
    f.at(0, 0) = Quaternion{1.5, -2.0, 0.25, 1e-300};
    const fs::path p = tmp.path / "h.qsig";
    write_qsig(p, f);
    const std::string bytes = slurp(p);
    REQUIRE(bytes.size() == 48 + 32 * g.size());
    CHECK(bytes.substr(0, 4) == "QSIG");
    CHECK(static_cast<unsigned char>(bytes[4]) == 1); // version LE
    CHECK(static_cast<unsigned char>(bytes[8]) == 4); // n1 LE
    CHECK(static_cast<unsigned char>(bytes[12]) == 5); // n2 LE
    // payload starts with q0 of node (0,0) = 1.5 encoded little-endian
    const unsigned char* q0 = reinterpret_cast<const unsigned char*>(bytes.data()) + 48;
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(q0[i]) << (8 * i);
    CHECK(std::bit_cast<double>(v) == 1.5);
}

TEST_CASE("QSIG format violations are rejected") {
    TempDir tmp;
    const Grid2D g = make_grid(8, 8, 2.0);
    const QField f = random_smooth_field(g, 3);
    const fs::path good = tmp.path / "good.qsig";
    write_qsig(good, f);
    const std::string bytes = slurp(good);

    SECTION("truncated payload") {
        const fs::path p = tmp.path / "trunc.qsig";
        spit(p, bytes.substr(0, bytes.size() - 7));
        CHECK(read_fails_with_format_error(p));
    }
    SECTION("trailing bytes") {
        const fs::path p = tmp.path / "trail.qsig";
        spit(p, bytes + "xx");
        CHECK(read_fails_with_format_error(p));
    }
    SECTION("bad magic") {
        const fs::path p = tmp.path / "magic.qsig";
        std::string b = bytes;
        b[0] = 'X';
        spit(p, b);
        CHECK(read_fails_with_format_error(p));
    }
    SECTION("unsupported version") {
        const fs::path p = tmp.path / "version.qsig";
        std::string b = bytes;
        b[4] = 2;
        spit(p, b);
        CHECK(read_fails_with_format_error(p));
    }
    SECTION("non-finite payload") {
        const fs::path p = tmp.path / "nan.qsig";
        std::string b = bytes;
        const std::uint64_t nan_bits = std::bit_cast<std::uint64_t>(
            std::numeric_limits<double>::quiet_NaN());
        for (int i = 0; i < 8; ++i) b[48 + i] = static_cast<char>((nan_bits >> (8 * i)) & 0xff);
        spit(p, b);
        CHECK(read_fails_with_format_error(p));
    }
    SECTION("missing file") {
        CHECK(read_fails_with_format_error(tmp.path / "nope.qsig"));
    }
    SECTION("extents out of order") {
        const fs::path p = tmp.path / "extent.qsig";
        std::string b = bytes;
        // swap x1_min / x1_max fields
        std::swap_ranges(b.begin() + 16, b.begin() + 24, b.begin() + 24);
        spit(p, b);
        CHECK(read_fails_with_format_error(p));
    }
}
