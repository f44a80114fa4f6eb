// Acceptance suite: every criterion prints one PASS/FAIL line with the
// measured worst case. Exit code 0 iff all criteria pass.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include "qfrft/extremals.hpp"
#include "qfrft/qsig.hpp"
#include "qfrft/report.hpp"
#include "qfrft/verify.hpp"

using namespace qfr;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int id, const char* label, bool pass, const std::string& detail) {
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, label,
                detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

QField example51_field(const Grid2D& g, double lambda, double alpha, const Quaternion& beta) {
    ExtremalSpec spec;
    spec.variant = ExtremalVariant::example51;
    spec.lambda1 = lambda;
    spec.alpha1 = spec.alpha2 = alpha;
    spec.beta1 = beta;
    return build_extremal(spec, g);
}

// 1. Quaternion algebra: multiplicative modulus, associativity, Hamilton table.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    double worst_mod = 0.0, worst_assoc = 0.0;
    for (int t = 0; t < 10000; ++t) {
        const Quaternion a{uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng)};
        const Quaternion b{uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng)};
        const Quaternion c{uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng)};
        const double rhs = norm(a) * norm(b);
        worst_mod = std::max(worst_mod, std::abs(norm(mul(a, b)) - rhs) / std::max(1.0, rhs));
        worst_assoc = std::max(worst_assoc, norm(mul(mul(a, b), c) - mul(a, mul(b, c))));
    }
    const bool table = mul(quat_i, quat_j) == quat_k && mul(quat_j, quat_k) == quat_i &&
                       mul(quat_k, quat_i) == quat_j && mul(quat_j, quat_i) == -quat_k &&
                       mul(quat_k, quat_j) == -quat_i && mul(quat_i, quat_k) == -quat_j &&
                       mul(quat_i, quat_i) == Quaternion{-1.0} &&
                       mul(quat_j, quat_j) == Quaternion{-1.0} &&
                       mul(quat_k, quat_k) == Quaternion{-1.0};
    const double dt = seconds_since(t0);
    report(1, "quaternion algebra: 10k random triples + Hamilton table",
           worst_mod <= 1e-12 && worst_assoc <= 1e-12 && table && dt < 1.0,
           fmt("mod %.1e assoc %.1e table %s, %.2f s", worst_mod, worst_assoc,
               table ? "exact" : "WRONG", dt));
}

// 2./3. Parseval and inversion on (257,257,8), 10 seeds, all order combos.
void criteria2_3() {
    const auto t0 = std::chrono::steady_clock::now();
    const Grid2D g = make_grid(257, 257, 8.0);
    double worst_parseval = 0.0, worst_roundtrip = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const QField f = random_smooth_field(g, seed);
        for (const auto& o : verify::alpha_combos()) {
            const QField F = qfrft_fast(f, o);
            worst_parseval = std::max(worst_parseval, std::abs(l2_norm(F) - 1.0));
            worst_roundtrip = std::max(worst_roundtrip, max_abs_diff(iqfrft_fast(F, o), f));
        }
    }
    const double dt = seconds_since(t0);
    report(2, "Parseval over 10 seeds x 16 orders at (257,257,8)",
           worst_parseval <= 1e-4 && dt < 120.0,
           fmt("worst rel dev %.2e, %.1f s", worst_parseval, dt));
    report(3, "inversion round trip, same setup", worst_roundtrip <= 1e-4,
           fmt("worst max-abs %.2e", worst_roundtrip));
}

// 4. QFT reduction at alpha = pi/2.
void criterion4() {
    const Grid2D g = make_grid(257, 257, 8.0);
    const QField f = random_smooth_field(g, 99);
    const double dev = max_abs_diff(qfrft(f, {kPi / 2, kPi / 2}), qft(f));
    report(4, "qfrft at (pi/2, pi/2) equals qft", dev <= 1e-12, fmt("max-abs %.2e", dev));
}

// 5. Fast path equals the direct oracle on all test fields at (129,129,8).
void criterion5() {
    const Grid2D g = make_grid(129, 129, 8.0);
    std::vector<QField> fields;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) fields.push_back(random_smooth_field(g, seed));
    fields.push_back(unit_gaussian(g, 1.0));
    fields.push_back(example51_field(g, 1.0, kPi / 2, quat_i));
    const TransformOrder orders[] = {{1.2, 0.7}, {kPi / 2, kPi / 2}, {kPi / 6, 2 * kPi / 3},
                                     {kPi / 4, kPi / 4}};
    double worst = 0.0;
    for (const auto& f : fields)
        for (const auto& o : orders)
            worst = std::max(worst, max_abs_diff(qfrft_fast(f, o), qfrft(f, o)));
    report(5, "fast path vs direct quadrature on all test fields", worst <= 1e-8,
           fmt("max-abs %.2e", worst));
}

// 6. Derivative identity, 5 seeded fields, both axes.
void criterion6() {
    const auto r = verify::derivative_identity_suite(257, 8.0, 1, 5);
    report(6, "derivative-of-transform identity, 5 seeds, both axes",
           r.all_pass(), fmt("worst rel residual %.2e", r.worst()));
}

// 7. Pointwise lemmas: scalar part of D_k, modulus split, parts identity.
void criterion7() {
    const auto sc = verify::scalar_zero_suite(257, 10.0, 1, 5);
    const auto mod = verify::modulus_split_suite(1281, 8.0, 1, 3);
    const auto parts = verify::parts_identity_suite(1281, 8.0, 1, 3);
    double worst_parts = 0.0;
    bool parts_pass = true;
    for (const auto& c : parts.cases) {
        if (c.name.rfind("pointwise", 0) == 0) {
            worst_parts = std::max(worst_parts, c.measured);
            parts_pass = parts_pass && c.pass;
        }
    }
    report(7, "Sc[D_k] = 0, modulus split, pointwise parts identity",
           sc.all_pass() && mod.all_pass() && parts_pass,
           fmt("Sc %.1e (<=1e-8), split %.1e (<=1e-6), parts %.1e (<=1e-8)", sc.worst(),
               mod.worst(), worst_parts));
}

// 8. Integration by parts: int x_k rho d_k rho = -1/2.
void criterion8() {
    const Grid2D g = make_grid(257, 257, 10.0);
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const FieldAnalysis a = analyze(random_smooth_field(g, seed));
        worst = std::max({worst, std::abs(a.x_rho_drho[0] + 0.5), std::abs(a.x_rho_drho[1] + 0.5)});
    }
    report(8, "int x_k rho d_k rho = -1/2 on unit-energy fields", worst <= 1e-4,
           fmt("worst dev %.2e", worst));
}

// 9. Spectral moment: transform route vs spatial-domain formula.
void criterion9() {
    const auto r = verify::thm45_suite(257, 8.0, 1, 2);
    report(9, "spectral moment via spatial integrals matches the transform",
           r.all_pass(), fmt("worst rel %.2e over 32 order cases", r.worst()));
}

// 10. Closed-form numbers of the quadratic-phase Gaussian.
void criterion10() {
    const Grid2D g = make_grid(257, 257, 8.0);
    double worst_sp = 0.0, worst_cov = 0.0;
    for (double alpha : {kPi / 3, kPi / 2, 2 * kPi / 3}) {
        const QField f = example51_field(g, 1.0, alpha, quat_i);
        const FieldAnalysis a = analyze(f);
        const double s = std::sin(alpha);
        for (int k : {0, 1}) {
            worst_sp = std::max(worst_sp, std::abs(a.x2_rho2[k] - 0.5 * s) / (0.5 * s));
            worst_cov = std::max(worst_cov, std::abs(a.cov_abs[k] - s));
        }
    }
    const QField f = example51_field(g, 1.0, kPi / 2, quat_i);
    const BoundReport r47a = check_thm47(f, {kPi / 2, kPi / 2}, 1);
    const BoundReport r47b = check_thm47(f, {kPi / 2, kPi / 2}, 2);
    const BoundReport r11 = check_thm11(f, {kPi / 2, kPi / 2});
    const bool prod47 = std::abs(r47a.lhs - 1.25) <= 1e-3 * 1.25 &&
                        std::abs(r47a.rhs - 1.25) <= 1e-3 * 1.25 &&
                        std::abs(r47a.slack) / r47a.lhs <= 1e-3 &&
                        std::abs(r47b.slack) / r47b.lhs <= 1e-3;
    const bool prod11 = std::abs(r11.lhs - 5.0) <= 1e-3 * 5.0 &&
                        std::abs(r11.rhs - 5.0) <= 1e-3 * 5.0 &&
                        std::abs(r11.slack) / r11.lhs <= 1e-3;
    report(10, "closed-form moments, covariance and equality products",
           worst_sp <= 1e-6 && worst_cov <= 1e-4 && prod47 && prod11,
           fmt("moment rel %.1e, cov dev %.1e, products 5/4=%.6f 5=%.6f", worst_sp, worst_cov,
               r47a.lhs, r11.lhs));
}

// 11. Slack suites: 20 seeded fields per bound, orders from the combo set.
void criterion11() {
    const Grid2D g = make_grid(257, 257, 10.0);
    const auto combos = verify::alpha_combos();
    double worst = 1e300;
    bool pass = true;
    auto consider = [&](const BoundReport& r) {
        const double normalized = r.slack / std::max(1.0, r.lhs);
        worst = std::min(worst, normalized);
        if (r.slack < -slack_tolerance(r.lhs)) {
            pass = false;
            std::printf("  slack violation:\n%s\n", report_to_json(r, 1e-6).dump(2).c_str());
        }
    };
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const QField f = random_smooth_field(g, seed);
        const TransformOrder oa = combos[seed % combos.size()];
        const TransformOrder ob = combos[(seed * 7 + 3) % combos.size()];
        const int axis = 1 + static_cast<int>(seed % 2);
        consider(check_thm47(f, oa, axis));
        consider(check_cor49(f, oa, axis));
        consider(check_thm11(f, oa));
        consider(check_cor410(f, oa));
        consider(check_thm12(f, oa, ob));
    }
    report(11, "slack suites: 20 seeds x 5 bounds, slack >= -1e-6 max(1,lhs)", pass,
           fmt("min normalized slack %.2e", worst));
}

// 12. Extremal construction: slope equation and the commutation gate.
void criterion12() {
    double worst = 0.0;
    auto ode_worst = [&](const ExtremalSpec& spec, const Grid2D& grid) {
        const QField f = build_extremal(spec, grid);
        const PolarField p = polar_field(f);
        for (int axis = 1; axis <= 2; ++axis) {
            const QField d = phase_derivative(f, p, axis);
            const Quaternion slope = extremal_slope(spec, axis);
            std::size_t i = 0;
            for (int m = 0; m < grid.n1; ++m)
                for (int n = 0; n < grid.n2; ++n, ++i) {
                    if (!p.mask[i]) continue;
                    const double x = axis == 1 ? grid.x1(m) : grid.x2(n);
                    worst = std::max(worst, norm(d.values[i] - slope * x));
                }
        }
    };
    ExtremalSpec ex51;
    ex51.variant = ExtremalVariant::example51;
    ex51.lambda1 = 0.15;
    ex51.beta1 = quat_j;
    ode_worst(ex51, make_grid(513, 513, 4.0));

    ExtremalSpec per;
    per.variant = ExtremalVariant::per_axis;
    per.lambda1 = 0.8;
    per.lambda2 = 1.2;
    per.beta1 = quat_k * 0.3;
    per.beta2 = quat_k * 0.5;
    ode_worst(per, make_grid(513, 513, 8.0));

    ExtremalSpec spat;
    spat.variant = ExtremalVariant::spatial;
    spat.lambda1 = 1.0;
    spat.alpha1 = kPi / 3;
    spat.alpha2 = 2 * kPi / 3;
    spat.beta1 = spat.beta2 = quat_i * 0.4;
    ode_worst(spat, make_grid(513, 513, 8.0));

    bool gate = !check_remark48(quat_i, quat_j);
    try {
        ExtremalSpec bad = per;
        bad.beta1 = quat_i;
        bad.beta2 = quat_j;
        build_extremal(bad, make_grid(129, 129, 8.0));
        gate = false;
    } catch (const Error& e) {
        gate = gate && e.code() == Errc::non_commuting_betas;
    }
    report(12, "extremal slope equation and commutation gate", worst <= 1e-4 && gate,
           fmt("worst |D_k - slope x_k| %.2e, gate %s", worst, gate ? "rejects i,j" : "BROKEN"));
}

// 13. Determinism: identical flags give bit-identical outputs.
void criterion13() {
    const fs::path tmp = fs::temp_directory_path() / "qfrft_acceptance";
    fs::create_directories(tmp);
    auto slurp = [](const fs::path& p) {
        std::ifstream is(p, std::ios::binary);
        return std::string{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
    };
    auto run = [](const std::string& args) {
        const std::string cmd = std::string(QFRFT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    bool pass = true;
    const std::string ex = "extremal example51 --lambda 1 --beta 1,0,0 --n 129 --extent 8 ";
    pass &= run(ex + "--output " + (tmp / "a.qsig").string() + " --report " +
                (tmp / "a.json").string());
    pass &= run(ex + "--output " + (tmp / "b.qsig").string() + " --report " +
                (tmp / "b.json").string());
    pass &= slurp(tmp / "a.qsig") == slurp(tmp / "b.qsig");
    pass &= slurp(tmp / "a.json") == slurp(tmp / "b.json");
    const std::string tr = "transform --alpha1 0.9 --alpha2 1.2 --fast --input " +
                           (tmp / "a.qsig").string() + " --output ";
    pass &= run(tr + (tmp / "t1.qsig").string());
    pass &= run(tr + (tmp / "t2.qsig").string());
    pass &= slurp(tmp / "t1.qsig") == slurp(tmp / "t2.qsig");
    const std::string bo = "bounds thm47 --random 4 --n 65 --extent 10 --report ";
    pass &= run(bo + (tmp / "r1.json").string());
    pass &= run(bo + (tmp / "r2.json").string());
    pass &= slurp(tmp / "r1.json") == slurp(tmp / "r2.json");
    fs::remove_all(tmp);
    report(13, "repeated commands produce bit-identical files", pass,
           pass ? "QSIG and report bytes match" : "byte mismatch");
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criteria2_3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    std::printf("%d/13 criteria passed in %.1f s\n", 13 - g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
