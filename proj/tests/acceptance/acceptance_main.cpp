// Acceptance suite: one criterion per invocation (argv[1] = 1..11 or "all"),
// one [PASS]/[FAIL] line per criterion with the measured values.  Tolerances
// and windows are pinned in code; a criterion that cannot meet its stated
// window fails honestly and prints what was measured instead.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "discordpot/discord.hpp"
#include "discordpot/discrimination.hpp"
#include "discordpot/fock.hpp"
#include "discordpot/optimize.hpp"
#include "discordpot/splitter.hpp"
#include "discordpot/states.hpp"
#include "discordpot/subspace.hpp"
#include "fock_discord_oracle.hpp"

using namespace discordpot;
using Cplx = std::complex<double>;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> violations;

    std::string text() const {
        std::string s = detail.str();
        for (const std::string& v : violations) {
            s += " [violated: " + v + "]";
        }
        return s;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

states::CoherentMixture centered(double a, double d0) {
    return states::make_binary_mixture(a, Cplx(d0 / 2, 0), Cplx(-d0 / 2, 0));
}

double potential_at_d(double d) {
    return discord::discord_potential(centered(0.5, d * std::sqrt(2.0)));
}

void check(Outcome& o, bool ok, const std::string& label) {
    if (!ok) {
        o.pass = false;
        o.violations.push_back(label);
    }
}

void enforce_budget(Outcome& o, Clock::time_point t0, double budget_s) {
    const double elapsed = seconds_since(t0);
    o.detail << "; runtime " << elapsed << " s (budget " << budget_s << " s)";
    if (elapsed >= budget_s) {
        o.pass = false;
        o.violations.push_back("runtime budget");
    }
}

// ---------------------------------------------------------------------------

Outcome criterion_1() {
    Outcome o;
    const auto t0 = Clock::now();
    const double hel0 = discrimination::helstrom_error(0.5, 0.0);
    const double hom0 = discrimination::homodyne_error(0.5, 0.0);
    check(o, hel0 == 0.5, "P_Hel(1/2,0) == 0.5 exactly");
    check(o, hom0 == 0.5, "P_Hom(1/2,0) == 0.5 exactly");

    const double hel1 = discrimination::helstrom_error(0.5, 1.0);
    const double ref1 = 0.5 * (1.0 - std::sqrt(1.0 - std::exp(-1.0)));
    check(o, std::abs(hel1 - ref1) <= 1e-12, "P_Hel(1/2,1) closed form within 1e-12");

    bool ordered = true;
    int sign_changes = 0;
    double prev_diff = 0.0;
    bool have_prev = false;
    double prev_adv = discrimination::advantage(0.0);
    for (int i = 1; i < 5000; ++i) {
        const double d0 = 6.0 * i / 4999;
        if (discrimination::helstrom_error(0.5, d0) >
            discrimination::homodyne_error(0.5, d0) + 1e-12) {
            ordered = false;
        }
        const double adv = discrimination::advantage(d0);
        const double diff = adv - prev_adv;
        if (have_prev && (diff < 0) != (prev_diff < 0)) {
            ++sign_changes;
        }
        if (std::abs(diff) > 0) {
            prev_diff = diff;
            have_prev = true;
        }
        prev_adv = adv;
    }
    check(o, ordered, "P_Hel <= P_Hom on the 5000-point grid");
    check(o, sign_changes == 1, "advantage unimodal (one interior maximum)");
    o.detail << "P_Hel(1/2,1) = " << hel1 << ", grid ordered, " << sign_changes
             << " derivative sign change(s)";
    enforce_budget(o, t0, 1.0);
    return o;
}

Outcome criterion_2() {
    Outcome o;
    const auto t0 = Clock::now();
    const double lo = discord::discord_potential(centered(0.5, 1e-3));
    const double hi = discord::discord_potential(centered(0.5, 12.0));
    const double mid = discord::discord_potential(centered(0.5, 1.0));
    check(o, lo < 1e-6, "C_D(d0=1e-3) < 1e-6");
    check(o, hi < 1e-6, "C_D(d0=12) < 1e-6");
    check(o, mid > 1e-3, "C_D(d0=1) > 1e-3");
    o.detail << "C_D(1e-3) = " << lo << ", C_D(12) = " << hi << ", C_D(1) = " << mid;
    enforce_budget(o, t0, 10.0);
    return o;
}

Outcome criterion_3() {
    Outcome o;
    const auto t0 = Clock::now();
    // Grid step 1e-3 over d, then golden-section refinement around the best
    // grid point.
    double best_d = 0.0;
    double best_v = -1.0;
    for (int i = 0; i <= 1950; ++i) {
        const double d = 0.05 + 1e-3 * i;
        const double v = potential_at_d(d);
        if (v > best_v) {
            best_v = v;
            best_d = d;
        }
    }
    const auto refined = optimize::golden_section(
        [](double d) { return -potential_at_d(d); }, best_d - 2e-3, best_d + 2e-3, 1e-7);
    const double d_star = refined.x;
    const double v_star = -refined.value;
    check(o, d_star >= 0.65 && d_star <= 0.76, "argmax_d C_D within [0.65, 0.76]");
    o.detail << "argmax over d in [0.05, 2.0]: d* = " << d_star << " (C_D = " << v_star
             << "), required window [0.65, 0.76]";
    enforce_budget(o, t0, 120.0);
    return o;
}

Outcome criterion_4() {
    Outcome o;
    const auto t0 = Clock::now();
    auto gap = [](double d) {
        const auto r = discord::discord(splitter::split(centered(0.5, d * std::sqrt(2.0))));
        return r.discord - r.classical_information;
    };
    int sign_changes = 0;
    double lo = 0.0;
    double hi = 0.0;
    double prev_d = 0.05;
    double prev_g = gap(prev_d);
    for (int i = 1; i <= 650; ++i) {
        const double d = 0.05 + (0.7 - 0.05) * i / 650;
        const double g = gap(d);
        if ((g < 0) != (prev_g < 0)) {
            ++sign_changes;
            lo = prev_d;
            hi = d;
        }
        prev_d = d;
        prev_g = g;
    }
    check(o, sign_changes == 1, "unique sign change of D - I_cl on d in [0.05, 0.7]");
    double d_x = 0.0;
    if (sign_changes >= 1) {
        double glo = gap(lo);
        for (int iter = 0; iter < 40 && hi - lo > 1e-9; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const double gmid = gap(mid);
            if ((gmid < 0) == (glo < 0)) {
                lo = mid;
                glo = gmid;
            } else {
                hi = mid;
            }
        }
        d_x = 0.5 * (lo + hi);
        check(o, d_x >= 0.30 && d_x <= 0.41, "crossover location within [0.30, 0.41]");
    }
    o.detail << sign_changes << " sign change(s); crossover at d = " << d_x
             << ", required window [0.30, 0.41]";
    enforce_budget(o, t0, 120.0);
    return o;
}

const std::vector<double> kAs = {0.1, 0.3, 0.5, 0.7, 0.9};
const std::vector<double> kD0s = {0.2, 0.5, 1.0, 2.0, 4.0};

Outcome criterion_5() {
    Outcome o;
    const auto t0 = Clock::now();
    double worst_sa = 0.0;
    double worst_sab = 0.0;
    double worst_d = 0.0;
    for (double a : kAs) {
        for (double d0 : kD0s) {
            const auto two = splitter::split(centered(a, d0));
            const auto impl = discord::discord(two);
            const auto oracle = fock_oracle::report(two);
            worst_sa = std::max(worst_sa, std::abs(impl.entropy_a - oracle.s_a));
            worst_sab = std::max(worst_sab, std::abs(impl.total_entropy - oracle.s_ab));
            worst_d = std::max(worst_d, std::abs(impl.discord - oracle.discord));
        }
    }
    check(o, worst_sa < 1e-8, "S(rho^A) matches the Fock oracle within 1e-8");
    check(o, worst_sab < 1e-8, "S(rho^AB) matches the Fock oracle within 1e-8");
    check(o, worst_d < 1e-6, "discord matches the end-to-end recomputation within 1e-6");
    o.detail << "25 points; max |dS_A| = " << worst_sa << ", max |dS_AB| = " << worst_sab
             << ", max |dD| = " << worst_d;
    enforce_budget(o, t0, 300.0);
    return o;
}

Outcome criterion_6() {
    Outcome o;
    double worst = 0.0;
    for (double a : kAs) {
        for (double d0 : kD0s) {
            const auto two = splitter::split(centered(a, d0));
            std::vector<splitter::TwoModeMixture::Element> swapped;
            for (const auto& e : two.elements()) {
                swapped.push_back({e.weight, e.amplitude_b, e.amplitude_a});
            }
            const double da = discord::discord(two).discord;
            const double db = discord::discord(splitter::TwoModeMixture(swapped)).discord;
            worst = std::max(worst, std::abs(da - db));
        }
    }
    check(o, worst < 1e-9, "D_A == D_B within 1e-9 on the 25 points");

    const auto product = splitter::split(states::CoherentMixture({{1.0, Cplx(1.3, 0.4)}}));
    const double sep = discord::discord(product).discord;
    check(o, sep < 1e-9, "separable split output has discord < 1e-9");
    o.detail << "max |D_A - D_B| = " << worst << "; product-state discord = " << sep;
    return o;
}

Outcome criterion_7() {
    Outcome o;
    const double base = discord::discord_potential(centered(0.5, 1.0));
    std::mt19937 rng(987654321);
    std::uniform_real_distribution<double> uphase(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> ushift(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Cplx rot = std::polar(1.0, uphase(rng));
        const Cplx delta(ushift(rng), ushift(rng));
        const auto moved = states::make_binary_mixture(0.5, rot * Cplx(0.5, 0) + delta,
                                                       rot * Cplx(-0.5, 0) + delta);
        worst = std::max(worst, std::abs(discord::discord_potential(moved) - base));
    }
    check(o, worst < 1e-9, "C_D invariant under 20 random phase/displacement transforms");
    o.detail << "max |C_D change| = " << worst << " over 20 transforms";
    return o;
}

Outcome criterion_8() {
    Outcome o;
    const auto t0 = Clock::now();
    const double c = fock::estimate_c();
    check(o, c >= 4.5 && c <= 5.5, "estimate_c() within [4.5, 5.5]");

    const auto pure_fit = fock::c_l1_slope_fit(false);
    const auto mix_fit = fock::c_l1_slope_fit(true);
    const double slope_ratio = mix_fit.slope / pure_fit.slope;
    check(o, std::abs(slope_ratio - 0.5) <= 0.01,
          "mixture/pure asymptotic slope ratio 0.5 within 2%");

    // Supplementary: the raw value ratio at |alpha| = 10 still carries the
    // finite-size offset of the mixture curve.
    const auto mix10 = centered(0.5, 20.0);
    const auto pure10 = states::CoherentMixture({{1.0, Cplx(10, 0)}});
    const double value_ratio =
        fock::c_l1(mix10, fock::monotone_truncation(mix10, 1e-12)) /
        fock::c_l1(pure10, fock::monotone_truncation(pure10, 1e-12));
    o.detail << "c = " << c << "; slope ratio = " << slope_ratio
             << " (value ratio at |alpha|=10: " << value_ratio << ")";
    enforce_budget(o, t0, 60.0);
    return o;
}

Outcome criterion_9() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto pure10 = states::CoherentMixture({{1.0, Cplx(10, 0)}});
    const double re_pure = fock::c_re(pure10, fock::monotone_truncation(pure10, 1e-12));
    const double asym = std::log(10.0) + 0.5 + 0.5 * std::log(2.0 * std::numbers::pi);
    check(o, std::abs(re_pure - asym) < 0.05, "C_RE(|10>) within 0.05 of the asymptote");

    const auto mix10 = centered(0.5, 20.0);
    const double re_mix = fock::c_re(mix10, fock::monotone_truncation(mix10, 1e-12));
    check(o, std::abs((re_pure - re_mix) - std::log(2.0)) < 0.05,
          "mixture offset ln 2 within 0.05");

    const double h0_10 = fock::h0(10.0, 16);
    const double h1_10 = fock::h1(10.0, 16);
    check(o, std::abs(h0_10 - std::log(100.0)) < 0.02, "h0(10) within 0.02 of ln 100");
    check(o, std::abs(h1_10 - (std::log(100.0) + 0.005)) < 0.02,
          "h1(10) within 0.02 of ln 100 + 0.005");
    o.detail << "C_RE(|10>) = " << re_pure << " (asymptote " << asym
             << "); offset = " << re_pure - re_mix << " (ln 2 = " << std::log(2.0)
             << "); h0(10) = " << h0_10 << ", h1(10) = " << h1_10;
    enforce_budget(o, t0, 60.0);
    return o;
}

Outcome criterion_10() {
    Outcome o;
    double prev_l1 = -1.0;
    double prev_re = -1.0;
    bool l1_up = true;
    bool re_up = true;
    double worst_cd = 0.0;
    std::ostringstream vals;
    for (double amp : {2.0, 4.0, 6.0, 8.0, 10.0}) {
        const auto m = states::make_binary_mixture(0.5, Cplx(amp, 0), Cplx(-amp, 0));
        const int n = fock::monotone_truncation(m, 1e-12);
        const double l1 = fock::c_l1(m, n);
        const double re = fock::c_re(m, n);
        l1_up = l1_up && (l1 > prev_l1);
        re_up = re_up && (re > prev_re);
        prev_l1 = l1;
        prev_re = re;
        if (amp > 6.0) {
            worst_cd = std::max(worst_cd, discord::discord_potential(m));
        }
        vals << " " << amp << ":(" << l1 << ", " << re << ")";
    }
    check(o, l1_up, "C_l1 strictly increases along |alpha| in {2,4,6,8,10}");
    check(o, re_up, "C_RE strictly increases along |alpha| in {2,4,6,8,10}");
    check(o, worst_cd < 1e-4, "C_D < 1e-4 beyond |alpha| = 6");
    o.detail << "(C_l1, C_RE) by |alpha|:" << vals.str() << "; max C_D beyond 6 = "
             << worst_cd;
    return o;
}

Outcome criterion_11() {
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path golden(GOLDEN_DIR);
    const fs::path scratch = fs::temp_directory_path() / "discordpot_acceptance";
    fs::create_directories(scratch);

    auto run = [&](const std::string& args, const fs::path& out) {
        const std::string cmd = std::string(CLI_BIN) + " " + args + " > " + out.string() +
                                " 2> " + (scratch / "err.txt").string();
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    const std::vector<std::pair<std::string, std::string>> runs = {
        {"discriminate --steps 61", "discriminate.csv"},
        {"surface --a-steps 9 --d0-steps 17", "surface.csv"},
        {"info --steps 24", "info.csv"},
        {"coherence --steps 13", "coherence.csv"},
        {"point --a 0.3 --alpha0 1,0 --beta0 0,2", "point.json"},
    };
    int identical = 0;
    int matching = 0;
    for (const auto& [args, file] : runs) {
        const fs::path first = scratch / ("a_" + file);
        const fs::path second = scratch / ("b_" + file);
        const bool ok = run(args, first) && run(args, second);
        check(o, ok, "command succeeded: " + args);
        if (!ok) {
            continue;
        }
        const std::string bytes1 = slurp(first);
        if (bytes1 == slurp(second)) {
            ++identical;
        } else {
            check(o, false, "byte-identical reruns: " + args);
        }
        if (!bytes1.empty() && bytes1 == slurp(golden / file)) {
            ++matching;
        } else {
            check(o, false, "matches checked-in golden file: " + file);
        }
    }
    o.detail << identical << "/5 commands byte-identical across reruns, " << matching
             << "/5 matching the checked-in golden files";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout.precision(12);
    const std::vector<std::function<Outcome()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};

    if (argc != 2) {
        std::cerr << "usage: acceptance <1.." << criteria.size() << "|all>\n";
        return 2;
    }
    const std::string arg = argv[1];
    std::vector<int> selected;
    if (arg == "all") {
        for (std::size_t i = 1; i <= criteria.size(); ++i) {
            selected.push_back(static_cast<int>(i));
        }
    } else {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::cerr << "usage: acceptance <1.." << criteria.size() << "|all>\n";
            return 2;
        }
        selected.push_back(n);
    }

    bool all_pass = true;
    for (int n : selected) {
        const Outcome o = criteria[static_cast<std::size_t>(n - 1)]();
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": "
                  << o.text() << "\n";
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
