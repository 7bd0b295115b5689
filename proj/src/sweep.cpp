#include "discordpot/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "discordpot/discord.hpp"
#include "discordpot/discrimination.hpp"
#include "discordpot/fock.hpp"
#include "discordpot/splitter.hpp"

namespace discordpot::sweep {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_parameter_domain(const SweepSpec& spec) {
    if (spec.parameter == "a") {
        if (spec.start <= 0.0 || spec.stop >= 1.0) {
            throw std::invalid_argument("parameter a must stay inside (0, 1)");
        }
    } else if (spec.parameter == "d0" || spec.parameter == "d" ||
               spec.parameter == "alpha_magnitude") {
        if (spec.start < 0.0) {
            throw std::invalid_argument("parameter " + spec.parameter +
                                        " must be non-negative");
        }
    } else {
        throw std::invalid_argument("unknown sweep parameter: " + spec.parameter);
    }
}

const SweepSpec& expect_parameter(const SweepSpec& spec, const char* name) {
    if (spec.parameter != name) {
        throw std::invalid_argument(std::string("sweep expects parameter ") + name);
    }
    return spec;
}

states::CoherentMixture centered_binary(double a, double d0) {
    return states::make_binary_mixture(a, 0.5 * d0, -0.5 * d0);
}

}  // namespace

std::vector<double> grid(const SweepSpec& spec) {
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop)) {
        throw std::invalid_argument("sweep bounds must be finite");
    }
    if (spec.steps < 2) {
        throw std::invalid_argument("sweep needs at least 2 steps");
    }
    if (!(spec.start < spec.stop)) {
        throw std::invalid_argument("sweep start must be below stop");
    }
    check_parameter_domain(spec);
    std::vector<double> points(spec.steps);
    for (int i = 0; i < spec.steps; ++i) {
        points[i] = spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
    }
    return points;
}

int thread_count() {
    const char* env = std::getenv("DISCORDPOT_THREADS");
    if (env == nullptr || *env == '\0') {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || parsed < 0 || parsed > 4096) {
        throw std::invalid_argument(
            "DISCORDPOT_THREADS must be a small non-negative integer");
    }
    if (parsed == 0) {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    return static_cast<int>(parsed);
}

Table make_table(std::vector<std::string> columns, int n_rows,
                 const std::function<std::vector<double>(int)>& row_fn) {
    Table table;
    table.columns = std::move(columns);
    table.rows.resize(std::max(n_rows, 0));

    const int workers = std::min(thread_count(), std::max(n_rows, 1));
    if (workers <= 1) {
        for (int i = 0; i < n_rows; ++i) {
            table.rows[i] = row_fn(i);
        }
    } else {
        std::atomic<int> next{0};
        std::mutex error_mutex;
        std::exception_ptr first_error;
        auto work = [&] {
            while (true) {
                const int i = next.fetch_add(1);
                if (i >= n_rows) {
                    return;
                }
                try {
                    table.rows[i] = row_fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (std::thread& t : pool) {
            t.join();
        }
        if (first_error) {
            std::rethrow_exception(first_error);
        }
    }

    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::logic_error("sweep row width does not match columns");
        }
    }
    return table;
}

std::string format_value(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c == 0 ? "" : ",") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c == 0 ? "" : ",") << format_value(row[c]);
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    out << "{\n  \"columns\": [";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c == 0 ? "" : ", ") << '"' << table.columns[c] << '"';
    }
    out << "],\n  \"data\": {\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << "    \"" << table.columns[c] << "\": [";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            out << (r == 0 ? "" : ", ") << format_value(table.rows[r][c]);
        }
        out << (c + 1 == table.columns.size() ? "]\n" : "],\n");
    }
    out << "  }\n}\n";
}

Table discriminate_table(const SweepSpec& d0_spec) {
    const std::vector<double> d0s = grid(expect_parameter(d0_spec, "d0"));
    return make_table(
        {"d0", "p_helstrom", "p_homodyne", "advantage"},
        static_cast<int>(d0s.size()), [&d0s](int i) {
            const double d0 = d0s[i];
            const double hel = discrimination::helstrom_error(0.5, d0);
            const double hom = discrimination::homodyne_error(0.5, d0);
            return std::vector<double>{d0, hel, hom, hom - hel};
        });
}

Table surface_table(const SweepSpec& a_spec, const SweepSpec& d0_spec) {
    const std::vector<double> as = grid(expect_parameter(a_spec, "a"));
    const std::vector<double> d0s = grid(expect_parameter(d0_spec, "d0"));
    const int nd = static_cast<int>(d0s.size());
    return make_table(
        {"a", "d0", "discord_potential"},
        static_cast<int>(as.size()) * nd, [&](int i) {
            const double a = as[i / nd];
            const double d0 = d0s[i % nd];
            const double cd = discord::discord_potential(centered_binary(a, d0));
            return std::vector<double>{a, d0, cd};
        });
}

Table info_table(const SweepSpec& d_spec) {
    const std::vector<double> ds = grid(expect_parameter(d_spec, "d"));
    return make_table(
        {"d", "S_AB", "I", "I_cl", "D"}, static_cast<int>(ds.size()),
        [&ds](int i) {
            const double d = ds[i];
            const auto report =
                discord::discord(splitter::split(centered_binary(0.5, d * kSqrt2)));
            return std::vector<double>{d, report.total_entropy,
                                       report.mutual_information,
                                       report.classical_information,
                                       report.discord};
        });
}

Table coherence_table(const SweepSpec& d0_spec, double tail_bound) {
    const std::vector<double> d0s = grid(expect_parameter(d0_spec, "d0"));
    return make_table(
        {"d0", "C_D", "C_l1", "C_RE", "C_l1_asymptote", "C_RE_asymptote"},
        static_cast<int>(d0s.size()), [&d0s, tail_bound](int i) {
            const double d0 = d0s[i];
            const states::CoherentMixture mixture = centered_binary(0.5, d0);
            const int n_max = fock::monotone_truncation(mixture, tail_bound);
            return std::vector<double>{d0,
                                       discord::discord_potential(mixture),
                                       fock::c_l1(mixture, n_max),
                                       fock::c_re(mixture, n_max),
                                       fock::c_l1_asymptote(d0),
                                       fock::c_re_asymptote(d0)};
        });
}

std::string point_report_json(double a,
                              states::ComplexAmplitude alpha0,
                              states::ComplexAmplitude beta0,
                              double tail_bound) {
    const states::CoherentMixture mixture =
        states::make_binary_mixture(a, alpha0, beta0);
    const double d0 = states::separation(alpha0, beta0);
    const auto report = discord::discord(splitter::split(mixture));
    const int n_max = fock::monotone_truncation(mixture, tail_bound);

    nlohmann::ordered_json doc;
    doc["input"] = {{"a", a},
                    {"alpha0", {alpha0.real(), alpha0.imag()}},
                    {"beta0", {beta0.real(), beta0.imag()}},
                    {"d0", d0}};
    doc["discrimination"]["p_helstrom"] = discrimination::helstrom_error(a, d0);
    if (a == 0.5) {
        const double hom = discrimination::homodyne_error(a, d0);
        doc["discrimination"]["p_homodyne"] = hom;
        doc["discrimination"]["advantage"] =
            hom - discrimination::helstrom_error(a, d0);
    }
    doc["discord"] = {{"total_entropy", report.total_entropy},
                      {"entropy_a", report.entropy_a},
                      {"entropy_b", report.entropy_b},
                      {"mutual_information", report.mutual_information},
                      {"min_conditional_entropy", report.min_conditional_entropy},
                      {"optimal_theta", report.optimal_angles.theta},
                      {"optimal_phi", report.optimal_angles.phi},
                      {"discord", report.discord},
                      {"classical_information", report.classical_information},
                      {"clamped", report.clamped}};
    doc["coherence"] = {{"n_max", n_max},
                        {"c_l1", fock::c_l1(mixture, n_max)},
                        {"c_re", fock::c_re(mixture, n_max)}};
    return doc.dump(2) + "\n";
}

}  // namespace discordpot::sweep
