#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "discordpot/errors.hpp"
#include "discordpot/states.hpp"
#include "discordpot/sweep.hpp"

namespace {

std::complex<double> parse_amplitude(const std::string& text) {
    const auto comma = text.find(',');
    const std::string re_part = text.substr(0, comma);
    const std::string im_part =
        comma == std::string::npos ? "0" : text.substr(comma + 1);
    try {
        std::size_t re_used = 0;
        std::size_t im_used = 0;
        const double re = std::stod(re_part, &re_used);
        const double im = std::stod(im_part, &im_used);
        if (re_used != re_part.size() || im_used != im_part.size()) {
            throw std::invalid_argument("");
        }
        return {re, im};
    } catch (const std::exception&) {
        throw std::invalid_argument("amplitude must be given as RE or RE,IM: '" +
                                    text + "'");
    }
}

void write_output(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open output file: " + path);
    }
    file << payload;
    if (!file.flush()) {
        throw std::invalid_argument("failed writing output file: " + path);
    }
}

std::string render(const discordpot::sweep::Table& table, const std::string& format) {
    std::ostringstream buffer;
    if (format == "json") {
        discordpot::sweep::write_json(table, buffer);
    } else {
        discordpot::sweep::write_csv(table, buffer);
    }
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    using discordpot::sweep::SweepSpec;

    CLI::App app{"Non-classicality measures for proper mixtures of coherent states"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config", "", "Plain-text 'key = value' configuration file");

    double tail_bound = 1e-12;
    int steps = 200;
    std::string format = "csv";
    std::string out_path = "-";
    app.add_option("--tail-bound,--tail_bound", tail_bound,
                   "Fock-truncation tail bound for oracle/coherence computations")
        ->capture_default_str();
    app.add_option("--steps", steps, "Grid points per swept parameter")
        ->capture_default_str();
    app.add_option("--format", format, "Output format for sweep data")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Output path, '-' for stdout")
        ->capture_default_str();

    auto* discriminate = app.add_subcommand(
        "discriminate", "Helstrom vs homodyne error bounds across separations");
    double dis_start = 0.0;
    double dis_stop = 6.0;
    discriminate->add_option("--d0-start", dis_start, "First separation")
        ->capture_default_str();
    discriminate->add_option("--d0-stop", dis_stop, "Last separation")
        ->capture_default_str();

    auto* surface = app.add_subcommand(
        "surface", "Discord potential over the (a, d0) plane");
    double surf_a_start = 0.001;
    double surf_a_stop = 0.999;
    double surf_d0_start = 0.01;
    double surf_d0_stop = 8.0;
    int surf_a_steps = 0;
    int surf_d0_steps = 0;
    surface->add_option("--a-start", surf_a_start, "First mixing probability")
        ->capture_default_str();
    surface->add_option("--a-stop", surf_a_stop, "Last mixing probability")
        ->capture_default_str();
    surface->add_option("--a-steps", surf_a_steps,
                        "Grid points in a (0: use --steps)")
        ->capture_default_str();
    surface->add_option("--d0-start", surf_d0_start, "First separation")
        ->capture_default_str();
    surface->add_option("--d0-stop", surf_d0_stop, "Last separation")
        ->capture_default_str();
    surface->add_option("--d0-steps", surf_d0_steps,
                        "Grid points in d0 (0: use --steps)")
        ->capture_default_str();

    auto* info = app.add_subcommand(
        "info", "Entropy, mutual information, classical part and discord vs d");
    double info_start = 0.01;
    double info_stop = 5.0;
    info->add_option("--d-start", info_start, "First output-separation d")
        ->capture_default_str();
    info->add_option("--d-stop", info_stop, "Last output-separation d")
        ->capture_default_str();

    auto* coherence = app.add_subcommand(
        "coherence", "Coherence monotones and discord potential vs d0");
    double coh_start = 0.01;
    double coh_stop = 16.0;
    coherence->add_option("--d0-start", coh_start, "First separation")
        ->capture_default_str();
    coherence->add_option("--d0-stop", coh_stop, "Last separation")
        ->capture_default_str();

    auto* point = app.add_subcommand(
        "point", "All measures at one (a, alpha0, beta0), printed as JSON");
    double point_a = 0.5;
    std::string point_alpha = "0.5,0";
    std::string point_beta = "-0.5,0";
    double point_d0 = 0.0;
    point->add_option("--a", point_a, "Mixing probability")->capture_default_str();
    auto* alpha_opt = point->add_option("--alpha0", point_alpha,
                                        "First amplitude as RE or RE,IM")
                          ->capture_default_str();
    auto* beta_opt = point->add_option("--beta0", point_beta,
                                       "Second amplitude as RE or RE,IM")
                         ->capture_default_str();
    point->add_option("--d0", point_d0,
                      "Shorthand for the centered pair (d0/2, -d0/2)")
        ->excludes(alpha_opt)
        ->excludes(beta_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::string payload;
        if (*discriminate) {
            payload = render(discordpot::sweep::discriminate_table(
                                 SweepSpec{"d0", dis_start, dis_stop, steps}),
                             format);
        } else if (*surface) {
            const int na = surf_a_steps > 0 ? surf_a_steps : steps;
            const int nd = surf_d0_steps > 0 ? surf_d0_steps : steps;
            payload = render(discordpot::sweep::surface_table(
                                 SweepSpec{"a", surf_a_start, surf_a_stop, na},
                                 SweepSpec{"d0", surf_d0_start, surf_d0_stop, nd}),
                             format);
        } else if (*info) {
            payload = render(discordpot::sweep::info_table(
                                 SweepSpec{"d", info_start, info_stop, steps}),
                             format);
        } else if (*coherence) {
            payload = render(discordpot::sweep::coherence_table(
                                 SweepSpec{"d0", coh_start, coh_stop, steps},
                                 tail_bound),
                             format);
        } else if (*point) {
            std::complex<double> alpha0 = parse_amplitude(point_alpha);
            std::complex<double> beta0 = parse_amplitude(point_beta);
            if (point->count("--d0") > 0) {
                alpha0 = 0.5 * point_d0;
                beta0 = -0.5 * point_d0;
            }
            payload = discordpot::sweep::point_report_json(point_a, alpha0, beta0,
                                                           tail_bound);
        }
        write_output(out_path, payload);
    } catch (const discordpot::numerical_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
