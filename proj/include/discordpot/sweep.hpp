#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "discordpot/states.hpp"

namespace discordpot::sweep {

// Uniform grid over one swept parameter.
struct SweepSpec {
    std::string parameter;  // one of: a, d0, d, alpha_magnitude
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;  // number of grid points, >= 2
};

// Validates the SweepSpec (known parameter, steps >= 2, start < stop, values
// inside the parameter's domain) and returns the inclusive uniform grid.
std::vector<double> grid(const SweepSpec& spec);

// Sweep parallelism: DISCORDPOT_THREADS if set and > 0, otherwise the
// hardware concurrency (DISCORDPOT_THREADS=0 also means auto).
int thread_count();

// Column-labeled numeric table; rows are emitted in grid order regardless
// of which worker computed them.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Computes rows[i] = row_fn(i) for i in [0, n_rows), in parallel across
// thread_count() workers, preserving row order.
Table make_table(std::vector<std::string> columns, int n_rows,
                 const std::function<std::vector<double>(int)>& row_fn);

// Fixed formatting shared by both writers: 12 significant digits, '.'
// decimal separator, '\n' line endings — identical runs give identical bytes.
std::string format_value(double v);
void write_csv(const Table& table, std::ostream& out);
// JSON mirror of the CSV: {"columns": [...], "data": {column: [values]}}.
void write_json(const Table& table, std::ostream& out);

// Figure data behind the CLI subcommands.
Table discriminate_table(const SweepSpec& d0_spec);
Table surface_table(const SweepSpec& a_spec, const SweepSpec& d0_spec);
Table info_table(const SweepSpec& d_spec);
Table coherence_table(const SweepSpec& d0_spec, double tail_bound);

// All measures at a single configuration, serialized as a JSON object.
std::string point_report_json(double a,
                              states::ComplexAmplitude alpha0,
                              states::ComplexAmplitude beta0,
                              double tail_bound);

}  // namespace discordpot::sweep
