#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fiberlink/capacity.hpp"
#include "fiberlink/link.hpp"
#include "fiberlink/physical.hpp"

namespace fiberlink {

enum class SweepVariable { Modes, SegmentCount, SegmentLength, Power };
enum class Spacing { Log, Linear };

struct SweepSpec {
    SweepVariable variable = SweepVariable::Modes;
    double start = 1e2;
    double stop = 1e40;
    int points = 400;
    Spacing spacing = Spacing::Log;
    SegmentedLink link;
    double power = 1e16;  // photons/s; fixed unless Power is swept
    double modes = 1e9;   // fixed unless Modes is swept
    PhysicalConstants constants;

    void validate() const;
};

struct SweepRow {
    double x = 0.0;
    double tau_eff = 0.0;
    double nu_eff = 0.0;
    double gain = 0.0;
    double shannon = 0.0;
    double holevo = 0.0;
    double ea = 0.0;
    double ea_approx = 0.0;
    double power_watts = 0.0;
    std::string error;  // empty on success, else an error code like "domain"

    bool ok() const { return error.empty(); }
};

enum class Column { Shannon, Holevo, Ea };
std::string column_name(Column c);
double column_value(const SweepRow& row, Column c);

/// The exact grid the sweep evaluates (endpoints are hit exactly).
std::vector<double> sweep_grid(const SweepSpec& spec);

/// One grid point, evaluated in isolation. Domain errors are recorded in
/// the row's error field instead of propagating.
SweepRow evaluate_point(const SweepSpec& spec, double x);

/// Grid evaluation parallelized with OpenMP; rows come back in grid order
/// and are bit-identical to run_sweep_serial.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Serial reference implementation, kept for testing and benchmarking.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

enum class PeakKind { Local, Global };

struct Peak {
    double x;
    Column column;
    double value;
    PeakKind kind;
};

/// Golden-section maximization of f on [a, b]; assumes a single interior
/// maximum. Stops once the bracket is narrower than tol (absolute, in the
/// search coordinate).
double golden_section_maximize(const std::function<double(double)>& f,
                               double a, double b, double tol);

/// Discrete peaks of the capacity columns (strictly above both neighbours),
/// refined to relative x-tolerance 1e-6 by golden-section search on the
/// continuous capacity, except for the integer SegmentCount variable.
std::vector<Peak> find_maxima(const SweepSpec& spec,
                              const std::vector<SweepRow>& rows);

struct ConvergenceReport {
    std::vector<double> relative_gap;  // |column - target| / |target| per row
    int first_within = -1;             // first row index with gap <= tol
};

ConvergenceReport convergence_report(const std::vector<SweepRow>& rows,
                                     double target, Column column, double tol);

}  // namespace fiberlink
