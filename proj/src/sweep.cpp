#include "fiberlink/sweep.hpp"

#include <algorithm>
#include <cmath>

namespace fiberlink {

void SweepSpec::validate() const {
    detail::require(std::isfinite(start) && std::isfinite(stop) && start < stop,
                    "sweep: start must be < stop");
    detail::require(points >= 2, "sweep: points must be >= 2");
    if (spacing == Spacing::Log)
        detail::require(start > 0.0, "sweep: log spacing requires start > 0");
    link.validate();
    constants.validate();
    detail::require(power >= 0.0, "sweep: power must be >= 0");
    detail::require(modes >= 1.0, "sweep: modes must be >= 1");
}

std::string column_name(Column c) {
    switch (c) {
        case Column::Shannon: return "shannon";
        case Column::Holevo: return "holevo";
        case Column::Ea: return "ea";
    }
    return "?";
}

double column_value(const SweepRow& row, Column c) {
    switch (c) {
        case Column::Shannon: return row.shannon;
        case Column::Holevo: return row.holevo;
        case Column::Ea: return row.ea;
    }
    return 0.0;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    spec.validate();
    std::vector<double> xs(spec.points);
    const int last = spec.points - 1;
    for (int i = 0; i <= last; ++i) {
        if (i == 0) {
            xs[i] = spec.start;
        } else if (i == last) {
            xs[i] = spec.stop;
        } else if (spec.spacing == Spacing::Log) {
            const double t = static_cast<double>(i) / last;
            xs[i] = std::exp(std::log(spec.start) +
                             t * (std::log(spec.stop) - std::log(spec.start)));
        } else {
            const double t = static_cast<double>(i) / last;
            xs[i] = spec.start + t * (spec.stop - spec.start);
        }
    }
    return xs;
}

SweepRow evaluate_point(const SweepSpec& spec, double x) {
    SweepRow row;
    row.x = x;
    try {
        SegmentedLink link = spec.link;
        double M = spec.modes;
        double P = spec.power;
        switch (spec.variable) {
            case SweepVariable::Modes: M = x; break;
            case SweepVariable::Power: P = x; break;
            case SweepVariable::SegmentLength: link.segment_length_km = x; break;
            case SweepVariable::SegmentCount:
                link.segment_count = static_cast<int>(std::llround(x));
                break;
        }

        const EffectiveChannel ec = effective_channel(link, M, P);
        row.tau_eff = ec.tau_eff;
        row.nu_eff = ec.nu_eff;
        row.gain = ec.gain;

        const ChannelParams ch(M, P, ec.tau_eff, ec.nu_eff);
        row.shannon = shannon_capacity(ch);
        row.holevo = holevo_capacity(ch);
        row.ea = ea_capacity(ch).ea;
        row.ea_approx = ea_asymptotic(ch);

        const double p_photons =
            power_consumption(ec.photons_per_mode, link.segment_count, ec.gain,
                              link.segment_transmittivity(), link.receiver);
        row.power_watts = consumption_watts(p_photons, M, spec.constants);
    } catch (const domain_error&) {
        row.error = "domain";
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const std::vector<double> xs = sweep_grid(spec);
    std::vector<SweepRow> rows(xs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(xs.size()); ++i)
        rows[i] = evaluate_point(spec, xs[i]);
    return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
    const std::vector<double> xs = sweep_grid(spec);
    std::vector<SweepRow> rows(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        rows[i] = evaluate_point(spec, xs[i]);
    return rows;
}

double golden_section_maximize(const std::function<double(double)>& f,
                               double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

std::vector<Peak> find_maxima(const SweepSpec& spec,
                              const std::vector<SweepRow>& rows) {
    std::vector<Peak> peaks;
    if (rows.size() < 3) return peaks;

    const bool log_axis = spec.spacing == Spacing::Log;
    const bool discrete = spec.variable == SweepVariable::SegmentCount;

    for (Column col : {Column::Shannon, Column::Holevo, Column::Ea}) {
        double col_max = column_value(rows.front(), col);
        for (const auto& r : rows)
            if (r.ok()) col_max = std::max(col_max, column_value(r, col));

        for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
            if (!rows[i - 1].ok() || !rows[i].ok() || !rows[i + 1].ok()) continue;
            const double v0 = column_value(rows[i - 1], col);
            const double v1 = column_value(rows[i], col);
            const double v2 = column_value(rows[i + 1], col);
            if (!(v1 > v0 && v1 > v2)) continue;

            Peak p;
            p.column = col;
            if (discrete) {
                p.x = rows[i].x;
                p.value = v1;
            } else {
                auto eval = [&](double t) {
                    const double x = log_axis ? std::exp(t) : t;
                    return column_value(evaluate_point(spec, x), col);
                };
                const double a = log_axis ? std::log(rows[i - 1].x) : rows[i - 1].x;
                const double b = log_axis ? std::log(rows[i + 1].x) : rows[i + 1].x;
                // In log coordinates an absolute interval width is directly a
                // relative tolerance on x.
                const double tol =
                    log_axis ? 1e-7
                             : 1e-7 * std::max(std::abs(a), std::abs(b));
                const double t = golden_section_maximize(eval, a, b, tol);
                p.x = log_axis ? std::exp(t) : t;
                p.value = eval(t);
            }
            p.kind = p.value >= col_max * (1.0 - 1e-12) ? PeakKind::Global
                                                        : PeakKind::Local;
            peaks.push_back(p);
        }
    }
    return peaks;
}

ConvergenceReport convergence_report(const std::vector<SweepRow>& rows,
                                     double target, Column column,
                                     double tol) {
    detail::require(std::isfinite(target) && target != 0.0,
                    "convergence_report: target must be finite and nonzero");
    ConvergenceReport rep;
    rep.relative_gap.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double gap =
            std::abs(column_value(rows[i], column) - target) / std::abs(target);
        rep.relative_gap.push_back(gap);
        if (rep.first_within < 0 && gap <= tol)
            rep.first_within = static_cast<int>(i);
    }
    return rep;
}

}  // namespace fiberlink
