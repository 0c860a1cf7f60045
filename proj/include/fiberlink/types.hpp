#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fiberlink {

/// Thrown when an argument is outside the physical domain of a formula.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when an internal consistency check fails (formula misuse).
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A quantity whose exact value diverges for the given parameters
/// (e.g. the Holevo limit at nu = 0).
class diverges_error : public domain_error {
public:
    using domain_error::domain_error;
};

namespace detail {
inline void require(bool ok, const std::string& msg) {
    if (!ok) throw domain_error(msg);
}
}  // namespace detail

/// Mean photons per mode per channel use, n = P/M.
struct PhotonNumber {
    double value;
    explicit PhotonNumber(double v) : value(v) {
        detail::require(std::isfinite(v) && v >= 0.0,
                        "PhotonNumber must be finite and >= 0");
    }
};

/// Power transmission ratio in [0, 1].
struct Transmittivity {
    double value;
    explicit Transmittivity(double v) : value(v) {
        detail::require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
                        "Transmittivity must be in [0, 1]");
    }
};

/// Thermal photons per mode per channel use.
struct NoisePhotons {
    double value;
    explicit NoisePhotons(double v) : value(v) {
        detail::require(std::isfinite(v) && v >= 0.0,
                        "NoisePhotons must be finite and >= 0");
    }
};

}  // namespace fiberlink
