#pragma once

#include <stdexcept>
#include <string>

namespace errfloat {

/// All method constants. Defaults reproduce the reference simulation:
/// T = 31 value bits, T_e = 21 error bits, RTHD = 1e-3, EEZ = 1e-6
/// (hence EPS = 1e-9), QEPS = 3e-10, k and c intervals [0, 2].
struct EEConfig {
    int t_bits = 31;
    int te_bits = 21;
    double rthd = 1e-3;
    double eez = 1e-6;
    double qeps = 3e-10;
    double k_min = 0.0;
    double k_max = 2.0;
    double c_min = 0.0;
    double c_max = 2.0;
    // When false the triple degrades to the couple (x, ee): re_m is not
    // carried, only threshold signals are emitted.
    bool track_re_m = true;

    double eps() const { return rthd * eez; }
    double q() const { return qeps / eps(); }

    void validate() const {
        if (t_bits < 2) throw std::invalid_argument("t_bits must be >= 2");
        if (te_bits < 2 || te_bits > t_bits)
            throw std::invalid_argument("te_bits must satisfy 2 <= te_bits <= t_bits");
        if (!(rthd > 0.0 && rthd < 1.0)) throw std::invalid_argument("rthd must be in (0, 1)");
        if (!(eez > 0.0)) throw std::invalid_argument("eez must be > 0");
        if (!(qeps > 0.0)) throw std::invalid_argument("qeps must be > 0");
        if (k_min > 0.0 || k_max < 1.0)
            throw std::invalid_argument("k interval must satisfy k_min <= 0, k_max >= 1");
    }
};

/// Reads key=value lines (t_bits, te_bits, rthd, eez, qeps, k_min, k_max,
/// c_min, c_max); '#' starts a comment. Unknown keys are an error.
EEConfig load_config_file(const std::string& path, EEConfig base = {});

}  // namespace errfloat
