#pragma once

namespace qent {

// One time point of a scenario sweep. Entropies S_rho and I_SE are in bits;
// the entanglement columns are normalized so a Bell state scores 1.
// Rows satisfy E_h = E_av - E_f within 1e-10 by construction.
struct TimeSeriesRecord {
    double t_over_T = 0.0;
    double E_f = 0.0;
    double E_av = 0.0;
    double E_h = 0.0;
    double S_rho = 0.0;
    double I_SE = 0.0;
};

} // namespace qent
