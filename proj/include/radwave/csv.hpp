#ifndef RADWAVE_CSV_HPP
#define RADWAVE_CSV_HPP

#include <string>

#include "radwave/harness.hpp"
#include "radwave/norms.hpp"
#include "radwave/solver.hpp"

namespace radwave {

// 64-bit reals render with 17 significant digits so CSV round-trips exactly.
std::string format_real(double v);

// header `r,value`, one row per node
void write_profile_csv(const std::string& path, const RadialProfile& p);

// header `region,l2,h1_semi,h2_semi`
void write_norms_csv(const std::string& path,
                     const std::vector<NormReport>& reports);

// header `t,r,z,u`, one row per stored (time, node) sample
void write_field_csv(const std::string& path, const WaveField& f);

// header `t,E1,E2,Cn,Dn`
void write_energy_csv(const std::string& path, const EnergyReport& rep);

// header `quantity,eps,value,slope,theory_slope,residual`; slope columns are
// empty when no fit exists
void write_rates_csv(const std::string& path, const ConvergenceReport& rep);

}  // namespace radwave

#endif
