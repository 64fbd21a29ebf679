#include "radwave/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace radwave {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {
std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}
}  // namespace

void write_profile_csv(const std::string& path, const RadialProfile& p) {
  auto out = open_out(path);
  out << "r,value\n";
  for (int j = 0; j < p.grid.n_points; ++j)
    out << format_real(p.grid.nodes[j]) << "," << format_real(p.values[j]) << "\n";
}

void write_norms_csv(const std::string& path,
                     const std::vector<NormReport>& reports) {
  auto out = open_out(path);
  out << "region,l2,h1_semi,h2_semi\n";
  for (const auto& r : reports)
    out << r.region.label() << "," << format_real(r.l2) << ","
        << format_real(r.h1_semi) << "," << format_real(r.h2_semi) << "\n";
}

void write_field_csv(const std::string& path, const WaveField& f) {
  auto out = open_out(path);
  out << "t,r,z,u\n";
  for (int k = 0; k < f.n_t(); ++k) {
    const auto u = f.u_row(k);
    for (int j = 0; j < f.grid.n_points; ++j)
      out << format_real(f.times[k]) << "," << format_real(f.grid.nodes[j])
          << "," << format_real(f.z_at(k, j)) << "," << format_real(u[j])
          << "\n";
  }
}

void write_energy_csv(const std::string& path, const EnergyReport& rep) {
  auto out = open_out(path);
  out << "t,E1,E2,Cn,Dn\n";
  for (std::size_t k = 0; k < rep.times.size(); ++k)
    out << format_real(rep.times[k]) << "," << format_real(rep.first_order[k])
        << "," << format_real(rep.second_order[k]) << ","
        << format_real(rep.one_d_c[k]) << "," << format_real(rep.one_d_d[k])
        << "\n";
}

void write_rates_csv(const std::string& path, const ConvergenceReport& rep) {
  auto out = open_out(path);
  out << "quantity,eps,value,slope,theory_slope,residual\n";
  for (const auto& q : rep.quantities) {
    const std::string slope = q.fit ? format_real(q.fit->slope) : "";
    const std::string resid = q.fit ? format_real(q.fit->rms_residual) : "";
    const std::string theory = q.theory_slope ? format_real(*q.theory_slope) : "";
    for (const auto& row : q.rows)
      out << q.name << "," << format_real(row.eps) << ","
          << format_real(row.value) << "," << slope << "," << theory << ","
          << resid << "\n";
  }
}

}  // namespace radwave
