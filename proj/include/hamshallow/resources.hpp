#pragma once

#include <string>

#include "hamshallow/composer.hpp"
#include "hamshallow/hamiltonian.hpp"

namespace hamshallow {

// Scaling estimate with every big-O constant set to 1; never a gate-exact
// count.
struct DepthReport {
  std::string function_summary;
  DegreeTuple raw_degrees;     // n for monomials, Maclaurin truncation else
  DegreeTuple approx_degrees;  // the ceil(sqrt(. ln .)) polynomial degrees
  long db_estimate = 0;        // D_B = J (k + ceil(log2 J))
  double dst_estimate = 0.0;   // D_ST = 5^{v-1} J k / delta^{1/(2v)}
  double depth_raw = 0.0;      // n D_B + m^{(1+v)/v} D_ST, raw degrees
  double depth_approx = 0.0;   // same with approximated degrees
  int v = 1;
  double delta = 0.0;
};

DepthReport depth_report(const FunctionSpec& spec, const PauliHamiltonian& h,
                         double delta, int v);

// Table-shaped text rendering for the CLI.
std::string render_depth_table(const DepthReport& report);

}  // namespace hamshallow
