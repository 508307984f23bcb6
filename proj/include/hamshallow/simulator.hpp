#pragma once

#include <string>

#include "hamshallow/composer.hpp"
#include "hamshallow/signal.hpp"
#include "hamshallow/trotter.hpp"

namespace hamshallow {

struct VerificationReport {
  std::string spec_summary;
  std::string hamiltonian_summary;
  double delta = 0.0;
  std::string pipeline;  // qsp | gqsp-exact-U | gqsp-trotter | mixed
  double measured_block_error = 0.0;
  double certified_budget = 0.0;
  bool pass = false;
};

enum class UMode { exact, trotter };

struct TrotterChoice {
  int v = 2;
  long r = 0;  // 0: derive from trotter_steps at the realized Laurent degree
};

// F(H/alpha) by eigendecomposition, applying the exact scalar target to
// each eigenvalue (Laurent atoms read the eigenvalue as the angle y).
Matrix exact_function_matrix(const FunctionSpec& spec, const PauliHamiltonian& h);

// approximate -> parity split -> QSP phases -> Fig.-2 circuits -> blocks
// recombined at the matrix level, compared against exact_function_matrix.
VerificationReport verify_qsp(const FunctionSpec& spec, const PauliHamiltonian& h,
                              double delta, double tol);

// approximate -> headroom rescale -> complementary polynomial -> angle
// recursion -> GQSP circuit with U exact or Trotterized.
VerificationReport verify_gqsp(const FunctionSpec& spec, const PauliHamiltonian& h,
                               double delta, UMode u_mode,
                               TrotterChoice trotter = {});

// Chebyshev summand/factor via QSP, Laurent one via GQSP (exact U), blocks
// combined by the function spec's sum/product mode.
VerificationReport verify_mixed(const FunctionSpec& spec, const PauliHamiltonian& h,
                                double delta);

}  // namespace hamshallow
