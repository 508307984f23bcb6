#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamshallow/laurentapprox.hpp"

namespace hamshallow {

enum class AtomFamily { monomial, exp, gauss, erf };
enum class AtomBasis { chebyshev_x, laurent_cos, laurent_sin };

// One polynomial-approximable function: x^n, e^{-beta(1+x)}, e^{-(gamma x)^2}
// or erf(lambda x), in the Chebyshev variable x or with x replaced by
// cos y / sin y (Laurent basis).
struct Atom {
  AtomFamily family = AtomFamily::monomial;
  AtomBasis basis = AtomBasis::chebyshev_x;
  double param = 1.0;  // n | beta | gamma | lambda
};

enum class SpecOp { atom, lincomb, product };

// Expression tree of atoms combined by one level of linear combination or
// product; deeper nesting is outside the composition theorems and rejected.
struct FunctionSpec {
  struct Child {
    double coef = 1.0;  // meaningful for lincomb; fixed 1 for product
    Atom atom;
  };

  SpecOp op = SpecOp::atom;
  Atom atom;                    // op == atom
  std::vector<Child> children;  // op == lincomb / product

  static FunctionSpec make_atom(const Atom& a);
  static FunctionSpec make_lincomb(std::vector<Child> children);
  static FunctionSpec make_product(std::vector<Atom> atoms);
};

struct DegreeTuple {
  int cheb = 0;     // n_l / n_p side
  int laurent = 0;  // m_l / m_p side
};

enum class CombineMode { sum, product };

struct BudgetEntry {
  std::string atom;
  double allocated_delta = 0.0;
  int achieved_degree = 0;
};

// Two-variable approximant F'(x,z) / G'(x,z): one Chebyshev series in x and
// one Laurent polynomial in z, combined by sum or product. An absent part
// acts as 0 under sum and 1 under product.
struct MixedApprox {
  std::optional<ChebyshevSeries> cheb_part;
  std::optional<LaurentPoly> laurent_part;
  CombineMode combine = CombineMode::sum;
  std::vector<BudgetEntry> budget_log;
  std::vector<std::string> warnings;

  cdouble eval(double x, double theta) const;
};

void validate(const FunctionSpec& spec);

// Raw Table-I degrees (n for monomials, Maclaurin truncation degree for the
// exponential families, which depends on delta) combined by max for linear
// combinations and by sum for products.
DegreeTuple degree_of(const FunctionSpec& spec, double delta);

// C = sum |a_i| + sum |b_j|; lincomb only.
double coeff_budget_constant(const FunctionSpec& spec);

struct AtomApprox {
  std::optional<ChebyshevSeries> series;
  std::optional<LaurentPoly> poly;
  ApproxReport report;
};

// Dispatches to the chebapprox / laurentapprox op for one atom.
AtomApprox approximate_atom(const Atom& atom, double delta);

// Linear-combination / product assembly with per-atom budgets delta
// (C <= 1), delta/C (C > 1) or delta/(N+M) (product). delta in (0, 1/2].
std::pair<MixedApprox, ApproxReport> approximate(const FunctionSpec& spec,
                                                 double delta);

// Exact scalar references, used by the error oracles and the simulator.
double exact_atom_value(const Atom& atom, double x, double y);
double exact_value(const FunctionSpec& spec, double x, double y);

std::string atom_name(const Atom& atom);
std::string spec_name(const FunctionSpec& spec);

const char* family_name(AtomFamily f);
const char* basis_name(AtomBasis b);

}  // namespace hamshallow
