#include "hamshallow/composer.hpp"

#include <cmath>
#include <sstream>

#include "hamshallow/errors.hpp"

namespace hamshallow {

FunctionSpec FunctionSpec::make_atom(const Atom& a) {
  FunctionSpec s;
  s.op = SpecOp::atom;
  s.atom = a;
  return s;
}

FunctionSpec FunctionSpec::make_lincomb(std::vector<Child> children) {
  FunctionSpec s;
  s.op = SpecOp::lincomb;
  s.children = std::move(children);
  return s;
}

FunctionSpec FunctionSpec::make_product(std::vector<Atom> atoms) {
  FunctionSpec s;
  s.op = SpecOp::product;
  for (const Atom& a : atoms) s.children.push_back({1.0, a});
  return s;
}

const char* family_name(AtomFamily f) {
  switch (f) {
    case AtomFamily::monomial: return "monomial";
    case AtomFamily::exp: return "exp";
    case AtomFamily::gauss: return "gauss";
    default: return "erf";
  }
}

const char* basis_name(AtomBasis b) {
  switch (b) {
    case AtomBasis::chebyshev_x: return "chebyshev-x";
    case AtomBasis::laurent_cos: return "laurent-cos";
    default: return "laurent-sin";
  }
}

namespace {

void validate_atom(const Atom& a) {
  switch (a.family) {
    case AtomFamily::monomial: {
      if (!(a.param >= 1.0) || a.param != std::floor(a.param))
        throw parameter_error("monomial atom needs integer n >= 1");
      break;
    }
    case AtomFamily::exp:
      if (!(a.param > 0.0)) throw parameter_error("exp atom needs beta > 0");
      break;
    case AtomFamily::gauss:
      if (!(a.param >= 0.0)) throw parameter_error("gauss atom needs gamma >= 0");
      break;
    case AtomFamily::erf:
      if (!(a.param > 0.0)) throw parameter_error("erf atom needs lambda > 0");
      break;
  }
}

int atom_n(const Atom& a) { return static_cast<int>(std::llround(a.param)); }

// Table-I (trunc.) degree of one atom: n for monomials, the Maclaurin
// truncation degree for the exponential families.
int raw_degree(const Atom& a, double delta) {
  switch (a.family) {
    case AtomFamily::monomial: return atom_n(a);
    case AtomFamily::exp: return detail::exp_plan(a.param, delta).t;
    case AtomFamily::gauss: {
      if (a.param == 0.0) return 0;
      return detail::exp_plan(0.5 * a.param * a.param, delta).t;
    }
    default: {
      const double prefactor = 2.0 * a.param / std::sqrt(M_PI);
      const double delta_inner = delta / std::max(1.0, prefactor);
      return detail::exp_plan(0.5 * a.param * a.param, delta_inner).t;
    }
  }
}

bool is_cheb(const Atom& a) { return a.basis == AtomBasis::chebyshev_x; }

}  // namespace

void validate(const FunctionSpec& spec) {
  switch (spec.op) {
    case SpecOp::atom:
      validate_atom(spec.atom);
      return;
    case SpecOp::lincomb:
    case SpecOp::product:
      if (spec.children.empty())
        throw usage_error("composite spec needs at least one child atom");
      for (const auto& c : spec.children) validate_atom(c.atom);
      return;
  }
}

DegreeTuple degree_of(const FunctionSpec& spec, double delta) {
  validate(spec);
  DegreeTuple t;
  if (spec.op == SpecOp::atom) {
    (is_cheb(spec.atom) ? t.cheb : t.laurent) = raw_degree(spec.atom, delta);
    return t;
  }
  for (const auto& c : spec.children) {
    const int d = raw_degree(c.atom, delta);
    int& side = is_cheb(c.atom) ? t.cheb : t.laurent;
    side = spec.op == SpecOp::lincomb ? std::max(side, d) : side + d;
  }
  return t;
}

double coeff_budget_constant(const FunctionSpec& spec) {
  if (spec.op != SpecOp::lincomb)
    throw usage_error("coeff_budget_constant applies to lincomb specs only");
  double c = 0.0;
  for (const auto& child : spec.children) c += std::abs(child.coef);
  return c;
}

AtomApprox approximate_atom(const Atom& atom, double delta) {
  validate_atom(atom);
  AtomApprox out;
  if (is_cheb(atom)) {
    std::pair<ChebyshevSeries, ApproxReport> r = [&] {
      switch (atom.family) {
        case AtomFamily::monomial: return monomial_approx(atom_n(atom), delta);
        case AtomFamily::exp: return exp_approx(atom.param, delta);
        case AtomFamily::gauss: return gauss_approx(atom.param, delta);
        default: return erf_approx(atom.param, delta);
      }
    }();
    out.series = std::move(r.first);
    out.report = std::move(r.second);
    return out;
  }
  const TrigVariant v = atom.basis == AtomBasis::laurent_cos ? TrigVariant::cosine
                                                             : TrigVariant::sine;
  std::pair<LaurentPoly, ApproxReport> r = [&] {
    switch (atom.family) {
      case AtomFamily::monomial: return trig_power_approx(atom_n(atom), delta, v);
      case AtomFamily::exp: return exp_trig_approx(atom.param, delta, v);
      case AtomFamily::gauss: return gauss_trig_approx(atom.param, delta, v);
      default: return erf_trig_approx(atom.param, delta, v);
    }
  }();
  out.poly = std::move(r.first);
  out.report = std::move(r.second);
  return out;
}

cdouble MixedApprox::eval(double x, double theta) const {
  const cdouble c = cheb_part ? cdouble(cheb_eval(*cheb_part, x), 0.0)
                              : cdouble(combine == CombineMode::sum ? 0.0 : 1.0);
  const cdouble l = laurent_part ? laurent_eval(*laurent_part, theta)
                                 : cdouble(combine == CombineMode::sum ? 0.0 : 1.0);
  return combine == CombineMode::sum ? c + l : c * l;
}

namespace {

// Max |exact - approx| over an n x n product grid (x uniform on [-1,1],
// theta uniform on [0,2pi)); degenerates to the live axis when only one
// part is present.
double mixed_sup_error(const FunctionSpec& spec, const MixedApprox& mix,
                       std::size_t n) {
  const bool has_c = mix.cheb_part.has_value();
  const bool has_l = mix.laurent_part.has_value();
  if (has_c && has_l) {
    return grid::max_abs(n * n, [&](std::size_t idx) {
      const double x = grid::unit_interval_node(idx / n, n);
      const double theta = grid::circle_node(idx % n, n);
      return std::abs(cdouble(exact_value(spec, x, theta), 0.0) -
                      mix.eval(x, theta));
    });
  }
  const std::size_t pts = grid::default_points();
  return grid::max_abs(pts, [&](std::size_t i) {
    const double x = has_c ? grid::unit_interval_node(i, pts) : 0.0;
    const double theta = has_l ? grid::circle_node(i, pts) : 0.0;
    return std::abs(cdouble(exact_value(spec, x, theta), 0.0) -
                    mix.eval(x, theta));
  });
}

}  // namespace

std::pair<MixedApprox, ApproxReport> approximate(const FunctionSpec& spec,
                                                 double delta) {
  if (!(delta > 0.0 && delta <= 0.5))
    throw parameter_error("approximate: delta must lie in (0, 1/2]");
  validate(spec);

  MixedApprox mix;
  ApproxReport report;
  report.target_name = spec_name(spec);
  report.parameters["delta"] = delta;

  if (spec.op == SpecOp::atom) {
    AtomApprox a = approximate_atom(spec.atom, delta);
    mix.combine = CombineMode::sum;
    mix.cheb_part = std::move(a.series);
    mix.laurent_part = std::move(a.poly);
    mix.budget_log.push_back({atom_name(spec.atom), delta, a.report.approx_degree});
    report = a.report;
    return {std::move(mix), report};
  }

  const int n_children = static_cast<int>(spec.children.size());
  double budget = delta;
  if (spec.op == SpecOp::lincomb) {
    const double c = coeff_budget_constant(spec);
    if (c > 1.0) budget = delta / c;
    if (c > 1e3) {
      std::ostringstream os;
      os << "coefficient 1-norm C = " << c
         << " inflates per-atom degrees by ~sqrt(ln C)";
      mix.warnings.push_back(os.str());
    }
    report.parameters["C"] = c;
  } else {
    budget = delta / n_children;
  }
  if (budget < 1e-12) {
    std::ostringstream os;
    os << "per-atom budget " << budget
       << " underflows 1e-12; shrink the spec or raise delta";
    throw parameter_error(os.str());
  }
  report.parameters["per_atom_budget"] = budget;

  mix.combine = spec.op == SpecOp::lincomb ? CombineMode::sum : CombineMode::product;

  for (const auto& child : spec.children) {
    AtomApprox a = approximate_atom(child.atom, budget);
    mix.budget_log.push_back({atom_name(child.atom), budget, a.report.approx_degree});
    if (spec.op == SpecOp::lincomb) {
      if (a.series) {
        ChebyshevSeries scaled = cheb_scale(*a.series, child.coef);
        mix.cheb_part = mix.cheb_part ? cheb_add(*mix.cheb_part, scaled)
                                      : std::move(scaled);
      } else {
        LaurentPoly scaled = laurent_scale(*a.poly, cdouble(child.coef, 0.0));
        mix.laurent_part = mix.laurent_part ? laurent_add(*mix.laurent_part, scaled)
                                            : std::move(scaled);
      }
    } else {
      // The product error budget needs every factor bounded by 1 on its
      // domain; the atom families satisfy this, so a violation signals a
      // broken input.
      const double sup = a.series ? sup_abs(*a.series, 2048)
                                  : sup_abs(*a.poly, 2048);
      if (sup > 1.0 + budget + 1e-9)
        throw parameter_error("product atom approximant exceeds magnitude 1: " +
                              atom_name(child.atom));
      if (a.series)
        mix.cheb_part = mix.cheb_part ? cheb_mul(*mix.cheb_part, *a.series)
                                      : std::move(*a.series);
      else
        mix.laurent_part = mix.laurent_part ? laurent_mul(*mix.laurent_part, *a.poly)
                                            : std::move(*a.poly);
    }
  }

  report.truncation_degree = 0;
  const int dc = mix.cheb_part ? mix.cheb_part->degree() : 0;
  const int dl = mix.laurent_part ? mix.laurent_part->degree() : 0;
  report.parameters["cheb_degree"] = dc;
  report.parameters["laurent_degree"] = dl;
  report.approx_degree = std::max(dc, dl);
  report.guaranteed_bound = delta;
  report.measured_sup_error = mixed_sup_error(spec, mix, 300);
  return {std::move(mix), report};
}

double exact_atom_value(const Atom& atom, double x, double y) {
  double u = 0.0;
  switch (atom.basis) {
    case AtomBasis::chebyshev_x: u = x; break;
    case AtomBasis::laurent_cos: u = std::cos(y); break;
    case AtomBasis::laurent_sin: u = std::sin(y); break;
  }
  switch (atom.family) {
    case AtomFamily::monomial: return std::pow(u, atom_n(atom));
    case AtomFamily::exp: return std::exp(-atom.param * (1.0 + u));
    case AtomFamily::gauss: {
      const double g = atom.param * u;
      return std::exp(-g * g);
    }
    default: return std::erf(atom.param * u);
  }
}

double exact_value(const FunctionSpec& spec, double x, double y) {
  switch (spec.op) {
    case SpecOp::atom:
      return exact_atom_value(spec.atom, x, y);
    case SpecOp::lincomb: {
      double s = 0.0;
      for (const auto& c : spec.children)
        s += c.coef * exact_atom_value(c.atom, x, y);
      return s;
    }
    default: {
      double p = 1.0;
      for (const auto& c : spec.children) p *= exact_atom_value(c.atom, x, y);
      return p;
    }
  }
}

std::string atom_name(const Atom& atom) {
  std::ostringstream os;
  os << family_name(atom.family) << "(" << atom.param << ")";
  if (atom.basis != AtomBasis::chebyshev_x) os << "@" << basis_name(atom.basis);
  return os.str();
}

std::string spec_name(const FunctionSpec& spec) {
  if (spec.op == SpecOp::atom) return atom_name(spec.atom);
  std::ostringstream os;
  os << (spec.op == SpecOp::lincomb ? "lincomb(" : "product(");
  for (std::size_t i = 0; i < spec.children.size(); ++i) {
    if (i) os << (spec.op == SpecOp::lincomb ? " + " : " * ");
    if (spec.op == SpecOp::lincomb) os << spec.children[i].coef << "*";
    os << atom_name(spec.children[i].atom);
  }
  os << ")";
  return os.str();
}

}  // namespace hamshallow
