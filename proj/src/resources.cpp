#include "hamshallow/resources.hpp"

#include <cmath>
#include <sstream>

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace {

// Polynomial degree of one atom's reduced-degree approximant from the
// explicit ceiling rules (not the post-trim series degree).
int approx_degree_formula(const Atom& a, double delta) {
  switch (a.family) {
    case AtomFamily::monomial:
      return monomial_degree(static_cast<int>(std::llround(a.param)), delta);
    case AtomFamily::exp:
      return detail::exp_plan(a.param, delta).d;
    case AtomFamily::gauss: {
      if (a.param == 0.0) return 0;
      return 2 * detail::exp_plan(0.5 * a.param * a.param, delta).d;
    }
    default: {
      const double prefactor = 2.0 * a.param / std::sqrt(M_PI);
      const double delta_inner = delta / std::max(1.0, prefactor);
      return 2 * detail::exp_plan(0.5 * a.param * a.param, delta_inner).d + 1;
    }
  }
}

DegreeTuple approx_degrees_of(const FunctionSpec& spec, double delta) {
  DegreeTuple t;
  const auto add = [&](const Atom& a, bool sum_mode) {
    const int d = approx_degree_formula(a, delta);
    int& side = a.basis == AtomBasis::chebyshev_x ? t.cheb : t.laurent;
    side = sum_mode ? side + d : std::max(side, d);
  };
  if (spec.op == SpecOp::atom) {
    add(spec.atom, false);
  } else {
    for (const auto& c : spec.children) add(c.atom, spec.op == SpecOp::product);
  }
  return t;
}

double depth_formula(const DegreeTuple& deg, long db, double dst, int v) {
  const double exponent = (1.0 + v) / static_cast<double>(v);
  const double st_branch =
      deg.laurent == 0 ? 0.0 : std::pow(static_cast<double>(deg.laurent), exponent);
  return static_cast<double>(deg.cheb) * static_cast<double>(db) +
         st_branch * dst;
}

}  // namespace

DepthReport depth_report(const FunctionSpec& spec, const PauliHamiltonian& h,
                         double delta, int v) {
  if (!(delta > 0.0 && delta <= 0.5))
    throw parameter_error("depth_report: delta must lie in (0, 1/2]");
  if (v < 1 || v > 3) throw parameter_error("depth_report: v must be in {1,2,3}");
  validate(spec);

  DepthReport r;
  r.function_summary = spec_name(spec);
  r.raw_degrees = degree_of(spec, delta);
  r.approx_degrees = approx_degrees_of(spec, delta);
  int m = 0;
  while ((1 << m) < h.term_count()) ++m;
  r.db_estimate = static_cast<long>(h.term_count()) * (h.locality() + m);
  r.dst_estimate = std::pow(5.0, v - 1) * h.term_count() * h.locality() /
                   std::pow(delta, 1.0 / (2.0 * v));
  r.depth_raw = depth_formula(r.raw_degrees, r.db_estimate, r.dst_estimate, v);
  r.depth_approx = depth_formula(r.approx_degrees, r.db_estimate, r.dst_estimate, v);
  r.v = v;
  r.delta = delta;
  return r;
}

std::string render_depth_table(const DepthReport& r) {
  std::ostringstream os;
  os << "circuit-depth scaling estimate (all big-O constants set to 1)\n";
  os << "function: " << r.function_summary << "\n";
  os << "delta=" << r.delta << "  v=" << r.v << "  D_B=" << r.db_estimate
     << "  D_ST=" << r.dst_estimate << "\n";
  os << "-------------------------------------------------------------\n";
  os << "                      degree (cheb, laurent)        depth\n";
  os << "unapproximated        (" << r.raw_degrees.cheb << ", "
     << r.raw_degrees.laurent << ")"
     << std::string(
            std::max<int>(1, 24 - static_cast<int>(std::to_string(r.raw_degrees.cheb).size() +
                                                   std::to_string(r.raw_degrees.laurent).size())),
            ' ')
     << r.depth_raw << "\n";
  os << "poly. approximated    (" << r.approx_degrees.cheb << ", "
     << r.approx_degrees.laurent << ")"
     << std::string(
            std::max<int>(1, 24 - static_cast<int>(std::to_string(r.approx_degrees.cheb).size() +
                                                   std::to_string(r.approx_degrees.laurent).size())),
            ' ')
     << r.depth_approx << "\n";
  return os.str();
}

}  // namespace hamshallow
