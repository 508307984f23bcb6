#pragma once

#include <utility>

#include "hamshallow/chebapprox.hpp"
#include "hamshallow/polyops.hpp"

namespace hamshallow {

enum class TrigVariant { cosine, sine };

// Laurent approximation to cos^n y (resp. sin^n y): the monomial expansion
// with x -> cos y, i.e. T_j(cos y) = (z^j + z^-j)/2; the sine variant picks
// up i^j phases from z -> iz^-1.
std::pair<LaurentPoly, ApproxReport> trig_power_approx(int n, double delta,
                                                       TrigVariant variant);

// e^{-beta(1 + cos y)} / e^{-beta(1 + sin y)}.
std::pair<LaurentPoly, ApproxReport> exp_trig_approx(double beta, double delta,
                                                     TrigVariant variant);

// e^{-(gamma cos y)^2} / e^{-(gamma sin y)^2}; even z-indices only, the
// sine variant carrying the (-1)^j sign from T_2(sin y) = -cos 2y... cos(2(pi/2-y)).
std::pair<LaurentPoly, ApproxReport> gauss_trig_approx(double gamma, double delta,
                                                       TrigVariant variant);

// erf(lambda cos y) / erf(lambda sin y); odd z-indices only. The sine
// variant's coefficients are purely imaginary (a global factor of i), which
// the report records under "global_phase_im".
std::pair<LaurentPoly, ApproxReport> erf_trig_approx(double lambda, double delta,
                                                     TrigVariant variant);

const char* trig_variant_name(TrigVariant variant);

}  // namespace hamshallow
