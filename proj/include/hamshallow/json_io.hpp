#pragma once

#include <json.hpp>

#include "hamshallow/composer.hpp"
#include "hamshallow/hamiltonian.hpp"
#include "hamshallow/resources.hpp"
#include "hamshallow/signal.hpp"
#include "hamshallow/simulator.hpp"

namespace hamshallow {

using json = nlohmann::json;

// {"kind":"chebyshev","degree":d,"coeffs":[...]}
json to_json(const ChebyshevSeries& s);
ChebyshevSeries chebyshev_from_json(const json& j);

// {"kind":"laurent","degree":d,"coeffs":[[re,im],...]} with k = -d..d.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const ApproxReport& r);
ApproxReport approx_report_from_json(const json& j);

json to_json(const Atom& a);
Atom atom_from_json(const json& j);

// {"op":"atom"|"lincomb"|"product", ...,
//  "children":[{"coef":..,"atom":{..}},..]}
json to_json(const FunctionSpec& s);
FunctionSpec function_spec_from_json(const json& j);

json to_json(const MixedApprox& m);

json to_json(const PhaseProgram& p);
PhaseProgram phase_program_from_json(const json& j);

json to_json(const DepthReport& r);
json to_json(const VerificationReport& r);

json to_json(const PauliHamiltonian& h);

}  // namespace hamshallow
