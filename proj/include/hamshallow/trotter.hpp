#pragma once

#include "hamshallow/hamiltonian.hpp"

namespace hamshallow {

// Second-order symmetric Suzuki-Trotter step for e^{-i t H/alpha}: the
// palindromic product of the 2J term exponentials with eta = -i t / 2.
Matrix s2_matrix(const PauliHamiltonian& h, double t);

// u_v = 1 / (4 - 4^{1/(2v-1)}) of the S_{2v} recursion.
double suzuki_coefficient(int v);

// S_{2v}(t/r)^r for v in {1,2,3}; v = 1 is plain S_2.
Matrix suzuki_matrix(const PauliHamiltonian& h, double t, int v, int r);

// ceil(d2^{1/v} / delta^{1/(2v)}) with declared constant c = 1; an estimate
// only, certified empirically by the simulator.
long trotter_steps(long d2, double delta, int v);

// ||S_{2v}(t/r)^r - e^{-i t H/alpha}||_max.
double measured_trotter_error(const PauliHamiltonian& h, double t, int v, int r);

}  // namespace hamshallow
