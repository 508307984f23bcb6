#include "hamshallow/signal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace {

constexpr double kHeadroom = 1e-3;

double wrap_phase(double phi) {
  double w = std::remainder(phi, 2.0 * M_PI);
  if (w <= -M_PI) w = M_PI;
  return w;
}

Matrix2 phase_z(double phi) {
  Matrix2 m;
  m << std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi);
  return m;
}

Matrix2 signal_w(double x) {
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  Matrix2 m;
  m << cdouble(x, 0.0), cdouble(0.0, s), cdouble(0.0, s), cdouble(x, 0.0);
  return m;
}

// Value Re P(x) and d(Re P)/d(phi_j) for all j, via prefix rows and suffix
// columns of the alternating product.
double qsp_value_and_grad(const std::vector<double>& phases, double x,
                          std::vector<double>* grad) {
  const int d = static_cast<int>(phases.size()) - 1;
  const Matrix2 w = signal_w(x);

  std::vector<Eigen::Vector2cd> suffix(d + 2);
  suffix[d + 1] = Eigen::Vector2cd(1.0, 0.0);
  for (int j = d; j >= 0; --j) {
    Matrix2 a = phase_z(phases[j]);
    if (j > 0) a = w * a;
    suffix[j] = a * suffix[j + 1];
  }
  const double value = suffix[0](0).real();
  if (grad) {
    grad->assign(d + 1, 0.0);
    Eigen::RowVector2cd row(1.0, 0.0);
    for (int j = 0; j <= d; ++j) {
      Matrix2 a = phase_z(phases[j]);
      if (j > 0) a = w * a;
      row = row * a;
      // dU/dphi_j inserts i sigma_z after the j-th layer.
      const cdouble g =
          cdouble(0.0, 1.0) * (row(0) * suffix[j + 1](0) - row(1) * suffix[j + 1](1));
      (*grad)[j] = g.real();
    }
  }
  return value;
}

struct SymmetricObjective {
  // phi_j = phi_{d-j}; free variables are the first floor(d/2)+1 phases.
  int d;
  std::vector<double> nodes;
  std::vector<double> targets;

  std::vector<double> expand(const std::vector<double>& v) const {
    std::vector<double> phases(d + 1);
    for (int j = 0; j <= d; ++j) phases[j] = v[std::min(j, d - j)];
    return phases;
  }

  double eval(const std::vector<double>& v, std::vector<double>* grad) const {
    const std::vector<double> phases = expand(v);
    if (grad) grad->assign(v.size(), 0.0);
    double loss = 0.0;
    std::vector<double> g;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double r =
          qsp_value_and_grad(phases, nodes[k], grad ? &g : nullptr) - targets[k];
      loss += r * r;
      if (grad)
        for (int j = 0; j <= d; ++j) (*grad)[std::min(j, d - j)] += 2.0 * r * g[j];
    }
    return loss;
  }
};

// Plain L-BFGS with Armijo backtracking; the landscape near the symmetric
// initialization is benign for targets with sup norm below 1.
bool lbfgs_minimize(const SymmetricObjective& obj, std::vector<double>& v,
                    double loss_tol, int max_iter) {
  const std::size_t n = v.size();
  std::vector<double> g, g_new;
  double f = obj.eval(v, &g);
  std::deque<std::pair<std::vector<double>, std::vector<double>>> history;

  for (int iter = 0; iter < max_iter; ++iter) {
    if (f <= loss_tol) return true;
    double gmax = 0.0;
    for (double gi : g) gmax = std::max(gmax, std::abs(gi));
    if (gmax < 1e-14) return f <= loss_tol;

    // Two-loop recursion.
    std::vector<double> q = g;
    std::vector<double> alpha(history.size());
    for (int i = static_cast<int>(history.size()) - 1; i >= 0; --i) {
      const auto& [s, y] = history[i];
      const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
      alpha[i] = std::inner_product(s.begin(), s.end(), q.begin(), 0.0) / sy;
      for (std::size_t k = 0; k < n; ++k) q[k] -= alpha[i] * y[k];
    }
    if (!history.empty()) {
      const auto& [s, y] = history.back();
      const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
      const double yy = std::inner_product(y.begin(), y.end(), y.begin(), 0.0);
      for (double& qk : q) qk *= sy / yy;
    }
    for (std::size_t i = 0; i < history.size(); ++i) {
      const auto& [s, y] = history[i];
      const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
      const double beta =
          std::inner_product(y.begin(), y.end(), q.begin(), 0.0) / sy;
      for (std::size_t k = 0; k < n; ++k) q[k] += (alpha[i] - beta) * s[k];
    }

    std::vector<double> dir(n);
    for (std::size_t k = 0; k < n; ++k) dir[k] = -q[k];
    double slope = std::inner_product(g.begin(), g.end(), dir.begin(), 0.0);
    if (slope >= 0.0) {
      history.clear();
      for (std::size_t k = 0; k < n; ++k) dir[k] = -g[k];
      slope = -std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
    }

    double step = 1.0;
    std::vector<double> v_new(n);
    double f_new = f;
    bool moved = false;
    for (int ls = 0; ls < 48; ++ls) {
      for (std::size_t k = 0; k < n; ++k) v_new[k] = v[k] + step * dir[k];
      f_new = obj.eval(v_new, nullptr);
      if (f_new <= f + 1e-4 * step * slope) {
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) return f <= loss_tol;

    f_new = obj.eval(v_new, &g_new);
    std::vector<double> s(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      s[k] = v_new[k] - v[k];
      y[k] = g_new[k] - g[k];
    }
    const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
    if (sy > 1e-30) {
      history.emplace_back(std::move(s), std::move(y));
      if (history.size() > 8) history.pop_front();
    }
    v = std::move(v_new);
    g = g_new;
    f = f_new;
  }
  return f <= loss_tol;
}

// Sup estimate including endpoints and Chebyshev extrema, for headroom
// rescaling.
double dense_sup_abs(const ChebyshevSeries& s) {
  const std::size_t n = 8193;
  double m = grid::max_abs(n, [&](std::size_t i) {
    return cheb_eval(s, grid::unit_interval_node(i, n));
  });
  const std::size_t nc = 4097;
  m = std::max(m, grid::max_abs(nc, [&](std::size_t i) {
                 return cheb_eval(s, std::cos(M_PI * static_cast<double>(i) /
                                              static_cast<double>(nc - 1)));
               }));
  return m;
}

cdouble minus_i_pow(int d) {
  switch (((d % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

}  // namespace

Matrix2 qsp_unitary(const std::vector<double>& phases, double x) {
  if (phases.empty()) throw parameter_error("qsp_unitary: empty phase vector");
  if (!(x >= -1.0 && x <= 1.0))
    throw std::domain_error("qsp_unitary: x outside [-1,1]");
  Matrix2 u = phase_z(phases[0]);
  const Matrix2 w = signal_w(x);
  for (std::size_t j = 1; j < phases.size(); ++j) u = u * w * phase_z(phases[j]);
  return u;
}

double qsp_reconstruction_residual(const std::vector<double>& phases,
                                   const ChebyshevSeries& scaled_target,
                                   int nodes) {
  return grid::max_abs(nodes, [&](std::size_t i) {
    const double x =
        std::cos(M_PI * static_cast<double>(i) / static_cast<double>(nodes - 1));
    return qsp_value_and_grad(phases, x, nullptr) - cheb_eval(scaled_target, x);
  });
}

PhaseProgram find_qsp_phases(const ChebyshevSeries& target, double tol) {
  if (!(tol > 0.0)) throw parameter_error("find_qsp_phases: tol must be > 0");
  const Parity parity = target.parity();
  if (parity == Parity::mixed)
    throw usage_error("find_qsp_phases: target has mixed parity; split upstream");

  const int d = target.degree();
  const double sup = dense_sup_abs(target);
  const double s = sup > 0.0 ? std::min(1.0, (1.0 - kHeadroom) / sup) : 1.0;
  const ChebyshevSeries scaled = cheb_scale(target, s);

  const int m = d / 2 + 1;  // free symmetric phases == parity-distinct coeffs
  SymmetricObjective obj;
  obj.d = d;
  for (int k = 1; k <= m; ++k) {
    const double x = std::cos((2.0 * k - 1.0) * M_PI / (4.0 * m));
    obj.nodes.push_back(x);
    obj.targets.push_back(cheb_eval(scaled, x));
  }

  const double loss_tol =
      std::pow(std::max(1e-13, 1e-3 * tol), 2.0) * static_cast<double>(m);
  const int max_iter = 10 * d * d + 500;

  std::vector<double> best_phases;
  double best_residual = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(0x5eedULL);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<double> v(m, 0.0);
    v[0] = M_PI / 4.0;
    if (d == 0) v[0] = 0.0;
    if (attempt > 0) {
      std::normal_distribution<double> jitter(0.0, 0.02 * attempt);
      for (double& vi : v) vi += jitter(rng);
    }
    lbfgs_minimize(obj, v, loss_tol, max_iter);
    std::vector<double> phases = obj.expand(v);
    for (double& p : phases) p = wrap_phase(p);
    const double residual = qsp_reconstruction_residual(phases, scaled);
    if (residual < best_residual) {
      best_residual = residual;
      best_phases = phases;
    }
    if (best_residual <= tol) break;
  }
  if (!(best_residual <= tol))
    throw solver_error("find_qsp_phases failed to certify the target", best_residual);

  PhaseProgram program;
  program.kind = PhaseKind::qsp_real;
  program.phases = std::move(best_phases);
  program.conjugate_phases.resize(d + 1);
  for (int j = 0; j <= d; ++j)
    program.conjugate_phases[j] =
        -program.phases[j] + M_PI * (1.0 - (j == d ? 1.0 : 0.0));
  program.scale = s;
  program.residual = best_residual;
  program.parity = parity;
  return program;
}

Matrix real_qsp_circuit(const PhaseProgram& program, const BlockEncoding& be) {
  if (program.kind != PhaseKind::qsp_real)
    throw usage_error("real_qsp_circuit needs a qsp-real program");
  const int d = static_cast<int>(program.phases.size()) - 1;
  const int m = be.ancillas;
  const int n = be.qubits;
  if (1 + m + n > 15)
    throw parameter_error("real_qsp_circuit: dimension overflow (1+M+N > 15)");

  const Eigen::Index sub = Eigen::Index(1) << (m + n);
  const Eigen::Index sys = Eigen::Index(1) << n;

  // phi_j -> varphi_j: +pi/4 at both ends, +pi/2 in between (degenerating
  // to +0 when d = 0 so the accumulated i^d bookkeeping stays consistent).
  std::vector<double> varphi(d + 1);
  for (int j = 0; j <= d; ++j) {
    double shift = M_PI / 2.0;
    if (j == 0) shift -= M_PI / 4.0;
    if (j == d) shift -= M_PI / 4.0;
    varphi[j] = program.phases[j] + shift;
  }

  // The circuit acts on top (x) anc (x) sys; track the four top-indexed
  // blocks of the accumulated unitary.
  Matrix c00 = Matrix::Identity(sub, sub), c01 = Matrix::Zero(sub, sub);
  Matrix c10 = Matrix::Zero(sub, sub), c11 = Matrix::Identity(sub, sub);

  const auto apply_hadamard = [&] {
    const double inv = 1.0 / std::sqrt(2.0);
    Matrix t00 = inv * (c00 + c10), t01 = inv * (c01 + c11);
    Matrix t10 = inv * (c00 - c10), t11 = inv * (c01 - c11);
    c00 = std::move(t00); c01 = std::move(t01);
    c10 = std::move(t10); c11 = std::move(t11);
  };
  const auto apply_gadget = [&](double phi) {
    // e^{i phi sigma_z (x) U_Pi}: diagonal phases by (top, anc == 0).
    Vector plus(sub), minus(sub);
    for (Eigen::Index i = 0; i < sub; ++i) {
      const bool anc_zero = (i / sys) == 0;
      plus(i) = std::polar(1.0, anc_zero ? phi : -phi);
      minus(i) = std::conj(plus(i));
    }
    c00 = plus.asDiagonal() * c00;
    c01 = plus.asDiagonal() * c01;
    c10 = minus.asDiagonal() * c10;
    c11 = minus.asDiagonal() * c11;
  };
  const auto apply_block_encoding = [&] {
    c00 = be.unitary * c00;
    c01 = be.unitary * c01;
    c10 = be.unitary * c10;
    c11 = be.unitary * c11;
  };
  const auto apply_z = [&] {
    c10 = -c10;
    c11 = -c11;
  };

  apply_hadamard();
  apply_gadget(varphi[d]);
  for (int j = d - 1; j >= 0; --j) {
    apply_block_encoding();
    apply_z();
    apply_gadget(varphi[j]);
  }
  apply_hadamard();

  const cdouble global = minus_i_pow(d);
  Matrix full(2 * sub, 2 * sub);
  full.topLeftCorner(sub, sub) = global * c00;
  full.topRightCorner(sub, sub) = global * c01;
  full.bottomLeftCorner(sub, sub) = global * c10;
  full.bottomRightCorner(sub, sub) = global * c11;
  return full;
}

double completeness_defect(const LaurentPoly& l, const LaurentPoly& k,
                           int grid_points) {
  return grid::max_abs(grid_points, [&](std::size_t i) {
    const double theta = grid::circle_node(i, grid_points);
    return std::norm(laurent_eval(l, theta)) + std::norm(laurent_eval(k, theta)) -
           1.0;
  });
}

namespace {

// Leja ordering: repeatedly pick the root maximizing the product of
// distances to those already placed; tames coefficient growth when
// rebuilding a polynomial from its roots.
std::vector<cdouble> leja_order(std::vector<cdouble> roots) {
  if (roots.empty()) return roots;
  std::vector<cdouble> out;
  out.reserve(roots.size());
  std::size_t pick = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i]) > std::abs(roots[pick])) pick = i;
  out.push_back(roots[pick]);
  roots.erase(roots.begin() + pick);
  std::vector<double> logdist(roots.size(), 0.0);
  while (!roots.empty()) {
    for (std::size_t i = 0; i < roots.size(); ++i)
      logdist[i] += std::log(std::max(1e-300, std::abs(roots[i] - out.back())));
    pick = 0;
    for (std::size_t i = 1; i < roots.size(); ++i)
      if (logdist[i] > logdist[pick]) pick = i;
    out.push_back(roots[pick]);
    roots.erase(roots.begin() + pick);
    logdist.erase(logdist.begin() + pick);
  }
  return out;
}

std::vector<cdouble> poly_from_roots(const std::vector<cdouble>& roots) {
  std::vector<cdouble> coeffs{cdouble(1.0, 0.0)};
  for (const cdouble& r : roots) {
    std::vector<cdouble> next(coeffs.size() + 1, cdouble(0.0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;  // ascending powers, monic
}

cdouble eval_poly(const std::vector<cdouble>& coeffs, cdouble w) {
  cdouble v(0.0);
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * w + coeffs[i];
  return v;
}

// In-place radix-2 FFT, sign = -1 forward / +1 inverse (unscaled).
void fft_radix2(std::vector<cdouble>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    const cdouble wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cdouble w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cdouble u = a[i + j];
        const cdouble v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Route 1: roots of the associated ordinary polynomial A(w) = w^df F(w),
// one representative per (rho, 1/conj(rho)) pair. Returns the monic factor
// coefficients (ascending, length df+1).
std::vector<cdouble> spectral_factor_roots(const std::vector<cdouble>& f,
                                           int df_full, int df) {
  const int deg = 2 * df;
  const cdouble lead = f[df_full + df];
  Matrix companion = Matrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i)
    companion(i, deg - 1) = -f[df_full + i - df] / lead;
  Eigen::ComplexEigenSolver<Matrix> es(companion, false);
  if (es.info() != Eigen::Success)
    throw solver_error("complementary_poly: companion eigensolve failed", 1.0);

  std::vector<cdouble> all_roots(deg);
  for (Eigen::Index i = 0; i < deg; ++i) all_roots[i] = es.eigenvalues()(i);

  std::vector<cdouble> inside, band;
  for (const cdouble& rho : all_roots) {
    const double r = std::abs(rho);
    if (r < 1.0 - 1e-7)
      inside.push_back(rho);
    else if (r <= 1.0 + 1e-7)
      band.push_back(rho);
  }
  // Roots grazing the circle come in even clusters (F >= 0 forces even
  // multiplicity there). A double root splits symmetrically under rounding,
  // so the geometric mean of each angular pair recovers it to full
  // precision; project it back onto the circle.
  if (!band.empty() && band.size() % 2 == 0) {
    std::sort(band.begin(), band.end(), [](cdouble a, cdouble b) {
      return std::arg(a) < std::arg(b);
    });
    const std::size_t nb = band.size();
    std::size_t start = 0;
    double widest = -1.0;
    for (std::size_t i = 0; i < nb; ++i) {
      double gap = std::arg(band[(i + 1) % nb]) - std::arg(band[i]);
      if (gap < 0.0) gap += 2.0 * M_PI;
      if (gap > widest) {
        widest = gap;
        start = (i + 1) % nb;
      }
    }
    for (std::size_t i = 0; i < nb; i += 2) {
      const cdouble a = band[(start + i) % nb];
      const cdouble b = band[(start + i + 1) % nb];
      cdouble m = std::sqrt(a * b);
      if ((std::conj(m) * a).real() < 0.0) m = -m;
      inside.push_back(m / std::abs(m));
    }
  }
  if (static_cast<int>(inside.size()) != df) {
    // The roots pair as (rho, 1/conj(rho)), so the df smallest moduli
    // contain exactly one representative per pair.
    std::sort(all_roots.begin(), all_roots.end(), [](cdouble a, cdouble b) {
      return std::abs(a) < std::abs(b);
    });
    inside.assign(all_roots.begin(), all_roots.begin() + df);
    for (cdouble& rho : inside)
      if (std::abs(std::abs(rho) - 1.0) <= 1e-7) rho /= std::abs(rho);
  }
  return poly_from_roots(leja_order(inside));
}

// Route 2: cepstral minimum-phase factorization, log Q = (log F)_analytic.
// Needs F strictly positive on the circle; superior to the root route when
// F's coefficient range makes the companion matrix ill-conditioned.
std::vector<cdouble> spectral_factor_cepstrum(const std::vector<cdouble>& f,
                                              int df_full, int df) {
  std::size_t n = 16384;
  while (n < 64u * static_cast<unsigned>(df)) n <<= 1;
  std::vector<cdouble> work(n);
  double fmin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = 2.0 * M_PI * static_cast<double>(j) / n;
    double val = 0.0;
    for (int k = -df_full; k <= df_full; ++k)
      val += (f[k + df_full] * std::polar(1.0, k * theta)).real();
    fmin = std::min(fmin, val);
    work[j] = cdouble(val, 0.0);
  }
  if (!(fmin > 1e-13)) return {};  // too close to the circle for the log

  for (std::size_t j = 0; j < n; ++j)
    work[j] = cdouble(std::log(work[j].real()), 0.0);
  fft_radix2(work, -1);
  for (cdouble& c : work) c /= static_cast<double>(n);
  // Analytic projection: keep k = 0 halved, 1..n/2-1 whole, rest dropped.
  work[0] *= 0.5;
  work[n / 2] *= 0.5;
  for (std::size_t k = n / 2 + 1; k < n; ++k) work[k] = cdouble(0.0);
  fft_radix2(work, 1);  // values of log Q on the grid
  for (cdouble& v : work) v = std::exp(v);
  fft_radix2(work, -1);
  std::vector<cdouble> q(df + 1);
  for (int k = 0; k <= df; ++k) q[k] = work[k] / static_cast<double>(n);
  return q;
}

}  // namespace

LaurentPoly complementary_poly(const LaurentPoly& l) {
  const double sup = sup_abs(l, 4096);
  if (sup > 1.0 + 1e-12)
    throw parameter_error("complementary_poly: sup |L| exceeds 1; rescale upstream");
  if (l.is_zero()) return LaurentPoly::from_terms({{0, cdouble(1.0, 0.0)}});

  // F(z) = 1 - L(z) conj(L)(1/z): Hermitian, nonnegative on the circle.
  const int dl = l.degree();
  std::vector<cdouble> reflected(2 * dl + 1);
  for (int k = -dl; k <= dl; ++k) reflected[k + dl] = std::conj(l.coeff(-k));
  const LaurentPoly ll = laurent_mul(l, LaurentPoly(std::move(reflected)));
  const int df_full = ll.degree();
  std::vector<cdouble> f(2 * df_full + 1);
  for (int k = -df_full; k <= df_full; ++k) f[k + df_full] = -ll.coeff(k);
  f[df_full] += 1.0;

  double fmax = 0.0;
  for (const cdouble& c : f) fmax = std::max(fmax, std::abs(c));
  if (fmax <= 1e-13) return LaurentPoly();  // |L| == 1 on the circle, K = 0

  int df = df_full;
  while (df > 0 && std::abs(f[df_full + df]) <= 3e-16 * fmax) --df;

  // Parity of L's support, for aligning K's support with it.
  bool has_even = false, has_odd = false;
  for (int k = -dl; k <= dl; ++k)
    if (l.coeff(k) != cdouble(0.0)) (std::abs(k) % 2 == 0 ? has_even : has_odd) = true;
  const int target_parity = (has_even && has_odd) ? -1 : (has_odd ? 1 : 0);

  // Turns ascending factor coefficients q (length df+1) into a Laurent
  // candidate: normalize |K|^2 = F on the circle, center the support,
  // align its parity with L's, rotate the leading coefficient real
  // positive, and chop rounding-level imaginary residue.
  const auto finish = [&](std::vector<cdouble> q) {
    double log_c = 0.0;
    const int probes = 16;
    for (int i = 0; i < probes; ++i) {
      const double theta = 2.0 * M_PI * (i + 0.37) / probes;
      const cdouble z = std::polar(1.0, theta);
      double fval = 0.0;
      for (int kk = -df_full; kk <= df_full; ++kk)
        fval += (f[kk + df_full] * std::polar(1.0, kk * theta)).real();
      log_c += std::log(std::max(fval, 1e-300)) -
               2.0 * std::log(std::max(std::abs(eval_poly(q, z)), 1e-300));
    }
    const double scale = std::exp(0.5 * log_c / probes);

    int shift = df / 2;
    if (target_parity >= 0 && ((df - shift) % 2 + 2) % 2 != target_parity % 2)
      shift -= 1;
    std::vector<std::pair<int, cdouble>> terms;
    for (int i = 0; i <= df; ++i) terms.push_back({i - shift, scale * q[i]});
    LaurentPoly candidate = LaurentPoly::from_terms(terms);
    {
      // The declared factor degree can exceed the meaningful one, leaving
      // rounding-noise top coefficients whose arbitrary phase would poison
      // the normalization below; chop them first.
      double cmax = 0.0;
      for (const cdouble& c : candidate.coeffs()) cmax = std::max(cmax, std::abs(c));
      std::vector<cdouble> chopped = candidate.coeffs();
      for (cdouble& c : chopped)
        if (std::abs(c) <= 1e-12 * cmax) c = cdouble(0.0);
      candidate = LaurentPoly(std::move(chopped));
    }
    if (target_parity >= 0) {
      // Rounding leaks rounding-level coefficients onto the wrong parity;
      // the exact complement is parity-pure, so project.
      std::vector<cdouble> projected = candidate.coeffs();
      const int dk = candidate.degree();
      for (int kk = -dk; kk <= dk; ++kk)
        if (std::abs(kk) % 2 != target_parity) projected[kk + dk] = cdouble(0.0);
      candidate = LaurentPoly(std::move(projected));
    }
    cdouble lead_k = candidate.coeff(candidate.degree());
    if (lead_k == cdouble(0.0)) lead_k = candidate.coeff(-candidate.degree());
    if (lead_k != cdouble(0.0))
      candidate = laurent_scale(candidate, std::conj(lead_k) / std::abs(lead_k));
    // A real-coefficient L has a real complement, so project out the
    // imaginary residue; the defect certificate below re-checks the result.
    if (laurent_has_real_coeffs(l, 0.0)) {
      std::vector<cdouble> cleaned = candidate.coeffs();
      for (cdouble& c : cleaned) c = cdouble(c.real(), 0.0);
      candidate = LaurentPoly(std::move(cleaned));
    }
    return candidate;
  };

  if (df == 0) {
    const double mag = std::sqrt(std::max(0.0, f[df_full].real()));
    const int shift = target_parity == 1 ? 1 : 0;
    return LaurentPoly::from_terms({{shift, cdouble(mag, 0.0)}});
  }

  // Root-based factorization first; when the companion matrix is too badly
  // balanced to certify (F strictly positive but with a wide coefficient
  // range), fall back to the cepstral minimum-phase factor.
  LaurentPoly best;
  double best_defect = std::numeric_limits<double>::infinity();
  const LaurentPoly via_roots = finish(spectral_factor_roots(f, df_full, df));
  best_defect = completeness_defect(l, via_roots);
  best = via_roots;
  if (!(best_defect <= 1e-9)) {
    const std::vector<cdouble> q = spectral_factor_cepstrum(f, df_full, df);
    if (!q.empty()) {
      const LaurentPoly via_cepstrum = finish(q);
      const double defect = completeness_defect(l, via_cepstrum);
      if (defect < best_defect) {
        best_defect = defect;
        best = via_cepstrum;
      }
    }
  }
  if (!(best_defect <= 1e-9))
    throw solver_error("complementary_poly: completeness identity not certified",
                       best_defect);
  return best;
}

namespace {

// Top-left entry of the GQSP product at z = e^{i theta_z} together with its
// gradient in the angles, via prefix rows and suffix columns. Uses
// dR/dtheta = R(theta + pi/2).
cdouble gqsp_value_and_grad(const std::vector<double>& thetas, double theta_z,
                            std::vector<cdouble>* grad) {
  const int n = static_cast<int>(thetas.size());
  const cdouble z = std::polar(1.0, theta_z);
  const cdouble zi = std::conj(z);
  const auto rot = [](double t) {
    Matrix2 r;
    r << cdouble(std::cos(t), 0.0), cdouble(0.0, std::sin(t)),
        cdouble(0.0, std::sin(t)), cdouble(std::cos(t), 0.0);
    return r;
  };
  const auto factor = [&](int j, double t) {
    Matrix2 g = rot(t);
    if (j > 0) {
      g.row(0) *= z;
      g.row(1) *= zi;
    }
    return g;
  };

  std::vector<Eigen::Vector2cd> suffix(n);
  suffix[n - 1] = Eigen::Vector2cd(1.0, 0.0);
  for (int j = n - 1; j >= 1; --j)
    suffix[j - 1] = factor(j, thetas[j]) * suffix[j];
  const cdouble value =
      (Eigen::RowVector2cd(1.0, 0.0) * factor(0, thetas[0]) * suffix[0])(0);
  if (grad) {
    grad->assign(n, cdouble(0.0));
    Eigen::RowVector2cd row(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
      (*grad)[j] = (row * factor(j, thetas[j] + M_PI / 2.0) * suffix[j])(0);
      row = row * factor(j, thetas[j]);
    }
  }
  return value;
}

// Gauss-Newton polish of the angles against the target; the peeling
// recursion's systematic error grows with the degree, and a few damped
// least-squares steps on a theta grid recover it.
void refine_gqsp_angles(std::vector<double>& thetas, const LaurentPoly& target) {
  const int n = static_cast<int>(thetas.size());
  const int grid_n = std::max(64, 4 * n);
  std::vector<double> nodes(grid_n);
  std::vector<cdouble> wanted(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    nodes[i] = 2.0 * M_PI * (i + 0.5) / grid_n;
    wanted[i] = laurent_eval(target, nodes[i]);
  }

  const auto sum_squares = [&](const std::vector<double>& t) {
    double ss = 0.0;
    for (int i = 0; i < grid_n; ++i)
      ss += std::norm(gqsp_value_and_grad(t, nodes[i], nullptr) - wanted[i]);
    return ss;
  };

  std::vector<cdouble> grad;
  double ss = sum_squares(thetas);
  double lambda = 1e-10;
  for (int iter = 0; iter < 40 && ss > 1e-28 * grid_n; ++iter) {
    Eigen::MatrixXd jtj = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd jtr = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < grid_n; ++i) {
      const cdouble r = gqsp_value_and_grad(thetas, nodes[i], &grad) - wanted[i];
      for (int a = 0; a < n; ++a) {
        jtr(a) += grad[a].real() * r.real() + grad[a].imag() * r.imag();
        for (int b = a; b < n; ++b)
          jtj(a, b) += grad[a].real() * grad[b].real() +
                       grad[a].imag() * grad[b].imag();
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < a; ++b) jtj(a, b) = jtj(b, a);
    const double scale_diag = 1.0 + jtj.diagonal().maxCoeff();

    bool moved = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += lambda * scale_diag;
      const Eigen::VectorXd step = damped.ldlt().solve(jtr);
      if (!step.allFinite()) break;
      std::vector<double> trial = thetas;
      for (int a = 0; a < n; ++a) trial[a] -= step(a);
      const double trial_ss = sum_squares(trial);
      if (trial_ss < ss) {
        thetas = std::move(trial);
        ss = trial_ss;
        lambda = std::max(1e-14, lambda * 0.25);
        moved = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!moved) break;
  }
}

}  // namespace

cdouble gqsp_scalar_top_left(const std::vector<double>& thetas, double theta) {
  const cdouble z = std::polar(1.0, theta);
  const cdouble zi = std::conj(z);
  Matrix2 m;
  {
    const double c = std::cos(thetas[0]), s = std::sin(thetas[0]);
    m << cdouble(c, 0.0), cdouble(0.0, s), cdouble(0.0, s), cdouble(c, 0.0);
  }
  for (std::size_t j = 1; j < thetas.size(); ++j) {
    const double c = std::cos(thetas[j]), s = std::sin(thetas[j]);
    Matrix2 ar;
    ar << z * c, z * cdouble(0.0, s), zi * cdouble(0.0, s), zi * c;
    m = m * ar;
  }
  return m(0, 0);
}

double gqsp_reconstruction_residual(const std::vector<double>& thetas,
                                    const LaurentPoly& target, int grid_points) {
  return grid::max_abs(grid_points, [&](std::size_t i) {
    const double theta = grid::circle_node(i, grid_points);
    return std::abs(gqsp_scalar_top_left(thetas, theta) -
                    laurent_eval(target, theta));
  });
}

PhaseProgram find_gqsp_angles(const LaurentPoly& l, const LaurentPoly& k) {
  const double defect = completeness_defect(l, k);
  if (!(defect <= 1e-9))
    throw parameter_error("find_gqsp_angles: (L, K) violate |L|^2+|K|^2=1");
  const double scale_l = std::max(1.0, l.l1_norm() + k.l1_norm());
  if (!laurent_has_real_coeffs(l, 1e-11 * scale_l) ||
      !laurent_has_real_coeffs(k, 1e-11 * scale_l))
    throw usage_error("find_gqsp_angles: coefficients must be real");

  const int d_nominal = std::max(l.degree(), k.degree());
  // The ceiling-rule degrees can overshoot the numerically meaningful
  // support by dozens of indices whose coefficients sit at rounding level;
  // peeling those layers would set angles from noise ratios. Chop them:
  // the reconstruction certificate below still measures against the full
  // input, and the chop contributes only ~1e-13 * mass to it.
  double cmax = 0.0;
  for (int j = -d_nominal; j <= d_nominal; ++j)
    cmax = std::max({cmax, std::abs(l.coeff(j)), std::abs(k.coeff(j))});
  const double chop = 1e-13 * cmax;
  int d = 0;
  for (int j = -d_nominal; j <= d_nominal; ++j)
    if (std::abs(l.coeff(j)) > chop || std::abs(k.coeff(j)) > chop)
      d = std::max(d, std::abs(j));
  const int off = d;
  std::vector<double> l0(2 * d + 1, 0.0), k0(2 * d + 1, 0.0);
  for (int j = -d; j <= d; ++j) {
    l0[j + off] = std::abs(l.coeff(j)) > chop ? l.coeff(j).real() : 0.0;
    k0[j + off] = std::abs(k.coeff(j)) > chop ? k.coeff(j).real() : 0.0;
  }

  // The product form only reaches supports of parity d mod 2.
  const double support_tol = 1e-11 * scale_l;
  for (int j = -d; j <= d; ++j)
    if ((std::abs(j) % 2) != (d % 2) &&
        (std::abs(l0[j + off]) > support_tol || std::abs(k0[j + off]) > support_tol))
      throw usage_error(
          "find_gqsp_angles: parity-mixed Laurent target; split even/odd upstream");

  std::vector<double> best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 2; ++attempt) {
    // The peeling recursion compounds rounding over d layers; extended
    // precision keeps the compounded error well under the certificate.
    std::vector<long double> lv(l0.begin(), l0.end());
    std::vector<long double> kv(k0.begin(), k0.end());
    if (attempt == 1) {
      std::mt19937_64 rng(0x6a17ULL);
      std::normal_distribution<double> jitter(0.0, 1e-12);
      for (long double& x : lv) x += jitter(rng);
      for (long double& x : kv) x += jitter(rng);
    }
    std::vector<double> thetas(d + 1, 0.0);
    bool broke = false;
    for (int step = d; step >= 1; --step) {
      const long double lp = lv[off + step], kp = kv[off + step];
      const long double lm = lv[off - step], km = kv[off - step];
      const long double np = std::hypot(lp, kp), nm = std::hypot(lm, km);
      if (np < 1e-300L && nm < 1e-300L) {
        broke = true;
        break;
      }
      const long double theta =
          np >= nm ? std::atan2(kp, lp) : std::atan2(-lm, km);
      const long double c = std::cos(theta), s = std::sin(theta);
      std::vector<long double> ln(2 * d + 1, 0.0L), kn(2 * d + 1, 0.0L);
      for (int j = -(step - 1); j <= step - 1; ++j) {
        ln[j + off] = c * lv[j + 1 + off] + s * kv[j + 1 + off];
        kn[j + off] = c * kv[j - 1 + off] - s * lv[j - 1 + off];
      }
      lv = std::move(ln);
      kv = std::move(kn);
      thetas[step] = static_cast<double>(theta);
    }
    if (broke) continue;
    thetas[0] = static_cast<double>(
        std::atan2(static_cast<long double>(kv[off]), static_cast<long double>(lv[off])));
    for (double& t : thetas) t = wrap_phase(t);
    double residual = gqsp_reconstruction_residual(thetas, l);
    if (residual > 1e-10) {
      refine_gqsp_angles(thetas, l);
      for (double& t : thetas) t = wrap_phase(t);
      residual = gqsp_reconstruction_residual(thetas, l);
    }
    if (residual < best_residual) {
      best_residual = residual;
      best = thetas;
    }
    if (best_residual <= 1e-8) break;
  }
  if (best.empty())
    throw solver_error("find_gqsp_angles: recursion breakdown", best_residual);
  if (!(best_residual <= 1e-8))
    throw solver_error("find_gqsp_angles: reconstruction not certified",
                       best_residual);

  PhaseProgram program;
  program.kind = PhaseKind::gqsp_laurent;
  program.phases = std::move(best);
  program.scale = 1.0;
  program.residual = best_residual;
  program.parity = d % 2 == 0 ? Parity::even : Parity::odd;
  return program;
}

Matrix gqsp_circuit(const PhaseProgram& program, const Matrix& u) {
  if (program.kind != PhaseKind::gqsp_laurent)
    throw usage_error("gqsp_circuit needs a gqsp-laurent program");
  if (unitarity_defect(u) > 1e-10)
    throw parameter_error("gqsp_circuit: signal operator is not unitary");
  const int d = static_cast<int>(program.phases.size()) - 1;
  const Eigen::Index sub = u.rows();
  const Matrix udag = u.adjoint();

  Matrix c00 = Matrix::Identity(sub, sub), c01 = Matrix::Zero(sub, sub);
  Matrix c10 = Matrix::Zero(sub, sub), c11 = Matrix::Identity(sub, sub);

  const auto apply_rotation = [&](double theta) {
    const double c = std::cos(theta);
    const cdouble is(0.0, std::sin(theta));
    Matrix t00 = c * c00 + is * c10, t01 = c * c01 + is * c11;
    Matrix t10 = is * c00 + c * c10, t11 = is * c01 + c * c11;
    c00 = std::move(t00); c01 = std::move(t01);
    c10 = std::move(t10); c11 = std::move(t11);
  };
  const auto apply_signal = [&] {
    c00 = u * c00;
    c01 = u * c01;
    c10 = udag * c10;
    c11 = udag * c11;
  };

  apply_rotation(program.phases[d]);
  for (int j = d - 1; j >= 0; --j) {
    apply_signal();
    apply_rotation(program.phases[j]);
  }

  Matrix full(2 * sub, 2 * sub);
  full.topLeftCorner(sub, sub) = c00;
  full.topRightCorner(sub, sub) = c01;
  full.bottomLeftCorner(sub, sub) = c10;
  full.bottomRightCorner(sub, sub) = c11;
  return full;
}

}  // namespace hamshallow
