#pragma once

// Voiculescu transforms V(it), t > 0, of the free analogues of classical
// infinitely divisible laws.
//
//   level A:   V(it) = i t^2 int_0^inf conj(log phi(s)) e^{-ts} ds
//   level Z:   V(it) = a + int (1 + itx)/(it - x) m(dx)
//   symmetric: V(it) = -it int (1 + x^2)/(t^2 + x^2) m(dx)
//
// and the background-driving relation V_psi = V_phi - t V_phi'.

#include <complex>
#include <functional>
#include <string>
#include <string_view>

#include "freeid/measures.hpp"
#include "freeid/quad.hpp"

namespace freeid::voiculescu {

using cplx = std::complex<double>;
using measures::KhintchinePair;
using measures::LogCharFn;
using quad::QuadConfig;

enum class Source { LevelA, LevelZ, LevelZSymmetric, Closed, Thm2 };

std::string_view to_string(Source s);

/// t > 0 -> V(it).
struct VoiculescuFn {
  std::function<cplx(double)> eval;
  Source source = Source::Closed;

  cplx operator()(double t) const { return eval(t); }
};

/// Level routes refuse t below this; truncation lengths grow like 1/t.
inline constexpr double kMinT = 1e-3;

cplx level_a(const LogCharFn& phi, double t, const QuadConfig& cfg = {});
cplx level_z(const KhintchinePair& p, double t, const QuadConfig& cfg = {});
/// Requires a = 0 and an even measure; throws PreconditionViolation otherwise.
cplx level_z_symmetric(const KhintchinePair& p, double t, const QuadConfig& cfg = {});

/// Closed-form transforms for the catalog names; see catalog.hpp.
cplx closed_form(std::string_view name, double t);
bool has_closed_form(std::string_view name);

/// V_psi(it) = V(it) - t dV/dt, five-point stencil with relative step h and
/// one Richardson extrapolation.
cplx thm2_forward(const VoiculescuFn& v, double t, double h = 1e-4);

/// V_phi(it) = t V_phi(i) - t int_1^t s^{-2} V_psi(is) ds (oriented for t < 1).
cplx thm2_inverse(const VoiculescuFn& v_psi, cplx v_at_1, double t, const QuadConfig& cfg = {});

struct ExpectationPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of E[(1 - cos(E_t X))(1 + X^2)/X^2] = E[(1 + X^2)/(t^2 + X^2)]
/// for X ~ m and E_t exponential with rate t, each as a deterministic
/// integral against m (unnormalized; both sides are linear in m).
ExpectationPair corollary1_check(const KhintchinePair& p, double t, const QuadConfig& cfg = {});

VoiculescuFn level_a_fn(LogCharFn phi, QuadConfig cfg = {});
VoiculescuFn level_z_fn(KhintchinePair p, QuadConfig cfg = {});
VoiculescuFn level_z_symmetric_fn(KhintchinePair p, QuadConfig cfg = {});
VoiculescuFn closed_fn(std::string name);

}  // namespace freeid::voiculescu
