#pragma once

#include <complex>

namespace ghp {

using real_t = long double;
using cplx = std::complex<long double>;

/// Carlson symmetric forms for complex arguments (principal branches).
/// Arguments must avoid the negative real axis; at most one of x, y, z zero.
cplx carlson_rf(cplx x, cplx y, cplx z);
cplx carlson_rc(cplx x, cplx y);
cplx carlson_rd(cplx x, cplx y, cplx z);
/// Requires Re p > 0 (duplication validity); callers route other cases
/// through complete_Pi which falls back to direct quadrature.
cplx carlson_rj(cplx x, cplx y, cplx z, cplx p);

/// Complete elliptic integrals, parameter convention m = k^2.
cplx complete_K(cplx m);
cplx complete_E(cplx m);

/// Principal-branch complete third kind. For real characteristic n in (1,oo),
/// returns the limit from Im n -> 0^- (Cauchy principal value minus the half
/// residue), which is the branch the Appendix correction is built on.
cplx complete_Pi(cplx n, cplx m);

/// Pi(n2, m) made analytic in n2 across a neighborhood of (1,oo):
/// principal branch for Im n2 > 0, otherwise principal plus
/// i pi / sqrt((n2-1)(1-m/n2)).
cplx pi_branch_corrected(cplx n2, cplx m);

} // namespace ghp
