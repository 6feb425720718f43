"""Pure-Python/numpy implementations of the numerical hot loops.

These mirror ``_ckernels.pyx`` one-to-one and are used whenever the compiled
extension is unavailable (or ``PEMC_CASIMIR_PURE_PYTHON`` is set).
"""

import math

import numpy as np

# Gauss-Kronrod 21-point rule on [-1, 1] (QUADPACK qk21), nonnegative half.
# XGK[1::2] are the 10-point Gauss nodes; XGK[-1] is the centre.
XGK = (
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
)
WGK = (
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
)
WG = (
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
)

# full 21-node layout, ordered left to right
_NODES = np.array([-x for x in XGK[:-1]] + [0.0] + list(XGK[-2::-1]))
_KWEIGHTS = np.array(list(WGK[:-1]) + [WGK[-1]] + list(WGK[-2::-1]))
_GWEIGHTS = np.zeros(21)
for _i, _w in enumerate(WG):
    _GWEIGHTS[2 * _i + 1] = _w
    _GWEIGHTS[19 - 2 * _i] = _w


def li_partial_sum(n, r, phi, K):
    """Return (re, im) of sum_{k=1}^{K} r**k exp(i k phi) / k**n."""
    if K <= 0 or r == 0.0:
        return 0.0, 0.0
    k = np.arange(K, 0, -1, dtype=np.float64)
    if r == 1.0:
        mag = k ** (-n)
    else:
        mag = np.exp(k * math.log(r) - n * np.log(k))
    ang = k * phi
    return math.fsum(mag * np.cos(ang)), math.fsum(mag * np.sin(ang))


def force_integrand(x, delta):
    """x**3 (e^{2x} cos 2d - 1) / (1 - 2 e^{2x} cos 2d + e^{4x}), overflow-free."""
    x = np.asarray(x, dtype=np.float64)
    u = np.exp(-2.0 * x)
    w = -np.expm1(-2.0 * x)
    s2 = math.sin(delta) ** 2
    num = u * (w - 2.0 * s2)
    den = w * w + 4.0 * u * s2
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(x > 0.0, x**3 * num / den, 0.0)
    return out if out.ndim else float(out)


def _gk21(f, a, b):
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fx = np.asarray(f(centre + half * _NODES), dtype=np.float64)
    kron = half * math.fsum(_KWEIGHTS * fx)
    gauss = half * math.fsum(_GWEIGHTS * fx)
    return kron, abs(kron - gauss)


def adaptive_gk(f, a, b, epsabs, epsrel, limit):
    """Globally adaptive GK21 bisection.

    ``f`` maps an array of abscissae to an array of values.  Returns
    ``(result, abserr, nintervals, converged)``; the interval with the
    largest error estimate is split first (lowest index on ties).
    """
    if a == b:
        return 0.0, 0.0, 0, True
    lo = [a]
    hi = [b]
    res, err = _gk21(f, a, b)
    vals = [res]
    errs = [err]
    while True:
        total = math.fsum(vals)
        total_err = math.fsum(errs)
        if total_err <= max(epsabs, epsrel * abs(total)):
            return total, total_err, len(vals), True
        if len(vals) >= limit:
            return total, total_err, len(vals), False
        i = max(range(len(errs)), key=errs.__getitem__)
        mid = 0.5 * (lo[i] + hi[i])
        r1, e1 = _gk21(f, lo[i], mid)
        r2, e2 = _gk21(f, mid, hi[i])
        lo.append(mid)
        hi.append(hi[i])
        vals.append(r2)
        errs.append(e2)
        hi[i] = mid
        vals[i] = r1
        errs[i] = e1


def integrate_force(delta, a, b, epsabs, epsrel, limit):
    """Adaptive GK21 of ``force_integrand(., delta)`` over [a, b]."""
    return adaptive_gk(lambda x: force_integrand(x, delta), a, b, epsabs, epsrel, limit)
