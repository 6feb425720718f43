# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: polylogarithm partial sums and GK21 quadrature of the
PEMC force integrand.  Interface identical to ``_kernels_py``."""

from libc.math cimport exp, expm1, log, cos, sin, fabs, pow
from libc.stdlib cimport malloc, free

import numpy as np

cdef double[11] XGK = [
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
]
cdef double[11] WGK = [
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
]
cdef double[5] WG = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
]


cdef inline void _neumaier(double *s, double *c, double v) nogil:
    cdef double t = s[0] + v
    if fabs(s[0]) >= fabs(v):
        c[0] += (s[0] - t) + v
    else:
        c[0] += (v - t) + s[0]
    s[0] = t


def li_partial_sum(int n, double r, double phi, long K):
    cdef double sre = 0.0, cre = 0.0, sim = 0.0, cim = 0.0
    cdef double mag, ang, logr
    cdef long k
    if K <= 0 or r == 0.0:
        return 0.0, 0.0
    logr = log(r) if r != 1.0 else 0.0
    with nogil:
        k = K
        while k >= 1:
            if r == 1.0:
                mag = pow(<double>k, -n)
            else:
                mag = exp(k * logr - n * log(<double>k))
            ang = k * phi
            _neumaier(&sre, &cre, mag * cos(ang))
            _neumaier(&sim, &cim, mag * sin(ang))
            k -= 1
    return sre + cre, sim + cim


cdef inline double _integrand(double x, double s2) nogil:
    cdef double u, w
    if x <= 0.0:
        return 0.0
    u = exp(-2.0 * x)
    w = -expm1(-2.0 * x)
    return x * x * x * u * (w - 2.0 * s2) / (w * w + 4.0 * u * s2)


def force_integrand(x, double delta):
    cdef double s2 = sin(delta) ** 2
    cdef double[::1] src
    cdef double[::1] dst
    cdef Py_ssize_t i
    if not isinstance(x, np.ndarray):
        return _integrand(x, s2)
    arr = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(arr)
    src = arr.reshape(-1)
    dst = out.reshape(-1)
    for i in range(src.shape[0]):
        dst[i] = _integrand(src[i], s2)
    return out if out.ndim else float(out)


cdef void _gk21(double s2, double a, double b, double *res, double *err) nogil:
    cdef double centre = 0.5 * (a + b)
    cdef double half = 0.5 * (b - a)
    cdef double fc = _integrand(centre, s2)
    cdef double kron = WGK[10] * fc
    cdef double gauss = 0.0
    cdef double f1, f2
    cdef int j
    for j in range(10):
        f1 = _integrand(centre - half * XGK[j], s2)
        f2 = _integrand(centre + half * XGK[j], s2)
        kron += WGK[j] * (f1 + f2)
        if j % 2 == 1:
            gauss += WG[j // 2] * (f1 + f2)
    res[0] = half * kron
    err[0] = fabs(half * (kron - gauss))


def integrate_force(double delta, double a, double b, double epsabs,
                    double epsrel, int limit):
    cdef double s2 = sin(delta) ** 2
    cdef double *lo
    cdef double *hi
    cdef double *vals
    cdef double *errs
    cdef double total, total_err, ct, ce, mid, emax
    cdef int n = 1, i, j, imax
    cdef bint converged = False
    if a == b:
        return 0.0, 0.0, 0, True
    if limit < 1:
        limit = 1
    lo = <double *> malloc(limit * sizeof(double))
    hi = <double *> malloc(limit * sizeof(double))
    vals = <double *> malloc(limit * sizeof(double))
    errs = <double *> malloc(limit * sizeof(double))
    if lo == NULL or hi == NULL or vals == NULL or errs == NULL:
        free(lo); free(hi); free(vals); free(errs)
        raise MemoryError()
    try:
        with nogil:
            lo[0] = a
            hi[0] = b
            _gk21(s2, a, b, &vals[0], &errs[0])
            while True:
                total = 0.0; ct = 0.0; total_err = 0.0; ce = 0.0
                for j in range(n):
                    _neumaier(&total, &ct, vals[j])
                    _neumaier(&total_err, &ce, errs[j])
                total += ct
                total_err += ce
                if total_err <= epsabs or total_err <= epsrel * fabs(total):
                    converged = True
                    break
                if n >= limit:
                    break
                imax = 0
                emax = errs[0]
                for i in range(1, n):
                    if errs[i] > emax:
                        emax = errs[i]
                        imax = i
                mid = 0.5 * (lo[imax] + hi[imax])
                lo[n] = mid
                hi[n] = hi[imax]
                _gk21(s2, mid, hi[imax], &vals[n], &errs[n])
                hi[imax] = mid
                _gk21(s2, lo[imax], mid, &vals[imax], &errs[imax])
                n += 1
        return total, total_err, n, converged
    finally:
        free(lo); free(hi); free(vals); free(errs)
