# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot numerical kernels.

Mirrors ``salemkit.core.pure`` function for function; the dispatcher in
``salemkit.core`` picks this module when it compiled and SALEMKIT_PURE is
not set.  Complex arithmetic is written out over (re, im) pairs so the only
C dependency is libm.
"""

import numpy as np

cimport cython
cimport numpy as cnp
from libc.math cimport atan2, cos, exp, fabs, log, pow, sin, sqrt

cnp.import_array()

IMPL_NAME = "fast"

cdef double TWO_PI = 6.283185307179586476925287
cdef double LOG_SQRT_TWO_PI = 0.91893853320467274178032973640562
cdef double SQRT_TWO_PI = 2.5066282746310005024157652848110

# Bernoulli B_{2k}/(2k)! for k = 1..12
cdef double[12] BERN_OVER_FACT
BERN_OVER_FACT[0] = 1.0 / 6.0 / 2.0
BERN_OVER_FACT[1] = -1.0 / 30.0 / 24.0
BERN_OVER_FACT[2] = 1.0 / 42.0 / 720.0
BERN_OVER_FACT[3] = -1.0 / 30.0 / 40320.0
BERN_OVER_FACT[4] = 5.0 / 66.0 / 3628800.0
BERN_OVER_FACT[5] = -691.0 / 2730.0 / 479001600.0
BERN_OVER_FACT[6] = 7.0 / 6.0 / 87178291200.0
BERN_OVER_FACT[7] = -3617.0 / 510.0 / 20922789888000.0
BERN_OVER_FACT[8] = 43867.0 / 798.0 / 6402373705728000.0
BERN_OVER_FACT[9] = -174611.0 / 330.0 / 2432902008176640000.0
BERN_OVER_FACT[10] = 854513.0 / 138.0 / 1124000727777607680000.0
BERN_OVER_FACT[11] = -236364091.0 / 2730.0 / 620448401733239439360000.0

cdef double LANCZOS_G = 4.7421875
cdef double[15] LCOEF
LCOEF[0] = 0.99999999999999709182
LCOEF[1] = 57.156235665862923517
LCOEF[2] = -59.597960355475491248
LCOEF[3] = 14.136097974741747174
LCOEF[4] = -0.49191381609762019978
LCOEF[5] = 0.33994649984811888699e-4
LCOEF[6] = 0.46523628927048575665e-4
LCOEF[7] = -0.98374475304879564677e-4
LCOEF[8] = 0.15808870322491248884e-3
LCOEF[9] = -0.21026444172410488319e-3
LCOEF[10] = 0.21743961811521264320e-3
LCOEF[11] = -0.16431810653676389022e-3
LCOEF[12] = 0.84418223983852743293e-4
LCOEF[13] = -0.26190838401581408670e-4
LCOEF[14] = 0.36899182659531622704e-5


# ---------------------------------------------------------------------------
# divisor power sums
# ---------------------------------------------------------------------------

def divisor_powers(long nmax, double r):
    """Table of d_r(n) for n = 1..nmax (index 0 unused, kept 0)."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    out_arr = np.zeros(nmax + 1, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef long d, m
    cdef double w
    for d in range(1, nmax + 1):
        w = pow(<double> d, r) if r != 0.0 else 1.0
        for m in range(d, nmax + 1, d):
            out[m] += w
    return out_arr


# ---------------------------------------------------------------------------
# Dirichlet exponential sums
# ---------------------------------------------------------------------------

def dirichlet_exp_sum(coeffs, double x, double tol):
    """Kahan-compensated sum of coeffs[n] e^{-nx}, early exit below tol."""
    coeffs_arr = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef double[::1] c = coeffs_arr
    cdef long nmax = c.shape[0] - 1
    cdef double total = 0.0, comp = 0.0, term, yv, tv
    cdef double ex = exp(-x)
    cdef double cur = 1.0
    cdef long n, used = 0
    for n in range(1, nmax + 1):
        cur *= ex
        if cur == 0.0:
            break
        term = c[n] * cur
        yv = term - comp
        tv = total + yv
        comp = (tv - total) - yv
        total = tv
        used = n
        if term < tol and n > 2:
            break
    return total, used


def dirichlet_exp_sum_many(coeffs, xs, double tol):
    coeffs_arr = np.ascontiguousarray(coeffs, dtype=np.float64)
    xs_arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] c = coeffs_arr
    cdef double[::1] xv = xs_arr
    out_arr = np.zeros(xs_arr.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef long i, n, nmax = c.shape[0] - 1
    cdef double total, comp, term, yv, tv, ex, cur
    for i in range(xv.shape[0]):
        total = 0.0
        comp = 0.0
        ex = exp(-xv[i])
        cur = 1.0
        for n in range(1, nmax + 1):
            cur *= ex
            if cur == 0.0:
                break
            term = c[n] * cur
            yv = term - comp
            tv = total + yv
            comp = (tv - total) - yv
            total = tv
            if term < tol and n > 2:
                break
        out[i] = total
    return out_arr


# ---------------------------------------------------------------------------
# Riemann zeta, Euler-Maclaurin
# ---------------------------------------------------------------------------

@cython.cdivision(True)
cdef inline void _zeta_em_point(double sr, double si, long nd, int kb,
                                double* out_re, double* out_im) nogil:
    cdef double acc_re = 0.0, acc_im = 0.0
    cdef double lg, mag, ph
    cdef long n
    for n in range(1, nd + 1):
        lg = log(<double> n)
        mag = exp(-sr * lg)
        ph = -si * lg
        acc_re += mag * cos(ph)
        acc_im += mag * sin(ph)
    # N^{-s}
    cdef double ln_n = log(<double> nd)
    cdef double pm = exp(-sr * ln_n)
    cdef double pr = pm * cos(-si * ln_n)
    cdef double pi_ = pm * sin(-si * ln_n)
    # + N^{1-s}/(s-1):  N * N^{-s} / (s-1)
    cdef double dr = sr - 1.0, di = si
    cdef double den = dr * dr + di * di
    cdef double nr = nd * pr, ni = nd * pi_
    acc_re += (nr * dr + ni * di) / den
    acc_im += (ni * dr - nr * di) / den
    # - N^{-s}/2
    acc_re -= 0.5 * pr
    acc_im -= 0.5 * pi_
    # Bernoulli tail
    cdef double poch_re = sr, poch_im = si
    cdef double fac_re = pr / nd, fac_im = pi_ / nd  # N^{1-s-2k} at k=1
    cdef double inv_n2 = 1.0 / (<double> nd * <double> nd)
    cdef double tr, ti, ar, ai, br, bi
    cdef int k
    for k in range(1, kb + 1):
        if k > 1:
            # poch *= (s + 2k-3)(s + 2k-2)
            ar = sr + (2 * k - 3); ai = si
            br = poch_re * ar - poch_im * ai
            bi = poch_re * ai + poch_im * ar
            ar = sr + (2 * k - 2)
            poch_re = br * ar - bi * ai
            poch_im = br * ai + bi * ar
            fac_re *= inv_n2
            fac_im *= inv_n2
        tr = fac_re * poch_re - fac_im * poch_im
        ti = fac_re * poch_im + fac_im * poch_re
        acc_re += BERN_OVER_FACT[k - 1] * tr
        acc_im += BERN_OVER_FACT[k - 1] * ti
    out_re[0] = acc_re
    out_im[0] = acc_im


def zeta_em_many(sig, tim, long base_terms, double im_scale, int n_bern):
    sig_arr = np.ascontiguousarray(sig, dtype=np.float64)
    tim_arr = np.ascontiguousarray(tim, dtype=np.float64)
    cdef double[::1] sr = sig_arr
    cdef double[::1] si = tim_arr
    cdef long npts = sr.shape[0]
    out_arr = np.empty(npts, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef long i, nd
    cdef double re, im, need
    for i in range(npts):
        need = im_scale * fabs(si[i])
        nd = base_terms
        if need > nd:
            nd = <long> need + 1
        _zeta_em_point(sr[i], si[i], nd, n_bern, &re, &im)
        out[i] = re + 1j * im
    return out_arr


# ---------------------------------------------------------------------------
# gamma / log-gamma, Lanczos
# ---------------------------------------------------------------------------

cdef inline void _lanczos_core(double wr, double wi, double* lr, double* li) nogil:
    """log of sqrt(2pi) A(w) t^{w+1/2} e^{-t}, t = w + g + 1/2, for Gamma(w+1)."""
    cdef double ar = LCOEF[0], ai = 0.0
    cdef double den, br, bi
    cdef int k
    for k in range(1, 15):
        br = wr + k
        bi = wi
        den = br * br + bi * bi
        ar += LCOEF[k] * br / den
        ai += LCOEF[k] * (-bi) / den
    cdef double tr = wr + LANCZOS_G + 0.5, ti = wi
    cdef double lt_re = 0.5 * log(tr * tr + ti * ti)
    cdef double lt_im = atan2(ti, tr)
    # (w + 1/2) * log t - t + log A + log sqrt(2 pi)
    cdef double cr = wr + 0.5, ci = wi
    lr[0] = cr * lt_re - ci * lt_im - tr + 0.5 * log(ar * ar + ai * ai) + LOG_SQRT_TWO_PI
    li[0] = cr * lt_im + ci * lt_re - ti + atan2(ai, ar)


def gamma_many(z):
    z_arr = np.ascontiguousarray(z, dtype=np.complex128)
    cdef double complex[::1] zv = z_arr
    cdef long npts = zv.shape[0]
    out_arr = np.empty(npts, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef long i
    cdef double zr, zi, lr, li, mag
    cdef double sr_, si_, gr, gi, den, pr, pi_
    for i in range(npts):
        zr = zv[i].real
        zi = zv[i].imag
        if zr >= 0.5:
            _lanczos_core(zr - 1.0, zi, &lr, &li)
            mag = exp(lr)
            out[i] = mag * cos(li) + 1j * (mag * sin(li))
        else:
            # reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
            _lanczos_core(-zr, -zi, &lr, &li)  # Gamma(1-z) = Gamma((1-z-1)+1)
            mag = exp(lr)
            gr = mag * cos(li)
            gi = mag * sin(li)
            sr_ = sin(3.141592653589793 * zr) * (0.5 * (exp(3.141592653589793 * zi) + exp(-3.141592653589793 * zi)))
            si_ = cos(3.141592653589793 * zr) * (0.5 * (exp(3.141592653589793 * zi) - exp(-3.141592653589793 * zi)))
            # pi / (sin(pi z) * Gamma(1-z)); Smith's scaled division avoids
            # underflow of |denominator|^2 near the poles
            pr = sr_ * gr - si_ * gi
            pi_ = sr_ * gi + si_ * gr
            if fabs(pr) >= fabs(pi_):
                den = pi_ / pr
                mag = pr + pi_ * den
                out[i] = (3.141592653589793 / mag) - 1j * (3.141592653589793 * den / mag)
            else:
                den = pr / pi_
                mag = pr * den + pi_
                out[i] = (3.141592653589793 * den / mag) - 1j * (3.141592653589793 / mag)
    return out_arr


def loggamma_many(z):
    z_arr = np.ascontiguousarray(z, dtype=np.complex128)
    cdef double complex[::1] zv = z_arr
    cdef long npts = zv.shape[0]
    out_arr = np.empty(npts, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef long i
    cdef int shifts, k
    cdef double zr, zi, lr, li, sh_re, sh_im
    for i in range(npts):
        zr = zv[i].real
        zi = zv[i].imag
        sh_re = 0.0
        sh_im = 0.0
        for k in range(2):
            if zr < 1.5:
                sh_re += 0.5 * log(zr * zr + zi * zi)
                sh_im += atan2(zi, zr)
                zr += 1.0
        _lanczos_core(zr - 1.0, zi, &lr, &li)
        out[i] = (lr - sh_re) + 1j * (li - sh_im)
    return out_arr
