# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled batch kernels for the Monte Carlo hot path.

Mirrors the pure-numpy kernels in _core_py bit for bit: identical float
operation order (the extension is compiled with FP contraction disabled) and
identical decision rules, so seeds produce the same outcomes on either
backend.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs

BACKEND = "compiled"


cdef inline unsigned int _pnc_word(unsigned int w1, unsigned int w2,
                                   Py_ssize_t width, double sqrt_e, double sigma,
                                   double thresh, const double[:, ::1] g,
                                   Py_ssize_t row) noexcept nogil:
    """PNC-map the superposition of two packed words over `width` symbols."""
    cdef Py_ssize_t j
    cdef double x1, x2, y
    cdef unsigned int out = 0
    for j in range(width):
        x1 = 1.0 - 2.0 * ((w1 >> j) & 1)
        x2 = 1.0 - 2.0 * ((w2 >> j) & 1)
        y = sqrt_e * (x1 + x2) + sigma * g[row, j]
        if fabs(y) <= thresh:
            out |= (<unsigned int>1) << j
    return out


cdef inline unsigned int _bpsk_word(unsigned int w, Py_ssize_t width, double sqrt_e,
                                    double sigma, const double[:, ::1] g,
                                    Py_ssize_t row) noexcept nogil:
    """Hard-demodulate a BPSK broadcast of a packed word."""
    cdef Py_ssize_t j
    cdef double x, y
    cdef unsigned int out = 0
    for j in range(width):
        x = 1.0 - 2.0 * ((w >> j) & 1)
        y = sqrt_e * x + sigma * g[row, j]
        if y <= 0.0:
            out |= (<unsigned int>1) << j
    return out


def scpnc_batch(const cnp.uint16_t[::1] c1, const cnp.uint16_t[::1] c2,
                const cnp.uint16_t[::1] synd_tab, const cnp.uint16_t[::1] lead_tab,
                double sqrt_e, double sigma, double thresh,
                const double[:, ::1] g_up, const double[:, ::1] g_d1,
                const double[:, ::1] g_d2):
    """Source-compression exchanges; returns (ok_1to2, ok_2to1) uint8 arrays."""
    cdef Py_ssize_t trials = c1.shape[0]
    cdef Py_ssize_t m = g_up.shape[1]
    ok12_arr = np.empty(trials, dtype=np.uint8)
    ok21_arr = np.empty(trials, dtype=np.uint8)
    cdef cnp.uint8_t[::1] ok12 = ok12_arr
    cdef cnp.uint8_t[::1] ok21 = ok21_arr
    cdef Py_ssize_t i
    cdef unsigned int sr, sh1, sh2
    with nogil:
        for i in range(trials):
            sr = _pnc_word(synd_tab[c1[i]], synd_tab[c2[i]], m,
                           sqrt_e, sigma, thresh, g_up, i)
            sh1 = _bpsk_word(sr, m, sqrt_e, sigma, g_d1, i)
            sh2 = _bpsk_word(sr, m, sqrt_e, sigma, g_d2, i)
            ok21[i] = (lead_tab[sh1] ^ c1[i]) == c2[i]
            ok12[i] = (lead_tab[sh2] ^ c2[i]) == c1[i]
    return ok12_arr, ok21_arr


def rcpnc_batch(const cnp.uint16_t[::1] c1, const cnp.uint16_t[::1] c2,
                const cnp.uint16_t[::1] synd_tab, const cnp.uint16_t[::1] lead_tab,
                double sqrt_e, double sigma, double thresh,
                const double[:, ::1] g_up, const double[:, ::1] g_d1,
                const double[:, ::1] g_d2):
    """Relay-compression exchanges; returns (ok_1to2, ok_2to1) uint8 arrays."""
    cdef Py_ssize_t trials = c1.shape[0]
    cdef Py_ssize_t n = g_up.shape[1]
    cdef Py_ssize_t m = g_d1.shape[1]
    ok12_arr = np.empty(trials, dtype=np.uint8)
    ok21_arr = np.empty(trials, dtype=np.uint8)
    cdef cnp.uint8_t[::1] ok12 = ok12_arr
    cdef cnp.uint8_t[::1] ok21 = ok21_arr
    cdef Py_ssize_t i
    cdef unsigned int sr, sh1, sh2
    with nogil:
        for i in range(trials):
            sr = synd_tab[_pnc_word(c1[i], c2[i], n, sqrt_e, sigma, thresh, g_up, i)]
            sh1 = _bpsk_word(sr, m, sqrt_e, sigma, g_d1, i)
            sh2 = _bpsk_word(sr, m, sqrt_e, sigma, g_d2, i)
            ok21[i] = (lead_tab[sh1] ^ c1[i]) == c2[i]
            ok12[i] = (lead_tab[sh2] ^ c2[i]) == c1[i]
    return ok12_arr, ok21_arr


def conventional_batch(const cnp.uint16_t[::1] c1, const cnp.uint16_t[::1] c2,
                       double sqrt_e, double sigma, double thresh,
                       const double[:, ::1] g_up, const double[:, ::1] g_d1,
                       const double[:, ::1] g_d2):
    """Non-compression exchanges; returns (ok_1to2, ok_2to1) uint8 arrays."""
    cdef Py_ssize_t trials = c1.shape[0]
    cdef Py_ssize_t n = g_up.shape[1]
    ok12_arr = np.empty(trials, dtype=np.uint8)
    ok21_arr = np.empty(trials, dtype=np.uint8)
    cdef cnp.uint8_t[::1] ok12 = ok12_arr
    cdef cnp.uint8_t[::1] ok21 = ok21_arr
    cdef Py_ssize_t i
    cdef unsigned int cr, r1, r2
    with nogil:
        for i in range(trials):
            cr = _pnc_word(c1[i], c2[i], n, sqrt_e, sigma, thresh, g_up, i)
            r1 = _bpsk_word(cr, n, sqrt_e, sigma, g_d1, i)
            r2 = _bpsk_word(cr, n, sqrt_e, sigma, g_d2, i)
            ok21[i] = (r1 ^ c1[i]) == c2[i]
            ok12[i] = (r2 ^ c2[i]) == c1[i]
    return ok12_arr, ok21_arr


def pnc_map_errors(const cnp.uint8_t[::1] b1, const cnp.uint8_t[::1] b2,
                   double sqrt_e, double sigma, double thresh,
                   const double[::1] g):
    """Count PNC mapping errors over independent symbols."""
    cdef Py_ssize_t count = b1.shape[0]
    cdef Py_ssize_t i
    cdef double x1, x2, y
    cdef unsigned int est
    cdef long errors = 0
    with nogil:
        for i in range(count):
            x1 = 1.0 - 2.0 * b1[i]
            x2 = 1.0 - 2.0 * b2[i]
            y = sqrt_e * (x1 + x2) + sigma * g[i]
            est = 1 if fabs(y) <= thresh else 0
            if est != (b1[i] ^ b2[i]):
                errors += 1
    return errors
