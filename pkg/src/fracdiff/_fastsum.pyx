# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled float kernels: gbinom weight tables and the lower-triangular
convolution behind every fractional sum. Pure speed, no semantics."""

import numpy as np

cimport numpy as cnp


def gbinom_table(double alpha, Py_ssize_t count):
    """[gbinom(alpha, 0), ..., gbinom(alpha, count-1)] as float64."""
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t k
    cdef double v = 1.0
    o[0] = 1.0
    for k in range(1, count):
        v *= (alpha + k - 1) / k
        o[k] = v
    return out


def lower_convolve(double[::1] w, double[::1] v):
    """out[i] = sum_{k<=i} w[i-k] * v[k]; w must be at least as long as v."""
    cdef Py_ssize_t n = v.shape[0]
    if w.shape[0] < n:
        raise ValueError("weight table shorter than value array")
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i, k
    cdef double acc
    for i in range(n):
        acc = 0.0
        for k in range(i + 1):
            acc += w[i - k] * v[k]
        o[i] = acc
    return out
