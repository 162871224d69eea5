# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled statevector and depth kernels.

Semantics and the flat gate encoding match kernels.py exactly
(kind codes: X=0 SX=1 H=2 Z=3 RZ=4 P=5 CX=6 CP=7 MCZ=8).
"""
import numpy as np

cimport cython
from libc.math cimport cos, sin, sqrt


def apply_flat(double complex[:, ::1] amps,
               const long long[::1] kinds,
               const long long[::1] qa,
               const long long[::1] qb,
               const double[::1] thetas,
               int n_qubits):
    cdef Py_ssize_t dim = amps.shape[0]
    cdef Py_ssize_t batch = amps.shape[1]
    cdef Py_ssize_t g, i, j, c
    cdef long long code, a, b, mask
    cdef long long abit, bbit
    cdef double theta, inv_sqrt2
    cdef double complex d0, d1, u00, u01, u10, u11, t0, t1
    inv_sqrt2 = 1.0 / sqrt(2.0)

    for g in range(kinds.shape[0]):
        code = kinds[g]
        a = qa[g]
        b = qb[g]
        theta = thetas[g]
        if code == 0:  # X
            abit = 1 << a
            for i in range(dim):
                if not (i & abit):
                    j = i | abit
                    for c in range(batch):
                        t0 = amps[i, c]
                        amps[i, c] = amps[j, c]
                        amps[j, c] = t0
        elif code == 1 or code == 2:  # SX / H
            if code == 1:
                u00 = 0.5 + 0.5j
                u01 = 0.5 - 0.5j
                u10 = u01
                u11 = u00
            else:
                u00 = inv_sqrt2
                u01 = inv_sqrt2
                u10 = inv_sqrt2
                u11 = -inv_sqrt2
            abit = 1 << a
            for i in range(dim):
                if not (i & abit):
                    j = i | abit
                    for c in range(batch):
                        t0 = amps[i, c]
                        t1 = amps[j, c]
                        amps[i, c] = u00 * t0 + u01 * t1
                        amps[j, c] = u10 * t0 + u11 * t1
        elif code == 3 or code == 4 or code == 5:  # Z / RZ / P diagonals
            if code == 3:
                d0 = 1.0
                d1 = -1.0
            elif code == 4:
                d0 = cos(0.5 * theta) - 1j * sin(0.5 * theta)
                d1 = cos(0.5 * theta) + 1j * sin(0.5 * theta)
            else:
                d0 = 1.0
                d1 = cos(theta) + 1j * sin(theta)
            abit = 1 << a
            for i in range(dim):
                if i & abit:
                    for c in range(batch):
                        amps[i, c] = amps[i, c] * d1
                elif code == 4:
                    for c in range(batch):
                        amps[i, c] = amps[i, c] * d0
        elif code == 6:  # CX
            abit = 1 << a
            bbit = 1 << b
            for i in range(dim):
                if (i & abit) and not (i & bbit):
                    j = i | bbit
                    for c in range(batch):
                        t0 = amps[i, c]
                        amps[i, c] = amps[j, c]
                        amps[j, c] = t0
        elif code == 7:  # CP
            abit = 1 << a
            bbit = 1 << b
            d1 = cos(theta) + 1j * sin(theta)
            for i in range(dim):
                if (i & abit) and (i & bbit):
                    for c in range(batch):
                        amps[i, c] = amps[i, c] * d1
        else:  # MCZ; qa holds the participant bitmask
            mask = a
            for i in range(dim):
                if (i & mask) == mask:
                    for c in range(batch):
                        amps[i, c] = -amps[i, c]


def asap_depth(const long long[::1] masks, int n_qubits):
    cdef long long last[64]
    cdef int q
    cdef Py_ssize_t g
    cdef long long layer, deepest, m, mask
    if n_qubits > 64:
        raise ValueError("asap_depth supports at most 64 qubits")
    for q in range(n_qubits):
        last[q] = 0
    deepest = 0
    for g in range(masks.shape[0]):
        mask = masks[g]
        layer = 0
        m = mask
        while m:
            q = _lowest_bit(m)
            if last[q] > layer:
                layer = last[q]
            m &= m - 1
        layer += 1
        m = mask
        while m:
            last[_lowest_bit(m)] = layer
            m &= m - 1
        if layer > deepest:
            deepest = layer
    return int(deepest)


cdef inline int _lowest_bit(long long m) nogil:
    cdef int q = 0
    while not (m & 1):
        m >>= 1
        q += 1
    return q
