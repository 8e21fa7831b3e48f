"""Strided statevector kernels.

All kernels operate in place on a contiguous 1-D complex128 amplitude array
of length 2**n. Wire numbering is 1-based with qubit 1 on the most
significant bit, so wire w lives at bit position n - w (counted from the
least significant bit).
"""

import numpy as np
from numba import njit

# gate kind codes used by the circuit runner
KIND_ROT1 = 0
KIND_ROT2 = 1
KIND_CNOT = 2

# single-qubit rotation axes
AX_X = 0
AX_Y = 1
AX_Z = 2

# two-qubit rotation generators
PP_XX = 0
PP_YY = 1
PP_ZZ = 2
PP_XY = 3
PP_YX = 4


@njit(cache=True)
def apply_1q_kernel(amps, n, wire, m00, m01, m10, m11):
    k = n - wire
    tk = 1 << k
    for g in range(1 << (n - 1)):
        i0 = ((g >> k) << (k + 1)) | (g & (tk - 1))
        i1 = i0 | tk
        a = amps[i0]
        b = amps[i1]
        amps[i0] = m00 * a + m01 * b
        amps[i1] = m10 * a + m11 * b


@njit(cache=True)
def apply_2q_kernel(amps, n, wire_a, wire_b, mat):
    # mat is 4x4 with basis order (bit_a, bit_b) = 00, 01, 10, 11
    ka = n - wire_a
    kb = n - wire_b
    lo = ka if ka < kb else kb
    hi = kb if ka < kb else ka
    ta = 1 << ka
    tb = 1 << kb
    mlo = (1 << lo) - 1
    mhi = (1 << hi) - 1
    for g in range(1 << (n - 2)):
        i = ((g >> lo) << (lo + 1)) | (g & mlo)
        i = ((i >> hi) << (hi + 1)) | (i & mhi)
        i01 = i | tb
        i10 = i | ta
        i11 = i10 | tb
        a0 = amps[i]
        a1 = amps[i01]
        a2 = amps[i10]
        a3 = amps[i11]
        amps[i] = mat[0, 0] * a0 + mat[0, 1] * a1 + mat[0, 2] * a2 + mat[0, 3] * a3
        amps[i01] = mat[1, 0] * a0 + mat[1, 1] * a1 + mat[1, 2] * a2 + mat[1, 3] * a3
        amps[i10] = mat[2, 0] * a0 + mat[2, 1] * a1 + mat[2, 2] * a2 + mat[2, 3] * a3
        amps[i11] = mat[3, 0] * a0 + mat[3, 1] * a1 + mat[3, 2] * a2 + mat[3, 3] * a3


@njit(cache=True)
def apply_cnot_kernel(amps, n, control, target):
    kc = n - control
    kt = n - target
    lo = kc if kc < kt else kt
    hi = kt if kc < kt else kc
    tc = 1 << kc
    tt = 1 << kt
    mlo = (1 << lo) - 1
    mhi = (1 << hi) - 1
    for g in range(1 << (n - 2)):
        i = ((g >> lo) << (lo + 1)) | (g & mlo)
        i = ((i >> hi) << (hi + 1)) | (i & mhi)
        i10 = i | tc
        i11 = i10 | tt
        tmp = amps[i10]
        amps[i10] = amps[i11]
        amps[i11] = tmp


@njit(cache=True)
def _rot1_mat(axis, angle):
    c = np.cos(0.5 * angle)
    s = np.sin(0.5 * angle)
    m = np.zeros((2, 2), dtype=np.complex128)
    if axis == AX_X:
        m[0, 0] = c
        m[0, 1] = -1j * s
        m[1, 0] = -1j * s
        m[1, 1] = c
    elif axis == AX_Y:
        m[0, 0] = c
        m[0, 1] = -s
        m[1, 0] = s
        m[1, 1] = c
    else:
        m[0, 0] = c - 1j * s
        m[1, 1] = c + 1j * s
    return m


@njit(cache=True)
def _rot2_mat(pair, angle):
    # exp(-i * angle/2 * P) for the two-qubit Pauli string P
    c = np.cos(0.5 * angle)
    s = np.sin(0.5 * angle)
    m = np.zeros((4, 4), dtype=np.complex128)
    m[0, 0] = c
    m[1, 1] = c
    m[2, 2] = c
    m[3, 3] = c
    if pair == PP_XX:
        m[0, 3] = -1j * s
        m[1, 2] = -1j * s
        m[2, 1] = -1j * s
        m[3, 0] = -1j * s
    elif pair == PP_YY:
        m[0, 3] = 1j * s
        m[1, 2] = -1j * s
        m[2, 1] = -1j * s
        m[3, 0] = 1j * s
    elif pair == PP_ZZ:
        m[0, 0] = c - 1j * s
        m[1, 1] = c + 1j * s
        m[2, 2] = c + 1j * s
        m[3, 3] = c - 1j * s
    elif pair == PP_XY:
        m[0, 3] = -s
        m[1, 2] = s
        m[2, 1] = -s
        m[3, 0] = s
    else:  # PP_YX
        m[0, 3] = -s
        m[1, 2] = -s
        m[2, 1] = s
        m[3, 0] = s
    return m


@njit(cache=True)
def run_ops_kernel(amps, n, kinds, gens, wires_a, wires_b, angles, start, stop):
    """Apply ops[start:stop] in order; angles are pre-scaled (gate = exp(-i*a*P/2))."""
    for t in range(start, stop):
        kind = kinds[t]
        if kind == KIND_ROT1:
            m = _rot1_mat(gens[t], angles[t])
            apply_1q_kernel(amps, n, wires_a[t], m[0, 0], m[0, 1], m[1, 0], m[1, 1])
        elif kind == KIND_ROT2:
            m = _rot2_mat(gens[t], angles[t])
            apply_2q_kernel(amps, n, wires_a[t], wires_b[t], m)
        else:
            apply_cnot_kernel(amps, n, wires_a[t], wires_b[t])


@njit(cache=True)
def _parity(v):
    v ^= v >> 32
    v ^= v >> 16
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return v & 1


@njit(cache=True)
def pauli_sum_expectation(amps, flips, zmasks, prefs):
    """<psi| sum_t pref_t * S_t |psi> where S_t|i> = sign(i, zmask_t)|i ^ flip_t>."""
    acc = 0.0 + 0.0j
    dim = amps.shape[0]
    for t in range(flips.shape[0]):
        flip = flips[t]
        zm = zmasks[t]
        p = prefs[t]
        term = 0.0 + 0.0j
        if flip == 0 and zm == 0:
            for i in range(dim):
                a = amps[i]
                term += a.real * a.real + a.imag * a.imag
        else:
            for i in range(dim):
                s = 1.0 - 2.0 * _parity(i & zm)
                term += np.conj(amps[i]) * (s * amps[i ^ flip])
        acc += p * term
    return acc


@njit(cache=True)
def pauli_sum_matvec(amps, out, flips, zmasks, prefs):
    """out = (sum_t pref_t * S_t) |amps>, same encoding as pauli_sum_expectation."""
    dim = amps.shape[0]
    for i in range(dim):
        out[i] = 0.0 + 0.0j
    for t in range(flips.shape[0]):
        flip = flips[t]
        zm = zmasks[t]
        p = prefs[t]
        for i in range(dim):
            s = 1.0 - 2.0 * _parity(i & zm)
            out[i] += p * s * amps[i ^ flip]


@njit(cache=True)
def hadamard_all_kernel(amps, n):
    inv = 1.0 / np.sqrt(2.0)
    for w in range(1, n + 1):
        k = n - w
        tk = 1 << k
        for g in range(1 << (n - 1)):
            i0 = ((g >> k) << (k + 1)) | (g & (tk - 1))
            i1 = i0 | tk
            a = amps[i0]
            b = amps[i1]
            amps[i0] = (a + b) * inv
            amps[i1] = (a - b) * inv


@njit(cache=True)
def sdg_all_kernel(amps, n):
    # S^dagger on every wire: amp[i] *= (-i)^popcount(i)
    for i in range(1 << n):
        v = i
        cnt = 0
        while v:
            v &= v - 1
            cnt += 1
        r = cnt & 3
        if r == 1:
            amps[i] *= -1j
        elif r == 2:
            amps[i] *= -1.0
        elif r == 3:
            amps[i] *= 1j
