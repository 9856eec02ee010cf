# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, NAN

cnp.import_array()


cdef inline double cabs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


def partner_values(lam, T, G):
    cdef double complex[::1] L = np.ascontiguousarray(lam, dtype=np.complex128)
    cdef double[:, ::1] Tm = np.ascontiguousarray(T, dtype=np.float64)
    cdef double complex[:, ::1] Gm = np.ascontiguousarray(G, dtype=np.complex128)
    cdef Py_ssize_t N = Tm.shape[0], n = Tm.shape[1]
    out_arr = np.empty(N, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef double[::1] u = np.empty(n)
    cdef double complex[::1] q = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] v = np.empty(n, dtype=np.complex128)
    cdef Py_ssize_t k, j, it
    cdef double scale = 0.0, qn, den, ref, w
    cdef double complex mu, c, num
    cdef bint has_q

    for j in range(n):
        if sqrt(cabs2(L[j])) > scale:
            scale = sqrt(cabs2(L[j]))
    scale += 1e-300

    with nogil:
        for k in range(N):
            mu = 0
            for j in range(n):
                u[j] = sqrt(Tm[k, j])
                mu = mu + Tm[k, j] * L[j]
            for j in range(n):
                q[j] = u[j] * L[j] - mu * u[j]
            c = 0
            for j in range(n):
                c = c + u[j] * q[j]
            qn = 0.0
            for j in range(n):
                q[j] = q[j] - c * u[j]
                qn += cabs2(q[j])
            qn = sqrt(qn)
            has_q = qn > 1e-13 * scale
            for j in range(n):
                if has_q:
                    q[j] = q[j] / qn
                else:
                    q[j] = 0
                v[j] = Gm[k, j]
            for it in range(2):
                c = 0
                for j in range(n):
                    c = c + u[j] * v[j]
                for j in range(n):
                    v[j] = v[j] - c * u[j]
                c = 0
                for j in range(n):
                    c = c + q[j].conjugate() * v[j]
                for j in range(n):
                    v[j] = v[j] - c * q[j]
            den = 0.0
            ref = 0.0
            num = 0
            for j in range(n):
                w = cabs2(v[j])
                den += w
                num = num + w * L[j]
                ref += cabs2(Gm[k, j])
            if den > 1e-20 * ref:
                out[k] = num / den
            else:
                out[k] = NAN + 1j * NAN
    return out_arr


cdef inline double seg_dist(double complex p, double complex a, double complex b) nogil:
    cdef double complex d = b - a, rel = p - a
    cdef double L2 = cabs2(d), s
    if L2 == 0.0:
        return sqrt(cabs2(rel))
    s = (rel.real * d.real + rel.imag * d.imag) / L2
    if s < 0.0:
        s = 0.0
    elif s > 1.0:
        s = 1.0
    return sqrt(cabs2(rel - s * d))


def region_distances(points, verts):
    cdef double complex[::1] P = np.ascontiguousarray(np.ravel(points), dtype=np.complex128)
    cdef double complex[::1] V = np.ascontiguousarray(np.ravel(verts), dtype=np.complex128)
    cdef Py_ssize_t N = P.shape[0], m = V.shape[0], k, e, ne
    out_arr = np.empty(N)
    cdef double[::1] out = out_arr
    cdef double best, dd
    cdef double complex a, b, d, rel
    cdef bint inside
    ne = m if m >= 3 else m - 1
    with nogil:
        for k in range(N):
            if m == 1:
                out[k] = sqrt(cabs2(P[k] - V[0]))
                continue
            inside = m >= 3
            best = 1e308
            for e in range(ne):
                a = V[e]
                b = V[(e + 1) % m]
                d = b - a
                rel = P[k] - a
                if d.real * rel.imag - d.imag * rel.real < 0.0:
                    inside = False
                dd = seg_dist(P[k], a, b)
                if dd < best:
                    best = dd
            out[k] = 0.0 if inside else best
    return out_arr
