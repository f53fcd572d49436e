# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Z/2 column reduction on sorted sparse columns."""
from libcpp.vector cimport vector


cdef void _xor_into(vector[int]& a, const vector[int]& b, vector[int]& tmp) noexcept:
    cdef size_t i = 0, j = 0
    cdef size_t na = a.size(), nb = b.size()
    tmp.clear()
    while i < na and j < nb:
        if a[i] < b[j]:
            tmp.push_back(a[i]); i += 1
        elif a[i] > b[j]:
            tmp.push_back(b[j]); j += 1
        else:
            i += 1; j += 1
    while i < na:
        tmp.push_back(a[i]); i += 1
    while j < nb:
        tmp.push_back(b[j]); j += 1
    a.swap(tmp)


def reduce_boundary(cols, bint track_v=False):
    cdef Py_ssize_t n = len(cols)
    cdef vector[vector[int]] R
    cdef vector[vector[int]] V
    cdef vector[int] owner
    cdef vector[int] tmp
    cdef Py_ssize_t j
    cdef int low, k, maxrow = -1
    R.resize(n)
    for j in range(n):
        for r in sorted(set(cols[j])):
            R[j].push_back(r)
        if R[j].size() and R[j].back() > maxrow:
            maxrow = R[j].back()
    owner.assign(maxrow + 1, -1)
    if track_v:
        V.resize(n)
        for j in range(n):
            V[j].push_back(<int>j)
    lows = [-1] * n
    for j in range(n):
        while R[j].size():
            low = R[j].back()
            k = owner[low]
            if k < 0:
                owner[low] = <int>j
                lows[j] = low
                break
            _xor_into(R[j], R[k], tmp)
            if track_v:
                _xor_into(V[j], V[k], tmp)
    Rout = [list(R[j]) for j in range(n)]
    Vout = [list(V[j]) for j in range(n)] if track_v else None
    return lows, Rout, Vout
