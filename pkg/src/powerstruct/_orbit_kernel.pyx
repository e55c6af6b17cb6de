# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled orbit enumeration for one charge profile of the geometric power.

Semantics match _orbit_kernel_py.count_profile_orbits exactly; see there for
the contract.  The enumeration runs as a pair of odometers over C arrays and
canonical keys are packed into bytes, which keeps the hot loop free of
per-element Python tuple churn.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

from cpython.bytes cimport PyBytes_FromStringAndSize

from powerstruct._orbit_kernel_py import OrbitCheckError


def count_profile_orbits(int m_size, f_values, blocks):
    cdef Py_ssize_t s = 0, n_blocks = len(blocks), b, i, j, pos
    cdef long long orbit_size = 1
    for k, x_size, _, _ in blocks:
        s += k
        if k > 0 and x_size == 0:
            return 0
        for i in range(1, k + 1):
            orbit_size *= i
    if s == 0:
        raise ValueError("a charge profile must have at least one particle")
    if s > m_size:
        return 0

    cdef int *f_arr = <int *> malloc(m_size * sizeof(int))
    cdef int *block_start = <int *> malloc((n_blocks + 1) * sizeof(int))
    cdef int *slot_radix = <int *> malloc(s * sizeof(int))          # x_size per slot
    cdef int *slot_y = <int *> malloc(s * sizeof(int))              # y_size per slot
    cdef int **slot_g = <int **> malloc(s * sizeof(int *))          # g_values per slot
    cdef int *m_idx = <int *> malloc(s * sizeof(int))
    cdef int *x_idx = <int *> malloc(s * sizeof(int))
    cdef int *used = <int *> malloc(m_size * sizeof(int))
    cdef long long *src_buf = <long long *> malloc(s * sizeof(long long))
    cdef long long *tgt_buf = <long long *> malloc(s * sizeof(long long))
    cdef int *g_flat = NULL
    cdef Py_ssize_t g_total = 0

    if (f_arr == NULL or block_start == NULL or slot_radix == NULL or
            slot_y == NULL or slot_g == NULL or m_idx == NULL or
            x_idx == NULL or used == NULL or src_buf == NULL or tgt_buf == NULL):
        raise MemoryError()

    cdef dict orbit_target = {}
    cdef dict orbit_count = {}
    cdef long long code
    cdef int carry, m, x, depth
    cdef bytes src_key, tgt_key

    try:
        for i in range(m_size):
            f_arr[i] = f_values[i]
            used[i] = 0
        for _, x_size, g_values, _ in blocks:
            g_total += x_size
        g_flat = <int *> malloc((g_total if g_total else 1) * sizeof(int))
        if g_flat == NULL:
            raise MemoryError()

        pos = 0
        j = 0
        block_start[0] = 0
        for b in range(n_blocks):
            k, x_size, g_values, y_size = blocks[b]
            for i in range(x_size):
                g_flat[j + i] = g_values[i]
            for i in range(k):
                slot_radix[pos + i] = x_size
                slot_y[pos + i] = y_size
                slot_g[pos + i] = g_flat + j
            pos += k
            j += x_size
            block_start[b + 1] = <int> pos

        # Odometer over ordered tuples of distinct points of M (depth-first).
        depth = 0
        m_idx[0] = -1
        while depth >= 0:
            m = m_idx[depth] + 1
            if m_idx[depth] >= 0:
                used[m_idx[depth]] = 0
            while m < m_size and used[m]:
                m += 1
            if m >= m_size:
                m_idx[depth] = -1
                depth -= 1
                continue
            m_idx[depth] = m
            used[m] = 1
            if depth + 1 < s:
                depth += 1
                m_idx[depth] = -1
                continue

            # Full point tuple chosen; sweep the state odometer.
            for i in range(s):
                x_idx[i] = 0
            while True:
                # Canonicalize blockwise: encode pairs, insertion-sort per block.
                for i in range(s):
                    src_buf[i] = (<long long> m_idx[i]) * (slot_radix[i] if slot_radix[i] else 1) + x_idx[i]
                    tgt_buf[i] = (<long long> f_arr[m_idx[i]]) * (slot_y[i] if slot_y[i] else 1) + slot_g[i][x_idx[i]]
                for b in range(n_blocks):
                    _insertion_sort(src_buf, block_start[b], block_start[b + 1])
                    _insertion_sort(tgt_buf, block_start[b], block_start[b + 1])
                src_key = PyBytes_FromStringAndSize(<char *> src_buf, s * sizeof(long long))
                tgt_key = PyBytes_FromStringAndSize(<char *> tgt_buf, s * sizeof(long long))
                prev = orbit_target.get(src_key)
                if prev is None:
                    orbit_target[src_key] = tgt_key
                    orbit_count[src_key] = 1
                else:
                    if prev != tgt_key:
                        raise OrbitCheckError(
                            "induced orbit map is not well defined: one source "
                            "orbit hits two target orbits"
                        )
                    orbit_count[src_key] = orbit_count[src_key] + 1

                # Advance the state odometer.
                carry = 1
                i = s - 1
                while carry and i >= 0:
                    x_idx[i] += 1
                    if x_idx[i] < slot_radix[i]:
                        carry = 0
                    else:
                        x_idx[i] = 0
                        i -= 1
                if carry:
                    break

        for count in orbit_count.values():
            if <long long> count != orbit_size:
                raise OrbitCheckError(
                    f"non-free action: an orbit has size {count}, expected {orbit_size}"
                )
        return len(orbit_target)
    finally:
        free(f_arr)
        free(block_start)
        free(slot_radix)
        free(slot_y)
        free(slot_g)
        free(m_idx)
        free(x_idx)
        free(used)
        free(src_buf)
        free(tgt_buf)
        if g_flat != NULL:
            free(g_flat)


cdef inline void _insertion_sort(long long *buf, int lo, int hi) noexcept nogil:
    cdef int i, j
    cdef long long v
    for i in range(lo + 1, hi):
        v = buf[i]
        j = i - 1
        while j >= lo and buf[j] > v:
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = v
