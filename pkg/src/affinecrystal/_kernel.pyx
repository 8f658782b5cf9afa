# cython: language_level=3
"""Compiled kernels for the partition-side hot loops.

Mirrors :mod:`affinecrystal._kernel_py` exactly; the two are differentially
tested.  Tokens live in C arrays, the arm-sequence order is an insertion
sort with the generic comparator, and bracket matching is a single stack
pass.
"""

from libc.stdlib cimport free, malloc

from .errors import HorizonExceedsTable

ARM_HORIZONTAL = 0
ARM_TABLE = 1


cdef long _arm_value(long t, int kind, object table, long n) except *:
    if kind == 0:
        return (n * t + 1) // 2 - 1
    if t > len(table):
        raise HorizonExceedsTable(t, len(table))
    return table[t - 1]


cdef bint _gt(long ra, long ca, long rb, long cb, long n, int kind,
              object table) except *:
    # is box a strictly earlier than box b in the arm-sequence order
    cdef long t = ((ca - ra) - (cb - rb)) // n
    if t > 0:
        return ca - cb > _arm_value(t, kind, table, n)
    return not (cb - ca > _arm_value(-t, kind, table, n))


cdef int _crystal_scan(tuple parts, long i, long n, int kind, object table,
                       long *eps, long *phi, long *f_row, long *e_row) except -1:
    """Build the color-i corner tokens, sort, match, and report the
    unmatched counts plus the acting rows (-1 when absent)."""
    cdef Py_ssize_t length = len(parts)
    cdef Py_ssize_t cap = 2 * length + 2
    cdef long *row = <long *> malloc(cap * sizeof(long))
    cdef long *col = <long *> malloc(cap * sizeof(long))
    cdef int *side = <int *> malloc(cap * sizeof(int))
    cdef Py_ssize_t *stack = <Py_ssize_t *> malloc(cap * sizeof(Py_ssize_t))
    if row == NULL or col == NULL or side == NULL or stack == NULL:
        free(row); free(col); free(side); free(stack)
        raise MemoryError()
    cdef Py_ssize_t m = 0, r, j, idx, top
    cdef long p, prev, nxt, cr, cc
    cdef int cs
    try:
        for r in range(1, length + 1):
            p = parts[r - 1]
            prev = parts[r - 2] if r >= 2 else 0
            nxt = parts[r] if r < length else 0
            if (r == 1 or prev > p) and (p + 1 - r) % n == i:
                row[m] = r; col[m] = p + 1; side[m] = 1; m += 1
            if p > nxt and (p - r) % n == i:
                row[m] = r; col[m] = p; side[m] = -1; m += 1
        if (1 - (length + 1)) % n == i:
            row[m] = length + 1; col[m] = 1; side[m] = 1; m += 1

        for idx in range(1, m):
            cr = row[idx]; cc = col[idx]; cs = side[idx]
            j = idx - 1
            while j >= 0 and _gt(cr, cc, row[j], col[j], n, kind, table):
                row[j + 1] = row[j]; col[j + 1] = col[j]; side[j + 1] = side[j]
                j -= 1
            row[j + 1] = cr; col[j + 1] = cc; side[j + 1] = cs

        top = 0
        eps[0] = 0
        e_row[0] = -1
        for idx in range(m):
            if side[idx] > 0:
                stack[top] = idx
                top += 1
            elif top > 0:
                top -= 1
            else:
                eps[0] += 1
                e_row[0] = row[idx]
        phi[0] = top
        f_row[0] = row[stack[0]] if top > 0 else -1
    finally:
        free(row); free(col); free(side); free(stack)
    return 0


def f_step(tuple parts, long i, long n, int kind, table):
    """Add the box of the leftmost unmatched '(' or return None."""
    cdef long eps = 0, phi = 0, fr = -1, er = -1
    _crystal_scan(parts, i, n, kind, table, &eps, &phi, &fr, &er)
    if fr < 0:
        return None
    if fr == len(parts) + 1:
        return parts + (1,)
    lst = list(parts)
    lst[fr - 1] += 1
    return tuple(lst)


def e_step(tuple parts, long i, long n, int kind, table):
    """Remove the box of the rightmost unmatched ')' or return None."""
    cdef long eps = 0, phi = 0, fr = -1, er = -1
    _crystal_scan(parts, i, n, kind, table, &eps, &phi, &fr, &er)
    if er < 0:
        return None
    lst = list(parts)
    lst[er - 1] -= 1
    if lst[er - 1] == 0:
        del lst[er - 1]
    return tuple(lst)


def unmatched_counts(tuple parts, long i, long n, int kind, table):
    cdef long eps = 0, phi = 0, fr = -1, er = -1
    _crystal_scan(parts, i, n, kind, table, &eps, &phi, &fr, &er)
    return eps, phi


def is_regular(tuple parts, long n, int kind, table):
    """True when no box has hook n*t together with arm A_t."""
    cdef Py_ssize_t length = len(parts)
    if length == 0:
        return True
    cdef long p0 = parts[0]
    cdef long *cparts = <long *> malloc(length * sizeof(long))
    cdef long *conj = <long *> malloc(p0 * sizeof(long))
    if cparts == NULL or conj == NULL:
        free(cparts); free(conj)
        raise MemoryError()
    cdef Py_ssize_t r
    cdef long p, c, h
    cdef bint ok = True
    try:
        for r in range(length):
            cparts[r] = parts[r]
        for c in range(p0):
            conj[c] = 0
        for r in range(length):
            for c in range(cparts[r]):
                conj[c] += 1
        for r in range(length):
            p = cparts[r]
            for c in range(1, p + 1):
                h = p - c + conj[c - 1] - r
                if h % n == 0 and p - c == _arm_value(h // n, kind, table, n):
                    ok = False
                    break
            if not ok:
                break
    finally:
        free(cparts); free(conj)
    return ok
