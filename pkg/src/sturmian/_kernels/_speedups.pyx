# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the _pure kernels; contracts are identical.

arith_scan here works in C integers and is only safe while the continuants
fit 63 bits; the dispatcher in _kernels caps it at n <= 64 and routes larger
orders to the big-int implementation.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"


def lps_length(s):
    """Length of the longest palindromic suffix of s (0 only for the empty string)."""
    cdef bytes raw = s.encode("ascii")
    cdef Py_ssize_t n = len(raw)
    if n < 2:
        return n
    cdef Py_ssize_t m = 2 * n + 1
    cdef const unsigned char* sb = raw
    cdef unsigned char* t = <unsigned char*> malloc(m)
    cdef Py_ssize_t* radii = <Py_ssize_t*> malloc(m * sizeof(Py_ssize_t))
    if t == NULL or radii == NULL:
        if t != NULL:
            free(t)
        if radii != NULL:
            free(radii)
        raise MemoryError()
    cdef Py_ssize_t i, k, center = 0, right = 0
    cdef Py_ssize_t ans = 0
    for i in range(m):
        t[i] = 0
    for i in range(n):
        t[2 * i + 1] = sb[i]
    try:
        for i in range(m):
            if i < right:
                k = radii[2 * center - i]
                if i + k > right:
                    k = right - i
            else:
                k = 0
            while i - k - 1 >= 0 and i + k + 1 < m and t[i - k - 1] == t[i + k + 1]:
                k += 1
            radii[i] = k
            if i + k > right:
                center = i
                right = i + k
            if i + k == m - 1:
                ans = k
                break
        return ans
    finally:
        free(t)
        free(radii)


def min_period(s):
    """Smallest p >= 1 with s[i] == s[i+p] wherever both exist; 1 for the empty string."""
    cdef bytes raw = s.encode("ascii")
    cdef Py_ssize_t n = len(raw)
    if n == 0:
        return 1
    cdef const unsigned char* sb = raw
    cdef Py_ssize_t* fail = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if fail == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, k = 0
    cdef unsigned char c
    try:
        fail[0] = 0
        for i in range(1, n):
            c = sb[i]
            while k > 0 and sb[k] != c:
                k = fail[k - 1]
            if sb[k] == c:
                k += 1
            fail[i] = k
        return n - fail[n - 1]
    finally:
        free(fail)


cdef void _scan_walk(Py_ssize_t depth, Py_ssize_t n, int stat, bint a_start, bint last_b,
                     long long p1, long long c1, long long p2, long long c2,
                     char* path, long long* best, list arg):
    cdef long long val
    if depth == n:
        if stat == 0:
            val = c1 + p1 - 2
        elif stat == 1:
            val = p1
        else:
            val = c2 + p2 - 1
        if val > best[0]:
            best[0] = val
            del arg[:]
            arg.append(path[:n].decode("ascii"))
        elif val == best[0]:
            arg.append(path[:n].decode("ascii"))
        return
    path[depth] = b'a'
    if last_b:
        _scan_walk(depth + 1, n, stat, a_start, False, c1, c1 + p1, c2, c2 + p2, path, best, arg)
    else:
        _scan_walk(depth + 1, n, stat, a_start, False, p1, c1 + p1, p2, c2 + p2, path, best, arg)
    if depth > 0 or not a_start:
        path[depth] = b'b'
        if last_b:
            _scan_walk(depth + 1, n, stat, a_start, True, p1, c1 + p1, p2, c2 + p2, path, best, arg)
        else:
            _scan_walk(depth + 1, n, stat, a_start, True, c1, c1 + p1, c2, c2 + p2, path, best, arg)


def arith_scan(n, stat, a_start):
    """See _pure.arith_scan; same contract, n capped at 64 by the dispatcher."""
    cdef Py_ssize_t nn = n
    cdef int st = stat
    if nn < 0:
        raise ValueError("n must be >= 0")
    if st != 0 and st != 1 and st != 2:
        raise ValueError("stat must be 0, 1, or 2")
    if nn > 64:
        raise ValueError("compiled scan is limited to n <= 64")
    cdef char* path = <char*> malloc(nn if nn > 0 else 1)
    if path == NULL:
        raise MemoryError()
    cdef long long best = -1
    cdef list arg = []
    try:
        _scan_walk(0, nn, st, 1 if a_start else 0, True, 1, 1, 1, 0, path, &best, arg)
        return int(best), sorted(arg)
    finally:
        free(path)
