# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the hot inner loops: border tables, overlapping
occurrence search, and open/closed classification of a word.

Mirrors _fallback.py; wordlab.kernels picks one of the two at import.
"""

from libc.stdlib cimport malloc, free


cdef Py_ssize_t _fill_border(const unsigned char *w, Py_ssize_t n,
                             Py_ssize_t *table) noexcept nogil:
    cdef Py_ssize_t i, k = 0
    table[0] = 0
    for i in range(1, n):
        while k > 0 and w[i] != w[k]:
            k = table[k - 1]
        if w[i] == w[k]:
            k += 1
        table[i] = k
    return table[n - 1]


def border_table(bytes w):
    """Failure function: entry i is the longest proper border of w[:i+1]."""
    cdef Py_ssize_t n = len(w)
    if n == 0:
        raise ValueError("border_table of empty word")
    cdef const unsigned char *s = w
    cdef Py_ssize_t *table = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    if table == NULL:
        raise MemoryError()
    try:
        _fill_border(s, n, table)
        return [table[i] for i in range(n)]
    finally:
        free(table)


def occurrences(bytes pattern, bytes text):
    """All start positions of pattern in text, overlaps included (KMP)."""
    cdef Py_ssize_t m = len(pattern)
    cdef Py_ssize_t n = len(text)
    if m == 0:
        raise ValueError("occurrences of empty pattern")
    out = []
    if m > n:
        return out
    cdef const unsigned char *p = pattern
    cdef const unsigned char *t = text
    cdef Py_ssize_t *table = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    if table == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, k = 0
    try:
        _fill_border(p, m, table)
        for i in range(n):
            while k > 0 and t[i] != p[k]:
                k = table[k - 1]
            if t[i] == p[k]:
                k += 1
            if k == m:
                out.append(i - m + 1)
                k = table[k - 1]
        return out
    finally:
        free(table)


def frontier_length(bytes w):
    """Length of the frontier if w is closed, else -1.

    A single letter is closed with frontier 0; otherwise w is closed iff
    its longest border occurs in w exactly twice (no internal occurrence).
    """
    cdef Py_ssize_t n = len(w)
    if n == 0:
        raise ValueError("frontier_length of empty word")
    if n == 1:
        return 0
    cdef const unsigned char *s = w
    cdef Py_ssize_t *table = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    if table == NULL:
        raise MemoryError()
    cdef Py_ssize_t b, i, k
    cdef Py_ssize_t result
    try:
        b = _fill_border(s, n, table)
        if b == 0:
            return -1
        # scan for an occurrence of w[:b] strictly between 0 and n-b
        _fill_border(s, b, table)
        result = b
        k = 0
        with nogil:
            for i in range(1, n - 1):
                while k > 0 and s[i] != s[k]:
                    k = table[k - 1]
                if s[i] == s[k]:
                    k += 1
                if k == b:
                    if i - b + 1 < n - b:
                        result = -1
                    break
        return result
    finally:
        free(table)
