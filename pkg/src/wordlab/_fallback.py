"""Pure-Python kernels, used when the compiled extension is unavailable.

Signatures must stay in lockstep with _speedups.pyx; tests/test_kernels.py
checks the two backends agree on random and exhaustive inputs.
"""


def border_table(w: bytes) -> list:
    """Failure function: entry i is the longest proper border of w[:i+1]."""
    n = len(w)
    if n == 0:
        raise ValueError("border_table of empty word")
    table = [0] * n
    k = 0
    for i in range(1, n):
        c = w[i]
        while k and c != w[k]:
            k = table[k - 1]
        if c == w[k]:
            k += 1
        table[i] = k
    return table


def occurrences(pattern: bytes, text: bytes) -> list:
    """All start positions of pattern in text, overlaps included."""
    if len(pattern) == 0:
        raise ValueError("occurrences of empty pattern")
    out = []
    i = text.find(pattern)
    while i != -1:
        out.append(i)
        i = text.find(pattern, i + 1)
    return out


def frontier_length(w: bytes) -> int:
    """Length of the frontier if w is closed, else -1.

    A single letter is closed with frontier 0; otherwise w is closed iff
    its longest border occurs in w exactly twice (no internal occurrence).
    """
    n = len(w)
    if n == 0:
        raise ValueError("frontier_length of empty word")
    if n == 1:
        return 0
    b = border_table(w)[-1]
    if b == 0:
        return -1
    # longest border occurs at 0 and n-b; closed iff no third occurrence
    prefix = w[:b]
    i = w.find(prefix, 1)
    if i == n - b:
        return b
    return -1
