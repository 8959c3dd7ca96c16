"""Smith normal form over the integers, arbitrary precision.

Reference implementation and overflow fallback for the compiled kernel in
_snf_core.  Pivoting always moves a smallest-magnitude nonzero entry to the
corner, which keeps intermediate entries small in practice; after each
pivot column/row is cleared, a divisibility sweep folds any non-divisible
remainder back into the pivot row, so the produced diagonal d_1 | d_2 | ...
is already in divisibility order.
"""

from __future__ import annotations


def smith_normal_form_pure(rows: list[list[int]]) -> list[int]:
    """Invariant factors of an integer matrix given as a list of rows.

    Returns the nonzero diagonal entries d_1 | d_2 | ... | d_k (all
    positive); k is the rank.  The input is not modified.
    """
    m = [list(map(int, row)) for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    if any(len(row) != nc for row in m):
        raise ValueError("matrix rows have unequal lengths")

    factors: list[int] = []
    t = 0
    while t < nr and t < nc:
        # Global pivot search: smallest nonzero magnitude in m[t:, t:].
        pi = pj = -1
        best = 0
        for i in range(t, nr):
            row = m[i]
            for j in range(t, nc):
                v = row[j]
                if v and (pi < 0 or abs(v) < best):
                    pi, pj, best = i, j, abs(v)
        if pi < 0:
            break
        if pi != t:
            m[t], m[pi] = m[pi], m[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]

        while True:
            # Keep the smallest magnitude of the pivot cross at the corner.
            while True:
                bi = bj = -1
                best = abs(m[t][t])
                for i in range(t + 1, nr):
                    v = m[i][t]
                    if v and abs(v) < best:
                        bi, best = i, abs(v)
                for j in range(t + 1, nc):
                    v = m[t][j]
                    if v and abs(v) < best:
                        bi, bj, best = -1, j, abs(v)
                if bj >= 0:
                    for row in m:
                        row[t], row[bj] = row[bj], row[t]
                elif bi >= 0:
                    m[t], m[bi] = m[bi], m[t]

                p = m[t][t]
                dirty = False
                for i in range(t + 1, nr):
                    v = m[i][t]
                    if v:
                        q = v // p
                        if q:
                            ri, rt = m[i], m[t]
                            for j in range(t, nc):
                                ri[j] -= q * rt[j]
                        if m[i][t]:
                            dirty = True
                for j in range(t + 1, nc):
                    v = m[t][j]
                    if v:
                        q = v // p
                        if q:
                            for row in m:
                                row[j] -= q * row[t]
                        if m[t][j]:
                            dirty = True
                if not dirty:
                    break

            # Divisibility sweep: the pivot must divide the rest of the
            # submatrix; fold an offending row in and clean again.
            p = m[t][t]
            offender = -1
            for i in range(t + 1, nr):
                row = m[i]
                for j in range(t + 1, nc):
                    if row[j] % p:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            rt, ro = m[t], m[offender]
            for j in range(t, nc):
                rt[j] += ro[j]

        factors.append(abs(m[t][t]))
        t += 1

    return factors
