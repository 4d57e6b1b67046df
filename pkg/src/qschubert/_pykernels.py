"""Pure-Python hot kernels. ``_speedups.pyx`` mirrors these signatures exactly.

Littlewood-Richardson tableaux are built one letter at a time: the cells
holding letter ``i`` form a horizontal strip of size ``mu[i-1]`` and, reading
rows top to bottom and right to left, the running count of ``i`` never
exceeds that of ``i - 1``. Row by row this means

    (# of i in rows <= r) <= (# of i-1 in rows <= r-1).
"""

from __future__ import annotations


def _strips(shape, letter_count, prev_cum, row_cap, col_cap, out):
    """Yield (new_shape, cum) for every legal strip of the next letter.

    ``prev_cum[r]`` counts the previous letter in rows ``0..r``; ``None`` means
    the letter is 1 and the lattice condition is vacuous.
    """
    nrows = len(shape)
    new = list(shape)
    cum = [0] * nrows

    def rec(r, placed):
        if placed == letter_count:
            for rr in range(r, nrows):
                cum[rr] = placed
            out.append((tuple(new), tuple(cum)))
            return
        if r >= nrows:
            return
        upper = col_cap if r == 0 else shape[r - 1]
        if row_cap is not None:
            upper = min(upper, row_cap[r])
        room = upper - shape[r]
        if prev_cum is not None:
            room = min(room, (prev_cum[r - 1] if r > 0 else 0) - placed)
        room = min(room, letter_count - placed)
        for x in range(room, -1, -1):
            new[r] = shape[r] + x
            cum[r] = placed + x
            rec(r + 1, placed + x)
        new[r] = shape[r]

    rec(0, 0)


def _lr_fill(inner, content, nrows, col_cap, row_cap):
    """Map outer shape (padded to ``nrows``) -> number of LR tableaux."""
    start = tuple(inner) + (0,) * (nrows - len(inner))
    level = {(start, None): 1}
    for count in content:
        nxt = {}
        for (shape, prev_cum), mult in level.items():
            found = []
            _strips(shape, count, prev_cum, row_cap, col_cap, found)
            for key in found:
                nxt[key] = nxt.get(key, 0) + mult
        level = nxt
        if not level:
            return {}
    totals = {}
    for (shape, _), mult in level.items():
        totals[shape] = totals.get(shape, 0) + mult
    return totals


def _strip_zeros(shape):
    end = len(shape)
    while end and shape[end - 1] == 0:
        end -= 1
    return tuple(shape[:end])


def lr_coef(outer, inner, content):
    """Littlewood-Richardson coefficient c^{outer}_{inner, content}."""
    if sum(outer) != sum(inner) + sum(content):
        return 0
    if len(inner) > len(outer) or len(content) > len(outer):
        return 0
    if any(a > b for a, b in zip(inner, outer)) or any(a > b for a, b in zip(content, outer)):
        return 0
    nrows = len(outer)
    col_cap = outer[0] if outer else 0
    totals = _lr_fill(inner, content, nrows, col_cap, tuple(outer))
    return totals.get(tuple(outer), 0)


def lr_mult(lam, mu, col_cap, row_cap):
    """All c^rho_{lam, mu} with ``rho[0] <= col_cap`` and ``len(rho) <= row_cap``.

    Returns a dict ``rho -> coefficient`` of nonzero terms.
    """
    nrows = min(row_cap, len(lam) + len(mu))
    if len(lam) > nrows or (lam and lam[0] > col_cap):
        return {}
    totals = _lr_fill(lam, mu, nrows, col_cap, None)
    return {_strip_zeros(s): c for s, c in totals.items()}


def core_sign(p, n):
    """n-core via beta-numbers.

    Returns ``(core, r, leg_parity)`` where ``r`` is the number of n-rim hooks
    removed and ``leg_parity`` is the parity of the sum of their leg lengths
    (rows occupied minus one). Each removal slides a bead from ``x`` to
    ``x - n``; the leg length is the number of beads strictly in between.
    """
    m = len(p)
    beads = set(p[i] - i - 1 + m for i in range(m))
    r = 0
    parity = 0
    moved = True
    while moved:
        moved = False
        for x in sorted(beads, reverse=True):
            y = x - n
            if y >= 0 and y not in beads:
                parity ^= sum(1 for z in beads if y < z < x) & 1
                beads.remove(x)
                beads.add(y)
                r += 1
                moved = True
                break
    ordered = sorted(beads, reverse=True)
    core = _strip_zeros(tuple(ordered[i] - (m - 1 - i) for i in range(m)))
    return core, r, parity
