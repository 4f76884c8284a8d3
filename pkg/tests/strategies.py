"""Shared hypothesis strategies and small independent oracles."""

from __future__ import annotations

from hypothesis import strategies as st


def realizations(min_size: int = 0, max_size: int = 30):
    return st.lists(
        st.floats(min_value=1e-9, max_value=1 - 1e-9, allow_nan=False),
        min_size=min_size,
        max_size=max_size,
        unique=True,
    )


@st.composite
def standard_tableaux(draw, max_n: int = 25):
    """Random standard tableau grown one outer corner at a time."""
    n = draw(st.integers(0, max_n))
    rows: list[list[int]] = []
    for k in range(1, n + 1):
        choices = [i for i in range(len(rows) + 1) if i in (0, len(rows)) or len(rows[i]) < len(rows[i - 1])]
        i = draw(st.sampled_from(choices))
        if i == len(rows):
            rows.append([k])
        else:
            rows[i].append(k)
    return rows


def schensted(word):
    """Textbook row insertion by linear scan; independent of the library's bisect version."""
    p: list[list] = []
    q: list[list[int]] = []
    for k, v in enumerate(word, 1):
        r = 0
        while True:
            if r == len(p):
                p.append([v])
                q.append([k])
                break
            bigger = [j for j, u in enumerate(p[r]) if u > v]
            if not bigger:
                p[r].append(v)
                q[r].append(k)
                break
            j = bigger[0]
            p[r][j], v = v, p[r][j]
            r += 1
    return p, q


def naive_prefix_ranks(x):
    return tuple(sum(1 for i in range(k + 1) if x[i] <= x[k]) for k in range(len(x)))
