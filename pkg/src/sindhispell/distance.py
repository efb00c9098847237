"""Levenshtein distance over Unicode scalars, unit costs."""

from __future__ import annotations


def edit_distance(a: str, b: str) -> int:
    """Minimum unit-cost insertions/deletions/substitutions turning
    ``a`` into ``b``. Symmetric; zero iff the strings are equal."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i] + [0] * len(b)
        for j, cb in enumerate(b, start=1):
            cur[j] = min(
                cur[j - 1] + 1,
                prev[j] + 1,
                prev[j - 1] + (ca != cb),
            )
        prev = cur
    return prev[-1]
