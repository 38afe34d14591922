"""Exact sparse linear algebra over a scalar field.

Vectors are dicts ``{index: raw value}`` without zero entries.  Elimination is
incremental with a fixed pivot rule (smallest index with a nonzero entry), so
results are deterministic for a given column order.
"""

from __future__ import annotations

from typing import Hashable, Iterable

from .scalar import ScalarRing


def _axpy(ring: ScalarRing, y: dict, a, x: dict):
    """y += a*x in place, dropping zeros."""
    red = ring.reduce
    for k, v in x.items():
        s = red(y.get(k, 0) + a * v)
        if s == 0:
            y.pop(k, None)
        else:
            y[k] = s


class SpanSolver:
    """Row-echelon basis of a span, remembering how each row was combined.

    ``add(label, vec)`` inserts a generator; ``solve(target)`` returns a dict
    ``{label: coefficient}`` expressing ``target`` in the generators, or
    ``None`` if ``target`` is outside the span.
    """

    def __init__(self, ring: ScalarRing, order=None):
        if not ring.is_field:
            raise ValueError(f"exact solving needs a field, got {ring}")
        self.ring = ring
        self._key = order or (lambda k: k)
        self._rows: dict = {}  # pivot -> (vec normalized to pivot 1, combination)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: dict, combo: dict):
        ring = self.ring
        vec = dict(vec)
        while vec:
            pivot = min(vec, key=self._key)
            row = self._rows.get(pivot)
            if row is None:
                return pivot, vec, combo
            factor = ring.reduce(-vec[pivot])
            _axpy(ring, vec, factor, row[0])
            _axpy(ring, combo, factor, row[1])
        return None, vec, combo

    def add(self, label: Hashable, vec: dict) -> bool:
        """Insert a generator; returns False if it was already in the span."""
        ring = self.ring
        pivot, vec, combo = self._reduce(vec, {label: ring.one()})
        if pivot is None:
            return False
        inv = ring.inv(vec[pivot])
        vec = {k: ring.reduce(v * inv) for k, v in vec.items()}
        combo = {k: ring.reduce(v * inv) for k, v in combo.items()}
        self._rows[pivot] = (vec, combo)
        return True

    def solve(self, target: dict):
        ring = self.ring
        # reduce -target; the accumulated combination then equals target
        neg = {k: ring.reduce(-v) for k, v in target.items()}
        pivot, rest, combo = self._reduce(neg, {})
        if pivot is not None:
            return None
        return {k: v for k, v in combo.items() if v != 0}


def solve_columns(ring: ScalarRing, columns: Iterable[tuple[Hashable, dict]], target: dict):
    """Solve ``sum_c x_c * column_c = target``; free variables are set to zero."""
    s = SpanSolver(ring)
    for label, col in columns:
        s.add(label, col)
    return s.solve(target)
