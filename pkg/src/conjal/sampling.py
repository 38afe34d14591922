"""Deterministic samplers for property checks.

Coordinates are small integers (``|c| <= 3`` by default) drawn from a
``random.Random`` seeded from ``CONJAL_SEED`` (default 0).
"""

from __future__ import annotations

import itertools
import os
import random

from .algebra import AlgebraSpec, Element

COORD_BOUND = 3


def default_seed() -> int:
    return int(os.environ.get("CONJAL_SEED", "0"))


def rng(seed: int | None = None, salt: str = "") -> random.Random:
    base = default_seed() if seed is None else seed
    return random.Random(f"{base}:{salt}")


def random_element(spec: AlgebraSpec, r: random.Random, bound: int = COORD_BOUND) -> Element:
    return spec.element(r.randint(-bound, bound) for _ in range(spec.dim))


def random_imaginary(spec: AlgebraSpec, r: random.Random, bound: int = COORD_BOUND) -> Element:
    return spec.element([0] + [r.randint(-bound, bound) for _ in range(spec.dim - 1)])


def random_nonzero(spec: AlgebraSpec, r: random.Random, bound: int = COORD_BOUND) -> Element:
    while True:
        a = random_element(spec, r, bound)
        if not a.is_zero():
            return a


def all_elements(spec: AlgebraSpec):
    """Every element of an algebra over ``Z/n``."""
    ring = spec.scalar
    if ring.kind != "ModN":
        raise ValueError("exhaustive enumeration needs finite scalars")
    for coords in itertools.product(range(ring.n), repeat=spec.dim):
        yield spec.element(coords)
