"""Seeded random instances."""
from __future__ import annotations

import random
from typing import Optional

from .errors import ParameterError
from .model import Instance, validate_instance

VARIANTS = ("general", "m1", "n1")


def generate_instance(
    seed: int,
    n: int,
    m_set: int,
    machines: int,
    max_weight: Optional[int] = None,
    variant: str = "general",
    density: float = 0.4,
) -> Instance:
    """Random instance with ``n`` N-elements and ``m_set`` M-elements.

    ``general`` draws weights from ``1..max_weight`` and includes each
    M-element in each M(i) with probability ``density``; M-elements left
    uncovered are attached to a random N-element.  ``m1`` and ``n1`` are
    unit-weight and follow the variants' association shape; ``max_weight``
    must then be omitted or 1.  Output is a pure function of the arguments.
    """
    if variant not in VARIANTS:
        raise ParameterError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    if n < 2 or m_set < 1:
        raise ParameterError("need n >= 2 and m_set >= 1")
    if not 1 <= machines < n:
        raise ParameterError(f"need 1 <= machines < n, got machines={machines}, n={n}")
    if not 0.0 <= density <= 1.0:
        raise ParameterError("density must lie in [0, 1]")
    rng = random.Random(seed)

    if variant == "general":
        if max_weight is None or max_weight < 1:
            raise ParameterError("general instances need max_weight >= 1")
        n_weights = [rng.randint(1, max_weight) for _ in range(n)]
        m_weights = [rng.randint(1, max_weight) for _ in range(m_set)]
        assoc = [{j for j in range(1, m_set + 1) if rng.random() < density} for _ in range(n)]
        covered = set().union(*assoc)
        for j in range(1, m_set + 1):
            if j not in covered:
                assoc[rng.randrange(n)].add(j)
    else:
        if max_weight not in (None, 1):
            raise ParameterError(f"{variant} instances are unit-weight; max_weight must be 1 or omitted")
        n_weights = [1] * n
        m_weights = [1] * m_set
        if variant == "m1":
            if n < m_set:
                raise ParameterError("m1 instances need n >= m_set so every M-element has a holder")
            # first m_set shuffled positions guarantee coverage
            owner = list(range(1, m_set + 1)) + [rng.randint(1, m_set) for _ in range(n - m_set)]
            rng.shuffle(owner)
            assoc = [{j} for j in owner]
        else:
            assoc = [set() for _ in range(n)]
            for j in range(1, m_set + 1):
                assoc[rng.randrange(n)].add(j)

    inst = Instance(
        n_count=n,
        m_count=m_set,
        machines=machines,
        n_weights=tuple(n_weights),
        m_weights=tuple(m_weights),
        assoc=tuple(frozenset(s) for s in assoc),
    )
    return validate_instance(inst)
