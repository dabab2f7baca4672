"""Deterministic random-instance streams for agreement and property suites."""

import random

from fuzzrel import ImplicationKind, generate_random_system


def iter_random_systems(
    master_seed: int,
    count: int,
    kind: ImplicationKind | None = None,
    max_dim: int = 5,
    decimals: int | None = 2,
):
    """Yield `count` random systems with sizes drawn in 1..max_dim.

    When `kind` is None, each draw picks a kind round-robin so mixed suites
    cover all three implications evenly.
    """
    master = random.Random(master_seed)
    kinds = list(ImplicationKind)
    for index in range(count):
        m = master.randint(1, max_dim)
        n = master.randint(1, max_dim)
        seed = master.randrange(2**32)
        chosen = kind if kind is not None else kinds[index % len(kinds)]
        yield generate_random_system(m, n, chosen, seed, decimals=decimals)


def random_unit_vector(rng: random.Random, length: int, decimals: int | None = 2):
    draw = (lambda: round(rng.random(), decimals)) if decimals is not None else rng.random
    return tuple(draw() for _ in range(length))
