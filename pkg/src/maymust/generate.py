"""Seeded random instance generation for testing and fuzzing."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import InvalidProbabilityError
from .framework import Framework, NuanceTuple, ratio_tuple

#: Fraction presets used by the `ratio` tuple mode (acceptance 4/5 and 9/10,
#: rejection 2/5 and 1/2, rejection floor 1).
RATIO_PRESET = (Fraction(4, 5), Fraction(9, 10), Fraction(2, 5), Fraction(1, 2))

TUPLE_MODES = ("uniform", "dung", "ratio")


def generate_random(
    n: int,
    edge_prob: Fraction,
    tuple_mode: str = "uniform",
    seed: int = 0,
    maxbound: int | None = None,
) -> Framework:
    """Draw a random framework; identical arguments give identical output.

    Attacks (self-attacks included) appear independently with probability
    edge_prob. Tuple modes: `uniform` draws each scale as a sorted pair of
    integers up to maxbound (defaulting to the argument's indegree + 1),
    `dung` uses ((indegree, indegree), (1, 1)), and `ratio` applies the
    RATIO_PRESET fractions to the indegree.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not 0 <= edge_prob <= 1:
        raise InvalidProbabilityError(f"edge probability {edge_prob} outside [0, 1]")
    mode, _, bound_token = tuple_mode.partition(":")
    if bound_token:
        if maxbound is not None:
            raise ValueError("maxbound given both inline and as an argument")
        maxbound = int(bound_token)
    if mode not in TUPLE_MODES:
        raise ValueError(f"tuple_mode must be one of {TUPLE_MODES}, got {tuple_mode!r}")

    rng = random.Random(seed)
    ids = [f"a{i + 1}" for i in range(n)]
    attacks = [
        (ids[i], ids[j])
        for i in range(n)
        for j in range(n)
        if rng.random() < edge_prob
    ]
    indegree = {a: 0 for a in ids}
    for _, dst in set(attacks):
        indegree[dst] += 1

    arguments = []
    for a in ids:
        d = indegree[a]
        if mode == "dung":
            nt = NuanceTuple(d, d, 1, 1)
        elif mode == "ratio":
            nt = ratio_tuple(d, *RATIO_PRESET, rej_floor=1)
        else:
            top = maxbound if maxbound is not None else d + 1
            acc = sorted((rng.randint(0, top), rng.randint(0, top)))
            rej = sorted((rng.randint(0, top), rng.randint(0, top)))
            nt = NuanceTuple(acc[0], acc[1], rej[0], rej[1])
        arguments.append((a, nt))
    return Framework(arguments, attacks)
