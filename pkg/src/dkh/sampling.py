"""Random signed Gauss codes for property tests and benchmarks."""
from __future__ import annotations

import random

from .complex import is_admissible
from .diagram import Token, VirtualLinkDiagram

__all__ = ["random_diagram", "random_knot", "random_admissible"]


def random_diagram(rng: random.Random, n_crossings: int, n_components: int = 1,
                   empty_ok: bool = False) -> VirtualLinkDiagram:
    """A uniformly shuffled Gauss code with random signs and passes.

    Every one of the ``2n`` tokens is placed at a random position, then the
    sequence is cut into ``n_components`` pieces.  Pieces may be empty only
    when ``empty_ok`` is set (or there are too few tokens).
    """
    toks = []
    for c in range(1, n_crossings + 1):
        sign = rng.choice((1, -1))
        over_first = rng.random() < 0.5
        toks += [Token(c, over_first, sign), Token(c, not over_first, sign)]
    rng.shuffle(toks)
    k = n_components
    total = len(toks)
    if k <= 1:
        cuts = []
    elif empty_ok or total < k:
        cuts = sorted(rng.randint(0, total) for _ in range(k - 1))
    else:
        cuts = sorted(rng.sample(range(1, total), k - 1))
    bounds = [0] + cuts + [total]
    comps = [toks[bounds[t]:bounds[t + 1]] for t in range(k)] if k > 1 else [toks]
    return VirtualLinkDiagram.from_components(comps)


def random_knot(rng: random.Random, n_crossings: int) -> VirtualLinkDiagram:
    return random_diagram(rng, n_crossings, 1)


def random_admissible(rng: random.Random, n_crossings: int, n_components: int = 1,
                      empty_ok: bool = False, tries: int = 1000) -> VirtualLinkDiagram:
    """Rejection-sample :func:`random_diagram` until the cube squares to zero."""
    for _ in range(tries):
        d = random_diagram(rng, n_crossings, n_components, empty_ok)
        if is_admissible(d):
            return d
    raise RuntimeError(f"no admissible diagram found in {tries} tries")
