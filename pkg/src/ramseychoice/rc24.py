"""Deriving a choice on 4-sets from a choice on 2-sets.

Given a selector f on the pairs of a 4-set z, every element gets a score:
the number of pairs that choose it.  The six pairs hand out six points, so
the minimum-score set M can never have all four elements.  The rule picks

  * the unique element when |M| = 1,
  * the element left out of M when |M| = 3,
  * f(M) itself when |M| = 2.

The verifier below runs all 64 pair orientations on a 4-set, checks the rule
is total, tallies which case fired, and confirms equivariance under all 24
relabelings.  The score only reads pairs inside z, so the rule is local and
glues over any larger universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import BadSubset


@dataclass(frozen=True)
class PairChoice:
    """A total selector on the 2-subsets of a finite universe."""

    universe: tuple[int, ...]
    choice: dict[tuple[int, ...], int]

    def __post_init__(self):
        pairs = set(combinations(self.universe, 2))
        if set(self.choice) != pairs:
            raise ValueError("choice is not total on the pairs of the universe")
        for p, x in self.choice.items():
            if x not in p:
                raise ValueError(f"choice{p} = {x} is outside the pair")

    @classmethod
    def from_bits(cls, universe, bits: int) -> "PairChoice":
        """Orientation number -> selector; bit i set picks the larger element
        of the i-th pair in lexicographic order."""
        universe = tuple(sorted(universe))
        choice = {}
        for i, p in enumerate(combinations(universe, 2)):
            choice[p] = p[1] if (bits >> i) & 1 else p[0]
        return cls(universe, choice)

    def pick(self, a: int, b: int) -> int:
        if a == b:
            raise ValueError("a pair needs two distinct elements")
        return self.choice[(a, b) if a < b else (b, a)]

    def conjugate(self, perm: dict[int, int]) -> "PairChoice":
        """Relabel by a bijection of the universe."""
        universe = tuple(sorted(perm[x] for x in self.universe))
        choice = {
            tuple(sorted((perm[p[0]], perm[p[1]]))): perm[x]
            for p, x in self.choice.items()
        }
        return PairChoice(universe, choice)


@dataclass(frozen=True)
class ScoreProfile:
    """Per-element pair counts on a 4-set and the argmin data of the rule."""

    z: tuple[int, ...]
    scores: tuple[int, ...]
    min_score: int
    argmin: tuple[int, ...]


def score(z, f2: PairChoice) -> ScoreProfile:
    z = tuple(sorted(z))
    if len(z) != 4 or len(set(z)) != 4:
        raise BadSubset(f"{z} is not a 4-element subset")
    if not set(z) <= set(f2.universe):
        raise BadSubset(f"{z} is not inside the selector's universe")
    counts = {a: 0 for a in z}
    for p in combinations(z, 2):
        counts[f2.pick(*p)] += 1
    scores = tuple(counts[a] for a in z)
    assert sum(scores) == 6
    lo = min(scores)
    argmin = tuple(a for a in z if counts[a] == lo)
    return ScoreProfile(z, scores, lo, argmin)


def choose4(z, f2: PairChoice) -> int:
    """The element of z determined by f2 through the score rule."""
    prof = score(z, f2)
    M = prof.argmin
    if len(M) == 1:
        return M[0]
    if len(M) == 3:
        return next(a for a in prof.z if a not in M)
    if len(M) == 2:
        return f2.pick(M[0], M[1])
    # 4 equal minima would need 4 | 6.
    raise RuntimeError(f"impossible score profile {prof.scores} on {prof.z}")


def verify_rc24(universe=(0, 1, 2, 3)):
    """Exhaust all pair orientations on a 4-set.

    Returns (ok, census) where census counts how often each argmin case
    fired over the 64 orientations.
    """
    universe = tuple(sorted(universe))
    if len(universe) != 4:
        raise ValueError("the exhaustive check runs on a 4-element universe")
    census = {
        "total": 0,
        "case_singleton_min": 0,
        "case_pair_min": 0,
        "case_triple_min": 0,
    }
    ok = True
    for bits in range(64):
        f2 = PairChoice.from_bits(universe, bits)
        prof = score(universe, f2)
        picked = choose4(universe, f2)
        if picked not in universe:
            ok = False
        census["total"] += 1
        key = {
            1: "case_singleton_min",
            2: "case_pair_min",
            3: "case_triple_min",
        }[len(prof.argmin)]
        census[key] += 1
    census["all_cases_covered"] = all(
        census[k] > 0
        for k in ("case_singleton_min", "case_pair_min", "case_triple_min")
    )
    return ok and census["total"] == 64, census


def check_equivariance(universe=(0, 1, 2, 3)):
    """choose4 commutes with every relabeling of the 4-set.

    Returns (ok, first counterexample or None), checking 64 x 24 instances.
    """
    universe = tuple(sorted(universe))
    if len(universe) != 4:
        raise ValueError("the exhaustive check runs on a 4-element universe")
    for bits in range(64):
        f2 = PairChoice.from_bits(universe, bits)
        picked = choose4(universe, f2)
        for images in permutations(universe):
            perm = dict(zip(universe, images))
            g2 = f2.conjugate(perm)
            if choose4(universe, g2) != perm[picked]:
                return False, (bits, images)
    return True, None
