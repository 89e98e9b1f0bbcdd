"""Finite selector structures and their automorphism-based witnesses.

A selector structure of arity m picks one element from every m-subset of its
domain.  The cyclic construction here builds such a structure whose domain
splits into a pointwise-fixed set S and disjoint cycles matching a blocking
decomposition; the cycle rotation is then a fixed-point-free automorphism
outside S, which is exactly the shape of witness that separates RC_m from
RC_n.  The same module catalogues small structures up to isomorphism and
grows staged homogeneous models by adding witnesses for every one-point
extension type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations, permutations, product

from .decomposition import Decomposition
from .errors import BoundExceeded, CapExceeded, NotBlocking


@dataclass(frozen=True, eq=True)
class SelectorModel:
    """Arity-m selector: a total choice sel(P) in P over all m-subsets."""

    m: int
    domain: tuple[int, ...]
    sel: dict[tuple[int, ...], int] = field(default_factory=dict)

    def subsets(self):
        return combinations(self.domain, self.m)

    def validate(self) -> None:
        if list(self.domain) != sorted(set(self.domain)):
            raise ValueError(f"domain {self.domain} is not sorted and duplicate-free")
        expected = set(self.subsets())
        if set(self.sel) != expected:
            raise ValueError("sel is not total on the m-subsets of the domain")
        for P, x in self.sel.items():
            if x not in P:
                raise ValueError(f"sel{P} = {x} is not a member of the subset")

    def restrict(self, atoms) -> "SelectorModel":
        """Induced substructure on a subset of the domain (atom ids kept)."""
        atoms = tuple(sorted(atoms))
        if not set(atoms) <= set(self.domain):
            raise ValueError(f"{atoms} is not a subset of the domain")
        sel = {P: self.sel[P] for P in combinations(atoms, self.m)}
        return SelectorModel(self.m, atoms, sel)

    def dump(self) -> str:
        lines = [f"m={self.m} domain={len(self.domain)}"]
        for P in sorted(self.sel):
            lines.append("P={%s} sel=%d" % (",".join(map(str, P)), self.sel[P]))
        return "\n".join(lines)


def empty_model(m: int) -> SelectorModel:
    return SelectorModel(m, (), {})


def find_embeddings(sub: SelectorModel, target: SelectorModel) -> list[tuple[int, ...]]:
    """All structure-preserving injections of sub into target.

    Each embedding is returned as the tuple of images of sub's (sorted)
    domain, in lexicographic order of those tuples.
    """
    if sub.m != target.m:
        raise ValueError("arity mismatch")
    out = []
    for images in permutations(target.domain, len(sub.domain)):
        phi = dict(zip(sub.domain, images))
        if all(
            target.sel[tuple(sorted(phi[a] for a in P))] == phi[x]
            for P, x in sub.sel.items()
        ):
            out.append(images)
    return out


def are_isomorphic(a: SelectorModel, b: SelectorModel) -> bool:
    if a.m != b.m or len(a.domain) != len(b.domain):
        return False
    return bool(find_embeddings(a, b))


@dataclass(frozen=True)
class CyclicAutomorphism:
    """A selector model together with a cycle-structured automorphism.

    sigma fixes every atom in `fixed` and rotates each block in `cycles`
    forward by one position.
    """

    model: SelectorModel
    fixed: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    sigma: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles)) if self.cycles else 1

    def apply(self, x: int) -> int:
        return self.sigma[x]

    def apply_subset(self, P) -> tuple[int, ...]:
        return tuple(sorted(self.sigma[a] for a in P))

    def dump(self) -> str:
        s_line = "S={%s}" % ",".join(map(str, self.fixed))
        cyc = ";".join("(%s)" % ",".join(map(str, c)) for c in self.cycles)
        return self.model.dump() + "\n" + s_line + " cycles=[%s]" % cyc


def build_cyclic_model(m: int, S_size: int, d: Decomposition) -> CyclicAutomorphism:
    """Selector model on S plus one cycle per part of d, equivariant under
    the cycle rotation.

    Subsets meeting S select their least S-element.  A subset P inside the
    cycle region needs a cycle C with gcd(|P n C|, |C|) = 1; P then selects
    the least element of that intersection and the choice is propagated
    along the whole sigma-orbit of P.  When some P has no such cycle the
    per-cycle intersection sizes form an admissible sum hitting m, so the
    decomposition fails to block m; that is reported as NotBlocking, making
    this construction an independent oracle for the blocking test.  If m
    exceeds the domain size there are no m-subsets and the model is valid
    vacuously.
    """
    if m < 1:
        raise ValueError(f"arity must be >= 1, got {m}")
    if S_size < 0:
        raise ValueError(f"S_size must be >= 0, got {S_size}")
    domain = tuple(range(S_size + d.total))
    sigma = list(range(len(domain)))
    cycles = []
    start = S_size
    for length in d.parts:
        block = tuple(range(start, start + length))
        for i, a in enumerate(block):
            sigma[a] = block[(i + 1) % length]
        cycles.append(block)
        start += length

    sel: dict[tuple[int, ...], int] = {}
    for P in combinations(domain, m):
        if P in sel:
            continue
        in_s = [a for a in P if a < S_size]
        if in_s:
            sel[P] = in_s[0]
            continue
        chosen = None
        meets = []
        for block, length in zip(cycles, d.parts):
            inter = [a for a in P if block[0] <= a <= block[-1]]
            meets.append(len(inter))
            if chosen is None and math.gcd(len(inter), length) == 1:
                chosen = inter[0]
        if chosen is None:
            raise NotBlocking(
                f"subset {P} meets the cycles in sizes {tuple(meets)}, each sharing a "
                f"factor with its cycle length; {d} admits m = {m}"
            )
        sel[P] = chosen
        # Push the choice around the orbit of P; the closure check is the
        # well-definedness of the construction.
        Q = tuple(sorted(sigma[a] for a in P))
        v = sigma[chosen]
        while Q != P:
            if Q in sel:
                if sel[Q] != v:
                    raise RuntimeError(f"orbit conflict at {Q}: {sel[Q]} vs {v}")
            else:
                sel[Q] = v
            Q = tuple(sorted(sigma[a] for a in Q))
            v = sigma[v]
        if v != chosen:
            raise RuntimeError(f"orbit of {P} closes on a different selection {v}")

    model = SelectorModel(m, domain, sel)
    return CyclicAutomorphism(model, tuple(range(S_size)), tuple(cycles), tuple(sigma))


def verify_equivariance(c: CyclicAutomorphism):
    """Check sel(sigma^t P) = sigma^t(sel P) for every subset and power.

    Returns (True, None) or (False, (P, t)) with the first counterexample.
    """
    for P, x in c.model.sel.items():
        Q, v = P, x
        for t in range(1, c.order):
            Q = c.apply_subset(Q)
            v = c.sigma[v]
            if c.model.sel.get(Q) != v:
                return False, (P, t)
    return True, None


def witness_no_invariant_choice(c: CyclicAutomorphism, n: int) -> bool:
    """True when sigma moves every atom outside S and that region has size n."""
    region = [a for a in c.model.domain if a not in set(c.fixed)]
    if len(region) != n:
        return False
    region_set = set(region)
    if any(c.sigma[a] not in region_set for a in region):
        return False
    return all(c.sigma[a] != a for a in region)


def verify_gcd_claim(q_max: int):
    """Brute-force the cycle-invariance claim for all cycle lengths up to q_max.

    For each q, each power r of the canonical q-cycle with a non-identity
    action, and each nonempty proper subset fixed setwise by that power, the
    subset size must share a factor with q.  Subsets are bitmasks and the
    cycle power is a rotation, so the check is a full enumeration, not an
    orbit argument.
    """
    if q_max < 2:
        raise ValueError(f"q_max must be >= 2, got {q_max}")
    log = {}
    ok = True
    for q in range(2, q_max + 1):
        full = (1 << q) - 1
        checked = 0
        q_ok = True
        for r in range(1, q):
            for s in range(1, full):
                rotated = ((s << r) | (s >> (q - r))) & full
                if rotated != s:
                    continue
                checked += 1
                if math.gcd(s.bit_count(), q) <= 1:
                    q_ok = False
                    ok = False
        log[q] = {"powers": q - 1, "invariant_proper_subsets": checked, "ok": q_ok}
    return ok, log


@lru_cache(maxsize=128)
def _catalog_tables(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    subsets = list(combinations(range(k), m))
    n_subsets = len(subsets)
    if n_subsets > 20:
        raise BoundExceeded(f"{n_subsets} m-subsets exceed the catalog guard of 20")
    if math.factorial(k) > 50_000:
        raise BoundExceeded(f"{k}! relabelings exceed the catalog guard")
    if n_subsets and m**n_subsets > 2_000_000:
        raise BoundExceeded(f"{m}^{n_subsets} selector assignments exceed the catalog guard")
    index = {s: i for i, s in enumerate(subsets)}
    perms = list(permutations(range(k)))
    seen = set()
    reps = []
    # Assignments arrive in lexicographic order, so the first member of each
    # isomorphism orbit seen here is its least table, the canonical form.
    for table in product(*subsets):
        if table in seen:
            continue
        reps.append(table)
        for perm in perms:
            relabeled = [0] * n_subsets
            for i, s in enumerate(subsets):
                target = tuple(sorted(perm[x] for x in s))
                relabeled[index[target]] = perm[table[i]]
            seen.add(tuple(relabeled))
    return tuple(reps)


def catalog_models(m: int, k: int) -> list[SelectorModel]:
    """All arity-m selector structures on k atoms, one per isomorphism class.

    Representatives carry the lexicographically least sel table of their
    class and are listed in table order.
    """
    if m < 1:
        raise ValueError(f"arity must be >= 1, got {m}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    subsets = list(combinations(range(k), m))
    return [
        SelectorModel(m, tuple(range(k)), dict(zip(subsets, table)))
        for table in _catalog_tables(m, k)
    ]


@dataclass(frozen=True)
class StageCaps:
    """Limits for one staged extension.

    ground_limit bounds the size of the base subsets receiving witnesses; the
    stage driver sets it to the stage index when left as None.
    """

    ground_limit: int | None = None
    max_new_atoms: int = 512
    max_domain: int = 4096


def build_fraisse_stage(m: int, prev: SelectorModel, caps: StageCaps) -> SelectorModel:
    """Extend prev by one witness per (base subset, extension type, embedding).

    For every subset A of the previous domain within the ground limit, every
    cataloged structure R on |A| + 1 atoms, and every embedding of A's induced
    substructure into R, a fresh atom realizes R over A.  Selections inside
    A u {witness} are pulled back through the embedding; every remaining new
    m-subset selects its largest element.  Embeddings are consumed in reverse
    lexicographic order of their image tuples: under the max-element
    completion the highest fresh atoms win all unconstrained comparisons, so
    the last witnesses are the ones pinned down as dominated, which keeps
    every one-point extension type realized at small stage counts.
    """
    prev.validate()
    if prev.domain != tuple(range(len(prev.domain))):
        raise ValueError("previous stage domain must be the initial segment 0..s-1")
    limit = caps.ground_limit if caps.ground_limit is not None else len(prev.domain)
    grounds = []
    for size in range(0, min(limit, len(prev.domain)) + 1):
        grounds.extend(combinations(prev.domain, size))

    planned = []  # (A, R, images)
    for A in grounds:
        sub = prev.restrict(A)
        for R in catalog_models(m, len(A) + 1):
            for images in reversed(find_embeddings(sub, R)):
                if len(planned) >= caps.max_new_atoms:
                    raise CapExceeded(
                        f"stage needs more than {caps.max_new_atoms} fresh atoms",
                        report={"atoms_planned": len(planned), "ground": A},
                    )
                if len(prev.domain) + len(planned) + 1 > caps.max_domain:
                    raise CapExceeded(
                        f"stage domain would exceed {caps.max_domain}",
                        report={"atoms_planned": len(planned), "ground": A},
                    )
                planned.append((A, R, images))

    base = len(prev.domain)
    domain = tuple(range(base + len(planned)))
    sel = dict(prev.sel)
    for offset, (A, R, images) in enumerate(planned):
        a = base + offset
        phi = dict(zip(A, images))
        phi[a] = next(x for x in R.domain if x not in set(images))
        inv = {v: k for k, v in phi.items()}
        for rest in combinations(A, m - 1):
            Q = tuple(sorted(rest + (a,)))
            sel[Q] = inv[R.sel[tuple(sorted(phi[x] for x in Q))]]
    for Q in combinations(domain, m):
        if Q not in sel:
            sel[Q] = Q[-1]  # completion rule: the largest element

    return SelectorModel(m, domain, sel)


def run_fraisse_stages(m: int, stages: int, caps: StageCaps | None = None) -> list[SelectorModel]:
    """Run the staged construction from the empty structure.

    Returns the chain of models, starting with the empty stage.  When caps
    leaves ground_limit unset, stage i uses ground subsets of size <= i.
    """
    caps = caps or StageCaps()
    chain = [empty_model(m)]
    for i in range(stages):
        eff = replace(caps, ground_limit=i) if caps.ground_limit is None else caps
        chain.append(build_fraisse_stage(m, chain[-1], eff))
    return chain


def check_one_point_extension(model: SelectorModel, m: int, k: int):
    """Is every one-point extension of every small substructure realized?

    For each nonempty subset A of the domain with |A| < k, each cataloged
    structure R on |A| + 1 atoms, and each embedding of A's substructure
    into R, some atom outside A must complete the embedding to a copy of R.
    Returns (ok, missing) where missing lists (A, R table, embedding images)
    for every unrealized extension.
    """
    if model.m != m:
        raise ValueError("arity mismatch")
    missing = []
    for size in range(1, k):
        for A in combinations(model.domain, size):
            sub = model.restrict(A)
            for R in catalog_models(m, size + 1):
                for images in find_embeddings(sub, R):
                    spare = next(x for x in R.domain if x not in set(images))
                    if not any(
                        _realizes(model, A, w, R, images, spare)
                        for w in model.domain
                        if w not in set(A)
                    ):
                        missing.append((A, tuple(sorted(R.sel.items())), images))
    return not missing, missing


def _realizes(model, A, w, R, images, spare) -> bool:
    phi = dict(zip(A, images))
    phi[w] = spare
    ext = tuple(sorted(A + (w,)))
    for Q in combinations(ext, model.m):
        if R.sel[tuple(sorted(phi[x] for x in Q))] != phi[model.sel[Q]]:
            return False
    return True
