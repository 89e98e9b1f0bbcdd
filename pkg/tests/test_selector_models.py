import math
from itertools import combinations, permutations, product

import pytest

from ramseychoice.decomposition import Decomposition, blocks, iter_decompositions
from ramseychoice.errors import BoundExceeded, CapExceeded, NotBlocking
from ramseychoice.selector_models import (
    CyclicAutomorphism,
    SelectorModel,
    StageCaps,
    build_cyclic_model,
    build_fraisse_stage,
    catalog_models,
    check_one_point_extension,
    empty_model,
    find_embeddings,
    run_fraisse_stages,
    verify_equivariance,
    verify_gcd_claim,
    witness_no_invariant_choice,
)


def test_selector_model_validate():
    good = SelectorModel(2, (0, 1, 2), {(0, 1): 0, (0, 2): 2, (1, 2): 1})
    good.validate()
    with pytest.raises(ValueError):
        SelectorModel(2, (1, 0), {}).validate()
    with pytest.raises(ValueError):
        SelectorModel(2, (0, 1), {}).validate()  # missing pair
    with pytest.raises(ValueError):
        SelectorModel(2, (0, 1), {(0, 1): 2}).validate()  # choice outside


def test_restrict_keeps_atom_ids():
    m = SelectorModel(2, (0, 1, 2), {(0, 1): 0, (0, 2): 2, (1, 2): 1})
    r = m.restrict((0, 2))
    assert r.domain == (0, 2)
    assert r.sel == {(0, 2): 2}
    with pytest.raises(ValueError):
        m.restrict((0, 5))


def test_find_embeddings_simple():
    target = SelectorModel(2, (0, 1), {(0, 1): 0})
    # a single unconstrained atom embeds both ways
    assert find_embeddings(SelectorModel(2, (0,), {}), target) == [(0,), (1,)]
    # the 2-atom structure has a trivial automorphism group
    assert find_embeddings(target, target) == [(0, 1)]
    with pytest.raises(ValueError):
        find_embeddings(SelectorModel(3, (0,), {}), target)


def test_cyclic_model_frozen_table():
    c = build_cyclic_model(2, 1, Decomposition([3]))
    assert c.model.domain == (0, 1, 2, 3)
    assert c.fixed == (0,)
    assert c.cycles == ((1, 2, 3),)
    assert c.sigma == (0, 2, 3, 1)
    assert c.order == 3
    assert c.model.sel == {
        (0, 1): 0, (0, 2): 0, (0, 3): 0,
        (1, 2): 1, (1, 3): 3, (2, 3): 2,
    }
    assert c.dump() == (
        "m=2 domain=4\n"
        "P={0,1} sel=0\n"
        "P={0,2} sel=0\n"
        "P={0,3} sel=0\n"
        "P={1,2} sel=1\n"
        "P={1,3} sel=3\n"
        "P={2,3} sel=2\n"
        "S={0} cycles=[(1,2,3)]"
    )


def test_cyclic_model_refuses_exactly_the_non_blockers():
    for n in range(2, 9):
        for d in iter_decompositions(n):
            for m in range(1, 9):
                for s in range(3):
                    if blocks(d, m):
                        c = build_cyclic_model(m, s, d)
                        c.model.validate()
                        ok, counter = verify_equivariance(c)
                        assert ok, (m, s, d, counter)
                        assert witness_no_invariant_choice(c, n)
                    else:
                        with pytest.raises(NotBlocking):
                            build_cyclic_model(m, s, d)


def test_cyclic_model_vacuous_when_arity_exceeds_domain():
    c = build_cyclic_model(9, 0, Decomposition([2, 2]))
    assert c.model.sel == {}
    assert c.order == 2
    c = build_cyclic_model(7, 1, Decomposition([3, 2]))
    assert c.model.sel == {}
    assert c.order == 6
    # at m = |domain| the single full subset still picks from S
    c = build_cyclic_model(6, 1, Decomposition([3, 2]))
    assert c.model.sel == {(0, 1, 2, 3, 4, 5): 0}


def test_cyclic_model_rejects_bad_args():
    with pytest.raises(ValueError):
        build_cyclic_model(0, 1, Decomposition([3]))
    with pytest.raises(ValueError):
        build_cyclic_model(2, -1, Decomposition([3]))


def test_equivariance_detects_tampering():
    c = build_cyclic_model(2, 0, Decomposition([5]))
    sel = dict(c.model.sel)
    p = (0, 1)
    sel[p] = 1 - sel[p] if sel[p] in (0, 1) else 0
    broken = CyclicAutomorphism(
        SelectorModel(2, c.model.domain, sel), c.fixed, c.cycles, c.sigma
    )
    ok, counter = verify_equivariance(broken)
    assert not ok
    assert counter is not None


def test_witness_rejects_wrong_region_or_fixed_points():
    c = build_cyclic_model(2, 1, Decomposition([3]))
    assert witness_no_invariant_choice(c, 3)
    assert not witness_no_invariant_choice(c, 4)
    # identity on the region is not a usable witness
    frozen = CyclicAutomorphism(c.model, c.fixed, c.cycles, (0, 1, 2, 3))
    assert not witness_no_invariant_choice(frozen, 3)


def rotation_recount(q):
    """Tuple-based recount of invariant proper subsets, avoiding bitmasks."""
    atoms = range(q)
    count = 0
    violations = []
    for r in range(1, q):
        for size in range(1, q):
            for sub in combinations(atoms, size):
                image = {(i + r) % q for i in sub}
                if image == set(sub):
                    count += 1
                    if math.gcd(size, q) <= 1:
                        violations.append((r, sub))
    return count, violations


def test_gcd_claim_matches_independent_recount():
    ok, log = verify_gcd_claim(8)
    assert ok
    for q in range(2, 9):
        count, violations = rotation_recount(q)
        assert log[q]["invariant_proper_subsets"] == count, q
        assert not violations


def test_gcd_claim_frozen_counts():
    ok, log = verify_gcd_claim(12)
    assert ok
    got = {q: v["invariant_proper_subsets"] for q, v in log.items()}
    assert got == {2: 0, 3: 0, 4: 2, 5: 0, 6: 10, 7: 0, 8: 18,
                   9: 12, 10: 38, 11: 0, 12: 106}
    # prime cycles admit no proper invariant subsets at all
    for q in (2, 3, 5, 7, 11):
        assert got[q] == 0
    with pytest.raises(ValueError):
        verify_gcd_claim(1)


def orbit_of(table, subsets, k):
    index = {s: i for i, s in enumerate(subsets)}
    out = set()
    for perm in permutations(range(k)):
        relabeled = [0] * len(subsets)
        for i, s in enumerate(subsets):
            target = tuple(sorted(perm[x] for x in s))
            relabeled[index[target]] = perm[table[i]]
        out.add(tuple(relabeled))
    return out


def test_catalog_counts_frozen():
    for k, want in [(0, 1), (1, 1), (2, 1), (3, 2), (4, 4), (5, 12), (6, 56)]:
        assert len(catalog_models(2, k)) == want, k
    assert len(catalog_models(3, 3)) == 1
    assert len(catalog_models(3, 4)) == 6
    assert len(catalog_models(1, 4)) == 1
    assert len(catalog_models(4, 3)) == 1  # no m-subsets at all


def test_catalog_counts_against_full_orbit_partition():
    """Second oracle: partition the whole table space into orbits directly."""
    for m, k in [(2, 3), (2, 4), (3, 4)]:
        subsets = list(combinations(range(k), m))
        all_tables = set(product(*subsets))
        orbits = []
        left = set(all_tables)
        while left:
            t = left.pop()
            orb = orbit_of(t, subsets, k)
            orbits.append(orb)
            left -= orb
        assert sum(len(o) for o in orbits) == len(all_tables)
        assert len(orbits) == len(catalog_models(m, k)), (m, k)


def test_catalog_reps_are_lex_least_and_valid():
    for m, k in [(2, 3), (2, 4), (3, 4)]:
        subsets = list(combinations(range(k), m))
        for mod in catalog_models(m, k):
            mod.validate()
            table = tuple(mod.sel[s] for s in subsets)
            assert table == min(orbit_of(table, subsets, k))


def test_catalog_guards():
    with pytest.raises(BoundExceeded):
        catalog_models(2, 7)  # 21 pair-subsets
    with pytest.raises(BoundExceeded):
        catalog_models(3, 6)  # 3^20 assignments
    with pytest.raises(BoundExceeded):
        catalog_models(1, 9)  # 9! relabelings
    with pytest.raises(ValueError):
        catalog_models(0, 3)
    with pytest.raises(ValueError):
        catalog_models(2, -1)


def test_fraisse_stage_sizes_and_f2_table():
    chain = run_fraisse_stages(2, 2)
    assert [len(m.domain) for m in chain] == [0, 1, 4]
    f2 = chain[-1]
    f2.validate()
    assert f2.sel == {
        (0, 1): 1, (0, 2): 2, (0, 3): 0,
        (1, 2): 2, (1, 3): 3, (2, 3): 3,
    }
    # every atom wins somewhere and loses somewhere
    for a in f2.domain:
        outcomes = {f2.sel[p] == a for p in f2.sel if a in p}
        assert outcomes == {True, False}, a


def test_fraisse_third_stage_size():
    chain = run_fraisse_stages(2, 3)
    assert [len(m.domain) for m in chain] == [0, 1, 4, 49]
    chain[-1].validate()


def test_fraisse_stage_caps():
    with pytest.raises(CapExceeded) as info:
        run_fraisse_stages(2, 3, StageCaps(max_new_atoms=10))
    assert info.value.report is not None
    with pytest.raises(CapExceeded):
        run_fraisse_stages(2, 3, StageCaps(max_domain=20))


def test_fraisse_stage_ground_limit_zero():
    prev = run_fraisse_stages(2, 1)[-1]
    nxt = build_fraisse_stage(2, prev, StageCaps(ground_limit=0))
    assert nxt.domain == (0, 1)
    assert nxt.sel == {(0, 1): 1}


def test_fraisse_stage_rejects_gappy_domain():
    bad = SelectorModel(2, (0, 2), {(0, 2): 0})
    with pytest.raises(ValueError):
        build_fraisse_stage(2, bad, StageCaps(ground_limit=1))


def test_one_point_extension_check():
    chain = run_fraisse_stages(2, 2)
    ok, missing = check_one_point_extension(chain[-1], 2, 2)
    assert ok and missing == []
    # one atom cannot realize both orientations over a point
    ok, missing = check_one_point_extension(chain[1], 2, 2)
    assert not ok and missing
    # vacuous at k = 1: there is no nonempty subset below size 1
    ok, missing = check_one_point_extension(empty_model(2), 2, 1)
    assert ok
    with pytest.raises(ValueError):
        check_one_point_extension(chain[-1], 3, 2)
