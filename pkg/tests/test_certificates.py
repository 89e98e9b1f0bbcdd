import pytest

from ramseychoice.certificates import (
    Recipe,
    RecipeTrace,
    build_certificate,
    recipe_even_dense,
    recipe_even_gap,
    recipe_fermat_shift,
    recipe_greater,
    recipe_odd,
    recipe_prime_divisor,
    recipe_prime_power,
)
from ramseychoice.decomposition import (
    Decomposition,
    blocks,
    find_blocking_decomposition,
    iter_decompositions,
    provable_by_theorem,
)
from ramseychoice.errors import (
    CertificateSearchFailed,
    NoSuchPrime,
    PreconditionViolated,
)


def test_every_recipe_output_is_verified_blocking():
    # emission policy: a trace only exists if its decomposition checks out
    for m in range(2, 33):
        for n in range(2, 33):
            if provable_by_theorem(m, n):
                continue
            tr = build_certificate(m, n)
            assert tr.decomposition.total == n
            assert blocks(tr.decomposition, m), (m, n)
            assert tr.narrative


def test_trace_constructor_rejects_bad_claims():
    with pytest.raises(RuntimeError):
        RecipeTrace.verified(2, 4, Recipe.EXHAUSTIVE, Decomposition([4]), ("x",))
    with pytest.raises(RuntimeError):
        # wrong total
        RecipeTrace.verified(3, 9, Recipe.ODD, Decomposition([7, 3]), ("x",))


def test_trace_json_shape():
    tr = build_certificate(6, 9)
    obj = tr.to_json_obj()
    assert list(obj) == ["m", "n", "recipe", "parts", "narrative", "verified"]
    assert obj["m"] == 6 and obj["n"] == 9
    assert obj["recipe"] == "OddCase"
    assert obj["parts"] == [7, 2]
    assert obj["verified"] is True


def test_recipe_greater():
    assert recipe_greater(5, 3).decomposition.parts == (3,)
    assert recipe_greater(17, 2).decomposition.parts == (2,)
    with pytest.raises(PreconditionViolated):
        recipe_greater(3, 5)
    with pytest.raises(PreconditionViolated):
        recipe_greater(4, 4)


def test_recipe_prime_divisor():
    assert recipe_prime_divisor(2, 10).decomposition.parts == (5, 5)
    assert recipe_prime_divisor(2, 6).decomposition.parts == (3, 3)
    assert recipe_prime_divisor(9, 10).decomposition.parts == (2, 2, 2, 2, 2)
    assert recipe_prime_divisor(12, 14).decomposition.parts == (7, 7)
    with pytest.raises(NoSuchPrime):
        recipe_prime_divisor(2, 4)
    with pytest.raises(NoSuchPrime):
        recipe_prime_divisor(6, 8)
    with pytest.raises(NoSuchPrime):
        recipe_prime_divisor(30, 8)


def test_recipe_prime_power():
    assert recipe_prime_power(2, 8).decomposition.parts == (5, 3)
    assert recipe_prime_power(2, 16).decomposition.parts == (13, 3)
    assert recipe_prime_power(2, 32).decomposition.parts == (29, 3)
    assert recipe_prime_power(3, 9).decomposition.parts == (5, 4)
    # the (2, 4) corner has no room after the Bertrand prime
    with pytest.raises(PreconditionViolated):
        recipe_prime_power(2, 4)
    with pytest.raises(PreconditionViolated):
        recipe_prime_power(2, 12)
    with pytest.raises(PreconditionViolated):
        recipe_prime_power(4, 8)


def test_recipe_odd_branches():
    # triple used directly
    assert recipe_odd(6, 7).decomposition.parts == (3, 2, 2)
    assert recipe_odd(4, 9).decomposition.parts == (3, 3, 3)
    # all-equal triple shifted to 3p-2 plus 2
    assert recipe_odd(3, 9).decomposition.parts == (7, 2)
    assert recipe_odd(6, 9).decomposition.parts == (7, 2)
    # single part when m is coprime to everything below n
    assert recipe_odd(5, 11).decomposition.parts == (11,)
    assert recipe_odd(4, 7).decomposition.parts == (7,)
    with pytest.raises(PreconditionViolated):
        recipe_odd(4, 10)
    with pytest.raises(PreconditionViolated):
        recipe_odd(2, 5)


def test_recipe_odd_explicit_triple():
    from ramseychoice.numtheory import goldbach_triples

    ts = goldbach_triples(13)
    tr = recipe_odd(2, 13, triple=ts[0])
    assert tr.decomposition.parts == (7, 3, 3)
    assert blocks(tr.decomposition, 2)


def test_recipe_fermat_shift():
    assert recipe_fermat_shift(4, 8).decomposition.parts == (5, 3)
    assert recipe_fermat_shift(6, 8).decomposition.parts == (5, 3)
    assert recipe_fermat_shift(16, 32).decomposition.parts == (17, 15)
    assert recipe_fermat_shift(28, 32).decomposition.parts == (27, 5)
    with pytest.raises(PreconditionViolated):
        recipe_fermat_shift(3, 9)  # odd m
    with pytest.raises(PreconditionViolated):
        recipe_fermat_shift(2, 4)  # m - 1 below 2
    with pytest.raises(PreconditionViolated):
        recipe_fermat_shift(6, 12)  # gap 6 is not a power of two
    with pytest.raises(PreconditionViolated):
        recipe_fermat_shift(24, 56)  # gap 32, but 33 is composite


def test_recipe_even_gap():
    assert recipe_even_gap(4, 10, p=7).decomposition.parts == (7, 3)
    assert recipe_even_gap(2, 10, p=5).decomposition.parts == (5, 5)
    assert recipe_even_gap(6, 16, p=7).decomposition.parts == (7, 5, 2, 2)
    # automatic mode prefers the largest usable prime
    assert recipe_even_gap(4, 10).decomposition.parts == (7, 3)
    assert recipe_even_gap(10, 16).decomposition.parts == (13, 3)
    with pytest.raises(PreconditionViolated):
        recipe_even_gap(2, 4)
    with pytest.raises(PreconditionViolated):
        recipe_even_gap(4, 10, p=9)
    with pytest.raises(PreconditionViolated):
        recipe_even_gap(4, 10, p=11)


def test_recipe_even_dense():
    assert recipe_even_dense(6, 8).decomposition.parts == (5, 3)
    assert recipe_even_dense(8, 14).decomposition.parts == (11, 3)
    assert recipe_even_dense(10, 16).decomposition.parts == (11, 5)
    assert recipe_even_dense(20, 26).decomposition.parts == (17, 7, 2)
    assert recipe_even_dense(20, 32).decomposition.parts == (17, 5, 5, 5)
    with pytest.raises(PreconditionViolated):
        recipe_even_dense(4, 10)  # m below n/2
    with pytest.raises(PreconditionViolated):
        recipe_even_dense(5, 8)  # odd m
    with pytest.raises(PreconditionViolated):
        recipe_even_dense(8, 8)


def test_dense_outputs_block_wherever_defined():
    for n in range(6, 65, 2):
        for m in range(2, n, 2):
            try:
                tr = recipe_even_dense(m, n)
            except PreconditionViolated:
                continue
            assert tr.decomposition.total == n
            assert blocks(tr.decomposition, m), (m, n)


def test_dispatch_frozen_choices():
    table = {
        (2, 8): (Recipe.PRIME_POWER, (5, 3)),
        (2, 16): (Recipe.PRIME_POWER, (13, 3)),
        (3, 9): (Recipe.ODD, (7, 2)),
        (5, 11): (Recipe.ODD, (11,)),
        (6, 7): (Recipe.ODD, (3, 2, 2)),
        (4, 10): (Recipe.PRIME_DIVISOR, (5, 5)),
        (12, 14): (Recipe.PRIME_DIVISOR, (7, 7)),
        (4, 8): (Recipe.FERMAT_SHIFT, (5, 3)),
        (16, 32): (Recipe.FERMAT_SHIFT, (17, 15)),
        (10, 16): (Recipe.EVEN_GAP, (13, 3)),
        (4, 16): (Recipe.EVEN_GAP, (13, 3)),
        (5, 3): (Recipe.GREATER, (3,)),
    }
    for (m, n), (recipe, parts) in table.items():
        tr = build_certificate(m, n)
        assert tr.recipe == recipe, (m, n)
        assert tr.decomposition.parts == parts, (m, n)


def test_build_certificate_rejects_provable_and_bad_pairs():
    with pytest.raises(PreconditionViolated):
        build_certificate(2, 4)
    with pytest.raises(PreconditionViolated):
        build_certificate(7, 7)
    with pytest.raises(PreconditionViolated):
        build_certificate(0, 5)
    with pytest.raises(CertificateSearchFailed):
        build_certificate(3, 1)


def test_exhaustive_fallback_path(monkeypatch):
    from ramseychoice import certificates as ct

    monkeypatch.setattr(ct, "_DISPATCH", ())
    tr = ct.build_certificate(3, 7)
    assert tr.recipe == Recipe.EXHAUSTIVE
    assert tr.decomposition.parts == (7,)
    assert blocks(tr.decomposition, 3)
    # the fallback still scans in the canonical order
    first = next(d for d in iter_decompositions(7) if blocks(d, 3))
    assert tr.decomposition == first


def test_dispatch_agrees_with_exhaustive_search_on_blocking():
    # the recipe result and the direct scan may differ in the decomposition
    # they pick, but never on whether one exists
    for m in range(2, 26):
        for n in range(2, 26):
            direct = find_blocking_decomposition(m, n)
            if provable_by_theorem(m, n):
                assert direct is None
                continue
            tr = build_certificate(m, n)
            assert direct is not None
            assert blocks(tr.decomposition, m)
