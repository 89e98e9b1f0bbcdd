import pytest

from ramseychoice.errors import BoundExceeded
from ramseychoice.numtheory import (
    GOLDBACH_SEARCH_BOUND,
    GoldbachTriple,
    bertrand_prime,
    gcd,
    goldbach_triples,
    is_prime,
    primes_up_to,
)


def trial_division(x):
    if x < 2:
        return False
    f = 2
    while f * f <= x:
        if x % f == 0:
            return False
        f += 1
    return True


def test_is_prime_matches_trial_division():
    for x in range(0, 2000):
        assert is_prime(x) == trial_division(x), x


def test_is_prime_known_composites():
    # Carmichael numbers and strong-pseudoprime bait
    for x in (561, 1105, 1729, 2465, 2821, 6601, 8911, 3215031751):
        assert not is_prime(x)


def test_is_prime_large_values():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert is_prime(4611686018427387847)


def test_is_prime_rejects_out_of_range():
    with pytest.raises(ValueError):
        is_prime(-1)
    with pytest.raises(ValueError):
        is_prime(2**63 + 1)
    assert is_prime(0) is False
    assert is_prime(1) is False


def test_gcd_basics():
    assert gcd(0, 0) == 0
    assert gcd(0, 9) == 9
    assert gcd(12, 18) == 6
    with pytest.raises(ValueError):
        gcd(-1, 3)


def test_bertrand_prime_in_open_interval():
    for m in range(2, 400):
        p = bertrand_prime(m)
        assert m < p < 2 * m
        assert is_prime(p)
        # it is the smallest such prime
        for x in range(m + 1, p):
            assert not is_prime(x)


def test_primes_up_to():
    ps = primes_up_to(100)
    assert ps == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                  53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
    assert primes_up_to(1) == ()
    assert primes_up_to(2) == (2,)


def test_goldbach_triple_validation():
    t = GoldbachTriple(3, 5, 11, 19)
    assert t.as_tuple() == (3, 5, 11)
    assert t.all_odd
    assert not GoldbachTriple(2, 2, 3, 7).all_odd
    with pytest.raises(ValueError):
        GoldbachTriple(5, 3, 11, 19)  # not sorted
    with pytest.raises(ValueError):
        GoldbachTriple(3, 5, 11, 20)  # wrong sum
    with pytest.raises(ValueError):
        GoldbachTriple(3, 5, 9, 17)  # 9 is not prime


def test_goldbach_triples_lex_order_and_completeness():
    """Compare against a direct cube scan for every odd target up to 99."""
    for n in range(7, 100, 2):
        got = [t.as_tuple() for t in goldbach_triples(n)]
        ps = primes_up_to(n)
        want = [
            (a, b, n - a - b)
            for a in ps
            for b in ps
            if a <= b <= n - a - b and is_prime(n - a - b)
        ]
        assert got == sorted(want), n
        assert got


def test_goldbach_all_odd_preferred_is_stable():
    ts = goldbach_triples(13, all_odd_preferred=True)
    odds = [t for t in ts if t.all_odd]
    evens = [t for t in ts if not t.all_odd]
    assert ts == odds + evens
    # within each block the lex order survives
    assert odds == sorted(odds, key=lambda t: t.as_tuple())
    assert evens == sorted(evens, key=lambda t: t.as_tuple())
    assert odds[0].as_tuple() == (3, 3, 7)


def test_goldbach_triples_rejects_bad_targets():
    with pytest.raises(ValueError):
        goldbach_triples(5)
    with pytest.raises(ValueError):
        goldbach_triples(12)
    with pytest.raises(BoundExceeded):
        goldbach_triples(GOLDBACH_SEARCH_BOUND + 1)
    with pytest.raises(BoundExceeded):
        goldbach_triples(9, bound=7)


def test_goldbach_sweep_never_empty():
    # ternary Goldbach has no odd exceptions above 5 in this range
    for n in range(7, 2000, 2):
        assert goldbach_triples(n)
