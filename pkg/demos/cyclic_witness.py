"""Build the finite structures that witness a blocked implication.

Take a blocking decomposition of n.  Lay out a fixed set S next to one
cycle per part and rotate the cycles: the result is a selector on all
m-subsets that commutes with the rotation, while the rotation moves every
atom outside S.  Transferred to the right permutation model, such a
structure is exactly why RC_m cannot prove RC_n.  If you hand the builder
a decomposition that does not block m, it refuses, and the refusal always
matches the subset-sum verdict.
"""

from ramseychoice import (
    Decomposition,
    NotBlocking,
    blocks,
    build_cyclic_model,
    find_blocking_decomposition,
    verify_equivariance,
    witness_no_invariant_choice,
)


def main():
    d = find_blocking_decomposition(2, 3)
    print(f"RC_2 /=> RC_3, certificate {d}")
    c = build_cyclic_model(2, 1, d)
    print(c.dump())
    ok, _ = verify_equivariance(c)
    print(f"equivariant: {ok}, rotation moves all {d.total} cycle atoms:",
          witness_no_invariant_choice(c, d.total))
    print()

    d = Decomposition([7, 2])
    print(f"a richer example: m = 6, certificate {d}, two fixed atoms")
    c = build_cyclic_model(6, 2, d)
    print(f"domain {len(c.model.domain)} atoms, {len(c.model.sel)} six-subsets selected")
    ok, _ = verify_equivariance(c)
    print(f"equivariant under the order-{c.order} rotation: {ok}")
    print()

    print("the builder is an oracle for blocking:")
    for parts, m in [([4], 2), ([2, 2], 2), ([3, 3], 3), ([5], 3)]:
        d = Decomposition(parts)
        try:
            build_cyclic_model(m, 0, d)
            verdict = "built"
        except NotBlocking as e:
            verdict = f"refused ({e})"
        print(f"  m={m}, {d}: blocks={blocks(d, m)} -> {verdict}")


if __name__ == "__main__":
    main()
