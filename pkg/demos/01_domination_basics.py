"""Domination numbers on familiar graphs, and what a witness looks like.

Run:  python3 demos/01_domination_basics.py
"""

from __future__ import annotations

from domlab import (
    VertexSet,
    complete,
    cycle,
    enumerate_minimum_dominating_sets,
    gamma_bb,
    gamma_oracle,
    grid,
    is_dominating,
    is_minimal_dominating,
    path,
    shrink_to_minimal,
    star,
)


def show(g) -> None:
    r = gamma_bb(g)
    print(f"  {g.name:<9} n={g.n:<3} m={g.m:<3} gamma={r.gamma}  witness={list(r.witness.members)}")


def main() -> None:
    print("Domination numbers of small families")
    print("(gamma = size of a smallest set whose closed neighborhoods cover V)")
    for g in [path(4), path(7), cycle(5), cycle(9), complete(6), star(8), grid(4, 4)]:
        show(g)

    print()
    print("Paths and cycles follow the ceil(n/3) pattern:")
    for n in range(1, 13):
        bb = gamma_bb(path(n)).gamma
        oracle = gamma_oracle(path(n)).gamma
        assert bb == oracle == -(-n // 3)
        print(f"  gamma(P{n}) = {bb}", end="")
        print(" ok" if bb == -(-n // 3) else " UNEXPECTED")

    print()
    print("Minimal (by containment) is weaker than minimum (by size).")
    g = path(4)
    every = VertexSet.full(4)
    shrunk = shrink_to_minimal(g, every)
    print(f"  all of V(P4) dominates: {is_dominating(g, every)}")
    print(f"  but it is not minimal:  {is_minimal_dominating(g, every)}")
    print(f"  greedily shrunk to a minimal set: {set(shrunk.members)}")

    print()
    enum = enumerate_minimum_dominating_sets(path(4), cap=100)
    print(f"P4 has exactly {len(enum.sets)} minimum dominating sets:")
    for s in enum.sets:
        print(f"  {set(s.members)}")


if __name__ == "__main__":
    main()
