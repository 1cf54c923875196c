"""Brute-force oracle for the desk fixtures.

Recomputes every quantity by exact rational enumeration over the outcomes,
without touching the library, and prints it. Weights are read as decimals and
converted with ``Fraction.limit_denominator`` so 1/6 stays 1/6.
"""

import json
import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def _fraction(value: float) -> Fraction:
    return Fraction(value).limit_denominator(10**6)


def enumerate_problem(raw: dict) -> dict:
    weights = [_fraction(w) for w in raw["weights"]]
    blocks = [set(b) for b in raw["partition"]]
    event = set(raw["event"])
    n = len(weights)

    def p(outcomes) -> Fraction:
        return sum((weights[i] for i in outcomes), Fraction(0))

    p_blocks = [p(b) for b in blocks]
    cond = [p(event & b) / pb for b, pb in zip(blocks, p_blocks)]
    indicator = [Fraction(1 if i in event else 0) for i in range(n)]
    xi = [Fraction(0)] * n
    for b, alpha in zip(blocks, cond):
        for i in b:
            xi[i] = alpha

    members = []
    for size in range(len(blocks) + 1):
        for chosen in combinations(range(len(blocks)), size):
            members.append(set().union(*(blocks[t] for t in chosen)))

    energy = sum(
        (Fraction(1, 2) * xi[i] ** 2 - xi[i] * indicator[i]) * weights[i] for i in range(n)
    )
    return {
        "p_event": p(event),
        "p_blocks": p_blocks,
        "cond_probs": cond,
        "total_probability": sum((c * pb for c, pb in zip(cond, p_blocks)), Fraction(0)),
        "members": len(members),
        "energy_at_minimizer": energy,
        "property_iii_max_violation": max(
            abs(p(m & event) - sum((xi[i] * weights[i] for i in m), Fraction(0)))
            for m in members
        ),
    }


def main(argv=None):
    names = argv if argv is not None else sys.argv[1:] or ["die6", "skew"]
    for name in names:
        raw = json.loads((FIXTURES / f"{name}.json").read_text(encoding="utf-8"))
        print(f"{name}:")
        for key, value in enumerate_problem(raw).items():
            print(f"  {key}: {value}")


if __name__ == "__main__":
    main()
