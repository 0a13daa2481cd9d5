"""Closed-form motives: symmetric powers of the curve and the rank-2
fixed-determinant moduli space, plus the lambda-coefficient extraction
used to compare the two moduli decompositions termwise.

``moduli_motive_delbano`` is del Bano's closed form

    h(M) = (+)_{k=0..g} lam^k h1 (x) (1 (+) L (+) ... (+) L^(g-k-1))
                               (x) (1 (+) L^2 (+) ... (+) L^(2g-2k-2)) (x) L^k

with the convention that an empty geometric factor (upper bound below
zero) makes the whole summand vanish, so the k = g term contributes
nothing.  ``moduli_motive_conjectural`` is the symmetric-power form

    h(M) = (+)_{k=0..g-2} h(C^(k)) (x) (L^k (+) L^(3g-3-2k))
                 (+)  h(C^(g-1)) (x) L^(g-1)

and the two agree for every genus; ``proof_chain_check`` verifies the
agreement one lambda-coefficient at a time, including the reindexed
reduction of the coefficient to an explicit Lefschetz sum.
"""

from __future__ import annotations

from functools import lru_cache

from .core import (
    MotiveClass,
    _check_genus,
    direct_sum,
    lambda_h1,
    lefschetz,
    tensor,
    zero,
)


def _tate_geometric(genus: int, top: int, step: int = 1) -> MotiveClass:
    """1 (+) L^step (+) ... (+) L^top; the zero motive when top < 0."""
    return MotiveClass(genus, {(0, e): 1 for e in range(0, top + 1, step)})


@lru_cache(maxsize=None)
def sym_power_curve(n: int, genus: int) -> MotiveClass:
    """Motive of the n-th symmetric power of the curve.

    Expands (+)_{a+b+c=n} 1^a (x) lam^b h1 (x) L^c: since 1^a = 1, the
    key (b, c) appears exactly once for every b + c <= n with b <= 2g.
    """
    _check_genus(genus)
    if n < 0:
        raise ValueError(f"symmetric power must be >= 0, got {n}")
    terms = {
        (b, c): 1
        for b in range(0, min(n, 2 * genus) + 1)
        for c in range(0, n - b + 1)
    }
    return MotiveClass(genus, terms)


@lru_cache(maxsize=None)
def moduli_motive_delbano(genus: int) -> MotiveClass:
    """del Bano's closed form for the moduli motive at the given genus."""
    _check_genus(genus)
    total = zero(genus)
    for k in range(0, genus + 1):
        linear = _tate_geometric(genus, genus - k - 1)
        quadratic = _tate_geometric(genus, 2 * genus - 2 * k - 2, step=2)
        summand = tensor(
            tensor(tensor(lambda_h1(genus, k), linear), quadratic),
            lefschetz(genus, k),
        )
        total = direct_sum(total, summand)
    return total


@lru_cache(maxsize=None)
def moduli_motive_conjectural(genus: int) -> MotiveClass:
    """Symmetric-power decomposition of the moduli motive."""
    _check_genus(genus)
    total = zero(genus)
    for k in range(0, genus - 1):
        twists = direct_sum(lefschetz(genus, k), lefschetz(genus, 3 * genus - 3 - 2 * k))
        total = direct_sum(total, tensor(sym_power_curve(k, genus), twists))
    last = tensor(sym_power_curve(genus - 1, genus), lefschetz(genus, genus - 1))
    return direct_sum(total, last)


def lambda_coefficient(motive: MotiveClass, index: int) -> MotiveClass:
    """The Tate polynomial multiplying lam^index h1 in the given motive.

    Reconstruction is exact: summing lam^i h1 (x) lambda_coefficient(m, i)
    over all i recovers m.
    """
    if index < 0:
        raise ValueError(f"lambda index must be >= 0, got {index}")
    return MotiveClass(
        motive.genus,
        {(0, key.lefschetz_power): mult for key, mult in motive.items() if key.lambda_index == index},
    )


def proof_chain_check(genus: int, index: int) -> bool:
    """Termwise comparison of the two moduli decompositions at lam^index.

    Checks that (a) the lambda-coefficient of the symmetric-power form and
    (b) its reduction after reindexing j = k - index,

        L^i (x) [ (+)_{j=0..g-2-i} (+)_{c=0..j} (L^(j+c) (+) L^(3g-3-3i-2j+c))
                  (+) (+)_{c=0..g-1-i} L^(g-1-i+c) ],

    both equal the lambda-coefficient of del Bano's form.
    """
    _check_genus(genus)
    if not 0 <= index <= genus:
        raise ValueError(f"lambda index must satisfy 0 <= i <= g, got i={index}, g={genus}")
    target = lambda_coefficient(moduli_motive_delbano(genus), index)
    direct = lambda_coefficient(moduli_motive_conjectural(genus), index)

    bracket_terms: dict = {}
    def add_power(c: int) -> None:
        key = (0, c)
        bracket_terms[key] = bracket_terms.get(key, 0) + 1

    for j in range(0, genus - 1 - index):
        for c in range(0, j + 1):
            add_power(j + c)
            add_power(3 * genus - 3 - 3 * index - 2 * j + c)
    for c in range(0, genus - index):
        add_power(genus - 1 - index + c)
    reduced = tensor(lefschetz(genus, index), MotiveClass(genus, bracket_terms))

    return direct == target and reduced == target
