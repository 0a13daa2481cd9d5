"""Shared strategies, generators and independent oracles for the suite."""

from __future__ import annotations

import random

import hypothesis.strategies as st

from curvemotives import MotiveClass, direct_sum, lefschetz, sym_power_curve, tensor, zero
from curvemotives.dsl import (
    Curve,
    LambdaH1,
    Lefschetz,
    ModuliConjectural,
    ModuliDelBano,
    Power,
    Product,
    Sum,
    SymPower,
    Unit,
)
from curvemotives.polynomials import IntPolynomial


# --- hypothesis strategies --------------------------------------------------

def _terms(draw, genus: int, tate: bool, max_terms: int) -> dict:
    count = draw(st.integers(min_value=0, max_value=max_terms))
    terms: dict = {}
    for _ in range(count):
        b = 0 if tate else draw(st.integers(min_value=0, max_value=2 * genus))
        c = draw(st.integers(min_value=0, max_value=8))
        m = draw(st.integers(min_value=1, max_value=4))
        terms[(b, c)] = terms.get((b, c), 0) + m
    return terms


@st.composite
def motives(draw, genus: int | None = None, tate: bool = False, max_terms: int = 6):
    g = genus if genus is not None else draw(st.integers(min_value=2, max_value=5))
    return MotiveClass(g, _terms(draw, g, tate, max_terms))


@st.composite
def motive_pairs(draw, tate_second: bool = False):
    """Two motives at the same genus; optionally force the second Tate."""
    g = draw(st.integers(min_value=2, max_value=5))
    a = MotiveClass(g, _terms(draw, g, False, 6))
    b = MotiveClass(g, _terms(draw, g, tate_second, 6))
    return a, b


@st.composite
def motive_triples(draw, tate_last_two: bool = False):
    g = draw(st.integers(min_value=2, max_value=4))
    a = MotiveClass(g, _terms(draw, g, False, 5))
    b = MotiveClass(g, _terms(draw, g, tate_last_two, 5))
    c = MotiveClass(g, _terms(draw, g, tate_last_two, 5))
    return a, b, c


_ATOMS = st.one_of(
    st.just(Unit()),
    st.just(Lefschetz(1)),
    st.just(LambdaH1(1)),
    st.builds(LambdaH1, st.integers(min_value=0, max_value=9)),
    st.just(Curve()),
    st.builds(SymPower, st.integers(min_value=0, max_value=9)),
    st.just(ModuliDelBano()),
    st.just(ModuliConjectural()),
)

# parser-reachable trees: every atom is denotable by the grammar
expressions = st.recursive(
    _ATOMS,
    lambda children: st.one_of(
        st.builds(Sum, children, children),
        st.builds(Product, children, children),
        st.builds(Power, children, st.integers(min_value=0, max_value=5)),
    ),
    max_leaves=25,
)

int_polynomials = st.builds(
    IntPolynomial,
    st.dictionaries(
        st.integers(min_value=0, max_value=12),
        st.integers(min_value=-20, max_value=20),
        max_size=8,
    ),
)


# --- deterministic tree generator (for the >= 1000 round-trip sweep) --------

def random_expression(rng: random.Random, depth: int = 4):
    """Seeded random parser-reachable tree."""
    if depth <= 0 or rng.random() < 0.35:
        choice = rng.randrange(8)
        if choice == 0:
            return Unit()
        if choice == 1:
            return Lefschetz(1)
        if choice == 2:
            return LambdaH1(1)
        if choice == 3:
            return LambdaH1(rng.randrange(10))
        if choice == 4:
            return Curve()
        if choice == 5:
            return SymPower(rng.randrange(10))
        if choice == 6:
            return ModuliDelBano()
        return ModuliConjectural()
    choice = rng.randrange(3)
    if choice == 0:
        return Sum(random_expression(rng, depth - 1), random_expression(rng, depth - 1))
    if choice == 1:
        return Product(random_expression(rng, depth - 1), random_expression(rng, depth - 1))
    return Power(random_expression(rng, depth - 1), rng.randrange(6))


# --- fixed malformed corpus: (source, expected 1-based byte offset) ----------

MALFORMED = [
    ("", 1),
    ("   ", 4),
    ("+", 1),
    ("1 +", 4),
    ("1 + + L", 5),
    ("L *", 4),
    ("L ^", 4),
    ("L^", 3),
    ("L^^2", 3),
    ("lam", 4),
    ("lam(", 5),
    ("lam(2", 6),
    ("lam 2)", 5),
    ("lam()", 5),
    ("Sym", 4),
    ("Sym()", 5),
    ("Sym(2) * (L + 1", 16),
    ("2", 1),
    ("12 + L", 1),
    ("1 2", 3),
    ("M Mconj", 3),
    ("foo", 1),
    ("h2", 1),
    ("()", 2),
    ("(1", 3),
    ("(1))", 4),
    ("1 & L", 3),
    ("h1*", 4),
    ("L^x", 3),
]


# --- mutated builders (checker sanity) ---------------------------------------

def mutated_conjectural(genus: int) -> MotiveClass:
    """Symmetric-power form with the dual twist 3g-3-2k bumped to 3g-2-2k."""
    total = zero(genus)
    for k in range(0, genus - 1):
        twists = direct_sum(lefschetz(genus, k), lefschetz(genus, 3 * genus - 2 - 2 * k))
        total = direct_sum(total, tensor(sym_power_curve(k, genus), twists))
    last = tensor(sym_power_curve(genus - 1, genus), lefschetz(genus, genus - 1))
    return direct_sum(total, last)


def mutated_identity_lhs(m: int) -> IntPolynomial:
    """Left side of the key identity with x^(3m-2j+c) bumped by one."""
    coeffs: dict = {}
    for j in range(0, m):
        for c in range(0, j + 1):
            for e in (j + c, 3 * m - 2 * j + c + 1):
                coeffs[e] = coeffs.get(e, 0) + 1
    for c in range(0, m + 1):
        coeffs[m + c] = coeffs.get(m + c, 0) + 1
    return IntPolynomial(coeffs, var="x")


# --- independent enumeration oracle for symmetric powers ---------------------

def brute_force_sym_terms(n: int, genus: int) -> dict:
    """Term map of the n-th symmetric power by enumerating all triples
    a + b + c = n and dropping the vanishing b > 2g classes."""
    terms: dict = {}
    for a in range(n + 1):
        for b in range(n - a + 1):
            c = n - a - b
            if b > 2 * genus:
                continue
            terms[(b, c)] = terms.get((b, c), 0) + 1
    return terms
