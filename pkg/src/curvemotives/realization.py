"""Exact realizations of motives and independent literature cross-checks.

The Betti realization sends lam^b h1 (x) L^c to C(2g, b) t^(b+2c); the
Hodge realization sends it to (sum_{p+q=b} C(g,p) C(g,q) u^p v^q) (uv)^c.
Both are additive in the motive and multiplicative where the tensor
product is defined.

Two oracles that never touch the motive algebra validate the theorem-level
constructors: the Atiyah-Bott closed form for the Poincare polynomial of
the moduli space (exact long division, zero remainder required) and
Macdonald's generating function for symmetric powers of the curve
(truncated power-series expansion).  Agreement with the realized motives
is evidence, not tautology.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .core import MotiveClass, _check_genus
from .formulas import sym_power_curve
from .polynomials import BiPolynomial, IntPolynomial


def poincare_polynomial(motive: MotiveClass) -> IntPolynomial:
    """Betti realization: sum of C(2g, b) t^(b+2c) over the term map."""
    g = motive.genus
    coeffs: dict = {}
    for key, mult in motive.items():
        degree = key.lambda_index + 2 * key.lefschetz_power
        coeffs[degree] = coeffs.get(degree, 0) + mult * comb(2 * g, key.lambda_index)
    return IntPolynomial(coeffs, var="t")


def hodge_polynomial(motive: MotiveClass) -> BiPolynomial:
    """Hodge realization; coefficients are the Hodge numbers h^{p,q}."""
    g = motive.genus
    coeffs: dict = {}
    for key, mult in motive.items():
        b, c = key.lambda_index, key.lefschetz_power
        for p in range(0, b + 1):
            pq = (p + c, b - p + c)
            coeffs[pq] = coeffs.get(pq, 0) + mult * comb(g, p) * comb(g, b - p)
    return BiPolynomial(coeffs)


def key_identity_sides(m: int) -> tuple:
    """Both sides of the closing Lefschetz-power identity, as polynomials in x.

    Left side, built termwise with no division:

        sum_{j=0..m-1} sum_{c=0..j} (x^(j+c) + x^(3m-2j+c)) + sum_{c=0..m} x^(m+c)

    Right side as the product of two finite geometric sums,
    (1 + x + ... + x^m)(1 + x^2 + ... + x^2m), which is the divided form
    of (1-x^(m+1))/(1-x) * (1-x^(2m+2))/(1-x^2).
    """
    if m < 1:
        raise ValueError(f"the identity is stated for m >= 1, got {m}")
    lhs_coeffs: dict = {}
    for j in range(0, m):
        for c in range(0, j + 1):
            for e in (j + c, 3 * m - 2 * j + c):
                lhs_coeffs[e] = lhs_coeffs.get(e, 0) + 1
    for c in range(0, m + 1):
        lhs_coeffs[m + c] = lhs_coeffs.get(m + c, 0) + 1
    lhs = IntPolynomial(lhs_coeffs, var="x")
    rhs = IntPolynomial.geometric(m, var="x") * IntPolynomial.geometric(2 * m, step=2, var="x")
    return lhs, rhs


def verify_key_identity(m: int) -> bool:
    """Exact equality of the two sides of the identity, for m >= 1."""
    lhs, rhs = key_identity_sides(m)
    return lhs == rhs


def atiyah_bott_oracle(genus: int) -> IntPolynomial:
    """Poincare polynomial of the moduli space from the classical closed form

        ((1+t^3)^2g - t^2g (1+t)^2g) / ((1-t^2)(1-t^4)),

    computed by expanding both numerator and denominator and dividing
    exactly.  A nonzero remainder would mean a transcription bug.
    """
    _check_genus(genus)
    t = IntPolynomial.monomial(1)
    one = IntPolynomial.one()
    numerator = (one + t**3) ** (2 * genus) - t ** (2 * genus) * (one + t) ** (2 * genus)
    denominator = (one - t**2) * (one - t**4)
    quotient, remainder = divmod(numerator, denominator)
    if not remainder.is_zero:
        raise ArithmeticError(f"division left a remainder at genus {genus}: {remainder}")
    return quotient


def macdonald_oracle(n: int, genus: int) -> IntPolynomial:
    """Coefficient of x^n in the series (1+tx)^2g / ((1-x)(1-t^2 x)).

    Expands the product of the three factors as a power series truncated
    at order n, with IntPolynomial coefficients in t throughout.
    """
    _check_genus(genus)
    if n < 0:
        raise ValueError(f"symmetric power must be >= 0, got {n}")
    binomial_factor = [
        IntPolynomial.monomial(a, comb(2 * genus, a)) if a <= 2 * genus else IntPolynomial.zero()
        for a in range(n + 1)
    ]
    geometric_ones = [IntPolynomial.one() for _ in range(n + 1)]
    geometric_t2 = [IntPolynomial.monomial(2 * k) for k in range(n + 1)]
    series = _convolve_truncated(binomial_factor, geometric_ones, n)
    series = _convolve_truncated(series, geometric_t2, n)
    return series[n]


def _convolve_truncated(a: list, b: list, order: int) -> list:
    out = []
    for i in range(order + 1):
        acc: dict = {}
        for j in range(i + 1):
            for e1, c1 in a[j].items():
                for e2, c2 in b[i - j].items():
                    acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        out.append(IntPolynomial({e: c for e, c in acc.items() if c}))
    return out


@dataclass(frozen=True)
class HodgeBlock:
    """One summand of the symmetric-power decomposition, realized in (u, v)."""

    sym_power: int
    twist: int
    hodge: BiPolynomial

    @property
    def label(self) -> str:
        return f"Sym({self.sym_power})*L^{self.twist}"


@dataclass(frozen=True)
class BlockReport:
    """Per-block Hodge contributions at one genus, plus their sum."""

    genus: int
    blocks: tuple
    total: BiPolynomial

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "blocks": [
                {
                    "sym_power": block.sym_power,
                    "twist": block.twist,
                    "hodge": _bipoly_triples(block.hodge),
                }
                for block in self.blocks
            ],
            "total": _bipoly_triples(self.total),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _bipoly_triples(poly: BiPolynomial) -> list:
    return [[p, q, str(c)] for (p, q), c in poly.items()]


def block_decomposition_report(genus: int) -> BlockReport:
    """Hodge polynomial of every block h(C^(k)) (x) L^twist of the
    symmetric-power decomposition: twists k and 3g-3-2k for k = 0..g-2,
    then the middle block at k = g-1 with twist g-1.  The 2g-1 block
    polynomials sum to the Hodge polynomial of the moduli space.
    """
    _check_genus(genus)
    blocks = []
    for k in range(0, genus - 1):
        sym_hodge = hodge_polynomial(sym_power_curve(k, genus))
        for twist in (k, 3 * genus - 3 - 2 * k):
            blocks.append(
                HodgeBlock(k, twist, sym_hodge * BiPolynomial.monomial(twist, twist))
            )
    middle = hodge_polynomial(sym_power_curve(genus - 1, genus))
    blocks.append(
        HodgeBlock(
            genus - 1,
            genus - 1,
            middle * BiPolynomial.monomial(genus - 1, genus - 1),
        )
    )
    total = BiPolynomial.zero()
    for block in blocks:
        total = total + block.hodge
    return BlockReport(genus=genus, blocks=tuple(blocks), total=total)


def hodge_diamond_rows(poly: BiPolynomial) -> list:
    """Rows of the Hodge diamond: row d lists h^{p,q} with p+q = d,
    p descending, for d = 0..2s where s is the largest exponent."""
    if poly.is_zero:
        return [[0]]
    size = poly.max_exponent()
    rows = []
    for d in range(0, 2 * size + 1):
        rows.append(
            [poly.coefficient(p, d - p) for p in range(min(d, size), max(0, d - size) - 1, -1)]
        )
    return rows


def render_hodge_diamond(poly: BiPolynomial) -> str:
    """Centered triangle layout of the Hodge diamond."""
    rows = hodge_diamond_rows(poly)
    cell = max(len(str(value)) for row in rows for value in row)
    lines = [" ".join(str(value).rjust(cell) for value in row) for row in rows]
    width = max(len(line) for line in lines)
    return "\n".join(line.center(width).rstrip() for line in lines)
