"""Sparse exact-integer polynomials in one variable and in (u, v).

Coefficients are plain Python ints, so all arithmetic is arbitrary
precision and exact.  Zero coefficients are never stored.  The variable
name on :class:`IntPolynomial` is presentational only (t for Betti
realizations, x for formal identities) and does not affect equality.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

CoeffsLike = Union[Mapping, Iterable]


def _accumulate(items: Iterable, arity: int) -> dict:
    out: dict = {}
    for exponent, coeff in items:
        if arity == 1:
            key = int(exponent)
            if key < 0:
                raise ValueError(f"negative exponent {key}")
        else:
            key = tuple(int(e) for e in exponent)
            if len(key) != arity or any(e < 0 for e in key):
                raise ValueError(f"bad exponent pair {exponent!r}")
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise ValueError(f"coefficient must be an integer, got {coeff!r}")
        out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v != 0}


class IntPolynomial:
    """Sparse univariate polynomial with exact integer coefficients."""

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs: CoeffsLike = (), var: str = "t"):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        self._coeffs = _accumulate(items, 1)
        self.var = var

    @classmethod
    def _raw(cls, coeffs: dict, var: str) -> "IntPolynomial":
        # internal: coeffs already validated, zero-free, owned by the callee
        poly = cls.__new__(cls)
        poly._coeffs = coeffs
        poly.var = var
        return poly

    @classmethod
    def zero(cls, var: str = "t") -> "IntPolynomial":
        return cls((), var)

    @classmethod
    def one(cls, var: str = "t") -> "IntPolynomial":
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "t") -> "IntPolynomial":
        return cls({exponent: coeff}, var)

    @classmethod
    def geometric(cls, top: int, step: int = 1, var: str = "t") -> "IntPolynomial":
        """1 + x^step + ... + x^top (empty, i.e. zero, when top < 0)."""
        return cls({e: 1 for e in range(0, top + 1, step)}, var)

    def items(self) -> tuple:
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        coeffs = dict(self._coeffs)
        for e, c in other._coeffs.items():
            new = coeffs.get(e, 0) + c
            if new:
                coeffs[e] = new
            else:
                coeffs.pop(e, None)
        return IntPolynomial._raw(coeffs, self.var)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial._raw({e: -c for e, c in self._coeffs.items()}, self.var)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        coeffs: dict = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                coeffs[e1 + e2] = coeffs.get(e1 + e2, 0) + c1 * c2
        return IntPolynomial._raw({e: c for e, c in coeffs.items() if c}, self.var)

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one(self.var)
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, divisor: "IntPolynomial") -> tuple:
        """Long division over the integers.

        Each elimination step must divide exactly (always the case for a
        divisor with leading coefficient +-1); otherwise ValueError.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        lead_exp = divisor.degree()
        lead_coeff = divisor.coefficient(lead_exp)
        remainder = dict(self._coeffs)
        quotient: dict = {}
        deg = max(remainder, default=-1)
        while deg >= lead_exp:
            coeff = remainder.get(deg, 0)
            if coeff:
                q, r = divmod(coeff, lead_coeff)
                if r:
                    raise ValueError(
                        f"leading coefficient {lead_coeff} does not divide {coeff} exactly"
                    )
                quotient[deg - lead_exp] = q
                for e, c in divisor._coeffs.items():
                    key = deg - lead_exp + e
                    new = remainder.get(key, 0) - q * c
                    if new:
                        remainder[key] = new
                    else:
                        remainder.pop(key, None)
            deg -= 1
        return IntPolynomial._raw(quotient, self.var), IntPolynomial._raw(remainder, self.var)

    def __call__(self, value: int) -> int:
        return sum(c * value**e for e, c in self._coeffs.items())

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for e, c in sorted(self._coeffs.items()):
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                head = "" if magnitude == 1 else str(magnitude)
                body = head + (self.var if e == 1 else f"{self.var}^{e}")
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"IntPolynomial({dict(sorted(self._coeffs.items()))}, var={self.var!r})"


class BiPolynomial:
    """Sparse polynomial in (u, v) with exact integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: CoeffsLike = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        self._coeffs = _accumulate(items, 2)

    @classmethod
    def _raw(cls, coeffs: dict) -> "BiPolynomial":
        # internal: coeffs already validated, zero-free, owned by the callee
        poly = cls.__new__(cls)
        poly._coeffs = coeffs
        return poly

    @classmethod
    def zero(cls) -> "BiPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BiPolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, p: int, q: int, coeff: int = 1) -> "BiPolynomial":
        return cls({(p, q): coeff})

    def items(self) -> tuple:
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, p: int, q: int) -> int:
        return self._coeffs.get((p, q), 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def max_exponent(self) -> int:
        """Largest exponent of u or v appearing; -1 for zero."""
        return max((max(p, q) for p, q in self._coeffs), default=-1)

    def is_symmetric(self) -> bool:
        """Whether the coefficient of u^p v^q always equals that of u^q v^p."""
        return all(self._coeffs.get((q, p)) == c for (p, q), c in self._coeffs.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "BiPolynomial") -> "BiPolynomial":
        coeffs = dict(self._coeffs)
        for pq, c in other._coeffs.items():
            new = coeffs.get(pq, 0) + c
            if new:
                coeffs[pq] = new
            else:
                coeffs.pop(pq, None)
        return BiPolynomial._raw(coeffs)

    def __mul__(self, other: "BiPolynomial") -> "BiPolynomial":
        coeffs: dict = {}
        for (p1, q1), c1 in self._coeffs.items():
            for (p2, q2), c2 in other._coeffs.items():
                key = (p1 + p2, q1 + q2)
                coeffs[key] = coeffs.get(key, 0) + c1 * c2
        return BiPolynomial._raw({pq: c for pq, c in coeffs.items() if c})

    def specialize_diagonal(self, var: str = "t") -> IntPolynomial:
        """Substitute u = v = var, collapsing (p, q) to degree p + q."""
        coeffs: dict = {}
        for (p, q), c in self._coeffs.items():
            coeffs[p + q] = coeffs.get(p + q, 0) + c
        return IntPolynomial._raw({e: c for e, c in coeffs.items() if c}, var)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        # ascending total degree, u-power descending within a degree
        for (p, q), c in sorted(self._coeffs.items(), key=lambda item: (sum(item[0]), item[0][1])):
            vars_part = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in (("u", p), ("v", q))
                if e > 0
            )
            magnitude = abs(c)
            if not vars_part:
                body = str(magnitude)
            else:
                body = ("" if magnitude == 1 else str(magnitude)) + vars_part
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"BiPolynomial({dict(sorted(self._coeffs.items()))})"
