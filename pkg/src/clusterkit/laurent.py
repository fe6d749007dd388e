"""Exact Laurent polynomials with integer coefficients.

Variables are positional: a polynomial in ``num_vars`` variables stores its
terms as a map from exponent vectors (length-``num_vars`` tuples of ints,
negative entries allowed) to nonzero integer coefficients.  The map is kept
canonical (no zero coefficients), so two polynomials are equal exactly when
their term maps are equal.

Coefficients are Python ints and therefore unbounded; numerators produced by
repeated seed mutation grow without limit and must never overflow.

Display names ("x1", "x2", ...) are not handled here, only in the interface
layer.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentError(Exception):
    pass


class VarCountMismatch(LaurentError):
    """Operands live in rings with different numbers of variables."""


class DivisionByZero(LaurentError):
    pass


class NotDivisible(LaurentError):
    """Exact division failed: the dividend is not a multiple of the divisor."""


def _term_sort_key(exponents: tuple[int, ...]) -> tuple[int, ...]:
    # Total order on monomials used for canonical term ordering: negate the
    # exponent vector and compare lexicographically.  With this choice the
    # constant term sorts after every positive power (1 > x2 > x1 as single
    # terms) while x1 < x2 as polynomials, matching the documented canonical
    # rendering "(1+x2)/x1".
    return tuple(-e for e in exponents)


class LaurentPoly:
    """Immutable Laurent polynomial in ``num_vars`` positional variables."""

    __slots__ = ("num_vars", "terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], int] | Iterable = ()):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise VarCountMismatch(
                    f"exponent vector {exps} has length {len(exps)}, expected {num_vars}"
                )
            if not all(isinstance(e, int) for e in exps) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be ints")
            if coeff == 0:
                continue
            clean[exps] = clean.get(exps, 0) + coeff
            if clean[exps] == 0:
                del clean[exps]
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", hash((num_vars, frozenset(clean.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "LaurentPoly":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: int) -> "LaurentPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def one(cls, num_vars: int) -> "LaurentPoly":
        return cls.constant(num_vars, 1)

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "LaurentPoly":
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        exps = [0] * num_vars
        exps[index] = 1
        return cls(num_vars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, num_vars: int, exponents: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        return cls(num_vars, {tuple(exponents): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in ascending canonical order."""
        return sorted(self.terms.items(), key=lambda t: (_term_sort_key(t[0]), t[1]))

    def order_key(self):
        """Key implementing the canonical total order on polynomials.

        Polynomials compare as their sorted term lists, so the zero
        polynomial (empty list) precedes everything else.
        """
        return tuple((_term_sort_key(e), c) for e, c in self.sorted_terms())

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if self.num_vars != other.num_vars:
            raise VarCountMismatch(f"{self.num_vars} variables vs {other.num_vars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps, 0) + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return LaurentPoly(self.num_vars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(key, 0) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return LaurentPoly(self.num_vars, out)

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            raise ValueError("only nonnegative powers are supported")
        result = LaurentPoly.one(self.num_vars)
        for _ in range(power):
            result = result * self
        return result

    def _min_exponents(self) -> tuple[int, ...]:
        return tuple(min(e[i] for e in self.terms) for i in range(self.num_vars))

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Return q with q * divisor == self, or raise NotDivisible.

        Both operands are shifted by their per-variable minimum exponents so
        that they become ordinary polynomials with no monomial content; the
        quotient is then recovered by leading-term elimination under graded
        lex order, which for a single divisor over the integers succeeds
        exactly when the division is exact.
        """
        self._check_compatible(divisor)
        if divisor.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.num_vars)

        shift_a = self._min_exponents()
        shift_b = divisor._min_exponents()
        num = {tuple(x - s for x, s in zip(e, shift_a)): c for e, c in self.terms.items()}
        den = {tuple(x - s for x, s in zip(e, shift_b)): c for e, c in divisor.terms.items()}

        def grlex(e):
            return (sum(e), e)

        lead_b = max(den, key=grlex)
        coeff_b = den[lead_b]
        quotient: dict[tuple[int, ...], int] = {}
        while num:
            lead_a = max(num, key=grlex)
            diff = tuple(a - b for a, b in zip(lead_a, lead_b))
            if any(d < 0 for d in diff):
                raise NotDivisible("leading monomial not divisible")
            coeff_a = num[lead_a]
            q, r = divmod(coeff_a, coeff_b)
            if r:
                raise NotDivisible("leading coefficient not divisible")
            quotient[diff] = q
            for e, c in den.items():
                key = tuple(a + b for a, b in zip(diff, e))
                acc = num.get(key, 0) - q * c
                if acc:
                    num[key] = acc
                else:
                    num.pop(key, None)
        final_shift = tuple(a - b for a, b in zip(shift_a, shift_b))
        return LaurentPoly(
            self.num_vars,
            {tuple(a + b for a, b in zip(e, final_shift)): c for e, c in quotient.items()},
        )

    # -- comparison and hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in self.sorted_terms())
        return f"LaurentPoly({self.num_vars}, {{{body}}})"


def compare(a: LaurentPoly, b: LaurentPoly) -> int:
    """Canonical total order; returns -1, 0 or 1.

    Polynomials are compared as sorted term lists, lexicographically by
    (monomial key, coefficient).  The zero polynomial sorts first; among
    single variables, x1 < x2 < ... (later display positions sort later).
    """
    a._check_compatible(b)
    ka, kb = a.order_key(), b.order_key()
    return (ka > kb) - (ka < kb)
