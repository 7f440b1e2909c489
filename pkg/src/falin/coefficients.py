"""Exact coefficient arithmetic: rational scalars and Laurent polynomials.

The ground field is the rationals.  Scalars are ``fractions.Fraction``
values (always normalized: positive denominator, gcd 1, zero as 0/1), for
which this module provides the alias ``ExactScalar``.

A Laurent polynomial in ``nvars`` torus variables t1..t{nvars} is a finite
map from dense integer exponent vectors (tuples of length ``nvars``,
negative entries allowed) to nonzero rationals:

    t1^2 - t2^-1   ->   LaurentPoly(2, {(2, 0): 1, (0, -1): -1})

The empty map is the zero polynomial.  Zero coefficients are never stored,
so two Laurent polynomials are equal iff their term maps are equal; that
canonical form is what every other module relies on for exact symbolic
comparison.  All values are immutable by convention and all operations are
pure, so concurrent readers need no synchronization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NotMonomial, VariableMismatch, ZeroTorusPoint

ExactScalar = Fraction

Exponents = "tuple[int, ...]"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class LaurentPoly:
    """Sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise VariableMismatch(
                        f"exponent vector {exps} has length {len(exps)}, "
                        f"expected {nvars}")
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[exps] = clean.get(exps, Fraction(0)) + coeff
                    if not clean[exps]:
                        del clean[exps]
        self.nvars = nvars
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: Fraction(1)})

    @classmethod
    def const(cls, nvars: int, value) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: _as_fraction(value)})

    @classmethod
    def var(cls, nvars: int, index: int, power: int = 1) -> "LaurentPoly":
        """The monomial t_index^power; ``index`` is 1-based."""
        if not 1 <= index <= nvars:
            raise VariableMismatch(f"t{index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index - 1] = power
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps: Iterable[int], coeff=1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): _as_fraction(coeff)})

    # -- structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self) -> str:
        items = ", ".join(f"{e}: {c}" for e, c in self.sorted_terms())
        return f"LaurentPoly({self.nvars}, {{{items}}})"

    def sorted_terms(self):
        """Terms in lexicographic exponent order (the canonical print order)."""
        return sorted(self.terms.items())

    def constant_coeff(self) -> Fraction:
        """Coefficient at the zero exponent vector."""
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def as_unit_monomial(self):
        """Return (exponents, coeff) if this is a single nonzero term, else None."""
        if len(self.terms) != 1:
            return None
        [(exps, coeff)] = self.terms.items()
        return exps, coeff

    # -- ring operations ----------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise VariableMismatch(
                f"operands over {self.nvars} and {other.nvars} torus variables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.nvars, other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[exps] = acc
            elif exps in out:
                del out[exps]
        res = LaurentPoly.__new__(LaurentPoly)
        res.nvars = self.nvars
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.nvars = self.nvars
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.nvars, other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return LaurentPoly.zero(self.nvars)
            res = LaurentPoly.__new__(LaurentPoly)
            res.nvars = self.nvars
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        # single-term factors cannot produce colliding keys
        if len(other.terms) == 1:
            [(e2, c2)] = other.terms.items()
            out = {tuple([a + b for a, b in zip(e1, e2)]): c1 * c2
                   for e1, c1 in self.terms.items()}
        elif len(self.terms) == 1:
            [(e1, c1)] = self.terms.items()
            out = {tuple([a + b for a, b in zip(e1, e2)]): c1 * c2
                   for e2, c2 in other.terms.items()}
        else:
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple([a + b for a, b in zip(e1, e2)])
                    acc = out.get(key)
                    prod = c1 * c2
                    acc = prod if acc is None else acc + prod
                    if acc:
                        out[key] = acc
                    elif key in out:
                        del out[key]
        res = LaurentPoly.__new__(LaurentPoly)
        res.nvars = self.nvars
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            unit = self.as_unit_monomial()
            if unit is None:
                raise NotMonomial("negative power of a non-monomial Laurent polynomial")
            exps, coeff = unit
            return LaurentPoly(self.nvars,
                               {tuple(power * e for e in exps): coeff ** power})
        result = LaurentPoly.one(self.nvars)
        for _ in range(power):
            result = result * self
        return result

    # -- evaluation and substitution ----------------------------------

    def eval(self, point: Sequence) -> Fraction:
        """Exact evaluation at a torus point (all entries nonzero)."""
        if len(point) != self.nvars:
            raise VariableMismatch(
                f"point of length {len(point)} for {self.nvars} variables")
        values = [_as_fraction(x) for x in point]
        if any(not x for x in values):
            raise ZeroTorusPoint("evaluation point has a zero entry")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for value, e in zip(values, exps):
                if e:
                    term *= value ** e
            total += term
        return total

    def subst_monomial(self, images: Sequence["LaurentPoly"]) -> "LaurentPoly":
        """Substitute each variable by a coefficient-1 Laurent monomial.

        The images may live over a larger variable set; the result does too.
        Exponent vectors map linearly, so this is a ring homomorphism.
        """
        if len(images) != self.nvars:
            raise VariableMismatch(
                f"{len(images)} images for {self.nvars} variables")
        image_exps = []
        target = images[0].nvars if images else 0
        for img in images:
            unit = img.as_unit_monomial()
            if unit is None or unit[1] != 1:
                raise NotMonomial("substitution image must be a monomial with coefficient 1")
            if img.nvars != target:
                raise VariableMismatch("substitution images over differing variable sets")
            image_exps.append(unit[0])
        out = {}
        zero = (0,) * target
        for exps, coeff in self.terms.items():
            key = list(zero)
            for e, img in zip(exps, image_exps):
                if e:
                    for k, g in enumerate(img):
                        if g:
                            key[k] += e * g
            key = tuple(key)
            acc = out.get(key)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
        res = LaurentPoly.__new__(LaurentPoly)
        res.nvars = target
        res.terms = out
        return res

    def extend(self, nvars: int, offset: int = 0) -> "LaurentPoly":
        """Re-embed into ``nvars`` variables, shifting exponents by ``offset``."""
        if offset + self.nvars > nvars:
            raise VariableMismatch("extension window exceeds target variable count")
        pad_left = (0,) * offset
        pad_right = (0,) * (nvars - offset - self.nvars)
        res = LaurentPoly.__new__(LaurentPoly)
        res.nvars = nvars
        res.terms = {pad_left + e + pad_right: c for e, c in self.terms.items()}
        return res


# Operation-style entry points mirroring the module contract.

def l_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Pointwise sum; zero terms are deleted."""
    return a + b


def l_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Convolution over exponent-vector addition."""
    return a * b


def l_eval(p: LaurentPoly, point: Sequence) -> Fraction:
    """Evaluate at a torus point; negative exponents become reciprocal powers."""
    return p.eval(point)


def l_subst_monomial(p: LaurentPoly, images: Sequence[LaurentPoly]) -> LaurentPoly:
    """Exponent-linear substitution of monomial images for the variables."""
    return p.subst_monomial(images)
