"""Words and free noncommutative polynomials with pluggable coefficients.

A word is a tuple of 1-based generator indices; the empty tuple is the
empty word (the algebra unit).  A free polynomial over rank ``n`` is a
finite map from words to nonzero coefficients.  Multiplication is the
bilinear extension of word concatenation, so z1*z2 and z2*z1 are distinct
terms.

Coefficients come in two kinds:

  * scalar  -- ``Fraction`` values; ``FreePoly.nvars is None``
  * laurent -- ``LaurentPoly`` values sharing ``FreePoly.nvars``

Mixed-kind arithmetic widens scalars into the Laurent ring, which is how a
rational automorphism composes with a torus action without any explicit
embedding step.  Canonical form stores no zero coefficients and, for the
laurent kind, only ``LaurentPoly`` values, so ``==`` is structural.

Display order everywhere is graded lexicographic on words (length first,
then letters, z1 < z2 < ...); that order also defines which witness a
failed comparison reports.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .coefficients import LaurentPoly
from .errors import RankMismatch

Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


def merge_nvars(a: Optional[int], b: Optional[int]) -> Optional[int]:
    """Combine two coefficient kinds; scalar widens into laurent."""
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise RankMismatch(f"laurent coefficients over {a} and {b} variables")


def _normalize_coeff(coeff, nvars: Optional[int]):
    """Coerce a raw coefficient to the canonical value for the kind."""
    if nvars is None:
        if isinstance(coeff, LaurentPoly):
            raise RankMismatch("laurent coefficient in a scalar polynomial")
        return coeff if isinstance(coeff, Fraction) else Fraction(coeff)
    if isinstance(coeff, LaurentPoly):
        if coeff.nvars != nvars:
            raise RankMismatch(
                f"coefficient over {coeff.nvars} variables, expected {nvars}")
        return coeff
    return LaurentPoly.const(nvars, coeff)


class FreePoly:
    """Element of the free associative algebra K<z1..zn> (or its Laurent base change)."""

    __slots__ = ("rank", "nvars", "terms")

    def __init__(self, rank: int, terms=None, nvars: Optional[int] = None):
        if rank < 0:
            raise RankMismatch("rank must be non-negative")
        clean: Dict[Word, object] = {}
        if terms:
            for word, coeff in terms.items():
                word = tuple(word)
                if any(not 1 <= z <= rank for z in word):
                    raise RankMismatch(f"word {word} uses letters outside 1..{rank}")
                coeff = _normalize_coeff(coeff, nvars)
                if coeff:
                    prev = clean.get(word)
                    acc = coeff if prev is None else prev + coeff
                    if acc:
                        clean[word] = acc
                    elif word in clean:
                        del clean[word]
        self.rank = rank
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def _raw(cls, rank, nvars, terms):
        poly = cls.__new__(cls)
        poly.rank = rank
        poly.nvars = nvars
        poly.terms = terms
        return poly

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, rank: int, nvars: Optional[int] = None) -> "FreePoly":
        return cls._raw(rank, nvars, {})

    @classmethod
    def const(cls, rank: int, value, nvars: Optional[int] = None) -> "FreePoly":
        return cls(rank, {EMPTY_WORD: value}, nvars)

    @classmethod
    def gen(cls, rank: int, index: int, nvars: Optional[int] = None) -> "FreePoly":
        """The generator z_index (1-based)."""
        if not 1 <= index <= rank:
            raise RankMismatch(f"z{index} out of range for rank {rank}")
        one = Fraction(1) if nvars is None else LaurentPoly.one(nvars)
        return cls._raw(rank, nvars, {(index,): one})

    # -- structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreePoly):
            return NotImplemented
        return (self.rank == other.rank and self.nvars == other.nvars
                and self.terms == other.terms)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self) -> str:
        items = ", ".join(f"{w}: {c!r}" for w, c in self.sorted_terms())
        return f"FreePoly({self.rank}, {{{items}}}, nvars={self.nvars})"

    def sorted_terms(self):
        """Terms in graded-lex word order."""
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def coeff(self, word: Word):
        """Coefficient of ``word`` (a zero of the right kind if absent)."""
        got = self.terms.get(tuple(word))
        if got is not None:
            return got
        return Fraction(0) if self.nvars is None else LaurentPoly.zero(self.nvars)

    def constant_coeff(self):
        return self.coeff(EMPTY_WORD)

    def degree(self) -> int:
        """Max word length; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def is_unit(self):
        """Return the inverse if this is an invertible element, else None.

        Units of the (Laurent-based) free algebra are nonzero scalars times
        an invertible torus monomial: a single empty-word term whose
        coefficient is a Laurent monomial.
        """
        if len(self.terms) != 1 or EMPTY_WORD not in self.terms:
            return None
        coeff = self.terms[EMPTY_WORD]
        if isinstance(coeff, Fraction):
            return FreePoly._raw(self.rank, None, {EMPTY_WORD: 1 / coeff})
        unit = coeff.as_unit_monomial()
        if unit is None:
            return None
        return FreePoly._raw(self.rank, self.nvars, {EMPTY_WORD: coeff ** -1})

    # -- ring operations ----------------------------------------------

    def _join(self, other: "FreePoly"):
        if self.rank != other.rank:
            raise RankMismatch(f"ranks {self.rank} and {other.rank} differ")
        return merge_nvars(self.nvars, other.nvars)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = FreePoly(self.rank, {EMPTY_WORD: other},
                             other.nvars if isinstance(other, LaurentPoly) else self.nvars)
        elif not isinstance(other, FreePoly):
            return NotImplemented
        nvars = self._join(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            prev = out.get(word)
            acc = coeff if prev is None else prev + coeff
            if acc:
                out[word] = acc
            elif word in out:
                del out[word]
        if nvars == self.nvars == other.nvars:
            return FreePoly._raw(self.rank, nvars, out)
        return FreePoly(self.rank, out, nvars)

    __radd__ = __add__

    def __neg__(self):
        return FreePoly._raw(self.rank, self.nvars,
                             {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, FreePoly):
            return self.__add__(other.__neg__())
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.__add__(-other)
        return NotImplemented

    def __rsub__(self, other):
        return self.__neg__().__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, FreePoly):
            return NotImplemented
        return f_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            return NotImplemented
        result = FreePoly.const(self.rank, 1, self.nvars)
        for _ in range(power):
            result = f_mul(result, self)
        return result

    def scale(self, coeff):
        nvars = self.nvars
        if isinstance(coeff, LaurentPoly):
            nvars = merge_nvars(nvars, coeff.nvars)
        if not coeff:
            return FreePoly.zero(self.rank, nvars)
        out = {}
        for word, c in self.terms.items():
            acc = coeff * c
            if acc:
                out[word] = acc
        if nvars == self.nvars:
            return FreePoly._raw(self.rank, nvars, out)
        return FreePoly(self.rank, out, nvars)

    def map_coefficients(self, fn, nvars: Optional[int]) -> "FreePoly":
        """Apply ``fn`` to every coefficient; result has kind ``nvars``."""
        return FreePoly(self.rank, {w: fn(c) for w, c in self.terms.items()}, nvars)


def f_mul(p: FreePoly, q: FreePoly, max_degree: Optional[int] = None) -> FreePoly:
    """Noncommutative product: bilinear extension of word concatenation.

    ``max_degree`` drops all product words longer than the bound; callers
    doing exact work leave it None.
    """
    nvars = p._join(q)
    out: Dict[Word, object] = {}
    for w1, c1 in p.terms.items():
        n1 = len(w1)
        for w2, c2 in q.terms.items():
            if max_degree is not None and n1 + len(w2) > max_degree:
                continue
            word = w1 + w2
            prod = c1 * c2
            prev = out.get(word)
            acc = prod if prev is None else prev + prod
            if acc:
                out[word] = acc
            elif word in out:
                del out[word]
    if nvars == p.nvars == q.nvars:
        return FreePoly._raw(p.rank, nvars, out)
    return FreePoly(p.rank, out, nvars)


def f_add(p: FreePoly, q: FreePoly) -> FreePoly:
    return p + q


def f_degree(p: FreePoly) -> int:
    """Maximum word length over the terms; deg 0 = -1 by convention."""
    return p.degree()


def f_substitute(p: FreePoly, images: Sequence[FreePoly],
                 max_degree: Optional[int] = None,
                 _cache: Optional[Dict[Word, FreePoly]] = None) -> FreePoly:
    """Algebra-homomorphism image of ``p`` under z_j -> images[j-1].

    Each word is replaced by the product of the images of its letters;
    coefficients multiply through (they are central).  Products along a
    word are cached by prefix so that words sharing prefixes share work;
    ``_cache`` lets a caller substituting several polynomials into the
    same images share that cache.  ``max_degree`` truncates every
    intermediate product, which is sound for reading off the part of the
    result of degree <= max_degree.
    """
    if len(images) != p.rank:
        raise RankMismatch(f"{len(images)} images for rank {p.rank}")
    nvars = p.nvars
    rank = None
    for img in images:
        nvars = merge_nvars(nvars, img.nvars)
        if rank is None:
            rank = img.rank
        elif img.rank != rank:
            raise RankMismatch("substitution images have differing ranks")
    if rank is None:
        rank = p.rank
    cache = _cache if _cache is not None else {}
    if EMPTY_WORD not in cache:
        cache[EMPTY_WORD] = FreePoly.const(rank, 1, None)
    out: Dict[Word, object] = {}
    for word, coeff in sorted(p.terms.items()):
        prod = cache.get(word)
        if prod is None:
            # walk back to the longest cached prefix, then extend
            k = len(word) - 1
            while word[:k] not in cache:
                k -= 1
            prod = cache[word[:k]]
            for letter in word[k:]:
                k += 1
                prod = f_mul(prod, images[letter - 1], max_degree)
                cache[word[:k]] = prod
        for w2, c2 in prod.terms.items():
            value = coeff * c2
            prev = out.get(w2)
            acc = value if prev is None else prev + value
            if acc:
                out[w2] = acc
            elif w2 in out:
                del out[w2]
    return FreePoly(rank, out, nvars)


def abelianize(p: FreePoly) -> LaurentPoly:
    """Project onto the commutative polynomial ring: words become exponent vectors.

    The image lives in a LaurentPoly whose variables are the torus variables
    of ``p`` (if any) followed by the commuting images x1..x{rank} of the
    generators: scalar input yields a pure x-polynomial.  Commutators map
    to zero because letter counts ignore order.
    """
    tvars = p.nvars or 0
    total = tvars + p.rank
    out = LaurentPoly.zero(total)
    for word, coeff in p.terms.items():
        counts = [0] * p.rank
        for letter in word:
            counts[letter - 1] += 1
        if isinstance(coeff, LaurentPoly):
            shifted = LaurentPoly(
                total,
                {e + tuple(counts): c for e, c in coeff.terms.items()})
        else:
            shifted = LaurentPoly(total, {(0,) * tvars + tuple(counts): coeff})
        out = out + shifted
    return out


def abelianized_representative(p: FreePoly) -> FreePoly:
    """The canonical section of the abelianization: every word sorted.

    Two polynomials have the same image under ``abelianize`` iff their
    representatives are equal, and the representative prints through the
    ordinary document grammar.
    """
    out = {}
    for word, coeff in p.terms.items():
        key = tuple(sorted(word))
        prev = out.get(key)
        out[key] = coeff if prev is None else prev + coeff
    return FreePoly(p.rank, out, p.nvars)
