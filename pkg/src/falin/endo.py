"""Endomorphisms of the free algebra as tuples of generator images.

A PolyMap sends z_i to images[i-1]; applying it to a polynomial is
substitution.  The composition convention is fixed once for the whole
package:

    compose(g, f)(z_i) = g(f(z_i))

i.e. compose(g, f) substitutes g's images into f's, and linear parts
multiply in the opposite order: A(g o f) = A(f) * A(g).  Every orientation-
sensitive operation (conjugation by translations and by linear maps) is
specified by the post-condition this convention induces, and the tests pin
those post-conditions rather than any formula.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .coefficients import LaurentPoly
from .errors import (NotPolynomialInverseWithinBound, RankMismatch,
                     SingularLinearPart, SingularMatrix)
from .freealg import EMPTY_WORD, FreePoly, f_degree, f_substitute, merge_nvars


class PolyMap:
    """An endomorphism of F_n given by the n-tuple of generator images."""

    __slots__ = ("rank", "nvars", "images")

    def __init__(self, images: Sequence[FreePoly]):
        images = tuple(images)
        if not images:
            raise RankMismatch("a map needs at least one image")
        rank = images[0].rank
        nvars = images[0].nvars
        for img in images:
            if img.rank != rank:
                raise RankMismatch("images have differing ranks")
            nvars = merge_nvars(nvars, img.nvars)
        if len(images) != rank:
            raise RankMismatch(f"{len(images)} images for rank {rank}")
        if nvars is not None:
            images = tuple(img if img.nvars == nvars
                           else FreePoly(rank, img.terms, nvars)
                           for img in images)
        self.rank = rank
        self.nvars = nvars
        self.images = images

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.images == other.images

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self) -> str:
        return f"PolyMap({list(self.images)!r})"

    def degree(self) -> int:
        return max(f_degree(img) for img in self.images)

    def apply(self, p: FreePoly) -> FreePoly:
        """Image of a polynomial under this endomorphism."""
        return f_substitute(p, self.images)


def identity_map(rank: int, nvars: Optional[int] = None) -> PolyMap:
    return PolyMap([FreePoly.gen(rank, i, nvars) for i in range(1, rank + 1)])


def compose(g: PolyMap, f: PolyMap, max_degree: Optional[int] = None) -> PolyMap:
    """compose(g, f)(z_i) = g(f(z_i)); linear parts obey A = A_f * A_g."""
    if g.rank != f.rank:
        raise RankMismatch(f"ranks {g.rank} and {f.rank} differ")
    cache = {}
    return PolyMap([f_substitute(img, g.images, max_degree, _cache=cache)
                    for img in f.images])


def linear_part(f: PolyMap) -> list:
    """Matrix with entry (i, j) = coefficient of the word z_j in image i."""
    return [[img.coeff((j,)) for j in range(1, f.rank + 1)] for img in f.images]


def constant_part(f: PolyMap) -> list:
    """Vector of empty-word coefficients."""
    return [img.constant_coeff() for img in f.images]


def _scalar_linear_matrix(f: PolyMap) -> list:
    rows = linear_part(f)
    out = []
    for row in rows:
        new_row = []
        for entry in row:
            if isinstance(entry, LaurentPoly):
                unit = entry.as_unit_monomial()
                if entry and (unit is None or any(unit[0])):
                    raise SingularLinearPart(
                        "inversion requires a linear part over the scalars")
                new_row.append(entry.constant_coeff())
            else:
                new_row.append(entry)
        out.append(new_row)
    return out


def _homogeneous_part(p: FreePoly, k: int) -> FreePoly:
    return FreePoly._raw(p.rank, p.nvars,
                         {w: c for w, c in p.terms.items() if len(w) == k})


def invert(f: PolyMap, max_degree: Optional[int] = None) -> PolyMap:
    """Two-sided inverse of an automorphism, found degree by degree.

    Works in the degree-truncated power-series completion: starting from
    the inverse of the linear part, each pass cancels the lowest remaining
    error of compose(h, f).  If after ``max_degree`` passes the residual is
    still nonzero, f has no polynomial inverse within the bound.  The
    returned map satisfies compose(h, f) = compose(f, h) = identity exactly
    (verified, not assumed).

    ``max_degree`` defaults to the degree of f itself, which is the correct
    bound for the linearization pipeline.
    """
    if max_degree is None:
        max_degree = max(f.degree(), 1)
    if max_degree < 1:
        raise NotPolynomialInverseWithinBound("degree bound must be at least 1")
    matrix = _scalar_linear_matrix(f)
    try:
        inv_matrix = linalg.inverse(matrix)
    except SingularMatrix:
        raise SingularLinearPart("linear part is singular") from None
    ident = identity_map(f.rank, f.nvars)
    # h starts as the inverse linear map z_i -> sum_j inv_matrix[i][j] z_j
    h = PolyMap([
        FreePoly(f.rank,
                 {(j,): inv_matrix[i][j - 1] for j in range(1, f.rank + 1)},
                 f.nvars)
        for i in range(f.rank)])
    for k in range(2, max_degree + 1):
        # compose(h, f)_i = f_i(h(z)); perturbing h by a homogeneous c of
        # degree k changes that by -A c + O(k+1), so c = A^-1 * (error part)
        error = compose(h, f, max_degree=k)
        bad = [_homogeneous_part(error.images[i] - ident.images[i], k)
               for i in range(f.rank)]
        if all(not b for b in bad):
            continue
        images = []
        for i in range(f.rank):
            correction = FreePoly.zero(f.rank, f.nvars)
            for j in range(f.rank):
                if inv_matrix[i][j] and bad[j]:
                    correction = correction + bad[j].scale(inv_matrix[i][j])
            images.append(h.images[i] - correction)
        h = PolyMap(images)
    if compose(h, f) != ident or compose(f, h) != ident:
        raise NotPolynomialInverseWithinBound(
            f"no polynomial inverse of degree <= {max_degree}")
    return h


def conjugate_by_translation(f: PolyMap, c: Sequence) -> PolyMap:
    """Conjugate by the translation z_i -> z_i + c_i.

    Post-condition: if c is fixed by the abelianized map induced by f, the
    result has zero constant part.  Concretely the i-th image becomes
    f_i(z_1 + c_1, ..., z_n + c_n) - c_i.
    """
    if len(c) != f.rank:
        raise RankMismatch(f"translation of length {len(c)} for rank {f.rank}")
    c = [Fraction(x) for x in c]
    if not any(c):
        return f
    shifted = [FreePoly.gen(f.rank, j) + FreePoly.const(f.rank, c[j - 1])
               for j in range(1, f.rank + 1)]
    images = []
    for i, img in enumerate(f.images):
        moved = f_substitute(img, shifted)
        images.append(moved - FreePoly.const(f.rank, c[i], moved.nvars))
    return PolyMap(images)


def linear_map(rank: int, matrix) -> PolyMap:
    """The linear endomorphism z_i -> sum_j matrix[i][j] z_j."""
    return PolyMap([
        FreePoly(rank, {(j,): matrix[i][j - 1] for j in range(1, rank + 1)})
        for i in range(rank)])


def translation_map(rank: int, c: Sequence) -> PolyMap:
    """The affine map z_i -> z_i + c_i."""
    return PolyMap([
        FreePoly(rank, {(i,): 1, EMPTY_WORD: Fraction(c[i - 1])})
        for i in range(1, rank + 1)])


def conjugate_by_linear(f: PolyMap, p_matrix) -> PolyMap:
    """Conjugate by the linear automorphism given by matrix P.

    Post-condition: linear_part(result) = P^-1 * linear_part(f) * P.
    """
    p_matrix = linalg.frac_matrix(p_matrix)
    inv = linalg.inverse(p_matrix)  # raises SingularMatrix
    left = linear_map(f.rank, p_matrix)
    right = linear_map(f.rank, inv)
    return compose(left, compose(f, right))


def scalar_linear_part(f: PolyMap) -> list:
    """Linear part as a Fraction matrix (scalar maps only)."""
    return _scalar_linear_matrix(f)
