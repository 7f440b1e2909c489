"""Deterministic generation of test actions with known ground truth.

Every generated action has the form sigma = alpha o tau_M o alpha^-1 where
tau_M is the diagonal action of an integer weight matrix M and alpha is a
composition of elementary automorphisms (z_i -> z_i + p with p free of
z_i, so the inverse is explicit) and one invertible integer linear map.
The generator keeps alpha's exact inverse alongside, verifies the
conjugation identity before handing the action out, and redraws - still
deterministically - whenever a composition blows past the degree or size
caps.  Identical CorpusSpec values therefore produce identical actions,
byte for byte once printed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import linalg
from .endo import PolyMap, compose, identity_map
from .errors import DegreeBlowupExceeded, InternalInvariant
from .freealg import FreePoly, f_degree
from .linearize import build_tau, verify_conjugation
from .torus import TorusAction

_MAX_REDRAWS = 96
_TERM_CAP = 400
_COST_CAP = 100_000
_NONZERO = (-3, -2, -1, 1, 2, 3)


def substitution_cost(outer: PolyMap, inner: PolyMap) -> int:
    """Upper bound on the term-pair work of compose(outer, inner).

    Substituting outer's images into a word multiplies their term counts,
    so the bound is the sum over inner words of the product of the sizes
    of the outer images its letters name.  Corpus generation refuses (and
    redraws) any composition whose bound exceeds the cost cap: actions it
    hands out are certified cheap to compose with themselves, which is
    exactly the shape of the axiom check and the verification steps.
    """
    sizes = [max(1, len(img.terms)) for img in outer.images]
    total = 0
    for img in inner.images:
        for word in img.terms:
            cost = 1
            for letter in word:
                cost *= sizes[letter - 1]
            total += cost
    return total


def _compose_guarded(g: PolyMap, f: PolyMap, cap: int) -> PolyMap:
    # degree prefilter: the bound over-counts (conjugation cancels a lot),
    # so only blatant blowups are rejected before doing any real work
    g_degrees = [max(1, f_degree(img)) for img in g.images]
    bound = max((sum(g_degrees[l - 1] for l in word) if word else 0
                 for img in f.images for word in img.terms), default=0)
    if bound > 3 * cap:
        raise DegreeBlowupExceeded(f"composition degree bound {bound} too large")
    if substitution_cost(g, f) > _COST_CAP:
        raise DegreeBlowupExceeded("composition too expensive for the corpus cap")
    result = compose(g, f)
    _check_size(result, cap)
    return result


@dataclass(frozen=True)
class CorpusSpec:
    """Reproducible recipe for one generated action."""

    rank: int
    seed: int
    n_elementary: int
    max_poly_degree: int
    weight_bound: int
    force_effective: bool = True
    weights: Optional[Tuple[Tuple[int, ...], ...]] = None  # fixed M, no draw
    include_linear: bool = True
    degree_cap: int = 12


@dataclass
class GroundTruth:
    """The conjugator and weight matrix an action was built from."""

    alpha: PolyMap
    alpha_inverse: PolyMap
    weights: list


def gen_elementary(rank: int, rng: random.Random, max_poly_degree: int,
                   target: Optional[int] = None):
    """One elementary automorphism and its inverse.

    The image of the target generator is z_target + p with p drawn over
    the other generators (rank 1 has none, so p is a constant and the map
    is affine).  The inverse z_target -> z_target - p is exact by
    construction; we assert the composition anyway.
    """
    if target is None:
        target = rng.randrange(1, rank + 1)
    others = [i for i in range(1, rank + 1) if i != target]
    terms = {}
    if not others:
        terms[()] = Fraction(rng.choice(_NONZERO))
    else:
        for _ in range(rng.randrange(1, 3)):
            length = rng.randrange(1, max_poly_degree + 1)
            word = tuple(rng.choice(others) for _ in range(length))
            coeff = rng.choice(_NONZERO)
            terms[word] = terms.get(word, 0) + coeff
    p = FreePoly(rank, terms)
    ident = identity_map(rank)
    forward = list(ident.images)
    backward = list(ident.images)
    forward[target - 1] = forward[target - 1] + p
    backward[target - 1] = backward[target - 1] - p
    fwd, back = PolyMap(forward), PolyMap(backward)
    if compose(back, fwd) != ident or compose(fwd, back) != ident:
        raise InternalInvariant("elementary factor does not invert")
    return fwd, back


def _random_unimodular(rank: int, rng: random.Random):
    m = [[Fraction(int(i == j)) for j in range(rank)] for i in range(rank)]
    if rank == 1:
        return [[Fraction(rng.choice((1, -1)))]]
    for _ in range(2 * rank):
        i = rng.randrange(rank)
        j = rng.randrange(rank)
        while j == i:
            j = rng.randrange(rank)
        c = rng.choice((-2, -1, 1, 2))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    for i in range(rank):
        if rng.randrange(4) == 0:
            m[i] = [-a for a in m[i]]
    return m


def _linear_polymap(matrix) -> PolyMap:
    rank = len(matrix)
    return PolyMap([
        FreePoly(rank, {(j,): matrix[i][j - 1] for j in range(1, rank + 1)})
        for i in range(rank)])


def _check_size(pm: PolyMap, cap: int):
    degree = max(f_degree(img) for img in pm.images)
    size = sum(len(img.terms) for img in pm.images)
    if degree > cap or size > _TERM_CAP:
        raise DegreeBlowupExceeded(
            f"degree {degree} / {size} terms exceeds the corpus cap")


def conjugated_action(alpha: PolyMap, alpha_inverse: PolyMap, weights,
                      degree_cap: int = 12):
    """sigma = alpha o tau_M o alpha^-1, verified against its ground truth."""
    tau = build_tau(weights)
    scaled = _compose_guarded(alpha, tau.map, degree_cap)
    sigma_map = _compose_guarded(scaled, alpha_inverse, degree_cap)
    action = TorusAction(sigma_map)
    if substitution_cost(action.map, action.map) > _COST_CAP:
        raise DegreeBlowupExceeded("action too expensive to check against itself")
    if substitution_cost(action.map, alpha) > _COST_CAP:
        raise DegreeBlowupExceeded("ground-truth verification too expensive")
    if not verify_conjugation(action, alpha, weights):
        raise InternalInvariant("generated action fails its own conjugation")
    return action


def _draw_weights(spec: CorpusSpec, rng: random.Random):
    for _ in range(256):
        m = [[rng.randint(-spec.weight_bound, spec.weight_bound)
              for _ in range(spec.rank)] for _ in range(spec.rank)]
        if not spec.force_effective or linalg.int_det(m) != 0:
            return m
    raise DegreeBlowupExceeded("could not draw a non-singular weight matrix")


def _attempt(spec: CorpusSpec, rng: random.Random):
    if spec.weights is not None:
        weights = [list(row) for row in spec.weights]
    else:
        weights = _draw_weights(spec, rng)
    if spec.include_linear:
        matrix = _random_unimodular(spec.rank, rng)
    else:
        matrix = linalg.identity(spec.rank)
    alpha = _linear_polymap(matrix)
    alpha_inv = _linear_polymap(linalg.inverse(matrix))
    for k in range(spec.n_elementary):
        fwd, back = gen_elementary(spec.rank, rng, spec.max_poly_degree,
                                   target=1 + k % spec.rank)
        alpha = _compose_guarded(fwd, alpha, spec.degree_cap)
        alpha_inv = _compose_guarded(alpha_inv, back, spec.degree_cap)
    action = conjugated_action(alpha, alpha_inv, weights, spec.degree_cap)
    return action, GroundTruth(alpha, alpha_inv, weights)


def gen_action(spec: CorpusSpec):
    """Generate (action, ground truth) for a spec; deterministic in the seed.

    Draws that blow past the degree cap are redrawn from the same stream a
    bounded number of times, after which DegreeBlowupExceeded propagates.
    """
    if spec.rank < 1 or spec.max_poly_degree < 1 or spec.weight_bound < 0:
        raise ValueError("corpus spec bounds must be positive")
    rng = random.Random(spec.seed)
    failure = None
    for _ in range(_MAX_REDRAWS):
        try:
            return _attempt(spec, rng)
        except DegreeBlowupExceeded as err:
            failure = err
    raise failure
