"""Flats of a simplicial complex and boolean representability.

A subset X of the ground set is a flat when every face contained in X
extends to a face by any single vertex from outside X.  The flats are closed
under intersection and contain the ground set, so they form a lattice under
inclusion with meet = intersection.

A face is a transversal of successive differences when it can be enumerated
x_1 .. x_k along a chain F_0 < F_1 < ... < F_k of flats with x_i in
F_i - F_{i-1}.  The complex is boolean representable when every face is such
a transversal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from ._util import bit_indices
from .errors import LimitExceeded, LoopsPresent
from .lattice import FiniteLattice

# all_flats scans every subset of the ground set; past 24 vertices that is
# no longer a desk-scale computation
FLATS_SOFT_LIMIT = 24
# the transversal oracle tries every ordering of X against every flat chain
ORACLE_SIZE_LIMIT = 8


@dataclass(frozen=True)
class TransversalWitness:
    """An enumeration of a face along a strict chain of flats.

    ordering[i] lies in chain[i+1] but not chain[i]; chain[0] is the closure
    of the empty set.
    """

    ordering: tuple[str, ...]
    chain: tuple[frozenset, ...]


class FlatFamily:
    """All flats of a complex, with their lattice under inclusion."""

    def __init__(self, complex_, flat_masks):
        self.complex = complex_
        self._masks = tuple(flat_masks)
        self.flats = tuple(complex_.set_of(m) for m in self._masks)

    def __len__(self):
        return len(self._masks)

    def __iter__(self):
        return iter(self.flats)

    def index(self, flat):
        """Element index of the given flat in the lattice."""
        return self.flats.index(frozenset(flat))

    @cached_property
    def lattice(self):
        labels = [_flat_label(self.complex, m) for m in self._masks]
        order = [
            [1 if a & ~b == 0 else 0 for b in self._masks] for a in self._masks
        ]
        return FiniteLattice(labels, order)


def _flat_label(complex_, mask):
    return "{" + ",".join(complex_.vertices[i] for i in bit_indices(mask)) + "}"


def _check_scan_limit(complex_, override):
    n = len(complex_.vertices)
    if n > FLATS_SOFT_LIMIT and not override:
        raise LimitExceeded(
            f"flat enumeration scans 2^{n} subsets, over the soft limit of "
            f"2^{FLATS_SOFT_LIMIT}; pass override=True to lift"
        )


def is_flat(complex_, candidate):
    """Decide the flat property for one subset directly from the definition."""
    x = complex_.mask_of(candidate)
    faces = complex_.face_masks
    outside = complex_.full_mask & ~x
    for face in faces:
        if face & ~x:
            continue
        for p in bit_indices(outside):
            if (face | (1 << p)) not in faces:
                return False
    return True


@lru_cache(maxsize=None)
def _flat_masks(complex_):
    """All flat masks, sorted by size then vertex order.

    Naive scan over every subset X: X is a flat iff every face I inside X
    has its non-extending vertices inside X as well.  The per-face mask of
    non-extending vertices is precomputed once.
    """
    faces = complex_.face_masks
    full = complex_.full_mask
    constraints = []
    for face in faces:
        bad = 0
        for p in bit_indices(full & ~face):
            if (face | (1 << p)) not in faces:
                bad |= 1 << p
        if bad:
            constraints.append((face, bad))
    constraints.sort(key=lambda c: c[0].bit_count())
    flats = []
    for x in range(full + 1):
        not_x = ~x
        for face, bad in constraints:
            if not face & not_x and bad & not_x:
                break
        else:
            flats.append(x)
    flats.sort(key=lambda m: (m.bit_count(), tuple(bit_indices(m))))
    return tuple(flats)


def all_flats(complex_, override=False):
    _check_scan_limit(complex_, override)
    return FlatFamily(complex_, _flat_masks(complex_))


def flats_lattice(complex_, override=False):
    return all_flats(complex_, override).lattice


def closure(complex_, subset, override=False):
    """Smallest flat containing the subset (flats are intersection-closed)."""
    _check_scan_limit(complex_, override)
    return complex_.set_of(_context(complex_).closure(complex_.mask_of(subset)))


@lru_cache(maxsize=None)
def _context(complex_):
    return _FlatContext(complex_)


class _FlatContext:
    """Shared closure cache over the flats of one complex."""

    def __init__(self, complex_):
        self.complex = complex_
        self.flat_masks = _flat_masks(complex_)
        self._closures = {}

    def closure(self, mask):
        got = self._closures.get(mask)
        if got is None:
            got = self.complex.full_mask
            for f in self.flat_masks:
                if mask & ~f == 0:
                    got &= f
            self._closures[mask] = got
        return got

    def transversal_order(self, x_mask):
        """A valid enumeration of x_mask as vertex indices, or None.

        An ordering works iff each x_i avoids the closure of its prefix:
        the closure chain F_i = cl(x_1..x_i) is then strictly increasing with
        x_i in F_i - F_{i-1}; conversely any witness chain dominates the
        closure chain prefix by prefix.  Whether a partial choice can be
        completed depends only on the chosen set, so failed sets are memoized.
        """
        dead = set()
        order = []

        def extend(s):
            if s == x_mask:
                return True
            if s in dead:
                return False
            cl = self.closure(s)
            for v in bit_indices(x_mask & ~s):
                if not (cl >> v) & 1:
                    order.append(v)
                    if extend(s | (1 << v)):
                        return True
                    order.pop()
            dead.add(s)
            return False

        if extend(0):
            return tuple(order)
        return None


def transversal_witness(complex_, subset, override=False):
    """A TransversalWitness for the subset, or None if it is not one."""
    _check_scan_limit(complex_, override)
    ctx = _context(complex_)
    order = ctx.transversal_order(complex_.mask_of(subset))
    if order is None:
        return None
    return _witness_from_order(complex_, ctx, order)


def _witness_from_order(complex_, ctx, order):
    chain = []
    acc = 0
    chain.append(complex_.set_of(ctx.closure(acc)))
    for v in order:
        acc |= 1 << v
        chain.append(complex_.set_of(ctx.closure(acc)))
    ordering = tuple(complex_.vertices[v] for v in order)
    return TransversalWitness(ordering, tuple(chain))


def is_transversal_bruteforce(complex_, subset, override=False):
    """Literal transversal check: every ordering against every flat chain."""
    x_mask = complex_.mask_of(subset)
    k = x_mask.bit_count()
    if k > ORACLE_SIZE_LIMIT and not override:
        raise LimitExceeded(
            f"transversal oracle on {k} vertices exceeds soft limit "
            f"{ORACLE_SIZE_LIMIT}; pass override=True to lift"
        )
    _check_scan_limit(complex_, override)
    flat_list = _flat_masks(complex_)

    def chain_from(pos, prev, perm):
        if pos > k:
            return True
        for f in flat_list:
            if prev is not None:
                if prev == f or prev & ~f:
                    continue
                v = perm[pos - 1]
                if not (f >> v) & 1 or (prev >> v) & 1:
                    continue
            if chain_from(pos + 1, f, perm):
                return True
        return False

    for perm in itertools.permutations(bit_indices(x_mask)):
        if chain_from(0, None, perm):
            return True
    return False


def br_violation(complex_, override=False):
    """First face (by size, then vertex order) that is not a transversal."""
    _check_scan_limit(complex_, override)
    ctx = _context(complex_)
    for face in complex_.faces:
        if ctx.transversal_order(complex_.mask_of(face)) is None:
            return face
    return None


def is_boolean_representable(complex_, override=False):
    """True iff every face is a transversal of successive differences."""
    return br_violation(complex_, override) is None


def simplification(complex_, override=False):
    """Quotient by the same-closure equivalence on vertices.

    Requires every singleton to be a face.  Returns the quotient complex
    (vertices renamed to the first vertex of each class) and the classes.
    """
    _check_scan_limit(complex_, override)
    if complex_.loops():
        raise LoopsPresent(
            "simplification needs every singleton to be a face; loops: "
            + " ".join(sorted(complex_.loops()))
        )
    ctx = _context(complex_)
    n = len(complex_.vertices)
    by_closure = {}
    for v in range(n):
        by_closure.setdefault(ctx.closure(1 << v), []).append(v)
    classes = sorted(by_closure.values(), key=lambda c: c[0])
    rep = {}
    for cls in classes:
        for v in cls:
            rep[v] = complex_.vertices[cls[0]]
    new_vertices = tuple(complex_.vertices[cls[0]] for cls in classes)
    faces = [
        {rep[i] for i in bit_indices(facet)} for facet in complex_.facet_masks
    ]
    from .complexes import SimplicialComplex

    quotient = SimplicialComplex(new_vertices, faces)
    partition = tuple(
        frozenset(complex_.vertices[v] for v in cls) for cls in classes
    )
    return quotient, partition
