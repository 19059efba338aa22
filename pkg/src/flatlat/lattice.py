"""Finite lattices: validation, structure queries and enumeration.

A lattice is stored as an indexed tuple of element labels together with the
full order relation; meet and join tables are computed once at construction
time and every query afterwards is table lookup.  Instances are immutable and
hashable, so results of expensive derived computations are cached on the
instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from ._util import bit_indices
from .errors import LimitExceeded, NotALattice, NotAPartialOrder

# Unlabeled-lattice enumeration is doubly exponential in spirit; beyond this
# size the stream stops being interactive.
ENUMERATION_SOFT_LIMIT = 7


@dataclass(frozen=True)
class LatticeIso:
    """Order isomorphism between two lattices as an element-index map."""

    mapping: tuple[int, ...]

    def __getitem__(self, index):
        return self.mapping[index]


class FiniteLattice:
    """A finite lattice over an indexed, labeled element set.

    The constructor validates the relation completely: it must be a partial
    order in which every pair has a unique meet and join.  Nothing is ever
    repaired silently; bad input raises NotAPartialOrder or NotALattice.
    """

    def __init__(self, labels, order):
        labels = tuple(labels)
        if not labels:
            raise NotAPartialOrder("element set must be nonempty")
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be distinct")
        n = len(labels)
        if len(order) != n or any(len(row) != n for row in order):
            raise NotAPartialOrder("order relation must be a square matrix over the elements")

        up = [0] * n  # up[i]: bitmask of j with i <= j
        for i in range(n):
            row = order[i]
            m = 0
            for j in range(n):
                if row[j]:
                    m |= 1 << j
            up[i] = m

        for i in range(n):
            if not (up[i] >> i) & 1:
                raise NotAPartialOrder(f"relation is not reflexive at {labels[i]!r}")
        for i in range(n):
            for j in bit_indices(up[i]):
                if j != i and (up[j] >> i) & 1:
                    raise NotAPartialOrder(
                        f"relation is not antisymmetric on {labels[i]!r}, {labels[j]!r}"
                    )
                if up[j] & ~up[i]:
                    raise NotAPartialOrder(
                        f"relation is not transitive at {labels[i]!r} <= {labels[j]!r}"
                    )

        down = [0] * n
        for i in range(n):
            for j in bit_indices(up[i]):
                down[j] |= 1 << i

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                lower = down[i] & down[j]
                g = _greatest(lower, down)
                if g is None:
                    raise NotALattice((labels[i], labels[j]), "meet")
                meet[i][j] = meet[j][i] = g
                upper = up[i] & up[j]
                l = _least(upper, up)
                if l is None:
                    raise NotALattice((labels[i], labels[j]), "join")
                join[i][j] = join[j][i] = l

        self.labels = labels
        self._up = tuple(up)
        self._down = tuple(down)
        self._meet = tuple(tuple(row) for row in meet)
        self._join = tuple(tuple(row) for row in join)
        self._index = {lab: i for i, lab in enumerate(labels)}
        self.bottom = min(range(n), key=lambda i: down[i].bit_count())
        self.top = max(range(n), key=lambda i: down[i].bit_count())
        assert down[self.bottom] == 1 << self.bottom
        assert up[self.top] == 1 << self.top

    # -- basic queries ---------------------------------------------------

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.labels == other.labels and self._up == other._up

    def __hash__(self):
        return hash((self.labels, self._up))

    def __repr__(self):
        return f"FiniteLattice({len(self)} elements: {' '.join(self.labels)})"

    def label(self, i):
        return self.labels[i]

    def index(self, label):
        return self._index[label]

    def leq(self, i, j):
        return bool((self._up[i] >> j) & 1)

    def lt(self, i, j):
        return i != j and self.leq(i, j)

    def meet(self, i, j):
        return self._meet[i][j]

    def join(self, i, j):
        return self._join[i][j]

    def meet_all(self, elems):
        out = self.top
        for x in elems:
            out = self._meet[out][x]
        return out

    def join_all(self, elems):
        # empty join is the bottom element
        out = self.bottom
        for x in elems:
            out = self._join[out][x]
        return out

    def covers(self, x, y):
        """True iff y covers x: x < y with nothing strictly between."""
        if x == y or not self.leq(x, y):
            return False
        return (self._up[x] & self._down[y]).bit_count() == 2

    @cached_property
    def cover_pairs(self):
        """All pairs (x, y) with y covering x, ordered by index."""
        out = []
        for x in range(len(self)):
            for y in range(len(self)):
                if self.covers(x, y):
                    out.append((x, y))
        return tuple(out)

    @cached_property
    def atoms(self):
        """Covers of the bottom element, as a frozenset of indices."""
        return frozenset(y for x, y in self.cover_pairs if x == self.bottom)

    @cached_property
    def height(self):
        """Length (number of edges) of a longest chain."""
        n = len(self)
        depth = [0] * n
        for x in sorted(range(n), key=lambda i: self._down[i].bit_count()):
            best = 0
            for y in bit_indices(self._down[x]):
                if y != x and self.covers(y, x):
                    best = max(best, depth[y] + 1)
            depth[x] = best
        return depth[self.top]

    def atoms_below(self, x):
        """The set of atoms that lie below x."""
        return frozenset(a for a in self.atoms if self.leq(a, x))

    # -- classification predicates ---------------------------------------

    def atomistic_violation(self):
        """First element that is not the join of the atoms below it, or None."""
        for x in range(len(self)):
            if self.join_all(self.atoms_below(x)) != x:
                return x
        return None

    @cached_property
    def is_atomistic(self):
        return self.atomistic_violation() is None

    @cached_property
    def semimodular_witness(self):
        """A forbidden five-element configuration, or None if semimodular.

        The lattice is semimodular iff it has no sublattice {a,b,c,d,e} with
        e < c < b < a, e < d < a, d covering e in the whole lattice,
        b^d = c^d = e and b v d = c v d = a.  The scan runs from the top of
        the element order downward so the witness is deterministic.
        """
        n = len(self)
        order = range(n - 1, -1, -1)
        for a in order:
            for b in order:
                if b == a or not self.lt(b, a):
                    continue
                for c in order:
                    if c in (a, b) or not self.lt(c, b):
                        continue
                    for e in order:
                        if e in (a, b, c) or not self.lt(e, c):
                            continue
                        for d in order:
                            if d in (a, b, c, e):
                                continue
                            if not (self.lt(e, d) and self.lt(d, a)):
                                continue
                            if not self.covers(e, d):
                                continue
                            if self._meet[b][d] != e or self._meet[c][d] != e:
                                continue
                            if self._join[b][d] != a or self._join[c][d] != a:
                                continue
                            return (a, b, c, d, e)
        return None

    @property
    def is_semimodular(self):
        return self.semimodular_witness is None

    def is_semimodular_by_covers(self):
        """Textbook cover law: x^y covered by x implies y covered by x v y.

        Kept as an independent cross-check of the forbidden-configuration
        predicate; not used by any decision procedure.
        """
        n = len(self)
        for x in range(n):
            for y in range(n):
                m = self._meet[x][y]
                if self.covers(m, x) and not self.covers(y, self._join[x][y]):
                    return False
        return True

    @cached_property
    def is_geometric(self):
        return self.is_atomistic and self.is_semimodular

    @cached_property
    def is_boolean(self):
        """True iff the lattice is a powerset lattice of its atoms."""
        if not self.is_atomistic:
            return False
        if len(self) != 1 << len(self.atoms):
            return False
        seen = set()
        for x in range(len(self)):
            key = self.atoms_below(x)
            if key in seen:
                return False
            seen.add(key)
        return True

    # -- isomorphism ------------------------------------------------------

    @cached_property
    def _invariants(self):
        # per-element fingerprint: order degrees plus cover-neighborhood
        # degree multisets, refined one round
        n = len(self)
        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for x, y in self.cover_pairs:
            upper[x].append(y)
            lower[y].append(x)
        base = [
            (
                self._down[i].bit_count(),
                self._up[i].bit_count(),
                len(lower[i]),
                len(upper[i]),
            )
            for i in range(n)
        ]
        return tuple(
            (
                base[i],
                tuple(sorted(base[j] for j in lower[i])),
                tuple(sorted(base[j] for j in upper[i])),
            )
            for i in range(n)
        )

    def isomorphism(self, other):
        """An order isomorphism onto other as a LatticeIso, or None."""
        n = len(self)
        if n != len(other):
            return None
        mine, theirs = self._invariants, other._invariants
        if sorted(mine) != sorted(theirs):
            return None
        candidates = [
            [j for j in range(n) if theirs[j] == mine[i]] for i in range(n)
        ]
        mapping = [None] * n
        used = [False] * n

        def extend(i):
            if i == n:
                return True
            for j in candidates[i]:
                if used[j]:
                    continue
                ok = True
                for k in range(i):
                    if self.leq(i, k) != other.leq(j, mapping[k]) or self.leq(
                        k, i
                    ) != other.leq(mapping[k], j):
                        ok = False
                        break
                if ok:
                    mapping[i] = j
                    used[j] = True
                    if extend(i + 1):
                        return True
                    used[j] = False
                    mapping[i] = None
            return False

        if extend(0):
            return LatticeIso(tuple(mapping))
        return None

    def is_isomorphic(self, other):
        return self.isomorphism(other) is not None

    @cached_property
    def canonical_key(self):
        """Relabeling-invariant fingerprint used to deduplicate lattices.

        Minimum of the relation matrix over all permutations that respect the
        element invariants.  Only intended for the small lattices produced by
        enumerate_lattices.
        """
        n = len(self)
        inv = self._invariants
        classes = {}
        for i in range(n):
            classes.setdefault(inv[i], []).append(i)
        blocks = [classes[k] for k in sorted(classes)]
        best = None
        for perms in itertools.product(
            *(itertools.permutations(block) for block in blocks)
        ):
            old_order = [i for perm in perms for i in perm]
            position = {old: new for new, old in enumerate(old_order)}
            key = bytearray()
            for old_i in old_order:
                row = 0
                for old_j in bit_indices(self._up[old_i]):
                    row |= 1 << position[old_j]
                key.extend(row.to_bytes((n + 7) // 8, "little"))
            key = bytes(key)
            if best is None or key < best:
                best = key
        return best


def _greatest(mask, down):
    for g in bit_indices(mask):
        if mask & ~down[g] == 0:
            return g
    return None


def _least(mask, up):
    for l in bit_indices(mask):
        if mask & ~up[l] == 0:
            return l
    return None


def validate_lattice(order, labels=None):
    """Validate a relation matrix and return the FiniteLattice it defines."""
    if labels is None:
        labels = [str(i) for i in range(len(order))]
    return FiniteLattice(labels, order)


def lattice_from_covers(labels, covers):
    """Build a lattice from generator pairs (lower, upper) of its order.

    The full order is the reflexive-transitive closure of the given pairs;
    the result is validated like any other input.
    """
    labels = tuple(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    up = [1 << i for i in range(n)]
    for low, high in covers:
        if low not in index:
            raise ValueError(f"unknown element {low!r}")
        if high not in index:
            raise ValueError(f"unknown element {high!r}")
        up[index[low]] |= 1 << index[high]
    # transitive closure by repeated squaring of the reachability masks
    changed = True
    while changed:
        changed = False
        for i in range(n):
            m = up[i]
            for j in bit_indices(m):
                m |= up[j]
            if m != up[i]:
                up[i] = m
                changed = True
    order = [[(up[i] >> j) & 1 for j in range(n)] for i in range(n)]
    return FiniteLattice(labels, order)


def enumerate_lattices(max_size, override=False):
    """Yield one representative per isomorphism class of lattices.

    Lattices are produced in order of size, from the one-element lattice up
    to max_size elements.  Candidates are generated by extending linear
    extensions one maximal element at a time; each prefix of a linear
    extension of a lattice is a down-set and therefore closed under meets,
    so partial posets whose pairs lack a greatest lower bound are pruned
    immediately.  A final unique-top check makes the completed posets
    lattices (a finite meet-semilattice with a top has all joins).
    """
    if max_size > ENUMERATION_SOFT_LIMIT and not override:
        raise LimitExceeded(
            f"enumerate_lattices: max_size {max_size} exceeds soft limit "
            f"{ENUMERATION_SOFT_LIMIT} (pass override=True to lift)"
        )
    for n in range(1, max_size + 1):
        yield from _lattices_of_size(n)


def _lattices_of_size(n):
    seen = set()
    labels = tuple(str(i) for i in range(n))
    for down in _natural_meet_prefixes(n):
        maximal = (1 << n) - 1
        for j in range(n):
            maximal &= ~(down[j] & ~(1 << j))
        if maximal.bit_count() != 1:
            continue
        order = [[(down[j] >> i) & 1 for j in range(n)] for i in range(n)]
        lat = FiniteLattice(labels, order)
        key = lat.canonical_key
        if key not in seen:
            seen.add(key)
            yield lat


def _natural_meet_prefixes(n):
    """Down-set masks of naturally labeled posets whose pairs all have meets."""

    def extend(down):
        k = len(down)
        if k == n:
            yield tuple(down)
            return
        full = (1 << k) - 1
        for ideal in range(full + 1):
            if k and ideal == 0:
                continue  # a second minimal element can never regain a meet
            ok = True
            for i in bit_indices(ideal):
                if down[i] & ~ideal:
                    ok = False  # not a down-set
                    break
            if not ok:
                continue
            for x in range(k):
                common = ideal & down[x]
                if (1 << x) & ideal:
                    continue  # x below the new element: meet is x itself
                if _greatest_mask(common, down) is None:
                    ok = False
                    break
            if not ok:
                continue
            down.append(ideal | (1 << k))
            yield from extend(down)
            down.pop()

    yield from extend([])


def _greatest_mask(mask, down):
    if mask == 0:
        return None
    for g in bit_indices(mask):
        if mask & ~down[g] == 0:
            return g
    return None
