"""Deciding which lattices arise as lattices of flats.

Two constructions drive everything here.  transversal_complex builds, for an
atomistic lattice, the complex on its atoms whose faces admit an enumeration
with each atom escaping the join of its predecessors; the lattice is a
lattice of flats iff that complex has exactly as many flats as the lattice
has elements.  realizing_complex builds, for an arbitrary lattice, a complex
on three copies of the nonzero elements whose flat lattice is always
isomorphic to the input, which is what makes "lattice of flats up to
isomorphism" a property worth deciding in the first place.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import SimplicialComplex
from .errors import ConstructionMismatch, LimitExceeded, NotAtomistic
from .flats import ORACLE_SIZE_LIMIT, all_flats
from .graphs import find_supercliques, top_join_graph
from .lattice import LatticeIso


class TransversalComplex:
    """The canonical complex of an atomistic lattice, tagged with witnesses.

    chain_tags maps each face to the (ordering, chain) pair discovered while
    generating it: the atoms in order, and the labels of the joins of the
    prefixes (starting from the bottom element).
    """

    def __init__(self, lattice, complex_, chain_tags):
        self.lattice = lattice
        self.complex = complex_
        self.chain_tags = chain_tags

    def __repr__(self):
        return f"TransversalComplex({self.complex!r})"


def transversal_complex(lattice):
    """Faces are the atom sets with an enumeration escaping prefix joins.

    Whether an atom can extend a partial enumeration depends only on the set
    of atoms already placed (their join is order independent), so the faces
    are discovered by a subset walk from the empty face.
    """
    violation = lattice.atomistic_violation()
    if violation is not None:
        raise NotAtomistic(lattice.labels[violation])
    atoms = sorted(lattice.atoms)
    if not atoms:
        raise ValueError(
            "the one-element lattice has no canonical complex: "
            "its atom set is empty"
        )
    labels = tuple(lattice.labels[a] for a in atoms)
    bottom_label = lattice.labels[lattice.bottom]
    # face -> (ordering, chain-of-prefix-joins, join element)
    discovered = {frozenset(): ((), (bottom_label,), lattice.bottom)}
    queue = [frozenset()]
    while queue:
        face = queue.pop()
        ordering, chain, join = discovered[face]
        for p, a in enumerate(atoms):
            if p in face or lattice.leq(a, join):
                continue
            bigger = face | {p}
            if bigger in discovered:
                continue
            j2 = lattice.join(join, a)
            discovered[bigger] = (
                ordering + (labels[p],),
                chain + (lattice.labels[j2],),
                j2,
            )
            queue.append(bigger)
    complex_ = SimplicialComplex(
        labels, [{labels[p] for p in face} for face in discovered]
    )
    chain_tags = {
        frozenset(labels[p] for p in face): (ordering, chain)
        for face, (ordering, chain, _) in discovered.items()
    }
    return TransversalComplex(lattice, complex_, chain_tags)


def is_chain_transversal_bruteforce(lattice, atom_labels, override=False):
    """Literal check that a set of atoms enumerates along a lattice chain.

    Brute force over every ordering of the atoms and every chain
    x_0 < ... < x_m of lattice elements, asking that the i-th atom lie below
    x_i but not below x_{i-1}.
    """
    atom_set = frozenset(lattice.index(lab) for lab in atom_labels)
    for a in atom_set:
        if a not in lattice.atoms:
            raise ValueError(f"{lattice.labels[a]!r} is not an atom")
    m = len(atom_set)
    if m > ORACLE_SIZE_LIMIT and not override:
        raise LimitExceeded(
            f"chain oracle on {m} atoms exceeds soft limit {ORACLE_SIZE_LIMIT}"
        )
    n = len(lattice)

    def chain_from(pos, prev, perm):
        if pos > m:
            return True
        for x in range(n):
            if prev is not None:
                if x == prev or not lattice.leq(prev, x):
                    continue
                a = perm[pos - 1]
                if not lattice.leq(a, x) or lattice.leq(a, prev):
                    continue
            if chain_from(pos + 1, x, perm):
                return True
        return False

    for perm in itertools.permutations(sorted(atom_set)):
        if chain_from(0, None, perm):
            return True
    return False


@dataclass(frozen=True)
class RealizabilityReport:
    """Outcome of is_realizable, including which procedure decided it."""

    atomistic: bool
    realizable: bool
    method: str
    lattice_size: int
    non_atomistic_witness: str | None = None
    canonical_flat_count: int | None = None
    supercliques: tuple[tuple[str, ...], ...] | None = None

    def to_jsonable(self):
        out = {
            "atomistic": self.atomistic,
            "realizable": self.realizable,
            "method": self.method,
            "lattice_size": self.lattice_size,
        }
        if self.non_atomistic_witness is not None:
            out["non_atomistic_witness"] = self.non_atomistic_witness
        if self.canonical_flat_count is not None:
            out["canonical_flat_count"] = self.canonical_flat_count
        if self.supercliques is not None:
            out["supercliques"] = [list(w) for w in self.supercliques]
        return out


def is_realizable(lattice, force_general=False, override=False):
    """Decide whether the lattice is a lattice of flats, with evidence.

    Shortcuts, tried in order unless force_general is set: atomistic of
    height at most 2 is always realizable; height exactly 3 reduces to the
    superclique test on the atom graph; height equal to the atom count holds
    only for powerset lattices.  The general path counts the flats of the
    canonical complex and compares with the lattice size.
    """
    n = len(lattice)
    violation = lattice.atomistic_violation()
    if violation is not None:
        return RealizabilityReport(
            atomistic=False,
            realizable=False,
            method="atomistic",
            lattice_size=n,
            non_atomistic_witness=lattice.labels[violation],
        )
    if not force_general:
        if lattice.height <= 2:
            return RealizabilityReport(
                atomistic=True,
                realizable=True,
                method="height-le-2",
                lattice_size=n,
            )
        if lattice.height == 3:
            cliques = find_supercliques(top_join_graph(lattice))
            return RealizabilityReport(
                atomistic=True,
                realizable=not cliques,
                method="height-3",
                lattice_size=n,
                supercliques=tuple(tuple(sorted(w)) for w in cliques) or None,
            )
        if lattice.height == len(lattice.atoms):
            return RealizabilityReport(
                atomistic=True,
                realizable=lattice.is_boolean,
                method="boolean",
                lattice_size=n,
            )
    if n == 1:
        # the canonical complex degenerates (no atoms); the one-element
        # lattice is the flat lattice of a single loop vertex
        return RealizabilityReport(
            atomistic=True,
            realizable=True,
            method="general",
            lattice_size=1,
            canonical_flat_count=1,
        )
    canonical = transversal_complex(lattice)
    flats = all_flats(canonical.complex, override=override)
    return RealizabilityReport(
        atomistic=True,
        realizable=len(flats) == n,
        method="general",
        lattice_size=n,
        canonical_flat_count=len(flats),
    )


def boolean_matrix(lattice):
    """0/1 matrix with rows the elements and columns the atoms.

    Entry is 0 when the row element lies above the column atom.  For an
    atomistic lattice the rows are pairwise distinct.
    """
    violation = lattice.atomistic_violation()
    if violation is not None:
        raise NotAtomistic(lattice.labels[violation])
    atoms = sorted(lattice.atoms)
    rows = [
        [0 if lattice.leq(a, x) else 1 for a in atoms]
        for x in range(len(lattice))
    ]
    assert len({tuple(r) for r in rows}) == len(rows)
    return rows


def realizing_complex(lattice):
    """A complex whose lattice of flats is isomorphic to the input.

    Vertices are three copies x^1, x^2, x^3 of each element x except the
    bottom.  Faces are the proper partial transversals (at most one copy of
    each element) together with every such face extended by a doubled
    element that neither dominates nor completes a join with the elements
    already picked.  Returns the complex and, for each lattice element, the
    predicted flat: all copies of the elements below it.

    For the one-element lattice the complex is a single loop vertex.
    """
    labels = lattice.labels
    if len(lattice) == 1:
        single = SimplicialComplex(("v",), [])
        return single, {labels[0]: frozenset(("v",))}

    elems = [i for i in range(len(lattice)) if i != lattice.bottom]
    copies = (1, 2, 3)
    pos = {}
    vertex_labels = []
    for e in elems:
        for c in copies:
            pos[(e, c)] = len(vertex_labels)
            vertex_labels.append(f"{labels[e]}^{c}")
    vertex_labels = tuple(vertex_labels)

    extender_cache = {}

    def doubling_extenders(support):
        # elements not dominating the picked set and whose join with any
        # picked element never lands on another picked element
        got = extender_cache.get(support)
        if got is None:
            got = [
                a
                for a in elems
                if not any(lattice.leq(p, a) for p in support)
                and not any(
                    lattice.join(a, p) == q
                    for p in support
                    for q in support
                    if q != p
                )
            ]
            extender_cache[support] = got
        return got

    faces = set()
    for r in range(len(elems) + 1):
        for support in itertools.combinations(elems, r):
            key = frozenset(support)
            extenders = doubling_extenders(key)
            for choice in itertools.product(copies, repeat=r):
                mask = 0
                for e, c in zip(support, choice):
                    mask |= 1 << pos[(e, c)]
                if r == len(elems):
                    faces.add(mask)  # full-support transversals cover all of J
                for a in extenders:
                    faces.add(mask | (1 << pos[(a, 1)]) | (1 << pos[(a, 2)]))

    def labels_of(mask):
        return {vertex_labels[i] for i in range(len(vertex_labels)) if (mask >> i) & 1}

    complex_ = SimplicialComplex(vertex_labels, [labels_of(m) for m in faces])
    predicted = {
        labels[x]: frozenset(
            f"{labels[e]}^{c}" for e in elems if lattice.leq(e, x) for c in copies
        )
        for x in range(len(lattice))
    }
    return complex_, predicted


def verify_realizing_complex(lattice, override=False):
    """Check the predicted flat map of realizing_complex is an isomorphism.

    Returns the element-index map into the flat lattice; raises
    ConstructionMismatch if the predicted map fails (reporting whether an
    isomorphism exists at all).
    """
    complex_, predicted = realizing_complex(lattice)
    family = all_flats(complex_, override=override)
    flat_index = {flat: i for i, flat in enumerate(family.flats)}

    def fail(reason):
        search = lattice.isomorphism(family.lattice)
        hint = "an isomorphism does exist" if search else "no isomorphism exists"
        raise ConstructionMismatch(f"{reason} ({hint})")

    if len(family) != len(lattice):
        fail(
            f"complex has {len(family)} flats but the lattice has "
            f"{len(lattice)} elements"
        )
    mapping = []
    for i in range(len(lattice)):
        flat = predicted[lattice.labels[i]]
        if flat not in flat_index:
            fail(f"predicted flat for {lattice.labels[i]!r} is not a flat")
        mapping.append(flat_index[flat])
    if len(set(mapping)) != len(mapping):
        fail("predicted map is not injective")
    for i in range(len(lattice)):
        for j in range(len(lattice)):
            below = predicted[lattice.labels[i]] <= predicted[lattice.labels[j]]
            if lattice.leq(i, j) != below:
                fail(
                    f"predicted map does not preserve order on "
                    f"{lattice.labels[i]!r}, {lattice.labels[j]!r}"
                )
    return LatticeIso(tuple(mapping))
