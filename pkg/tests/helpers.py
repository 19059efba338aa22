"""Shared builders and independent brute-force oracles for the test suite.

The enumeration oracle here deliberately avoids the library's pruned search
and canonicalization: candidates are generated pair by pair and deduplicated
by minimizing over all permutations, so agreement with the library is a real
cross-check.
"""

import itertools
import random

from flatlat import FiniteLattice, SimpleGraph, from_faces, validate_lattice


def chain_lattice(n, labels=None):
    if labels is None:
        labels = [str(i) for i in range(n)]
    order = [[i <= j for j in range(n)] for i in range(n)]
    return validate_lattice(order, labels)


def powerset_lattice(atoms):
    """Boolean lattice of all subsets of `atoms`, labelled by joined names."""
    atoms = list(atoms)
    subsets = []
    for r in range(len(atoms) + 1):
        subsets.extend(itertools.combinations(atoms, r))
    labels = ["".join(s) if s else "-" for s in subsets]
    order = [[set(a) <= set(b) for b in subsets] for a in subsets]
    return validate_lattice(order, labels)


def nonrealizable6_lattice():
    from flatlat import lattice_from_covers

    return lattice_from_covers(
        ["B", "1", "2", "3", "m", "T"],
        [
            ("B", "1"),
            ("B", "2"),
            ("B", "3"),
            ("1", "m"),
            ("2", "m"),
            ("m", "T"),
            ("3", "T"),
        ],
    )


def glued_triangles_complex():
    return from_faces(
        ["1", "2", "3", "4"],
        [{"1", "2", "3"}, {"1", "2", "4"}, {"3", "4"}],
    )


def uniform_complex(n, k):
    """All subsets of size <= k on vertices 1..n (a uniform matroid)."""
    verts = [str(i) for i in range(1, n + 1)]
    return from_faces(verts, [set(c) for c in itertools.combinations(verts, k)])


def all_loopfree_complexes(n):
    """Every complex with all singletons as faces on n labelled vertices.

    Distinct face families only; n <= 4 keeps this exact and quick.
    """
    verts = [str(i) for i in range(1, n + 1)]
    gens = [c for r in range(2, n + 1) for c in itertools.combinations(verts, r)]
    seen = set()
    out = []
    for bits in range(1 << len(gens)):
        faces = [{v} for v in verts]
        faces += [set(gens[i]) for i in range(len(gens)) if bits >> i & 1]
        c = from_faces(verts, faces)
        if c.facet_masks not in seen:
            seen.add(c.facet_masks)
            out.append(c)
    return out


def _transitive(rel, n):
    for k in range(n):
        rk = rel[k]
        for i in range(n):
            if rel[i][k]:
                ri = rel[i]
                for j in range(n):
                    if rk[j] and not ri[j]:
                        return False
    return True


def _is_lattice_relation(rel, n):
    for x in range(n):
        for y in range(x + 1, n):
            lower = [z for z in range(n) if rel[z][x] and rel[z][y]]
            if not any(all(rel[w][z] for w in lower) for z in lower):
                return False
            upper = [z for z in range(n) if rel[x][z] and rel[y][z]]
            if not any(all(rel[z][w] for w in upper) for z in upper):
                return False
    return True


def _canonical(rel, n):
    best = None
    for perm in itertools.permutations(range(n)):
        key = bytes(
            rel[perm[i]][perm[j]] for i in range(n) for j in range(n)
        )
        if best is None or key < best:
            best = key
    return best


def bruteforce_lattice_count(n, seed=None):
    """Isomorphism classes of n-element lattices by exhaustive pair assignment.

    Every unordered pair independently gets <, > or incomparable; transitive
    relations that pass the lattice test are deduplicated by the minimum
    relation matrix over all n! relabelings.  `seed` shuffles the pair order,
    which must not change the count.
    """
    pairs = list(itertools.combinations(range(n), 2))
    if seed is not None:
        random.Random(seed).shuffle(pairs)
    classes = set()
    for assignment in itertools.product(range(3), repeat=len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), a in zip(pairs, assignment):
            if a == 1:
                rel[i][j] = True
            elif a == 2:
                rel[j][i] = True
        if _transitive(rel, n) and _is_lattice_relation(rel, n):
            classes.add(_canonical(rel, n))
    return len(classes)


def random_graph(rng, max_vertices=10):
    n = rng.randint(1, max_vertices)
    verts = [f"v{i}" for i in range(n)]
    edges = [
        (a, b)
        for a, b in itertools.combinations(verts, 2)
        if rng.random() < rng.choice((0.2, 0.5, 0.8))
    ]
    return SimpleGraph(verts, edges)


def atomistic_lattices(max_size, override=False):
    from flatlat import enumerate_lattices

    for lat in enumerate_lattices(max_size, override=override):
        if lat.is_atomistic:
            yield lat


def assert_valid_lattice(lat):
    """Re-validate a lattice from its raw relation (paranoia helper)."""
    n = len(lat)
    order = [[lat.leq(i, j) for j in range(n)] for i in range(n)]
    rebuilt = validate_lattice(order, list(lat.labels))
    assert isinstance(rebuilt, FiniteLattice)
