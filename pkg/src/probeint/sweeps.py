"""Exhaustive small-instance sweeps, deduplicated up to isomorphism.

Recognition verdicts are invariant under relabeling, so exhaustive
cross-checks only need one representative per isomorphism class: graphs are
canonicalized as the least edge bitmask over all vertex permutations, and
nonprobe choices are deduplicated under the automorphisms of the chosen
representative.  Matrices are canonicalized under independent row and
column permutations as the least row-permuted column-sorted key.
"""

from __future__ import annotations

import itertools

import numpy as np

from .graphs import Graph
from .matrices import LabeledMatrix, from_zero_one


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _perm_bit_maps(n: int) -> tuple[list, list]:
    pairs = _pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    maps = []
    for perm in perms:
        maps.append(
            [index[(min(perm[i], perm[j]), max(perm[i], perm[j]))] for i, j in pairs]
        )
    return perms, maps


def graph_class_representatives(n: int) -> list[Graph]:
    """Lex-least representative of every isomorphism class on n vertices."""
    if n == 1:
        return [Graph(n=1, vertex_names=("v0",), edges=frozenset())]
    pairs = _pairs(n)
    nbits = len(pairs)
    _, maps = _perm_bit_maps(n)
    masks = np.arange(1 << nbits, dtype=np.int64)
    bits = [(masks >> k) & 1 for k in range(nbits)]
    canon = masks.copy()
    for mp in maps:
        image = np.zeros_like(masks)
        for k in range(nbits):
            image |= bits[k] << mp[k]
        np.minimum(canon, image, out=canon)
    reps = np.nonzero(canon == masks)[0]
    names = tuple(f"v{i}" for i in range(n))
    out = []
    for mask in reps.tolist():
        edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        out.append(Graph(n=n, vertex_names=names, edges=edges))
    return out


def automorphisms(g: Graph) -> list[tuple]:
    """All vertex permutations mapping the edge set onto itself."""
    perms, maps = _perm_bit_maps(g.n) if g.n > 1 else ([(0,)], [[]])
    pairs = _pairs(g.n)
    index = {p: k for k, p in enumerate(pairs)}
    mask = sum(1 << index[e] for e in g.edges)
    auts = []
    for perm, mp in zip(perms, maps):
        image = 0
        for k in range(len(pairs)):
            if mask >> k & 1:
                image |= 1 << mp[k]
        if image == mask:
            auts.append(perm)
    return auts


def independent_set_orbits(g: Graph) -> list[frozenset]:
    """One representative per automorphism orbit of independent vertex sets.

    Includes the empty set and the full vertex set when independent.
    """
    auts = automorphisms(g)
    independent = []
    for mask in range(1 << g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        if all(
            not g.has_edge(u, v)
            for a, u in enumerate(members)
            for v in members[a + 1 :]
        ):
            independent.append(mask)
    seen = set()
    reps = []
    for mask in independent:
        if mask in seen:
            continue
        orbit = set()
        for perm in auts:
            image = 0
            for v in range(g.n):
                if mask >> v & 1:
                    image |= 1 << perm[v]
            orbit.add(image)
        seen |= orbit
        reps.append(frozenset(v for v in range(g.n) if mask >> v & 1))
    return reps


def probe_instances(n: int):
    """Yield (graph-with-nonprobes) per class of (graph, independent set)."""
    for g in graph_class_representatives(n):
        for nonprobes in independent_set_orbits(g):
            yield g.with_nonprobes(nonprobes)


def matrix_class_representatives(nrows: int, ncols: int) -> list[LabeledMatrix]:
    """Lex-least representative per equivalence class of 0/1 matrices under
    independent row and column permutations."""
    total = nrows * ncols
    masks = np.arange(1 << total, dtype=np.int64)
    # column j of matrix m (row-major bits): bits j, j+ncols, ...
    col_values = []
    for j in range(ncols):
        v = np.zeros_like(masks)
        for i in range(nrows):
            v |= ((masks >> (i * ncols + j)) & 1) << i
        col_values.append(v)
    cols = np.stack(col_values, axis=1)  # (masks, ncols) of row-bit nibbles

    canon = None
    for perm in itertools.permutations(range(nrows)):
        # remap each column nibble through the row permutation
        table = np.zeros(1 << nrows, dtype=np.int64)
        for v in range(1 << nrows):
            w = 0
            for i in range(nrows):
                if v >> i & 1:
                    w |= 1 << perm[i]
            table[v] = w
        permuted = table[cols]
        permuted.sort(axis=1)
        key = np.zeros_like(masks)
        for j in range(ncols):
            key = (key << nrows) | permuted[:, j]
        canon = key if canon is None else np.minimum(canon, key)

    _, first = np.unique(canon, return_index=True)
    out = []
    for mask in sorted(first.tolist()):
        data = [
            [(mask >> (i * ncols + j)) & 1 for j in range(ncols)]
            for i in range(nrows)
        ]
        out.append(from_zero_one(data))
    return out
