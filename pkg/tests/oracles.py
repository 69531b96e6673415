"""Slow, deliberately naive reference implementations used only by the tests.

Nothing here shares code with the package beyond the ``Graph`` container:
faces come from ``itertools`` subsets, ranks from ``Fraction`` Gaussian
elimination (or plain modular elimination), and Betti numbers from
Hochster's formula written out literally.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations


def independent_sets(n, edges, within=None):
    verts = list(range(n)) if within is None else sorted(within)
    E = {frozenset(e) for e in edges}
    out = []
    for k in range(len(verts) + 1):
        for S in combinations(verts, k):
            if not any(frozenset(p) in E for p in combinations(S, 2)):
                out.append(S)
    return out


def rank_fraction(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def rank_mod(rows, p):
    M = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c] * inv % p
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def matrix_rank(rows, p=0):
    if not rows or not rows[0]:
        return 0
    return rank_fraction(rows) if p == 0 else rank_mod(rows, p)


def reduced_homology(faces, p=0):
    """``{dim: rank}`` of reduced homology for a complex given by all its faces
    (tuples, including ``()``).  An empty list is the void complex."""
    faces = sorted({tuple(sorted(f)) for f in faces})
    if not faces:
        return {}
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)

    def boundary_rank(i):
        up, low = by_dim.get(i, []), by_dim.get(i - 1, [])
        if not up or not low:
            return 0
        index = {f: k for k, f in enumerate(low)}
        rows = []
        for f in up:
            row = [0] * len(low)
            for k in range(len(f)):
                row[index[f[:k] + f[k + 1:]]] = (-1) ** k
            rows.append(row)
        return matrix_rank(rows, p)

    out = {}
    for i in range(-1, max(by_dim) + 1):
        h = len(by_dim.get(i, [])) - boundary_rank(i) - boundary_rank(i + 1)
        if h:
            out[i] = h
    return out


def hochster_graded(n, edges, p=0):
    """Graded Betti table of ``k[Delta(G)]`` straight from Hochster's formula."""
    table = Counter()
    for size in range(n + 1):
        for W in combinations(range(n), size):
            for j, h in reduced_homology(independent_sets(n, edges, W), p).items():
                table[(size - j - 1, size)] += h
    return {k: v for k, v in sorted(table.items()) if v}


def all_subsets(m):
    return [S for k in range(m + 1) for S in combinations(range(m), k)]


def closure(facets):
    out = set()
    for f in facets:
        for k in range(len(f) + 1):
            out.update(combinations(sorted(f), k))
    return out


def alexander_dual_faces(m, faces):
    faces = {tuple(sorted(f)) for f in faces}
    full = set(range(m))
    return [S for S in all_subsets(m) if tuple(sorted(full - set(S))) not in faces]


def runs_in_cycle(n, W):
    """Run lengths of the subgraph of ``C_n`` induced on ``W`` (not the whole cycle)."""
    W = set(W)
    seen, runs = set(), []
    for v in sorted(W):
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            u = stack.pop()
            for w in ((u - 1) % n, (u + 1) % n):
                if w in W and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        runs.append(len(comp))
    return sorted(runs)


def count_runs_brute(n, l, m, avoid_ends=False):
    """Subsets of ``C_n`` (vertices ``1..n``) inducing exactly ``m`` runs of length ``l``."""
    total = 0
    for W in combinations(range(1, n + 1), l * m):
        if len(W) == n:
            continue
        if avoid_ends and (1 in W or n in W):
            continue
        if runs_in_cycle(n, [w - 1 for w in W]) == [l] * m:
            total += 1
    return total


def tree_canonical(n, edges):
    """AHU canonical string of a tree, rooted at its center(s)."""
    if n == 1:
        return "()"
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    deg = {v: len(adj[v]) for v in adj}
    layer = [v for v in adj if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    centers = layer

    def encode(v, parent):
        return "(" + "".join(sorted(encode(u, v) for u in adj[v] if u != parent)) + ")"

    return min(encode(c, None) for c in centers)
