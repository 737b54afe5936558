#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Independent brute-force oracle used to freeze the expected values in the C++ tests.

Walks are enumerated as vertex sequences on simple graphs (no directed-edge
bookkeeping), determinants are expanded symbolically with sympy. Nothing here
shares code with the library. Run it to regenerate the numbers quoted in
tests/*.cpp; it prints them in a copy-pasteable form.
"""
import itertools
from fractions import Fraction

import numpy as np
import sympy as sp


def cycle(n):
    return n, [(i, (i + 1) % n) for i in range(n)]


def complete(n):
    return n, [(i, j) for i in range(n) for j in range(i + 1, n)]


def petersen():
    e = [(i, (i + 1) % 5) for i in range(5)]
    e += [(i, i + 5) for i in range(5)]
    e += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return 10, e


def torus(n, d):
    verts = list(itertools.product(range(n), repeat=d))
    index = {v: k for k, v in enumerate(verts)}
    edges = []
    for v in verts:
        for axis in range(d):
            w = list(v)
            w[axis] = (w[axis] + 1) % n
            edges.append((index[v], index[tuple(w)]))
    return len(verts), edges


def neighbours(n, edges):
    nb = [[] for _ in range(n)]
    for a, b in edges:
        nb[a].append(b)
        nb[b].append(a)
    return nb


def closed_nb_walks(n, edges, r):
    """All closed non-backtracking vertex sequences of length r (simple graphs)."""
    nb = neighbours(n, edges)
    out = []

    def rec(path):
        if len(path) == r + 1:
            if path[-1] == path[0]:
                out.append(tuple(path))
            return
        for w in nb[path[-1]]:
            if len(path) >= 2 and w == path[-2]:
                continue
            path.append(w)
            rec(path)
            path.pop()

    for v in range(n):
        rec([v])
    return out


def counts(n, edges, rmax):
    f, c, primes = [n], [0], [0]
    for r in range(1, rmax + 1):
        walks = closed_nb_walks(n, edges, r)
        circ = [w for w in walks if r == 1 or w[1] != w[-2]]
        f.append(len(walks))
        c.append(len(circ))
        classes = set()
        for w in circ:
            seq = w[:-1]
            rots = [seq[k:] + seq[:k] for k in range(r)]
            if any(seq == seq[d:] + seq[:d] for d in range(1, r) if r % d == 0):
                continue
            classes.add(min(rots))
        primes.append(len(classes))
    return f, c, primes


def adjacency(n, edges):
    a = np.zeros((n, n), dtype=object)
    for u, v in edges:
        a[u, v] += 1
        a[v, u] += 1
    return a


def nb_matrix_brute(n, edges, r):
    nb = neighbours(n, edges)
    m = np.zeros((n, n), dtype=np.int64)

    def rec(path):
        if len(path) == r + 1:
            m[path[0], path[-1]] += 1
            return
        for w in nb[path[-1]]:
            if len(path) >= 2 and w == path[-2]:
                continue
            path.append(w)
            rec(path)
            path.pop()

    for v in range(n):
        rec([v])
    return m


def neg_log_det_side(n, edges, q, R):
    t = sp.symbols("t")
    a = sp.Matrix(adjacency(n, edges).tolist())
    det = sp.expand(((1 + q * t**2) * sp.eye(n) - t * a).det())
    expo = sp.Rational((q - 1) * n, 2)
    ser = sp.series(-sp.log((1 - t**2) ** expo * det), t, 0, R + 1).removeO()
    return [sp.Rational(ser.coeff(t, r)) for r in range(R + 1)], sp.Poly(det, t).all_coeffs()[::-1]


def lattice_walks_bruteforce(m, target, length):
    d = len(m)
    steps = []
    for axis in range(d):
        for s in (1, -1):
            e = [0] * d
            e[axis] = s
            steps.append(tuple(e))
    cur = {tuple(m): 1}
    for _ in range(length):
        nxt = {}
        for p, w in cur.items():
            for s in steps:
                qq = tuple(x + y for x, y in zip(p, s))
                nxt[qq] = nxt.get(qq, 0) + w
        cur = nxt
    return cur.get(tuple(target), 0)


def tree_walks_bruteforce(q, d, length):
    # explicit ball of radius `length` in the (q+1)-regular tree
    parent, depth, children = [-1], [0], [[]]
    frontier = [0]
    for level in range(length):
        nxt = []
        for v in frontier:
            k = q + 1 if v == 0 else q
            for _ in range(k):
                parent.append(v)
                depth.append(level + 1)
                children.append([])
                children[v].append(len(parent) - 1)
                nxt.append(len(parent) - 1)
        frontier = nxt
    target = 0
    for _ in range(d):
        target = children[target][0]
    vec = {0: 1}
    for _ in range(length):
        nv = {}
        for v, w in vec.items():
            nbrs = list(children[v]) + ([parent[v]] if parent[v] >= 0 else [])
            for u in nbrs:
                nv[u] = nv.get(u, 0) + w
        vec = nv
    return vec.get(target, 0)


if __name__ == "__main__":
    graphs = {
        "C3": (cycle(3), 1, 10),
        "C5": (cycle(5), 1, 10),
        "K4": (complete(4), 2, 10),
        "Petersen": (petersen(), 2, 10),
        "Torus4x4": (torus(4, 2), 3, 9),
    }
    for name, ((n, edges), q, R) in graphs.items():
        f, c, p = counts(n, edges, R)
        print(f"{name}: f = {f}")
        print(f"{name}: c = {c}")
        print(f"{name}: prime classes per length = {p}")
        series, detpoly = neg_log_det_side(n, edges, q, 10)
        print(f"{name}: -log det side = {[str(x) for x in series]}")
        print(f"{name}: det(I - tA + q t^2 I) coeffs = {detpoly}")
        # Ihara-Bass consistency inside the oracle itself
        assert all(series[r] == Fraction(c[r], r) for r in range(1, min(R, 10) + 1)), name
    n, e = complete(4)
    print("K4 A_2 =", nb_matrix_brute(n, e, 2).tolist())
    n, e = cycle(5)
    print("C5 A_3 row0 =", nb_matrix_brute(n, e, 3)[0].tolist())
    n, e = petersen()
    print("Petersen A_5 row0 =", nb_matrix_brute(n, e, 5)[0].tolist())
    for name, (n, e) in {"K4": complete(4), "C4": cycle(4), "Petersen": petersen()}.items():
        a = np.array(adjacency(n, e), dtype=object)
        pw = np.identity(n, dtype=object)
        row = []
        for k in range(11):
            row.append(int(pw[0, 0]))
            pw = pw.dot(a)
        print(f"{name}: W_n(0,0) n=0..10 = {row}")
    print("lattice D=1 closed 2,4,6:", [lattice_walks_bruteforce((0,), (0,), L) for L in (2, 4, 6)])
    print("lattice D=2 closed 4:", lattice_walks_bruteforce((0, 0), (0, 0), 4))
    print("lattice D=2 (0,0)->(1,2) len 5:", lattice_walks_bruteforce((0, 0), (1, 2), 5))
    print("lattice D=2 (0,0)->(1,-1) len 8:", lattice_walks_bruteforce((0, 0), (1, -1), 8))
    print("tree q=2 d=1 len 5:", tree_walks_bruteforce(2, 1, 5))
    print("tree q=3 d=0 len 6:", tree_walks_bruteforce(3, 0, 6))
    print("tree q=3 d=2 len 8:", tree_walks_bruteforce(3, 2, 8))
