#!/usr/bin/env python3
"""Regenerates the embedded edge-list files under crates/core/data/.

biggs-smith.json: orbital graph of PSL(2,17) on the 102 cosets of an S4
subgroup (the self-paired suborbit of length 3).
hexagon-q2.json: incidence graph of the generalized hexagon of order 2
(the Tutte 12-cage), expanded from its LCF description.

Both outputs are checked against their intersection arrays before writing.
"""
import json
import sys
from collections import deque
from pathlib import Path

P = 17
INF = P


def proj_map(f):
    return tuple(f(x) for x in range(P + 1))


def translate(x):
    return INF if x == INF else (x + 1) % P


def invert(x):
    if x == INF:
        return 0
    if x == 0:
        return INF
    return (-pow(x, P - 2, P)) % P


def compose(a, b):
    # apply a then b
    return tuple(b[a[i]] for i in range(len(a)))


def closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def order(g):
    ident = tuple(range(len(g)))
    k, x = 1, g
    while x != ident:
        x = compose(x, g)
        k += 1
    return k


def bfs(adj, s):
    dist = [-1] * len(adj)
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def intersection_array(adj):
    arrays = set()
    for u in range(len(adj)):
        dist = bfs(adj, u)
        d = max(dist)
        bs, cs = [], []
        for i in range(d + 1):
            layer = [v for v in range(len(adj)) if dist[v] == i]
            b = {sum(1 for w in adj[v] if dist[w] == i + 1) for v in layer}
            c = {sum(1 for w in adj[v] if dist[w] == i - 1) for v in layer}
            if len(b) != 1 or len(c) != 1:
                return None
            bs.append(b.pop())
            cs.append(c.pop())
        arrays.add((tuple(bs[:-1]), tuple(cs[1:])))
    return arrays.pop() if len(arrays) == 1 else None


def biggs_smith():
    t = proj_map(translate)
    s = proj_map(invert)
    group = sorted(closure([t, s]))
    assert len(group) == 2448
    fours = [g for g in group if order(g) == 4]
    threes = [g for g in group if order(g) == 3]
    sub = None
    for a in fours:
        for b in threes:
            h = closure([a, b])
            if len(h) == 24:
                sub = h
                break
        if sub:
            break
    coset_of = {}
    reps = []
    for g in group:
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in sub:
            coset_of[compose(h, g)] = idx
    assert len(reps) == 102
    # a self-paired double coset HgH of size 3|H| gives a cubic orbital graph
    for g in group:
        dbl = {compose(compose(h1, g), h2) for h1 in sub for h2 in sub}
        if len(dbl) != 72:
            continue
        inv = tuple(sorted(range(len(g)), key=lambda i: g[i]))
        if inv not in dbl:
            continue
        edges = set()
        for x_idx, x in enumerate(reps):
            for d in dbl:
                # Hx ~ Hy iff x y^-1 in HgH, y = d^-1 x
                dinv = tuple(sorted(range(len(d)), key=lambda i: d[i]))
                y = coset_of[compose(dinv, x)]
                edges.add((min(x_idx, y), max(x_idx, y)))
        adj = [[] for _ in range(102)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        if any(len(a) != 3 for a in adj):
            continue
        arr = intersection_array(adj)
        if arr == ((3, 2, 2, 2, 1, 1, 1), (1, 1, 1, 1, 1, 1, 3)):
            return 102, sorted(edges)
    raise SystemExit("no Biggs-Smith orbital found")


def lcf(offsets, repeat):
    n = len(offsets) * repeat
    edges = set()
    for i in range(n):
        edges.add((min(i, (i + 1) % n), max(i, (i + 1) % n)))
        j = (i + offsets[i % len(offsets)]) % n
        edges.add((min(i, j), max(i, j)))
    return n, sorted(edges)


def hexagon_q2():
    n, edges = lcf([17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17], 7)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    assert all(len(a) == 3 for a in adj)
    arr = intersection_array(adj)
    assert arr == ((3, 2, 2, 2, 2, 2), (1, 1, 1, 1, 1, 3)), arr
    return n, edges


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "crates/core/data")
    out.mkdir(parents=True, exist_ok=True)
    for name, (n, edges) in (("biggs-smith", biggs_smith()), ("hexagon-q2", hexagon_q2())):
        (out / f"{name}.json").write_text(json.dumps({"n": n, "edges": [list(e) for e in edges]}) + "\n")
        print(name, n, len(edges))


if __name__ == "__main__":
    main()
