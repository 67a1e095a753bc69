#!/usr/bin/env python3
"""Regenerates the checked-in graph6 artifacts that are awkward to build in C++:

  * include/metdim/named_data.hpp -- embedded literal for the Biggs-Smith graph
  * data/graphs/pg32_incidence.g6 -- point/plane incidence graph of PG(3,2)

Both artifacts are deterministic; rerunning the script reproduces them byte for
byte. The script validates each graph (intersection array / parameter checks)
before writing anything, and prints the FNV-1a-64 checksum used by the catalog
manifest for the external file.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


# ---------------------------------------------------------------- graph6 ----

def graph6(n, edges):
    adj = [[False] * n for _ in range(n)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = True
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if adj[i][j] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = []
    if n <= 62:
        out.append(chr(n + 63))
    else:
        out.append(chr(126))
        out.append(chr(((n >> 12) & 63) + 63))
        out.append(chr(((n >> 6) & 63) + 63))
        out.append(chr((n & 63) + 63))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


# ------------------------------------------------------- graph validation ---

def bfs_dist(adj, s):
    dist = [-1] * len(adj)
    dist[s] = 0
    queue = [s]
    for u in queue:
        for v in adj[u]:
            if dist[v] == -1:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def intersection_array(n, edges):
    """Returns (b, c) if the graph is distance-regular, else raises."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    diam = 0
    all_dist = []
    for s in range(n):
        d = bfs_dist(adj, s)
        if min(d) < 0:
            raise ValueError("graph is disconnected")
        diam = max(diam, max(d))
        all_dist.append(d)
    b = [None] * diam
    c = [None] * (diam + 1)
    for s in range(n):
        d = all_dist[s]
        for u in range(n):
            i = d[u]
            bi = sum(1 for w in adj[u] if d[w] == i + 1)
            ci = sum(1 for w in adj[u] if d[w] == i - 1)
            if i < diam:
                if b[i] is None:
                    b[i] = bi
                elif b[i] != bi:
                    raise ValueError("not distance-regular (b)")
            elif bi != 0:
                raise ValueError("not distance-regular (b at diameter)")
            if i > 0:
                if c[i] is None:
                    c[i] = ci
                elif c[i] != ci:
                    raise ValueError("not distance-regular (c)")
    return b, c[1:]


# ------------------------------------------------------------ Biggs-Smith ---
# The Biggs-Smith graph is the unique cubic distance-regular graph on 102
# vertices. Construction: PSL(2,17) acts on the 102 left cosets of a subgroup
# isomorphic to S4; the point stabilizer has a single self-paired suborbit of
# size 3, and the corresponding orbital graph is the Biggs-Smith graph.

def psl2_17():
    P = 17
    INF = 17

    def add1(z):
        return INF if z == INF else (z + 1) % P

    def neginv(z):
        if z == INF:
            return 0
        if z == 0:
            return INF
        return (-pow(z, P - 2, P)) % P

    a = tuple(add1(z) for z in range(18))
    b = tuple(neginv(z) for z in range(18))
    ident = tuple(range(18))

    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in (a, b):
                h = tuple(s[g[x]] for x in range(18))  # s after g
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    assert len(group) == 2448, len(group)
    return sorted(group), a, b


def element_order(g):
    ident = tuple(range(len(g)))
    h, k = g, 1
    while h != ident:
        h = tuple(g[h[x]] for x in range(len(g)))
        k += 1
    return k


def closure_bounded(gens, cap):
    """Subgroup generated by gens, aborting once its size exceeds cap."""
    ident = tuple(range(len(gens[0])))
    sub = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[g[x]] for x in range(len(g)))
                if h not in sub:
                    if len(sub) >= cap:
                        return None
                    sub.add(h)
                    nxt.append(h)
        frontier = nxt
    return sub


def biggs_smith():
    group, a, b = psl2_17()

    # Deterministic search for an order-24 subgroup (necessarily S4 inside
    # PSL(2,17)): first involution/order-3 pair that generates exactly 24.
    invols = [g for g in group if element_order(g) == 2]
    order3 = [g for g in group if element_order(g) == 3]
    H = None
    for g in invols:
        for h in order3:
            sub = closure_bounded([g, h], 24)
            if sub is not None and len(sub) == 24:
                H = sorted(sub)
                break
        if H:
            break
    assert H is not None

    # Left cosets xH, indexed in first-appearance order over the sorted group.
    coset_of = {}
    reps = []
    for g in group:
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in H:
            gh = tuple(g[h[x]] for x in range(18))  # g after h: element of gH
            coset_of[gh] = idx
    assert len(reps) == 102

    def act(s, i):
        g = reps[i]
        sg = tuple(s[g[x]] for x in range(18))  # s after g = left mult by s
        return coset_of[sg]

    # Suborbits: orbits of H (left multiplication) on the cosets.
    seen = [False] * 102
    suborbit3 = None
    for start in range(102):
        if seen[start]:
            continue
        orb = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for i in frontier:
                for h in H:
                    j = act(h, i)
                    if j not in orb:
                        orb.add(j)
                        nxt.append(j)
            frontier = nxt
        for i in orb:
            seen[i] = True
        if len(orb) == 3:
            assert suborbit3 is None, "suborbit of size 3 not unique"
            suborbit3 = sorted(orb)
    assert suborbit3 is not None

    # Orbital graph of the pair (coset 0, first size-3 suborbit member):
    # close the pair orbit under both generators.
    gens = (a, b)
    start = (0, suborbit3[0])
    pairs = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for (i, j) in frontier:
            for s in gens:
                p = (act(s, i), act(s, j))
                if p not in pairs:
                    pairs.add(p)
                    nxt.append(p)
        frontier = nxt
    edges = sorted({(min(i, j), max(i, j)) for (i, j) in pairs})
    assert len(edges) == 153, len(edges)

    bb, cc = intersection_array(102, edges)
    assert bb == [3, 2, 2, 2, 1, 1, 1], bb
    assert cc == [1, 1, 1, 1, 1, 1, 3], cc
    return 102, edges


# ---------------------------------------------------------------- PG(3,2) ---
# Points vs planes of PG(3,2) as nonzero vectors of GF(2)^4, incident when the
# dot product vanishes. Vertices: points 0..14 (vector v -> v-1), planes
# 15..29 (functional h -> 14 + h).

def pg32_incidence():
    edges = []
    for p in range(1, 16):
        for h in range(1, 16):
            if bin(p & h).count("1") % 2 == 0:
                edges.append((p - 1, 14 + h))
    bb, cc = intersection_array(30, edges)
    assert bb == [7, 6, 4], bb
    assert cc == [1, 3, 7], cc
    return 30, edges


# -------------------------------------------------------------------- main --

def main():
    n, edges = biggs_smith()
    g6 = graph6(n, edges)
    header = ROOT / "include" / "metdim" / "named_data.hpp"
    header.write_text(
        "// Generated by scripts/make_named.py; do not edit by hand.\n"
        "#ifndef METDIM_NAMED_DATA_HPP\n"
        "#define METDIM_NAMED_DATA_HPP\n"
        "\n"
        "namespace metdim::named_detail {\n"
        "\n"
        "// Biggs-Smith graph (102 vertices, cubic, intersection array\n"
        "// {3,2,2,2,1,1,1; 1,1,1,1,1,1,3}): orbital graph of PSL(2,17) on the\n"
        "// 102 cosets of an S4 subgroup, self-paired suborbit of size 3.\n"
        "inline const char* const BIGGS_SMITH_G6 =\n"
        "    \"" + g6 + "\";\n"
        "\n"
        "}  // namespace metdim::named_detail\n"
        "\n"
        "#endif  // METDIM_NAMED_DATA_HPP\n"
    )
    print(f"wrote {header} ({n} vertices, {len(edges)} edges)")

    n, edges = pg32_incidence()
    g6 = graph6(n, edges)
    out = ROOT / "data" / "graphs" / "pg32_incidence.g6"
    out.parent.mkdir(parents=True, exist_ok=True)
    data = (g6 + "\n").encode()
    out.write_bytes(data)
    print(f"wrote {out} ({n} vertices, {len(edges)} edges)")
    print(f"fnv1a64 {fnv1a64(data):016x}")


if __name__ == "__main__":
    sys.exit(main())
