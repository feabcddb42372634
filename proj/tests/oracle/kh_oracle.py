#!/usr/bin/env python3
"""Independent Khovanov homology, face counts and quasi-trees of ribbon graphs,
frozen to tests/data/oracle_kh.json.

Graphs are given as all-plus arrow presentations, so circle v read left to
right is the rotation at vertex v. Homology over Z comes from sympy's Smith
normal form.
"""

import itertools
import json
import random
import sys
from pathlib import Path

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

FIXED = {
    "three_loops": "circle: 1+ 2+ 3+ 1+ 2+ 3+",
    "two_vertex": "circle: 1+ 3+ 2+ 3+ ; circle: 1+ 2+",
    "single_vertex": "circle:",
    "bridge": "circle: 1+ ; circle: 1+",
    "separating_loop": "circle: 1+ 1+",
    "nonseparating_loop_pair": "circle: 1+ 2+ 1+ 2+",
    "theta_planar": "circle: 1+ 2+ 3+ ; circle: 3+ 2+ 1+",
    "theta_torus": "circle: 1+ 2+ 3+ ; circle: 1+ 2+ 3+",
    "digon": "circle: 1+ 2+ ; circle: 2+ 1+",
    "path3": "circle: 1+ ; circle: 1+ 2+ ; circle: 2+",
    "triangle": "circle: 1+ 3+ ; circle: 2+ 1+ ; circle: 3+ 2+",
}


def parse(text):
    """rotation system: list of lists of half-edges; half-edges 2e, 2e+1 of edge e"""
    circles = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        assert chunk.startswith("circle:")
        circles.append([int(tok[:-1]) for tok in chunk[len("circle:"):].split()])
    labels = sorted({l for c in circles for l in c})
    index = {l: k for k, l in enumerate(labels)}
    seen = {}
    rot = []
    for c in circles:
        r = []
        for l in c:
            e = index[l]
            h = 2 * e + seen.get(e, 0)
            seen[e] = 1
            r.append(h)
        rot.append(r)
    return rot, len(labels)


def emit(rot):
    return " ; ".join("circle:" + "".join(f" {h // 2 + 1}+" for h in r) for r in rot)


def faces(rot, n, present):
    """boundary components of the spanning subgraph; returns (count, corner -> component)"""
    vert = {}
    pos = {}
    for v, r in enumerate(rot):
        for k, h in enumerate(r):
            vert[h] = v
            pos[h] = k
    sub = [[h for h in r if present[h // 2]] for r in rot]
    nxt = {}
    for r in sub:
        for k, h in enumerate(r):
            nxt[h] = r[(k + 1) % len(r)]
    comp = {}
    count = 0
    for r in sub:
        for h in r:
            if h in comp:
                continue
            p = h
            while p not in comp:
                comp[p] = count
                p = nxt[p] ^ 1
            count += 1
    bare = {}
    for v, r in enumerate(sub):
        if not r:
            bare[v] = count
            count += 1

    def corner_component(v, gap):
        # gap sits just before rotation[v][gap]; find the present half-edge at or before it
        r = rot[v]
        if not r or not sub[v]:
            return bare[v]
        k = (gap - 1) % len(r)
        while not present[r[k] // 2]:
            k = (k - 1) % len(r)
        return comp[r[k]]

    return count, corner_component


def generators(rot, n, reduced):
    gens = {}
    for state in range(1 << n):
        present = [(state >> e) & 1 for e in range(n)]
        count, cc = faces(rot, n, present)
        marked = cc(0, 0) if reduced else None
        for lab in itertools.product((1, -1), repeat=count):
            if reduced and lab[marked] != -1:
                continue
            i = sum(present)
            j = i + sum(lab) + (1 if reduced else 0)
            gens.setdefault((i, j), []).append((state, lab))
    return gens


def image(rot, n, state, lab, k):
    """d on one generator along edge k: dict (state', labels') -> coefficient"""
    present = [(state >> e) & 1 for e in range(n)]
    count, cc = faces(rot, n, present)
    present2 = list(present)
    present2[k] = 1
    count2, cc2 = faces(rot, n, present2)
    # relate components through corners: each corner keeps its component identity
    corners = []
    for v, r in enumerate(rot):
        for g in range(max(1, len(r))):
            corners.append((v, g))
    before = {}
    after = {}
    for v, g in corners:
        a = cc(v, g)
        b = cc2(v, g)
        before.setdefault(b, set()).add(a)
        after.setdefault(a, set()).add(b)
    sign = (-1) ** sum(present[:k])
    new_state = state | (1 << k)
    out = {}
    if count2 == count - 1:
        # merge: two old components into one
        merged = next(b for b, s in before.items() if len(s) == 2)
        x, y = sorted(before[merged])
        base = [None] * count2
        for a in range(count):
            if a not in (x, y):
                (b,) = after[a]
                base[b] = lab[a]
        lx, ly = lab[x], lab[y]
        if lx == 1 and ly == 1:
            results = [1]
        elif lx == -1 and ly == -1:
            results = []
        else:
            results = [-1]
        for val in results:
            nl = list(base)
            nl[merged] = val
            out[(new_state, tuple(nl))] = out.get((new_state, tuple(nl)), 0) + sign
    elif count2 == count + 1:
        split = next(a for a, s in after.items() if len(s) == 2)
        x, y = sorted(after[split])
        base = [None] * count2
        for a in range(count):
            if a != split:
                (b,) = after[a]
                base[b] = lab[a]
        pairs = [(1, -1), (-1, 1)] if lab[split] == 1 else [(-1, -1)]
        for px, py in pairs:
            nl = list(base)
            nl[x], nl[y] = px, py
            out[(new_state, tuple(nl))] = out.get((new_state, tuple(nl)), 0) + sign
    # same count: orientable twisted band, map is zero
    return out


def snf_diagonal(m):
    if m.rows == 0 or m.cols == 0:
        return []
    s = smith_normal_form(m, domain=ZZ)
    return [abs(int(s[k, k])) for k in range(min(s.rows, s.cols)) if s[k, k] != 0]


def homology(rot, n, reduced):
    gens = generators(rot, n, reduced)
    index = {b: {g: k for k, g in enumerate(gs)} for b, gs in gens.items()}

    def matrix(b):
        i, j = b
        src = gens.get(b, [])
        tgt = gens.get((i + 1, j), [])
        m = Matrix.zeros(len(tgt), len(src))
        for c, (state, lab) in enumerate(src):
            for k in range(n):
                if (state >> k) & 1:
                    continue
                for key, coeff in image(rot, n, state, lab, k).items():
                    m[index[(i + 1, j)][key], c] += coeff
        return m

    diag = {b: snf_diagonal(matrix(b)) for b in gens}
    result = []
    for (i, j), gs in gens.items():
        out_rank = len(diag[(i, j)])
        incoming = diag.get((i - 1, j), [])
        rank = len(gs) - out_rank - len(incoming)
        torsion = sorted(d for d in incoming if d > 1)
        if rank or torsion:
            result.append({"i": i, "j": j, "rank": rank, "torsion": torsion})
    result.sort(key=lambda e: (e["j"], e["i"]))
    return result


def random_graph(rng, vertices, edges):
    while True:
        hs = list(range(2 * edges))
        rng.shuffle(hs)
        cuts = sorted(rng.randrange(2 * edges + 1) for _ in range(vertices - 1))
        rot = []
        prev = 0
        for c in cuts + [2 * edges]:
            rot.append(hs[prev:c])
            prev = c
        # connected?
        vert = {h: v for v, r in enumerate(rot) for h in r}
        parent = list(range(vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in range(edges):
            parent[find(vert[2 * e])] = find(vert[2 * e + 1])
        if len({find(v) for v in range(vertices)}) == 1:
            return rot


def main():
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "data" / "oracle_kh.json"
    rng = random.Random(20240611)
    graphs = dict(FIXED)
    for k in range(20):
        v = rng.randint(1, 3)
        e = rng.randint(max(1, v - 1), 6)
        graphs[f"random{k}"] = emit(random_graph(rng, v, e))
    records = []
    for name, text in graphs.items():
        rot, n = parse(text)
        full, _ = faces(rot, n, [1] * n)
        qtrees = []
        for state in range(1 << n):
            present = [(state >> e) & 1 for e in range(n)]
            if faces(rot, n, present)[0] == 1:
                qtrees.append([e + 1 for e in range(n) if present[e]])
        records.append({
            "name": name,
            "arrows": text,
            "vertices": len(rot),
            "edges": n,
            "faces": full,
            "genus": (2 - len(rot) + n - full) // 2,
            "quasi_trees": qtrees,
            "kh": homology(rot, n, False),
            "rkh": homology(rot, n, True),
        })
    out_path.write_text(json.dumps(records, indent=1) + "\n")


if __name__ == "__main__":
    main()
