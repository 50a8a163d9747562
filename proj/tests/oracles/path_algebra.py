"""Independent reference values for path algebras of dg quivers.

Reads the quiver files directly and recomputes path bases, the Leibniz
differential and H^0 block dimensions with sympy. Usage:

    python3 path_algebra.py data/fixtures/q_tildeA.dgq
"""
import sys
from itertools import product

import sympy


def load(path):
    vertices, arrows, diff = [], {}, {}
    order = []
    for raw in open(path):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("dgquiver"):
            continue
        kw, *rest = line.split()
        if kw == "vertex":
            vertices += rest
        elif kw == "arrow":
            a, s, t, deg = rest
            arrows[a] = (s, t, int(deg))
            order.append(a)
        elif kw == "d":
            name, body = line[1:].split("=", 1)
            terms = []
            for piece in body.split(","):
                coef, *ids = piece.split()
                terms.append((sympy.Rational(coef), tuple(ids)))
            diff[name.strip()] = terms
    return vertices, arrows, order, diff


def all_paths(vertices, arrows, order):
    paths = [("lazy", v) for v in vertices]
    stack = [((a,), arrows[a][1]) for a in order]
    while stack:
        p, end = stack.pop()
        paths.append(p)
        for a in order:
            if arrows[a][0] == end:
                stack.append((p + (a,), arrows[a][1]))
    return paths


def ends(p, arrows):
    if p[0] == "lazy":
        return p[1], p[1]
    return arrows[p[0]][0], arrows[p[-1]][1]


def degree(p, arrows):
    return 0 if p[0] == "lazy" else sum(arrows[a][2] for a in p)


def d_path(p, arrows, diff):
    out = {}
    if p[0] == "lazy":
        return out
    for k, a in enumerate(p):
        later = sum(arrows[b][2] for b in p[k + 1:])
        s = -1 if later % 2 else 1
        for coef, ids in diff.get(a, []):
            q = p[:k] + ids + p[k + 1:]
            out[q] = out.get(q, 0) + s * coef
    return {q: c for q, c in out.items() if c != 0}


def h0(vertices, arrows, order, diff):
    paths = all_paths(vertices, arrows, order)
    table = {}
    for i, j in product(vertices, vertices):
        block = [p for p in paths if ends(p, arrows) == (i, j)]
        deg0 = [p for p in block if degree(p, arrows) == 0]
        degm1 = [p for p in block if degree(p, arrows) == -1]
        if not deg0:
            table[(i, j)] = 0
            continue
        pos = {p: k for k, p in enumerate(deg0)}
        m = sympy.zeros(len(deg0), max(1, len(degm1)))
        for c, p in enumerate(degm1):
            for q, coef in d_path(p, arrows, diff).items():
                m[pos[q], c] += coef
        table[(i, j)] = len(deg0) - m.rank()
    return table


def main(path):
    vertices, arrows, order, diff = load(path)
    paths = all_paths(vertices, arrows, order)
    print("algebra dimension", len(paths))
    by_len = {}
    for p in paths:
        n = 0 if p[0] == "lazy" else len(p)
        by_len[n] = by_len.get(n, 0) + 1
    print("paths by length", dict(sorted(by_len.items())))
    for (i, j), dim in sorted(h0(vertices, arrows, order, diff).items()):
        if dim:
            print(f"H0 dim e_{j} A e_{i} ({i} -> {j}):", dim)


if __name__ == "__main__":
    for arg in sys.argv[1:]:
        print("==", arg)
        main(arg)
