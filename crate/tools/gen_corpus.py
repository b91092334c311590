#!/usr/bin/env python3
"""Regenerates the SL(n,q) generator files under corpus/.

Each group acts on the projective points of GF(q)^n (row vectors, v -> vM).
Subgroups are stabilizers of subspaces, given by a small generating set found
greedily from the full stabilizer. Run from the repository root.
"""
import itertools
import random
import sys
from pathlib import Path


def det(m, q):
    n = len(m)
    if n == 1:
        return m[0][0] % q
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det(minor, q)
    return total % q


def normalize(v, q):
    for x in v:
        if x % q:
            inv = pow(x, q - 2, q)
            return tuple((y * inv) % q for y in v)
    return None


def points(n, q):
    pts = set()
    for v in itertools.product(range(q), repeat=n):
        p = normalize(v, q)
        if p is not None:
            pts.add(p)
    return sorted(pts)


def vecmat(v, m, q):
    n = len(v)
    return tuple(sum(v[i] * m[i][j] for i in range(n)) % q for j in range(n))


def span(vectors, q):
    n = len(vectors[0])
    out = set()
    for coeffs in itertools.product(range(q), repeat=len(vectors)):
        w = tuple(sum(c * v[j] for c, v in zip(coeffs, vectors)) % q for j in range(n))
        p = normalize(w, q)
        if p is not None:
            out.add(p)
    return frozenset(out)


def sl_perms(n, q):
    pts = points(n, q)
    idx = {p: i for i, p in enumerate(pts)}
    perms = set()
    for entries in itertools.product(range(q), repeat=n * n):
        m = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if det(m, q) != 1:
            continue
        perms.add(tuple(idx[normalize(vecmat(p, m, q), q)] for p in pts))
    return pts, sorted(perms)


def compose(a, b):
    return tuple(b[i] for i in a)


def closure(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def small_generating_set(elements, n, rng):
    elements = sorted(elements)
    target = len(elements)
    for size in range(1, 4):
        for _ in range(200):
            gens = rng.sample(elements, size)
            if len(closure(gens, n)) == target:
                return gens
    gens = []
    current = closure(gens, n)
    for e in elements:
        if e not in current:
            gens.append(e)
            current = closure(gens, n)
    return gens


def cycles(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(out) or "()"


def write(path, degree, gens, comment, order):
    lines = [f"# {comment}", f"degree {degree}", f"order {order}"]
    lines += [f"gen {cycles(g)}" for g in gens]
    Path(path).write_text("\n".join(lines) + "\n")


def stabilizer(perms, pts, subspace):
    idx = {p: i for i, p in enumerate(pts)}
    block = {idx[p] for p in subspace}
    return [g for g in perms if {g[i] for i in block} == block]


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    rng = random.Random(20240607)
    specs = [(3, 2), (3, 3), (4, 2)]
    for n, q in specs:
        pts, perms = sl_perms(n, q)
        deg = len(pts)
        name = f"sl{n}{q}"
        gens = small_generating_set(perms, deg, rng)
        assert len(closure(gens, deg)) == len(perms)
        write(out / f"{name}.group", deg, gens,
              f"SL({n},{q}) on the {deg} projective points of GF({q})^{n}", len(perms))
        e = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        subs = {"line": [e[0]], "plane": [e[0], e[1]]}
        if n == 4:
            subs = {"2space": [e[0], e[1]]}
        for label, basis in subs.items():
            stab = stabilizer(perms, pts, span(basis, q))
            sg = small_generating_set(stab, deg, rng)
            assert len(closure(sg, deg)) == len(stab)
            write(out / f"{name}_{label}.group", deg, sg,
                  f"stabilizer of <{', '.join(map(str, basis))}> in SL({n},{q})", len(stab))
        if (n, q) == (3, 3):
            flag = [g for g in stabilizer(perms, pts, span([e[0]], q))
                    if g in set(stabilizer(perms, pts, span([e[0], e[1]], q)))]
            sg = small_generating_set(flag, deg, rng)
            write(out / f"{name}_borel.group", deg, sg,
                  "Borel subgroup: stabilizer of the flag <e1> < <e1, e2> in SL(3,3)", len(flag))
            # unipotent radical = Sylow 3-subgroup of the Borel
            sylow = [g for g in flag if order_of(g) in (1, 3, 9)]
            unip = closure(sylow, deg)
            assert len(unip) == 27, len(unip)
            sg = small_generating_set(unip, deg, rng)
            write(out / f"{name}_unipotent.group", deg, sg,
                  "unipotent radical of the Borel subgroup (a Sylow 3-subgroup) in SL(3,3)", 27)


def order_of(g):
    ident = tuple(range(len(g)))
    k, x = 1, g
    while x != ident:
        x = compose(x, g)
        k += 1
    return k


if __name__ == "__main__":
    main()
