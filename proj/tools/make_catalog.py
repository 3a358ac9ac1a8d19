#!/usr/bin/env python3
"""Regenerate data/catalog.txt.

Groups are built from finite-field arithmetic (projective, affine and
semilinear actions) or from standard Mathieu generators, and every order is
checked with sympy before the record is written.  The output is
deterministic: random generator choices use a fixed seed.

    python3 tools/make_catalog.py > data/catalog.txt
"""

import itertools
import random
import sys
from math import factorial

from sympy.combinatorics import Permutation, PermutationGroup

RNG = random.Random(20240601)

# --------------------------------------------------------------------------
# Finite fields GF(p^k), elements encoded as integers in base p.

IRREDUCIBLE = {
    # coefficients of the monic modulus, low degree first (leading 1 omitted)
    (2, 2): [1, 1],
    (2, 3): [1, 1, 0],
    (2, 4): [1, 1, 0, 0],
    (2, 5): [1, 0, 1, 0, 0],
    (3, 2): [1, 0],
}


class Field:
    def __init__(self, p, k=1):
        self.p, self.k, self.q = p, k, p ** k
        self._mul = [[0] * self.q for _ in range(self.q)]
        for a in range(self.q):
            for b in range(self.q):
                self._mul[a][b] = self._slow_mul(a, b)
        self.inv = [0] * self.q
        for a in range(1, self.q):
            for b in range(1, self.q):
                if self._mul[a][b] == 1:
                    self.inv[a] = b

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def undigits(self, d):
        return sum(c * self.p ** i for i, c in enumerate(d))

    def add(self, a, b):
        da, db = self.digits(a), self.digits(b)
        return self.undigits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        return self.undigits([(-x) % self.p for x in self.digits(a)])

    def _slow_mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        mod = IRREDUCIBLE[(self.p, self.k)]
        for deg in range(len(prod) - 1, self.k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, m in enumerate(mod):
                    prod[deg - self.k + i] = (prod[deg - self.k + i] - c * m) % self.p
        return self.undigits(prod[: self.k])

    def mul(self, a, b):
        return self._mul[a][b]

    def frobenius(self, a):
        r = 1
        for _ in range(self.p):
            r = self.mul(r, a)
        return r

    def primitive(self):
        for g in range(2, self.q) if self.q > 2 else [1]:
            x, seen = 1, set()
            for _ in range(self.q - 1):
                x = self.mul(x, g)
                seen.add(x)
            if len(seen) == self.q - 1:
                return g
        return 1


def vectors(field, d):
    return [list(v) for v in itertools.product(range(field.q), repeat=d)]


def normalize(field, v):
    for c in v:
        if c:
            ci = field.inv[c]
            return tuple(field.mul(ci, x) for x in v)
    raise ValueError("zero vector")


def projective_points(field, d):
    pts = sorted({normalize(field, v) for v in vectors(field, d) if any(v)})
    return pts


def mat_vec(field, m, v):
    out = []
    for row in m:
        acc = 0
        for a, b in zip(row, v):
            acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def det(field, m):
    m = [row[:] for row in m]
    n, d = len(m), 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = field.neg(d)
        d = field.mul(d, m[c][c])
        inv = field.inv[m[c][c]]
        for r in range(c + 1, n):
            f = field.mul(m[r][c], inv)
            if f:
                m[r] = [field.add(x, field.neg(field.mul(f, y))) for x, y in zip(m[r], m[c])]
    return d


def random_invertible(field, d):
    while True:
        m = [[RNG.randrange(field.q) for _ in range(d)] for _ in range(d)]
        if det(field, m):
            return m


def perm_from_map(points, f):
    index = {p: i for i, p in enumerate(points)}
    return [index[f(p)] for p in points]


# --------------------------------------------------------------------------
# Group families.  Each returns (generators as image lists, expected order).

def gl_order(d, q):
    o = 1
    for i in range(d):
        o *= q ** d - q ** i
    return o


def pgaml(d, p, k=1, semilinear=True):
    field = Field(p, k)
    pts = projective_points(field, d)
    gens = [random_invertible(field, d) for _ in range(2)]
    out = [perm_from_map(pts, lambda v, m=m: normalize(field, mat_vec(field, m, v))) for m in gens]
    order = gl_order(d, field.q) // (field.q - 1)
    if semilinear and k > 1:
        out.append(perm_from_map(pts, lambda v: normalize(field, [field.frobenius(x) for x in v])))
        order *= k
    return out, order


def agl(d, p):
    field = Field(p)
    pts = [tuple(v) for v in vectors(field, d)]
    gens = [random_invertible(field, d) for _ in range(2)]
    out = [perm_from_map(pts, lambda v, m=m: tuple(mat_vec(field, m, v))) for m in gens]
    e1 = tuple(1 if i == 0 else 0 for i in range(d))
    out.append(perm_from_map(pts, lambda v: tuple(field.add(a, b) for a, b in zip(v, e1))))
    return out, field.q ** d * gl_order(d, field.q)


def agl1(p):
    field = Field(p)
    a = field.primitive()
    pts = list(range(p))
    return [
        perm_from_map(pts, lambda x: field.mul(a, x)),
        perm_from_map(pts, lambda x: (x + 1) % p),
    ], p * (p - 1)


def symmetric(n):
    if n == 1:
        return [[0]], 1
    if n == 2:
        return [[1, 0]], 2
    return [[1, 0] + list(range(2, n)), list(range(1, n)) + [0]], factorial(n)


def cyclic(n):
    return [list(range(1, n)) + [0]], n


def from_cycles(n, *cycle_strings):
    out = []
    for s in cycle_strings:
        img = list(range(n))
        for cyc in s.strip("()").split(")("):
            pts = [int(x) - 1 for x in cyc.split(",")]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        out.append(img)
    return out


M23_GENS = [
    "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
    "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
]
M24_EXTRA = "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)"
M11_GENS = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"]
M12_EXTRA = "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"


def sympy_group(n, gens):
    return PermutationGroup([Permutation(g, size=n) for g in gens])


def small_generating_set(group, n, order, count=2):
    """Deterministic search for `count` random elements generating `group`."""
    elements = list(group.generate_schreier_sims()) if order <= 10 ** 5 else None
    state = random.Random(order)
    while True:
        if elements is not None:
            picks = [state.choice(elements) for _ in range(count)]
        else:
            picks = []
            for _ in range(count):
                w = Permutation(list(range(n)))
                for _ in range(40):
                    w = w * state.choice(group.generators)
                picks.append(w)
        if sympy_group(n, [p.array_form for p in picks]).order() == order:
            return [p.array_form for p in picks]


def mathieu_22():
    m24 = sympy_group(24, from_cycles(24, *M23_GENS, M24_EXTRA))
    m22 = m24.stabilizer(23).stabilizer(22)
    gens = small_generating_set(m22, 24, 443520)
    swap = None
    state = random.Random(22)
    while swap is None:
        w = Permutation(list(range(24)))
        for _ in range(60):
            w = w * state.choice(m24.generators)
        if w.array_form[22] == 23 and w.array_form[23] == 22:
            swap = w.array_form
    m22_gens = [g[:22] for g in gens]
    return m22_gens, m22_gens + [swap[:22]]


def wreath(h_gens, h_deg, t_gens, t_deg):
    out = []
    for g in h_gens:
        out.append(g + list(range(h_deg, h_deg * t_deg)))
    for t in t_gens:
        out.append([t[b] * h_deg + x for b in range(t_deg) for x in range(h_deg)])
    return out


# --------------------------------------------------------------------------

def cycle_string(img):
    seen, parts = set(), []
    for i in range(len(img)):
        if i in seen or img[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = img[j]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def emit(name, n, gens, order, out, rebuild=None):
    """Write one record; `rebuild` re-draws random generators until they generate."""
    for _ in range(50):
        if sympy_group(n, gens).order() == order:
            break
        if rebuild is None:
            raise SystemExit(f"{name}: generators do not have order {order}")
        gens, order = rebuild()
    else:
        raise SystemExit(f"{name}: no generating set found")
    out.write(f"group {name} degree {n} order {order}\n")
    for g in gens:
        out.write(cycle_string(g) + "\n")
    out.write("\n")


def main():
    out = sys.stdout
    out.write("# Permutation group catalog. Points are 1-based; the order field is a checksum.\n")
    out.write("# Regenerate with tools/make_catalog.py.\n\n")

    emit("Trivial1", 1, [[0]], 1, out)
    emit("Trivial5", 5, [list(range(5))], 1, out)
    for m in range(2, 9):
        gens, order = symmetric(m)
        emit(f"S{m}", m, gens, order, out)
    for m in (3, 4, 5, 6):
        gens, order = cyclic(m)
        emit(f"C{m}", m, gens, order, out)
    emit("D8", 4, from_cycles(4, "(1,2,3,4)", "(1,3)"), 8, out)
    emit("A4", 4, from_cycles(4, "(1,2,3)", "(2,3,4)"), 12, out)
    emit("C2wrC2", 4, wreath([[1, 0]], 2, [[1, 0]], 2), 8, out)
    emit("C2wrS3", 6, wreath([[1, 0]], 2, symmetric(3)[0], 3), 48, out)
    emit("S3wrC2", 6, wreath(symmetric(3)[0], 3, [[1, 0]], 2), 72, out)

    emit("AGL(1,5)", 5, *agl1(5), out, lambda: agl1(5))
    emit("PGL(2,5)", 6, *pgaml(2, 5), out, lambda: pgaml(2, 5))
    emit("PSL(3,2)", 7, *pgaml(3, 2), out, lambda: pgaml(3, 2))
    emit("AGL(3,2)", 8, *agl(3, 2), out, lambda: agl(3, 2))
    emit("PGammaL(2,8)", 9, *pgaml(2, 2, 3), out, lambda: pgaml(2, 2, 3))
    emit("PGammaL(2,9)", 10, *pgaml(2, 3, 2), out, lambda: pgaml(2, 3, 2))
    emit("M11", 11, from_cycles(11, *M11_GENS), 7920, out)
    emit("M12", 12, from_cycles(12, *M11_GENS, M12_EXTRA), 95040, out)
    emit("PSL(3,3)", 13, *pgaml(3, 3), out, lambda: pgaml(3, 3))
    emit("PGL(2,13)", 14, *pgaml(2, 13), out, lambda: pgaml(2, 13))
    emit("PSL(4,2)", 15, *pgaml(4, 2), out, lambda: pgaml(4, 2))
    emit("AGL(4,2)", 16, *agl(4, 2), out, lambda: agl(4, 2))
    emit("PGammaL(2,16)", 17, *pgaml(2, 2, 4), out, lambda: pgaml(2, 2, 4))
    emit("PGL(2,17)", 18, *pgaml(2, 17), out, lambda: pgaml(2, 17))
    emit("AGL(1,19)", 19, *agl1(19), out, lambda: agl1(19))
    emit("PGL(2,19)", 20, *pgaml(2, 19), out, lambda: pgaml(2, 19))
    emit("PGammaL(3,4)", 21, *pgaml(3, 2, 2), out, lambda: pgaml(3, 2, 2))
    m22, m22_2 = mathieu_22()
    emit("M22", 22, m22, 443520, out)
    emit("M22.2", 22, m22_2, 887040, out)
    emit("AGL(1,23)", 23, *agl1(23), out, lambda: agl1(23))
    emit("M23", 23, from_cycles(23, *M23_GENS), 10200960, out)
    emit("PGL(2,23)", 24, *pgaml(2, 23), out, lambda: pgaml(2, 23))
    emit("M24", 24, from_cycles(24, *M23_GENS, M24_EXTRA), 244823040, out)
    emit("PSL(5,2)", 31, *pgaml(5, 2), out, lambda: pgaml(5, 2))
    emit("PGL(2,31)", 32, *pgaml(2, 31), out, lambda: pgaml(2, 31))
    emit("ASL(5,2)", 32, *agl(5, 2), out, lambda: agl(5, 2))


if __name__ == "__main__":
    main()
