#!/usr/bin/env python3
"""Independent oracle for the frozen expected values used by the C++ tests.

Builds GF(p^m) from scratch with plain Python integers (no shared code with
the library) and prints the derived quantities. Run manually:

    python3 tests/oracle/derive_values.py
"""
import itertools
import math


def poly_mod(a, mod, p):
    a = a[:]
    while len(a) >= len(mod):
        c = a[-1] % p
        if c:
            shift = len(a) - len(mod)
            for i, mc in enumerate(mod):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return a


def is_irreducible(poly, p):
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            if not any(poly_mod(poly, div, p)):
                return False
    return True


def smallest_irreducible(p, m):
    # ordered by the integer encoding sum c_i p^i
    for idx in range(p ** m):
        coeffs = [(idx // p ** i) % p for i in range(m)] + [1]
        if is_irreducible(coeffs, p):
            return coeffs


class Field:
    def __init__(self, p, m):
        self.p, self.m, self.r = p, m, p ** m
        self.mod = smallest_irreducible(p, m)

    def vec(self, idx):
        return [(idx // self.p ** i) % self.p for i in range(self.m)]

    def idx(self, v):
        return sum(c * self.p ** i for i, c in enumerate(v))

    def mul(self, a, b):
        va, vb = self.vec(a), self.vec(b)
        prod = [0] * (2 * self.m)
        for i, x in enumerate(va):
            for j, y in enumerate(vb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        red = poly_mod(prod, self.mod, self.p) + [0] * self.m
        return self.idx(red[: self.m])

    def add(self, a, b):
        return self.idx([(x + y) % self.p for x, y in zip(self.vec(a), self.vec(b))])

    def power(self, a, e):
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def trace(self, x):
        acc, y = 0, x
        for _ in range(self.m):
            acc = self.add(acc, y)
            y = self.power(y, self.p)
        assert acc < self.p
        return acc

    def primitive(self):
        for g in range(1, self.r):
            seen, y = 1, g
            while y != 1:
                y = self.mul(y, g)
                seen += 1
            if seen == self.r - 1:
                return g


def periods(F, N):
    # complex sum over p-th roots of unity, rounded to the nearest integer
    g = F.primitive()
    eta = [0j] * N
    x = 1
    for j in range(F.r - 1):
        t = F.trace(x)
        eta[j % N] += complex(math.cos(2 * math.pi * t / F.p),
                              math.sin(2 * math.pi * t / F.p))
        x = F.mul(x, g)
    return [round(e.real) for e in eta]


def expand(roots):
    coeffs = [1]
    for rt in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= rt * c
        coeffs = nxt
    return coeffs


def griesmer(k, d, p):
    return sum(-(-d // p ** i) for i in range(k))


def weight_distribution(F, D):
    out = {}
    for x in range(F.r):
        w = sum(1 for d in D if F.trace(F.mul(x, d)) != 0)
        out[w] = out.get(w, 0) + 1
    return dict(sorted(out.items()))


def main():
    print("irreducible (2,6):", smallest_irreducible(2, 6))
    print("irreducible (3,4):", smallest_irreducible(3, 4))
    print("irreducible (5,4):", smallest_irreducible(5, 4))
    print("primitive mod 7:", Field(7, 1).primitive())
    for (p, m, N) in [(2, 6, 3), (3, 4, 4), (7, 3, 3), (5, 4, 4)]:
        F = Field(p, m)
        print(f"periods {(p, m, N)} alpha={F.primitive()}:", periods(F, N))
    print("psi (5,-3,-3):", expand([5, -3, -3]))
    print("psi (-7,2,2,2):", expand([-7, 2, 2, 2]))
    print("griesmer (21,6,8,2):", griesmer(6, 8, 2))
    print("griesmer (42,6,20,2):", griesmer(6, 20, 2))
    for c in (7, 13):
        sols = [(s, t) for t in range(0, 10) for s in range(-20, 21)
                if s * s + 27 * t * t == 4 * c and s % 3 == 1 and math.gcd(s, c) == 1]
        print("n3", c, sols)
    for s in (25, 169):
        sols = [(u, v) for v in range(0, 20) for u in range(-30, 31)
                if u * u + 4 * v * v == s and u % 4 == 1 and math.gcd(u, s) == 1]
        print("n4", s, sols)
    # coset-representative codes on GF(7^3)
    F = Field(7, 3)
    g = F.primitive()
    pw = [F.power(g, j) for j in range(F.r - 1)]
    cnt = (F.r - 1) // (3 * (F.p - 1))
    for J in ([0], [0, 1]):
        full = [pw[j] for j in range(F.r - 1) if j % 3 in J]
        reps = [pw[(j + 3 * i) % (F.r - 1)] for j in J for i in range(cnt)]
        print("remark1 (7,3)", J, "C_D:", weight_distribution(F, full),
              "C_Dbar:", weight_distribution(F, reps))


if __name__ == "__main__":
    main()
