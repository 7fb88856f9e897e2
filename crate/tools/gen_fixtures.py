"""Regenerate the Barnes-Wall and Leech Gram fixtures.

Both lattices are built from binary codes (Conway & Sloane, SPLAG ch. 4):
  BW16 = {x in Z^16 : x mod 2 in RM(1,4), sum(x) = 0 mod 4}, inner product x.y/2
  Leech = Golay-code construction in Z^24, inner product x.y/8
A basis is extracted with a Hermite normal form and then LLL-reduced exactly.
"""
from fractions import Fraction
import itertools
import sys

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form


def golay_code_basis():
    # cyclic [23,12,7] Golay code from g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11,
    # extended by an overall parity bit
    g = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]
    rows = []
    for shift in range(12):
        w = [0] * 23
        for i, c in enumerate(g):
            w[i + shift] = c
        rows.append(w + [sum(w) % 2])
    return rows


def rm14_basis():
    rows = [[1] * 16]
    for b in range(4):
        rows.append([(i >> b) & 1 for i in range(16)])
    return rows


def span_gf2(rows):
    n = len(rows[0])
    basis = []
    for r in rows:
        v = r[:]
        for b in basis:
            p = b.index(1)
            if v[p]:
                v = [(x + y) % 2 for x, y in zip(v, b)]
        if any(v):
            basis.append(v)
    return basis


def lattice_basis(generators):
    m = Matrix(generators).T
    h = hermite_normal_form(m).T
    rows = [list(map(int, h.row(i))) for i in range(h.rows) if any(h.row(i))]
    return rows


def lll(gram, delta=Fraction(99, 100)):
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    b = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def ip(u, v):
        return sum(u[i] * g[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j])

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = []
        norms = []
        for i in range(n):
            vec = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = ip(b[i], bstar[j]) / norms[j]
                vec = [x - mu[i][j] * y for x, y in zip(vec, bstar[j])]
            bstar.append(vec)
            norms.append(ip(vec, vec))
        return mu, norms

    k = 1
    mu, norms = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, norms = gso()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gso()
            k = max(k - 1, 1)
    return [[int(ip(b[i], b[j])) for j in range(n)] for i in range(n)]


def gram_of(basis, scale):
    n = len(basis)
    out = []
    for u in basis:
        row = []
        for v in basis:
            d = sum(a * c for a, c in zip(u, v))
            assert d % scale == 0
            row.append(d // scale)
        out.append(row)
    return out


def write(path, header, gram):
    with open(path, "w") as f:
        for line in header:
            f.write("# " + line + "\n")
        f.write(f"{len(gram)}\n")
        for row in gram:
            f.write(" ".join(str(x) for x in row) + "\n")


def bw16():
    code = span_gf2(rm14_basis())
    gens = [list(c) for c in code]
    for i, j in itertools.combinations(range(16), 2):
        v = [0] * 16
        v[i] = v[j] = 2
        gens.append(v)
    for i in range(16):
        v = [0] * 16
        v[i] = 4
        gens.append(v)
    return lll(gram_of(lattice_basis(gens), 2))


def leech():
    code = span_gf2(golay_code_basis())
    assert len(code) == 12, len(code)
    words = [[sum(a * b for a, b in zip(bits, col)) % 2 for col in zip(*code)] for bits in itertools.product((0, 1), repeat=12)]
    assert min(sum(w) for w in words if any(w)) == 8
    gens = [[2 * x for x in c] for c in code]
    for i, j in itertools.combinations(range(24), 2):
        v = [0] * 24
        v[i] = 4
        v[j] = 4
        gens.append(v)
    for i in range(24):
        v = [0] * 24
        v[i] = 8
        gens.append(v)
    gens.append([-3] + [1] * 23)
    return lll(gram_of(lattice_basis(gens), 8))


if __name__ == "__main__":
    out = sys.argv[1]
    write(f"{out}/bw16.gram", [
        "Barnes-Wall lattice BW16 (laminated lattice Lambda16), minimum 4, det 256.",
        "Built as {x in Z^16 : x mod 2 in RM(1,4), sum x = 0 mod 4} with inner product x.y/2",
        "(Conway & Sloane, SPLAG ch. 4 sec. 10); basis LLL-reduced by tools/gen_fixtures.py.",
    ], bw16())
    write(f"{out}/leech.gram", [
        "Leech lattice Lambda24, even unimodular, minimum 4, kissing number 196560.",
        "Built from the extended binary Golay code with inner product x.y/8",
        "(Conway & Sloane, SPLAG ch. 4 sec. 11); basis LLL-reduced by tools/gen_fixtures.py.",
    ], leech())
