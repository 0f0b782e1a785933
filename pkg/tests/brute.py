"""Brute-force reference computations, written directly from the definitions.

Nothing here touches the package's bit kernels: tables are read one bit at a
time from the integer encoding.
"""
import itertools


def bit(bits, x):
    return (bits >> x) & 1


def sens(bits, n, x):
    return sum(bit(bits, x) != bit(bits, x ^ (1 << i)) for i in range(n))


def sens_all(bits, n):
    return [sens(bits, n, x) for x in range(1 << n)]


def influence(bits, n, i):
    """Integer-convention influence of 0-based variable ``i``."""
    flips = sum(bit(bits, x) != bit(bits, x ^ (1 << i)) for x in range(1 << n))
    assert flips % 2 == 0
    return flips // 2


def cofactor(bits, n, assignment):
    """Ones among words agreeing with ``assignment`` (0-based var -> value)."""
    return sum(
        bit(bits, x)
        for x in range(1 << n)
        if all((x >> v) & 1 == val for v, val in assignment.items())
    )


def ocv(bits, n, arity):
    out = []
    for vs in itertools.combinations(range(n), arity):
        for vals in itertools.product((0, 1), repeat=arity):
            out.append(cofactor(bits, n, dict(zip(vs, vals))))
    return tuple(sorted(out))


def osdv(bits, n, value=None):
    """Flattened (n+1) x n grid; ``value`` restricts both words to that output."""
    s = sens_all(bits, n)
    grid = [[0] * n for _ in range(n + 1)]
    words = [x for x in range(1 << n) if value is None or bit(bits, x) == value]
    for a, b in itertools.combinations(words, 2):
        if s[a] == s[b]:
            grid[s[a]][bin(a ^ b).count("1") - 1] += 1
    return tuple(v for row in grid for v in row)


def transform(bits, n, perm, neg, out):
    """``g(X) = out ^ f(Z)`` with ``Z_j = X[perm[j]] ^ neg[perm[j]]``."""
    g = 0
    for x in range(1 << n):
        z = 0
        for j in range(n):
            p = perm[j]
            z |= (((x >> p) & 1) ^ ((neg >> p) & 1)) << j
        if bit(bits, z) ^ out:
            g |= 1 << x
    return g


def orbit(bits, n):
    return {
        transform(bits, n, perm, neg, out)
        for perm in itertools.permutations(range(n))
        for neg in range(1 << n)
        for out in (0, 1)
    }
