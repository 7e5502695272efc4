"""Brute-force oracles shared by the tests.

These never touch the package's tables or bincount tricks: field
arithmetic is schoolbook polynomial multiplication, correlation is a
double loop over shifts, cyclotomic numbers come from explicit class sets.
"""

from fractions import Fraction


def poly_mulmod(a, b, modulus, p):
    """Multiply coefficient lists (low first) and reduce by a monic modulus."""
    n = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for m in range(n + 1):
                prod[k - n + m] = (prod[k - n + m] - c * modulus[m]) % p
    return (prod + [0] * n)[:n]


def unpack(x, p, n):
    out = []
    for _ in range(n):
        x, c = divmod(x, p)
        out.append(c)
    return out


def pack(coeffs, p):
    return sum(c * p**k for k, c in enumerate(coeffs))


def naive_mul(ctx, x, y):
    if ctx.n == 1:
        return x * y % ctx.p
    return pack(poly_mulmod(unpack(x, ctx.p, ctx.n), unpack(y, ctx.p, ctx.n),
                            ctx.modulus, ctx.p), ctx.p)


def naive_hamming(x, y, tau):
    n = len(x)
    return sum(1 for t in range(n) if x[t] == y[(t + tau) % n])


def naive_stats(rows):
    """(H_a, H_c, S_a, S_c, A_a, A_c) by the definitions, from Python lists."""
    L, N = len(rows), len(rows[0])
    auto = [naive_hamming(r, r, tau) for r in rows for tau in range(1, N)]
    cross = [naive_hamming(rows[i], rows[j], tau)
             for i in range(L) for j in range(L) if i != j for tau in range(N)]
    H_a = max(auto) if auto else None
    H_c = max(cross) if cross else None
    S_a = sum(auto) if N > 1 else None
    S_c = sum(cross) if L > 1 else None
    A_a = Fraction(S_a, L * (N - 1)) if N > 1 else None
    A_c = Fraction(S_c, L * (L - 1) * N) if L > 1 else None
    return H_a, H_c, S_a, S_c, A_a, A_c


def naive_cyclotomic_numbers(ctx, M):
    """(i, j)_M = |(C_i + 1) & C_j| from explicit class sets built by repeated multiplication."""
    q = ctx.q
    power, powers = 1, []
    for _ in range(q - 1):
        powers.append(power)
        power = naive_mul(ctx, power, ctx.alpha)
    classes = [set(powers[r::M]) for r in range(M)]

    def plus_one(x):
        d = unpack(x, ctx.p, ctx.n)
        d[0] = (d[0] + 1) % ctx.p
        return pack(d, ctx.p)

    return [[sum(1 for x in classes[i] if plus_one(x) in classes[j]) for j in range(M)]
            for i in range(M)]

