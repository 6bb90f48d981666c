"""Dense integer polynomial helpers used by the gcd code.

Univariate polynomials are lists of ints, index = exponent, no trailing zeros
(the zero polynomial is the empty list). Bivariate polynomials are lists of
univariate polynomials: outer index is the t-degree, inner lists are in q.
"""
from math import gcd


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def u_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def u_sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def u_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def u_scale(a, c):
    if c == 0:
        return []
    return [x * c for x in a]


def u_divexact(a, b):
    """Quotient a / b over Z; raises ValueError when b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if r:
            raise ValueError("inexact division")
        return []
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            raise ValueError("inexact division")
        q[k - db] = qc
        for j in range(db + 1):
            r[k - db + j] -= qc * b[j]
    if any(r[:db]):
        raise ValueError("inexact division")
    return trim(q)


def u_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    if a and a[-1] < 0:
        g = -g
    return g


def u_primitive(a):
    c = u_content(a)
    if c in (0, 1):
        return list(a)
    return [x // c for x in a]


def u_prem(a, b):
    """Pseudo-remainder lc(b)^(da-db+1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(r) - 1 - db + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        trim(r)
        e -= 1
    if e > 0:
        r = [x * lb ** e for x in r]
    return r


def _positive(a):
    if a and a[-1] < 0:
        return [-x for x in a]
    return list(a)


def u_gcd(a, b):
    """Gcd over Z[x], primitive with positive leading coefficient."""
    if not a:
        return _positive(b)
    if not b:
        return _positive(a)
    ca, cb = abs(u_content(a)), abs(u_content(b))
    c = gcd(ca, cb)
    a, b = u_primitive(a), u_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = u_prem(a, b)
        a, b = b, u_primitive(r)
    g = u_primitive(a)
    return u_scale(g, c)


# bivariate: list (over t) of univariate-in-q lists

def b_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def b_content(a):
    """Gcd over Z[q] of the t-coefficients."""
    g = []
    for c in a:
        if c:
            g = u_gcd(g, c)
            if len(g) == 1 and abs(g[0]) == 1:
                return [1]
    return g


def b_div_uq(a, c):
    return [u_divexact(x, c) if x else [] for x in a]


def b_mul_uq(a, c):
    return [u_mul(x, c) for x in a]


def b_prem(a, b):
    r = [list(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    e = len(r) - 1 - db + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [u_mul(x, lb) for x in r]
        for j in range(db + 1):
            if b[j]:
                r[shift + j] = u_sub(r[shift + j], u_mul(c, b[j]))
        b_trim(r)
        e -= 1
    if e > 0 and r:
        f = [1]
        for _ in range(e):
            f = u_mul(f, lb)
        r = b_mul_uq(r, f)
    return r


def u_pow(a, e):
    out = [1]
    for _ in range(e):
        out = u_mul(out, a)
    return out


def b_gcd(a, b):
    """Gcd in Z[q][t] via contents and the subresultant remainder sequence."""
    if not a:
        return b_primitive_normal(b)
    if not b:
        return b_primitive_normal(a)
    ca, cb = b_content(a), b_content(b)
    c = u_gcd(ca, cb)
    f = b_div_uq(a, ca)
    g = b_div_uq(b, cb)
    if len(f) < len(g):
        f, g = g, f
    gg, h = [1], [1]
    while True:
        delta = len(f) - len(g)
        r = b_prem(f, g)
        if not r:
            break
        if len(r) == 1:
            g = [[1]]
            break
        f = g
        div = u_mul(gg, u_pow(h, delta))
        g = b_div_uq(r, div)
        gg = f[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = u_divexact(u_pow(gg, delta), u_pow(h, delta - 1))
    g = b_div_uq(g, b_content(g))
    return b_mul_uq(g, c)


def b_primitive_normal(a):
    return [list(x) for x in a]
