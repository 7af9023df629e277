"""Dense univariate polynomials over the integers.

Polynomials are tuples of Python ints, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``. Only what :mod:`hodgeint.algebra.qrat`
needs is provided.
"""

from __future__ import annotations

from math import gcd as igcd


def trim(p) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def degree(p: tuple) -> int:
    return len(p) - 1


def add(p: tuple, q: tuple) -> tuple:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p: tuple, q: tuple) -> tuple:
    return add(p, tuple(-c for c in q))


def scale(p: tuple, c: int) -> tuple:
    if not c:
        return ()
    return tuple(a * c for a in p)


def mul(p: tuple, q: tuple) -> tuple:
    if not p or not q:
        return ()
    if len(q) == 1:
        return scale(p, q[0])
    if len(p) == 1:
        return scale(q, p[0])
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def shift(p: tuple, n: int) -> tuple:
    """Multiply by ``x**n`` (``n >= 0``)."""
    if not p or not n:
        return p
    return (0,) * n + p


def content(p: tuple) -> int:
    g = 0
    for c in p:
        g = igcd(g, c)
        if g == 1:
            break
    return g


def primitive(p: tuple) -> tuple:
    """Divide out the content and make the leading coefficient positive."""
    if not p:
        return p
    g = content(p)
    if p[-1] < 0:
        g = -g
    if g == 1:
        return p
    return tuple(c // g for c in p)


def low_order(p: tuple) -> int:
    """Multiplicity of the root ``x = 0``."""
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    return k


def prem(a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of ``a`` by ``b``."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift_by = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift_by] -= lr * c
        while r and not r[-1]:
            r.pop()
    return tuple(r)


def divexact(a: tuple, b: tuple) -> tuple:
    """Quotient ``a / b`` when ``b`` divides ``a`` over the integers."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    q = [0] * max(0, len(a) - db)
    while r and len(r) - 1 >= db:
        top = len(r) - 1
        c, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[top - db] = c
        for i, bc in enumerate(b):
            r[i + top - db] -= c * bc
        while r and not r[-1]:
            r.pop()
    if r:
        raise ArithmeticError("inexact polynomial division")
    return trim(q)


def gcd(a: tuple, b: tuple) -> tuple:
    """Primitive gcd via the primitive polynomial remainder sequence."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        r = prem(a, b)
        a, b = b, primitive(r)
    return primitive(a)
