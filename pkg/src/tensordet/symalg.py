"""Monomial bases of symmetric powers and the related multinomial counts.

A degree-m monomial in dim variables is an exponent tuple of length dim
summing to m.  The package-wide basis convention is lexicographic descending
order on the exponent tuple; every matrix assembled elsewhere relies on this
single ordering.
"""

from __future__ import annotations

from math import comb

from .tensor import Format, NonBoundaryError


def monomial_count(dim: int, deg: int) -> int:
    """Number of degree-deg monomials in dim variables: C(deg + dim - 1, dim - 1)."""
    if dim < 1 or deg < 0:
        raise ValueError(f"need dim >= 1 and deg >= 0, got dim={dim}, deg={deg}")
    return comb(deg + dim - 1, dim - 1)


def enumerate_monomials(dim: int, deg: int) -> list[tuple[int, ...]]:
    """All exponent tuples of length dim summing to deg, lex descending."""
    if dim < 1 or deg < 0:
        raise ValueError(f"need dim >= 1 and deg >= 0, got dim={dim}, deg={deg}")
    if dim == 1:
        return [(deg,)]
    out = []
    for c in range(deg, -1, -1):
        for rest in enumerate_monomials(dim - 1, deg - c):
            out.append((c,) + rest)
    return out


def monomial_rank(mono: tuple[int, ...]) -> int:
    """Position of an exponent tuple in the lex-descending enumeration."""
    if any(e < 0 for e in mono):
        raise ValueError(f"exponents must be non-negative: {mono}")
    deg = sum(mono)
    rank = 0
    for i, e in enumerate(mono[:-1]):
        rest = len(mono) - i - 1
        # monomials whose leading exponent exceeds e come first
        for c in range(deg, e, -1):
            rank += monomial_count(rest, deg - c)
        deg -= e
    return rank


def monomial_unrank(rank: int, dim: int, deg: int) -> tuple[int, ...]:
    """Inverse of monomial_rank for the (dim, deg) enumeration."""
    total = monomial_count(dim, deg)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range [0, {total}) for dim={dim}, deg={deg}")
    out = []
    for i in range(dim - 1):
        rest = dim - i - 1
        c = deg
        while True:
            block = monomial_count(rest, deg - c)
            if rank < block:
                break
            rank -= block
            c -= 1
        out.append(c)
        deg -= c
    out.append(deg)
    return tuple(out)


def multinomial(n: int, parts: list[int] | tuple[int, ...]) -> int:
    """n! / (parts[0]! * ... * parts[-1]!), requiring sum(parts) == n.

    Computed as a product of binomials so no intermediate exceeds the result.
    """
    parts = tuple(parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"parts must be non-negative: {parts}")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} sum to {sum(parts)}, expected {n}")
    out = 1
    acc = 0
    for x in parts:
        acc += x
        out *= comb(acc, x)
    return out


def degree_N(format: Format) -> int:
    """Size of the natural-map matrix: (k_0+1)! / (k_1! ... k_p!).

    Also the degree of the hyperdeterminant in the matrix entries.  Only
    defined for boundary formats.
    """
    ks = format.ks
    if not format.is_boundary_format():
        raise NonBoundaryError(
            f"dims {format.dims} are not boundary format: k_0={ks[0]} != "
            f"sum(k_1..k_p)={sum(ks[1:])}"
        )
    return multinomial(ks[0] + 1, tuple(ks[1:]) + (1,))
