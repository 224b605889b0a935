"""Generate closed-form expansion coefficients for the reference models.

The recursion for c_j is linear and, for the Vasicek and CIR transformed
drifts, maps Laurent polynomials in (y, y0) to Laurent polynomials.  This
script carries it out symbolically and writes ``src/amle/_coeffs.py``.

Run from the repository root::

    python tools/derive_coefficients.py

Requires sympy (development only).
"""
from __future__ import annotations

import sys
from pathlib import Path

import sympy as sp

JMAX = 6
kappa, b = sp.symbols("kappa b")
y, y0 = sp.symbols("y y0")


def _add(d, key, v):
    v = sp.expand(d.get(key, 0) + v)
    if v == 0:
        d.pop(key, None)
    else:
        d[key] = v


def _mul(P, Q):
    out = {}
    for (p1, q1), c1 in P.items():
        for (p2, q2), c2 in Q.items():
            _add(out, (p1 + p2, q1 + q2), c1 * c2)
    return out


def _d2(P):
    out = {}
    for (p, q), c in P.items():
        if p * (p - 1) != 0:
            _add(out, (p - 2, q), c * p * (p - 1))
    return out


def _integrate(P):
    # int_{y0}^{y} w^p y0^q dw
    out = {}
    for (p, q), c in P.items():
        if p == -1:
            raise ValueError("logarithmic term in recursion")
        _add(out, (p + 1, q), c / (p + 1))
        _add(out, (0, p + 1 + q), -c / (p + 1))
    return out


def _divide(P, j):
    shift = -min(0, min(p for p, _ in P), min(q for _, q in P))
    expr = sum(c * y ** (p + shift) * y0 ** (q + shift) for (p, q), c in P.items())
    quo, rem = sp.div(sp.Poly(expr, y, y0), sp.Poly((y - y0) ** j, y, y0))
    if not rem.is_zero:
        raise ArithmeticError("non-removable singularity")
    out = {}
    for (p, q), c in quo.terms():
        _add(out, (p - shift, q - shift), c)
    return out


def recursion(lam, jmax=JMAX):
    coeffs = [{(0, 0): sp.Integer(1)}]
    for j in range(1, jmax + 1):
        prev = coeffs[-1]
        g = _mul(lam, prev)
        for key, v in _d2(prev).items():
            _add(g, key, v / 2)
        weight = {}
        for i in range(j):
            _add(weight, (i, j - 1 - i), sp.binomial(j - 1, i) * (-1) ** (j - 1 - i))
        cj = _divide(_integrate(_mul(weight, g)), j)
        coeffs.append({key: sp.expand(j * v) for key, v in cj.items()})
    return coeffs


def _scalar_terms(expr):
    poly = sp.Poly(expr, kappa, b)
    terms = []
    for (i, l), c in sorted(poly.terms()):
        c = sp.Rational(c)
        terms.append((i, l, int(c.p), int(c.q)))
    return tuple(terms)


def _table(coeffs):
    rows = []
    for cj in coeffs:
        rows.append(tuple((p, q, _scalar_terms(v)) for (p, q), v in sorted(cj.items())))
    return tuple(rows)


# Vasicek in centred units u = (x - alpha)/sigma: lambda_Y(u) = -(kappa^2 u^2 - kappa)/2
VASICEK_LAMBDA = {(2, 0): -kappa**2 / 2, (0, 0): kappa / 2}
# CIR with y = 2 sqrt(x)/sigma, b = 2 kappa alpha / sigma^2 - 1/2
CIR_LAMBDA = {
    (-2, 0): -(b**2 - b) / 2,
    (2, 0): -kappa**2 / 8,
    (0, 0): kappa * (b + sp.Rational(1, 2)) / 2,
}


def main(out=None):
    out = Path(out or Path(__file__).resolve().parents[1] / "src" / "amle" / "_coeffs.py")
    lines = [
        '"""Closed-form expansion coefficients (generated by tools/derive_coefficients.py).',
        "",
        "TABLE[j] lists terms (p, q, scalars) of c_j(y | y0) = sum S * y**p * y0**q,",
        "where S = sum num/den * kappa**i * b**l over scalars (i, l, num, den).",
        "Do not edit by hand.",
        '"""',
        "",
    ]
    for name, lam in (("VASICEK", VASICEK_LAMBDA), ("CIR", CIR_LAMBDA)):
        table = _table(recursion(lam))
        lines.append(f"{name} = (")
        for row in table:
            lines.append(f"    {row!r},")
        lines.append(")")
        lines.append("")
    out.write_text("\n".join(lines))
    print(f"wrote {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
