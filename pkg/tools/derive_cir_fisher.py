"""Derive the first-order CIR Fisher approximation in closed form.

Every integrand is a Laurent polynomial in x, so stationary expectations
follow from the Gamma moments E[x^p] = scale^p Gamma(shape + p) / Gamma(shape).
Prints the entries of -N(theta, 1, delta) / delta (drift block, cross block)
and the delta-coefficient of the sigma-sigma entry.
"""
import sympy as sp

x, k, a, s, d = sp.symbols("x kappa alpha sigma delta", positive=True)
shape = 2 * k * a / s**2
scale = s**2 / (2 * k)

mu = k * (a - x)
sig = s * sp.sqrt(x)
eta = [k, a]
xi = [s]


def expect(expr):
    expr = sp.expand(sp.powsimp(sp.expand(expr), force=True))
    total = 0
    for term in sp.Add.make_args(expr):
        coeff, power = term.as_coeff_exponent(x)
        assert not coeff.has(x), term
        total += coeff * scale**power * sp.gamma(shape + power) / sp.gamma(shape)
    return sp.factor(sp.simplify(sp.gammasimp(total)))


D = lambda f, *v: sp.diff(f, *v)
mx = D(mu, x)
sx, sxx = D(sig, x), D(sig, x, 2)
n11 = [[expect(-D(mu, i) * D(mu, j) / sig**2 - mu / sig**2 * D(mu, i, j) + D(mu, i, j) * sx / sig - D(mu, x, i, j) / 2)
        for j in eta] for i in eta]
n12 = [[expect(2 * mu / sig**3 * D(mu, i) * D(sig, j) - D(mu, i) * sx * D(sig, j) / sig**2 + D(mu, i) * D(sig, x, j) / sig)
        for j in xi] for i in eta]
i = j = s
si, sj, sij = D(sig, i), D(sig, j), D(sig, i, j)
sxi, sxj, sxij = D(sig, x, i), D(sig, x, j), D(sig, x, i, j)
n22 = expect(
    -6 * mu**2 / sig**4 * si * sj + 16 * mu / sig**3 * sx * si * sj + 2 * mu**2 / sig**3 * sij - 3 / sig**2 * mx * si * sj
    - sp.Rational(19, 2) / sig**2 * sx**2 * si * sj - sp.Rational(9, 2) * mu / sig**2 * sx * sij
    - 5 * mu / sig**2 * sxi * sj - 5 * mu / sig**2 * sxj * si + mx / sig * sij + 4 / sig * sxx * si * sj
    + sp.Rational(11, 2) / sig * sx * sxi * sj + sp.Rational(11, 2) / sig * sx * sxj * si
    + sp.Rational(3, 2) / sig * sx**2 * sij + sp.Rational(5, 2) * mu / sig * sxij - sp.Rational(3, 4) * sxx * sij
    - sp.Rational(5, 2) * sxi * sxj - sp.Rational(3, 2) * sx * sxij - D(sig, x, x, i) * sj - D(sig, x, x, j) * si
    + sp.Rational(3, 4) * sig * D(sig, x, x, i, j)
)
lead = expect(-2 * si * sj / sig**2)
print("N11 =", n11)
print("N12 =", n12)
print("N22 =", n22)
print("lead =", lead)
