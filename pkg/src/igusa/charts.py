"""Zeta functions from normal-crossings chart data and univariate descent."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .context import PadicContext
from .poly import MultiPoly
from .zeta import ZetaRational, one_var_integral


@dataclass(frozen=True)
class ChartCell:
    """One good chart: the integrand is |eps|^s |eta| times a monomial
    |y_1|^(N_1 s + nu_1 - 1) ... |y_k|^(N_k s + nu_k - 1) over the box
    P^(j_1) x ... x P^(j_n)."""

    k: int
    monomials: tuple  # ((N_1, nu_1), ..., (N_k, nu_k))
    box: tuple  # (j_1, ..., j_n)
    ord_eps: int = 0
    ord_eta: int = 0

    @property
    def n(self) -> int:
        return len(self.box)

    def __post_init__(self):
        if self.k < 0 or self.k > self.n:
            raise ValueError("need 0 <= k <= n")
        if len(self.monomials) != self.k:
            raise ValueError("monomials length must equal k")
        for N, nu in self.monomials:
            if N < 1 or nu < 1:
                raise ValueError("monomial data must be positive")
        if self.ord_eta < 0:
            raise ValueError("ord_eta must be >= 0")
        if self.ord_eps < 0:
            warnings.warn("ord_eps < 0: |eps| > 1 on this chart", stacklevel=2)

    @classmethod
    def from_json(cls, d: dict) -> "ChartCell":
        return cls(
            k=d["k"],
            monomials=tuple((N, nu) for N, nu in d["monomials"]),
            box=tuple(d["box"]),
            ord_eps=d.get("ord_eps", 0),
            ord_eta=d.get("ord_eta", 0),
        )


@dataclass(frozen=True)
class CharacterSpec:
    """A multiplicative character of Z_p^*, known only by its order."""

    order: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("character order must be >= 1")


@dataclass
class CandidatePole:
    real_part: Fraction
    N: int
    expected_order: int = 1
    sources: list = field(default_factory=list)


def zeta_from_charts(
    cells: list[ChartCell], ctx: PadicContext, chi: CharacterSpec = CharacterSpec()
) -> ZetaRational:
    """Sum the chart contributions for the trivial character."""
    if chi.order != 1:
        raise ValueError("only the trivial character is supported")
    if not cells:
        raise ValueError("no chart cells given")
    p = ctx.p
    measure = Fraction(0)
    total = ZetaRational.zero(p)
    for cell in cells:
        pref = Fraction(1, p ** (cell.ord_eta + sum(cell.box[cell.k :])))
        piece = ZetaRational.const(p, pref).shift(cell.ord_eps) if cell.ord_eps >= 0 else None
        if piece is None:
            raise ValueError("negative ord_eps cannot be represented in t")
        for j, (N, nu) in zip(cell.box, cell.monomials):
            piece = piece * one_var_integral(p, j, N, nu)
        total = total + piece
        measure += Fraction(1, p ** sum(cell.box))
    if measure != 1:
        warnings.warn(
            f"chart boxes have total measure {measure}, not a partition of Z_p^n",
            stacklevel=2,
        )
    return total.reduced()


def integrate_univariate(
    h: MultiPoly, a: int, b: int, box_j: int, ctx: PadicContext
) -> ZetaRational:
    """Exact value of the integral of |h(u)|^(a s + b - 1) over P^box_j.

    Residue-class descent: a class u = c mod p^m where v_p(h(c)) < m has
    constant |h|; a class where h has a unique simple root (unit derivative
    mod p) is a one-variable integral after linearization; otherwise split.
    Requires squarefree h.
    """
    import sympy

    p = ctx.p
    coeffs = [c.numerator for c in h.univariate_coeffs()]
    if all(c == 0 for c in coeffs):
        raise ValueError("h must be nonzero")
    u = sympy.Symbol("u")
    hs = sympy.Poly(list(reversed(coeffs)), u)
    if hs.degree() >= 1:
        if sympy.gcd(hs, hs.diff(u)).degree() > 0:
            raise ValueError("h must be squarefree")
        res = int(sympy.resultant(hs, hs.diff(u)))
        depth_cap = _vp(res, p) + 2
    else:
        depth_cap = 2

    def shift_scale(cs: list[int], c: int, scale: int) -> tuple[int, list[int]]:
        """Coefficients of h(c + scale*u) with the p-content extracted."""
        out = [0] * len(cs)
        # Horner with polynomial accumulator in u
        for co in reversed(cs):
            # out <- out * (c + scale*u) + co
            new = [0] * len(cs)
            for k in range(len(cs) - 1):
                if out[k]:
                    new[k] += out[k] * c
                    new[k + 1] += out[k] * scale
            new[0] += co
            out = new
        w = None
        for v in out:
            if v:
                w = _vp(v, p) if w is None else min(w, _vp(v, p))
            if w == 0:
                break
        return w, [v // p**w for v in out]

    def integral_unit_box(cs: list[int], depth: int) -> ZetaRational:
        """Integral of |g(u)|^(a s + b - 1) over Z_p for primitive g."""
        total = ZetaRational.zero(p)
        deriv = [k * cs[k] for k in range(1, len(cs))]
        for c in range(p):
            val = sum(co * pow(c, k, p) for k, co in enumerate(cs)) % p
            if val != 0:
                total = total + ZetaRational.const(p, Fraction(1, p))
                continue
            dval = sum(co * pow(c, k, p) for k, co in enumerate(deriv)) % p
            if dval != 0:
                total = total + one_var_integral(p, 1, a, b)
                continue
            if depth > depth_cap:
                raise ArithmeticError(
                    "descent depth cap exceeded; repeated root suspected"
                )
            w, g = shift_scale(cs, c, p)
            inner = integral_unit_box(g, depth + 1)
            piece = inner.shift(w * a).scale(Fraction(1, p ** (1 + w * (b - 1))))
            total = total + piece
        return total

    w, g = shift_scale(coeffs, 0, p**box_j)
    out = integral_unit_box(g, 0).shift(w * a).scale(
        Fraction(1, p ** (box_j + w * (b - 1)))
    )
    return out.reduced()


def _vp(m: int, p: int) -> int:
    if m == 0:
        raise ValueError("valuation of zero")
    v = 0
    m = abs(m)
    while m % p == 0:
        m //= p
        v += 1
    return v


def candidate_poles_filtered(
    data: list[tuple[int, int]], chi: CharacterSpec = CharacterSpec()
) -> list[CandidatePole]:
    """Candidate poles -nu/N for pairs with chi.order dividing N,
    deduplicated by real part."""
    seen: dict[Fraction, CandidatePole] = {}
    for idx, (N, nu) in enumerate(data):
        if N % chi.order != 0:
            continue
        rp = Fraction(-nu, N)
        if rp in seen:
            seen[rp].sources.append(idx)
            seen[rp].N = min(seen[rp].N, N)
        else:
            seen[rp] = CandidatePole(real_part=rp, N=N, sources=[idx])
    return [seen[k] for k in sorted(seen)]
