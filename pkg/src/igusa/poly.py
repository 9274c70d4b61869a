"""Sparse multivariate polynomials over Q, with a small expression parser.

Terms are stored as {exponent tuple: coefficient}.  Coefficients are
Fractions so that blowup substitutions with rational centers stay exact;
user input is restricted to integer coefficients by the parser.
"""

from __future__ import annotations

import re
from fractions import Fraction


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict | None = None) -> None:
        self.vars = tuple(vars)
        self.terms: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def const(cls, vars: tuple[str, ...], c) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def var(cls, vars: tuple[str, ...], name: str) -> "MultiPoly":
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(
                self.vars, {e: c * other for e, c in self.terms.items()}
            )
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        out = MultiPoly.const(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def multiplicity_at_origin(self) -> int:
        """Minimal total degree of a monomial; the zero polynomial has none."""
        if not self.terms:
            raise ValueError("zero polynomial has no multiplicity")
        return min(sum(e) for e in self.terms)

    def lowest_form(self) -> "MultiPoly":
        """Sum of the monomials of minimal total degree (the tangent cone)."""
        mu = self.multiplicity_at_origin()
        return MultiPoly(
            self.vars, {e: c for e, c in self.terms.items() if sum(e) == mu}
        )

    def derivative(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = out.get(tuple(e2), Fraction(0)) + c * e[i]
        return MultiPoly(self.vars, out)

    def subs(self, values: dict) -> "MultiPoly":
        """Substitute polynomials (or rationals) for some variables."""
        out = MultiPoly.const(self.vars, 0)
        for e, c in self.terms.items():
            term = MultiPoly.const(self.vars, c)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                name = self.vars[i]
                if name in values:
                    v = values[name]
                    if isinstance(v, (int, Fraction)):
                        term = term * (Fraction(v) ** k)
                    else:
                        term = term * v**k
                else:
                    term = term * MultiPoly.var(self.vars, name) ** k
            out = out + term
        return out

    def eval_int(self, point: tuple[int, ...]) -> int:
        """Evaluate at integer coordinates; requires integer coefficients."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        if total.denominator != 1:
            raise ValueError("non-integer value")
        return total.numerator

    def content_power(self, p: int) -> int:
        """Largest w with p^w dividing every coefficient (integer coeffs)."""
        if not self.terms:
            return 0
        w = None
        for c in self.terms.values():
            if c.denominator != 1:
                raise ValueError("non-integer coefficients")
            v = 0
            n = abs(c.numerator)
            while n % p == 0:
                n //= p
                v += 1
            w = v if w is None else min(w, v)
            if w == 0:
                return 0
        return w

    def divide_scalar(self, c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(self.vars, {e: a / c for e, a in self.terms.items()})

    def divide_var_power(self, name: str, k: int) -> "MultiPoly":
        """Exact division by name^k."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] < k:
                raise ValueError(f"not divisible by {name}^{k}")
            e2 = list(e)
            e2[i] -= k
            out[tuple(e2)] = c
        return MultiPoly(self.vars, out)

    def divisible_by_var(self, name: str) -> bool:
        i = self.vars.index(name)
        return all(e[i] >= 1 for e in self.terms)

    def mod_p(self, p: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if c.denominator % p == 0:
                raise ValueError("denominator divisible by p")
            r = (c.numerator * pow(c.denominator, -1, p)) % p
            if r:
                out[e] = Fraction(r)
        return MultiPoly(self.vars, out)

    def coefficients_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def univariate_coeffs(self) -> list[Fraction]:
        """Coefficients [c_0, c_1, ...] when only one variable occurs."""
        used = [i for i in range(self.nvars) if any(e[i] for e in self.terms)]
        if len(used) > 1:
            raise ValueError("not univariate")
        i = used[0] if used else 0
        d = max((e[i] for e in self.terms), default=0)
        out = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def __repr__(self) -> str:
        return format_poly(self)


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[a-zA-Z][a-zA-Z0-9]*|\*\*|\^|[-+*()])")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"bad character at {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str], vars: tuple[str, ...]) -> None:
        self.toks = tokens
        self.i = 0
        self.vars = vars

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self) -> MultiPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -1
        node = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> MultiPoly:
        node = self.power()
        while True:
            t = self.peek()
            if t == "*":
                self.take()
                node = node * self.power()
            elif t is not None and (t.isdigit() or t[0].isalpha() or t == "("):
                # implicit multiplication: 3x, x y, 2(x+1)
                node = node * self.power()
            else:
                return node

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            neg = False
            if self.peek() == "-":
                raise ValueError("negative exponent")
            e = self.take()
            if e is None or not e.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(e)
        return base

    def atom(self) -> MultiPoly:
        t = self.take()
        if t == "(":
            node = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return node
        if t == "-":
            return -self.atom()
        if t is None:
            raise ValueError("unexpected end of expression")
        if t.isdigit():
            return MultiPoly.const(self.vars, int(t))
        if t[0].isalpha():
            if t not in self.vars:
                raise ValueError(f"unknown variable {t!r}")
            return MultiPoly.var(self.vars, t)
        raise ValueError(f"unexpected token {t!r}")


def poly_variables(text: str) -> tuple[str, ...]:
    """Variable names appearing in the expression, in order of first use."""
    seen: list[str] = []
    for t in _tokenize(text):
        if t and t[0].isalpha() and t not in seen:
            seen.append(t)
    return tuple(seen)


def parse_poly(text: str, vars: tuple[str, ...] | None = None) -> MultiPoly:
    """Parse an integer polynomial expression.

    Grammar: integers, variables, +, -, *, ^ (or **), parentheses;
    ^ binds tighter than *, which binds tighter than + and -.
    """
    if vars is None:
        vars = poly_variables(text)
        if not vars:
            vars = ("x",)
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty expression")
    parser = _Parser(toks, tuple(vars))
    out = parser.expr()
    if parser.i != len(toks):
        raise ValueError(f"trailing tokens near {toks[parser.i]!r}")
    return out


def format_poly(f: MultiPoly) -> str:
    """Graded-lex printer: higher total degree first, then lexicographic."""
    if not f.terms:
        return "0"
    keys = sorted(f.terms, key=lambda e: (-sum(e), tuple(-k for k in e)))
    parts = []
    for e in keys:
        c = f.terms[e]
        mono = "*".join(
            f"{v}^{k}" if k > 1 else v for v, k in zip(f.vars, e) if k
        )
        if not mono:
            piece = str(c)
        elif c == 1:
            piece = mono
        elif c == -1:
            piece = f"-{mono}"
        else:
            piece = f"{c}*{mono}"
        parts.append(piece)
    out = parts[0]
    for piece in parts[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


# -- tangent cone factorization (two variables) -------------------------------


def tangent_cone_factors(f: MultiPoly, xname: str, yname: str):
    """Factor the lowest-degree form of f over Q.

    Returns (xmult, ymult, factors) where xmult and ymult are the powers of
    the coordinate axes dividing the cone and factors is a list of
    (univariate coefficient list in tau = y/x, multiplicity) for the
    remaining irreducible factors, each with integer coprime coefficients.
    Linear factors tau - tau0 give the rational directions tau0.
    """
    import sympy

    cone = f.lowest_form()
    xi = f.vars.index(xname)
    yi = f.vars.index(yname)
    xmult = min(e[xi] for e in cone.terms)
    ymult = min(e[yi] for e in cone.terms)
    # dehomogenize: divide by x^a y^b, substitute x = 1, keep tau = y
    tau = sympy.Symbol("tau")
    expr = 0
    for e, c in cone.terms.items():
        expr += sympy.Rational(c.numerator, c.denominator) * tau ** (e[yi] - ymult)
    expr = sympy.expand(expr)
    factors = []
    const, flist = sympy.factor_list(sympy.Poly(expr, tau))
    for fac, mult in flist:
        coeffs = [Fraction(int(c)) for c in reversed(sympy.Poly(fac, tau).all_coeffs())]
        factors.append((coeffs, int(mult)))
    return xmult, ymult, factors


def blowup_chart_a(f: MultiPoly, xname: str, yname: str, tau0: Fraction = Fraction(0)) -> tuple["MultiPoly", int]:
    """Substitute x = u, y = u (v + tau0) and divide by u^mu.

    The result is expressed in the same variable names (x as u, y as v).
    Returns (strict transform, mu)."""
    mu = f.multiplicity_at_origin()
    u = MultiPoly.var(f.vars, xname)
    v = MultiPoly.var(f.vars, yname)
    g = f.subs({xname: u, yname: u * (v + MultiPoly.const(f.vars, tau0))})
    return g.divide_var_power(xname, mu), mu


def blowup_chart_b(f: MultiPoly, xname: str, yname: str) -> tuple["MultiPoly", int]:
    """Substitute x = u v, y = v and divide by v^mu (the chart at the
    vertical direction).  x plays the role of u, y the role of v."""
    mu = f.multiplicity_at_origin()
    u = MultiPoly.var(f.vars, xname)
    v = MultiPoly.var(f.vars, yname)
    g = f.subs({xname: u * v, yname: v})
    return g.divide_var_power(yname, mu), mu
