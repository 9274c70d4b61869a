"""Embedded resolution of plane-curve germs by point blowups over Q.

Each blowup happens at the origin of a local chart ("site") carrying the
strict transform and up to two exceptional curves as coordinate axes.
Numerical data follow the recursions
    no axis:   (mu, 2)
    one axis:  (N_i + mu, nu_i + 1)
    two axes:  (N_i + N_j + mu, nu_i + nu_j),
i.e. N_new = sum of axis N plus mu, nu_new = sum of axis nu plus
(2 - number of axes).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .charts import CandidatePole, CharacterSpec
from .poly import MultiPoly, blowup_chart_a, blowup_chart_b, tangent_cone_factors


@dataclass
class ExceptionalCurve:
    id: int
    N: int
    nu: int
    created_at_step: int
    parent_ids: list

    @property
    def real_part(self) -> Fraction:
        return Fraction(-self.nu, self.N)


@dataclass
class StrictComponent:
    attached_to: int  # curve id, or -1 for a free smooth branch
    N: int = 1
    nu: int = 1
    degree: int = 1


@dataclass
class BlowupRecord:
    step: int
    mu: int
    axes: dict  # coordinate -> (curve id, N, nu)
    new_id: int
    tc_summary: str
    components: list  # (label, degree, N_jr, nu_jr) through the center


@dataclass
class ResolutionTree:
    curves: list = field(default_factory=list)
    strict_components: list = field(default_factory=list)
    adjacency: set = field(default_factory=set)
    log: list = field(default_factory=list)
    inspected_degree: int = 0

    def curve(self, cid: int) -> ExceptionalCurve:
        return self.curves[cid - 1]

    def numerical_data(self) -> list[tuple[int, int]]:
        return [(c.N, c.nu) for c in self.curves]

    def to_dot(self) -> str:
        lines = ["graph resolution {"]
        for c in self.curves:
            lines.append(f'  E{c.id} [label="E{c.id}({c.N},{c.nu})"];')
        for k, s in enumerate(self.strict_components):
            lines.append(f'  S{k} [label="strict", shape=circle];')
        for a, b in sorted(tuple(sorted(e)) for e in self.adjacency):
            lines.append(f"  E{a} -- E{b};")
        for k, s in enumerate(self.strict_components):
            if s.attached_to >= 0:
                lines.append(f"  S{k} -- E{s.attached_to};")
        lines.append("}")
        return "\n".join(lines)


class NonRationalCenterError(ValueError):
    pass


def _squarefree_check(f: MultiPoly) -> None:
    import sympy

    syms = sympy.symbols(list(f.vars))
    expr = 0
    for e, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s**k
        expr += term
    fac = sympy.factor_list(expr)[1]
    for _, mult in fac:
        if mult > 1:
            raise ValueError(
                "non-squarefree input: pass the reduced part and record multiplicities"
            )


def resolve_germ(f: MultiPoly, max_steps: int = 64) -> ResolutionTree:
    if f.nvars != 2:
        raise ValueError("two variables required")
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if f.eval_int((0, 0)) != 0:
        raise ValueError("f(0,0) must be 0")
    _squarefree_check(f)
    xn, yn = f.vars
    tree = ResolutionTree()
    tree.inspected_degree = f.total_degree()
    step = 0
    # each site: (strict transform, axes dict coord->curve id)
    sites = [(f, {})]
    while sites:
        s, axes = sites.pop()
        mu = s.multiplicity_at_origin()
        if mu == 0:
            continue
        xmult, ymult, factors = tangent_cone_factors(s, xn, yn)
        if mu == 1:
            # smooth strict transform
            if not axes:
                continue
            if len(axes) == 1:
                ((coord, cid),) = axes.items()
                # tangent line of s vs the axis {coord = 0}
                tangent_is_axis = ymult == 1 if coord == yn else xmult == 1
                if not tangent_is_axis:
                    tree.strict_components.append(StrictComponent(attached_to=cid))
                    continue
            # tangent to the single axis, or passing through a crossing point
        elif mu == 2 and not axes:
            directions = (1 if xmult else 0) + (1 if ymult else 0) + sum(
                1 for cs, m in factors if len(cs) == 2
            )
            rational = all(len(cs) == 2 for cs, m in factors) and all(
                m == 1 for _, m in factors
            ) and xmult <= 1 and ymult <= 1
            if directions == 2 and rational:
                # two smooth branches crossing transversally: already
                # normal crossings, nothing to do (e.g. f = x*y)
                continue
        if step >= max_steps:
            raise ArithmeticError("max_steps exceeded")
        # blow up the origin of this site
        ax_list = list(axes.items())
        N_new = mu + sum(tree.curve(c).N for _, c in ax_list)
        nu_new = (2 - len(ax_list)) + sum(tree.curve(c).nu for _, c in ax_list)
        step += 1
        new_id = len(tree.curves) + 1
        tree.curves.append(
            ExceptionalCurve(
                id=new_id,
                N=N_new,
                nu=nu_new,
                created_at_step=step,
                parent_ids=[c for _, c in ax_list],
            )
        )
        if len(ax_list) == 2:
            # blowing up a crossing strictly improves the worst candidate
            worst = min(tree.curve(c).real_part for _, c in ax_list)
            assert Fraction(-nu_new, N_new) > worst, "candidate did not increase"
        for _, c in ax_list:
            tree.adjacency.add(frozenset((new_id, c)))
        if len(ax_list) == 2:
            tree.adjacency.discard(frozenset((ax_list[0][1], ax_list[1][1])))
        # components of the total transform through the center, for the
        # relation checks: axis curves (with tangent-cone contributions
        # folded in) and the remaining tangent-cone factors
        components = []
        Nx, nux = (tree.curve(axes[xn]).N, tree.curve(axes[xn]).nu) if xn in axes else (0, 1)
        Ny, nuy = (tree.curve(axes[yn]).N, tree.curve(axes[yn]).nu) if yn in axes else (0, 1)
        if Nx + xmult > 0:
            components.append(("x-axis", 1, Nx + xmult, nux))
        if Ny + ymult > 0:
            components.append(("y-axis", 1, Ny + ymult, nuy))
        for cs, m in factors:
            components.append((f"factor deg {len(cs)-1}", len(cs) - 1, m, 1))
        tree.log.append(
            BlowupRecord(
                step=step,
                mu=mu,
                axes={k: (v, tree.curve(v).N, tree.curve(v).nu) for k, v in axes.items()},
                new_id=new_id,
                tc_summary=f"x^{xmult} y^{ymult} "
                + " ".join(f"(deg {len(cs)-1})^{m}" for cs, m in factors),
                components=components,
            )
        )
        # new sites on the new exceptional curve
        if ymult >= 1:
            strict, _ = blowup_chart_a(s, xn, yn, Fraction(0))
            new_axes = {xn: new_id}
            if yn in axes:
                new_axes[yn] = axes[yn]
            sites.append((strict, new_axes))
        if xmult >= 1:
            strict, _ = blowup_chart_b(s, xn, yn)
            new_axes = {yn: new_id}
            if xn in axes:
                new_axes[xn] = axes[xn]
            sites.append((strict, new_axes))
        for cs, m in factors:
            deg = len(cs) - 1
            if deg == 1:
                tau0 = Fraction(-cs[0], cs[1])
                strict, _ = blowup_chart_a(s, xn, yn, tau0)
                strict = _clear_denominators(strict)
                sites.append((strict, {xn: new_id}))
            elif m == 1:
                # simple transverse crossings at conjugate points
                tree.strict_components.append(
                    StrictComponent(attached_to=new_id, degree=deg)
                )
            else:
                raise NonRationalCenterError(
                    "non-rational center required: tangent-cone factor of "
                    f"degree {deg} with multiplicity {m}"
                )
    return tree


def _clear_denominators(f: MultiPoly) -> MultiPoly:
    from math import lcm

    den = 1
    for c in f.terms.values():
        den = lcm(den, c.denominator)
    return f * den if den > 1 else f


def relations_check(tree: ResolutionTree, step: int) -> dict:
    """Verify the two blowup relations at the given logged step.

    Relation 1: sum of deg(F_j) * N_{j,r} over components through the
    center equals N_r.  Relation 2: sum of deg(F_j) * (alpha_{j,r} - 1)
    equals -2, with alpha = N*s0 + nu at s0 = -nu_r/N_r.
    """
    rec = tree.log[step - 1]
    curve = tree.curve(rec.new_id)
    s0 = Fraction(-curve.nu, curve.N)
    lhs1 = sum(deg * N for _, deg, N, _ in rec.components)
    lhs2 = sum(deg * (N * s0 + nu - 1) for _, deg, N, nu in rec.components)
    ok1 = lhs1 == curve.N
    ok2 = lhs2 == -2
    return {
        "step": step,
        "relation1": {"lhs": lhs1, "rhs": curve.N, "ok": ok1},
        "relation2": {"lhs": lhs2, "rhs": Fraction(-2), "ok": ok2},
        "ok": ok1 and ok2,
    }


def resolution_candidate_poles(
    tree: ResolutionTree, chi: CharacterSpec = CharacterSpec()
) -> list[CandidatePole]:
    by_rp: dict[Fraction, CandidatePole] = {}
    rp_of: dict[int, Fraction] = {}
    for c in tree.curves:
        rp_of[c.id] = c.real_part
        if c.N % chi.order != 0:
            continue
        rp = c.real_part
        if rp in by_rp:
            by_rp[rp].sources.append(c.id)
            by_rp[rp].N = min(by_rp[rp].N, c.N)
        else:
            by_rp[rp] = CandidatePole(real_part=rp, N=c.N, sources=[c.id])
    if tree.strict_components and 1 % chi.order == 0:
        rp = Fraction(-1)
        if rp in by_rp:
            by_rp[rp].sources.append(-1)
        else:
            by_rp[rp] = CandidatePole(real_part=rp, N=1, sources=[-1])
    # expected order: 2 when two components with the same real part meet
    for rp, pole in by_rp.items():
        order = 1
        for edge in tree.adjacency:
            a, b = tuple(edge)
            if rp_of[a] == rp and rp_of[b] == rp:
                order = 2
        for s in tree.strict_components:
            if s.attached_to >= 0 and rp == Fraction(-1) and rp_of[s.attached_to] == rp:
                order = 2
        pole.expected_order = order
    return [by_rp[k] for k in sorted(by_rp)]
