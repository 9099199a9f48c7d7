"""Crossed modules, strict 2-groups, coherent 2-groups, transfer of structure
across a weak equivalence, and exhaustive coherence audits.

A strict 2-group lives on the action groupoid of H translating G through the
boundary map; 2-cells are arrows ``h|g`` (source g, target ∂(h)·g). The
horizontal product of 2-cells is ``(h|g) ⊗ (h'|g') = h·α(g⁻¹)(h') | g·g'``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (
    BadCoherentStructure,
    EquivarianceFail,
    NotAStrictTwoGroupOnSub,
    PeifferFail,
    QuasiInverseInvalid,
)
from .groups import FiniteGroup, GroupHom, RightAction
from .groupoids import (
    FiniteGroupoid,
    SubgroupoidInclusion,
    action_groupoid,
    arrow_label,
    quasi_inverse,
)
from .report import AuditReport

AUDIT_CAP = 10**6


@dataclass(frozen=True)
class CrossedModule:
    name: str
    h: FiniteGroup
    g: FiniteGroup
    boundary: GroupHom
    action: RightAction


def crossed_module_validate(h, g, boundary, action, name="xm") -> CrossedModule:
    """Check equivariance ∂(α(x)h) = x⁻¹∂(h)x and the Peiffer identity
    α(∂(h))h' = h⁻¹h'h over all pairs."""
    if boundary.src is not h or boundary.dst is not g:
        raise ValueError("boundary must map H to G")
    if action.actor is not g or action.target is not h:
        raise ValueError("action must be by G on H")
    for x in g.elements:
        for hh in h.elements:
            lhs = boundary(action(x, hh))
            rhs = g.conj(x, boundary(hh))
            if lhs != rhs:
                raise EquivarianceFail(
                    f"boundary(act({x},{hh})) = {lhs} != {rhs}", witness=(x, hh)
                )
    for h1 in h.elements:
        for h2 in h.elements:
            lhs = action(boundary(h1), h2)
            rhs = h.conj(h1, h2)
            if lhs != rhs:
                raise PeifferFail(f"act(bd({h1}))({h2}) = {lhs} != {rhs}", witness=(h1, h2))
    return CrossedModule(name, h, g, boundary, action)


def inner_crossed_module(g: FiniteGroup, name=None) -> CrossedModule:
    from .groups import conjugation_action, identity_hom

    return crossed_module_validate(
        g, g, identity_hom(g), conjugation_action(g), name=name or f"inner-{g.name}"
    )


@dataclass(frozen=True)
class StrictTwoGroup:
    name: str
    xm: CrossedModule
    groupoid: FiniteGroupoid
    hmul_obj: dict = field(compare=False, hash=False)
    hmul_arr: dict = field(compare=False, hash=False)
    hunit: str = ""

    def prod(self, x, y):
        return self.hmul_obj[(x, y)]

    def prod_arr(self, a, b):
        return self.hmul_arr[(a, b)]


def strict_two_group(xm: CrossedModule, name=None) -> StrictTwoGroup:
    """Action groupoid of H translating G through the boundary, equipped with
    the horizontal product; all strict laws are verified exhaustively."""
    h, g, bd, act = xm.h, xm.g, xm.boundary, xm.action
    translate = {(hh, x): g.mul(bd(hh), x) for hh in h.elements for x in g.elements}
    gpd = action_groupoid(h, g, translate, name=f"{xm.name}:groupoid")
    hmul_obj = {(x, y): g.mul(x, y) for x in g.elements for y in g.elements}
    hmul_arr = {}
    for h1 in h.elements:
        for x in g.elements:
            for h2 in h.elements:
                for y in g.elements:
                    label = h.mul(h1, act(g.inv(x), h2))
                    hmul_arr[(arrow_label(h1, x), arrow_label(h2, y))] = arrow_label(
                        label, g.mul(x, y)
                    )
    tg = StrictTwoGroup(name or f"{xm.name}:2grp", xm, gpd, hmul_obj, hmul_arr, g.identity)
    _verify_strict(tg)
    return tg


def _verify_strict(tg: StrictTwoGroup):
    gpd, xm = tg.groupoid, tg.xm
    e = tg.hunit
    for x in gpd.objects:
        if tg.prod(x, e) != x or tg.prod(e, x) != x:
            raise NotAStrictTwoGroupOnSub(f"unit fails at {x}", witness=x)
    for x in gpd.objects:
        for y in gpd.objects:
            for z in gpd.objects:
                if tg.prod(tg.prod(x, y), z) != tg.prod(x, tg.prod(y, z)):
                    raise NotAStrictTwoGroupOnSub("object product not associative", witness=(x, y, z))
    for a in gpd.arrows:
        for b in gpd.arrows:
            c = tg.prod_arr(a, b)
            if gpd.src[c] != tg.prod(gpd.src[a], gpd.src[b]) or gpd.tgt[c] != tg.prod(
                gpd.tgt[a], gpd.tgt[b]
            ):
                raise NotAStrictTwoGroupOnSub(f"product boundary fails at ({a},{b})", witness=(a, b))
    for a in gpd.arrows:
        for b in gpd.arrows:
            for c in gpd.arrows:
                if tg.prod_arr(tg.prod_arr(a, b), c) != tg.prod_arr(a, tg.prod_arr(b, c)):
                    raise NotAStrictTwoGroupOnSub("arrow product not associative", witness=(a, b, c))
    # interchange: (b∘a) ⊗ (b'∘a') = (b⊗b') ∘ (a⊗a') over all composable squares
    for a in gpd.arrows:
        for b in gpd.arrows:
            if not gpd.composable(b, a):
                continue
            for a2 in gpd.arrows:
                for b2 in gpd.arrows:
                    if not gpd.composable(b2, a2):
                        continue
                    lhs = tg.prod_arr(gpd.comp(b, a), gpd.comp(b2, a2))
                    rhs = gpd.comp(tg.prod_arr(b, b2), tg.prod_arr(a, a2))
                    if lhs != rhs:
                        raise NotAStrictTwoGroupOnSub(
                            "interchange fails", witness=(a, b, a2, b2)
                        )
    assert xm is not None


def interchange_audit(tg: StrictTwoGroup) -> AuditReport:
    """Exhaustive interchange report (the same law _verify_strict enforces)."""
    gpd = tg.groupoid
    rep = AuditReport("interchange", tg.name)
    pairs = [(a, b) for a in gpd.arrows for b in gpd.arrows if gpd.composable(b, a)]
    for a, b in pairs:
        for a2, b2 in pairs:
            rep.count()
            lhs = tg.prod_arr(gpd.comp(b, a), gpd.comp(b2, a2))
            rhs = gpd.comp(tg.prod_arr(b, b2), tg.prod_arr(a, a2))
            if lhs != rhs:
                rep.fail((a, b, a2, b2), lhs, rhs)
    return rep


@dataclass(frozen=True)
class CoherentTwoGroup:
    """Groupoid + (m, u, a, l, r) data; every audit runs against this type."""

    name: str
    groupoid: FiniteGroupoid
    m_obj: dict = field(compare=False, hash=False)
    m_arr: dict = field(compare=False, hash=False)
    unit: str = ""
    assoc: dict = field(compare=False, hash=False, default_factory=dict)
    lunit: dict = field(compare=False, hash=False, default_factory=dict)
    runit: dict = field(compare=False, hash=False, default_factory=dict)

    def prod(self, x, y):
        return self.m_obj[(x, y)]

    def prod_arr(self, a, b):
        return self.m_arr[(a, b)]

    def id_cell(self, x):
        return self.groupoid.id(x)


def coherent_two_group(
    name, gpd: FiniteGroupoid, m_obj, m_arr, unit, assoc, lunit, runit
) -> CoherentTwoGroup:
    """Structural validation: tables total, boundaries well-typed. Laws are the
    audit's business, not construction's."""
    for x in gpd.objects:
        for y in gpd.objects:
            if m_obj.get((x, y)) not in gpd.objects:
                raise BadCoherentStructure(f"product missing at ({x},{y})", witness=(x, y))
    for a in gpd.arrows:
        for b in gpd.arrows:
            c = m_arr.get((a, b))
            if c not in gpd.arrows:
                raise BadCoherentStructure(f"arrow product missing at ({a},{b})", witness=(a, b))
            if gpd.src[c] != m_obj[(gpd.src[a], gpd.src[b])] or gpd.tgt[c] != m_obj[
                (gpd.tgt[a], gpd.tgt[b])
            ]:
                raise BadCoherentStructure(f"arrow product boundary at ({a},{b})", witness=(a, b))
    if unit not in gpd.objects:
        raise BadCoherentStructure("unit object missing")
    for x in gpd.objects:
        for y in gpd.objects:
            for z in gpd.objects:
                arr = assoc.get((x, y, z))
                if arr is None:
                    raise BadCoherentStructure(f"associator missing at ({x},{y},{z})")
                if gpd.src[arr] != m_obj[(m_obj[(x, y)], z)] or gpd.tgt[arr] != m_obj[
                    (x, m_obj[(y, z)])
                ]:
                    raise BadCoherentStructure(
                        f"associator boundary at ({x},{y},{z})", witness=(x, y, z)
                    )
    for x in gpd.objects:
        la, ra = lunit.get(x), runit.get(x)
        if la is None or gpd.src[la] != m_obj[(unit, x)] or gpd.tgt[la] != x:
            raise BadCoherentStructure(f"left unitor boundary at {x}", witness=x)
        if ra is None or gpd.src[ra] != m_obj[(x, unit)] or gpd.tgt[ra] != x:
            raise BadCoherentStructure(f"right unitor boundary at {x}", witness=x)
    return CoherentTwoGroup(name, gpd, dict(m_obj), dict(m_arr), unit, dict(assoc), dict(lunit), dict(runit))


def strict_as_coherent(tg: StrictTwoGroup) -> CoherentTwoGroup:
    gpd = tg.groupoid
    assoc = {
        (x, y, z): gpd.id(tg.prod(tg.prod(x, y), z))
        for x in gpd.objects
        for y in gpd.objects
        for z in gpd.objects
    }
    lunit = {x: gpd.id(x) for x in gpd.objects}
    runit = {x: gpd.id(x) for x in gpd.objects}
    return coherent_two_group(
        tg.name, gpd, tg.hmul_obj, tg.hmul_arr, tg.hunit, assoc, lunit, runit
    )


def transfer_structure(tg: StrictTwoGroup, inc: SubgroupoidInclusion, qi=None, name=None) -> CoherentTwoGroup:
    """Transport the strict structure along a full essentially-surjective
    inclusion: x⊗y = incl(xi(x)·xi(y)), with associator and unitors assembled
    from the counit/unit of the quasi-inverse."""
    if inc.sub is not tg.groupoid:
        raise NotAStrictTwoGroupOnSub("inclusion does not start at the strict 2-group")
    xi, eps, eta = qi if qi is not None else quasi_inverse(inc)
    sub, amb, incl = inc.sub, inc.ambient, inc.incl
    if xi.src is not amb or xi.dst is not sub:
        raise QuasiInverseInvalid("quasi-inverse boundaries wrong")
    m_obj = {}
    for x in amb.objects:
        for y in amb.objects:
            m_obj[(x, y)] = incl.obj_map[tg.prod(xi.obj_map[x], xi.obj_map[y])]
    m_arr = {}
    for a in amb.arrows:
        for b in amb.arrows:
            m_arr[(a, b)] = incl.arr_map[tg.prod_arr(xi.arr_map[a], xi.arr_map[b])]
    unit = incl.obj_map[tg.hunit]
    eps_inv = {x: sub.inv(eps.comp_map[x]) for x in sub.objects}
    assoc = {}
    for f in amb.objects:
        for g in amb.objects:
            for hh in amb.objects:
                xf, xg, xh = xi.obj_map[f], xi.obj_map[g], xi.obj_map[hh]
                first = incl.arr_map[tg.prod_arr(eps.comp_map[tg.prod(xf, xg)], sub.id(xh))]
                second = incl.arr_map[tg.prod_arr(sub.id(xf), eps_inv[tg.prod(xg, xh)])]
                assoc[(f, g, hh)] = amb.comp(second, first)
    eps_unit = eps.comp_map[tg.hunit]
    lunit, runit = {}, {}
    for g in amb.objects:
        xg = xi.obj_map[g]
        lunit[g] = amb.comp(
            amb.inv(eta.comp_map[g]), incl.arr_map[tg.prod_arr(eps_unit, sub.id(xg))]
        )
        runit[g] = amb.comp(
            amb.inv(eta.comp_map[g]), incl.arr_map[tg.prod_arr(sub.id(xg), eps_unit)]
        )
    return coherent_two_group(
        name or f"{tg.name}@{amb.name}", amb, m_obj, m_arr, unit, assoc, lunit, runit
    )


def _tuples(pool, k, cap, seed):
    """All k-tuples over pool, or a uniform seeded sample when the count
    exceeds the cap; returns (iterable, sampled_flag)."""
    if not pool:
        return iter(()), False
    total = len(pool) ** k
    if total <= cap:
        def gen():
            idx = [0] * k
            while True:
                yield tuple(pool[i] for i in idx)
                j = k - 1
                while j >= 0:
                    idx[j] += 1
                    if idx[j] < len(pool):
                        break
                    idx[j] = 0
                    j -= 1
                if j < 0:
                    return

        return gen(), False
    rng = random.Random(seed)
    def gen_sample():
        for _ in range(cap):
            yield tuple(rng.choice(pool) for _ in range(k))

    return gen_sample(), True


def coherence_audit(ctg: CoherentTwoGroup, seed=0, cap=AUDIT_CAP):
    """All coherence laws, each as its own report: product functoriality,
    naturality of a/l/r, pentagon, unit triangle, both derived triangles, and
    the division condition on (first-projection, product)."""
    gpd = ctg.groupoid
    objs = list(gpd.objects)
    arrows = list(gpd.arrows)
    reports = []

    rep = AuditReport("product-functor", ctg.name)
    for x in objs:
        for y in objs:
            rep.count()
            if ctg.prod_arr(gpd.id(x), gpd.id(y)) != gpd.id(ctg.prod(x, y)):
                rep.fail((x, y), ctg.prod_arr(gpd.id(x), gpd.id(y)), gpd.id(ctg.prod(x, y)))
    comp_pairs = [(a, b) for a in arrows for b in arrows if gpd.composable(a, b)]
    for a, b in comp_pairs:
        for c, d in comp_pairs:
            rep.count()
            lhs = ctg.prod_arr(gpd.comp(a, b), gpd.comp(c, d))
            rhs = gpd.comp(ctg.prod_arr(a, c), ctg.prod_arr(b, d))
            if lhs != rhs:
                rep.fail((a, b, c, d), lhs, rhs)
    reports.append(rep)

    rep = AuditReport("assoc-natural", ctg.name)
    triples, sampled = _tuples(arrows, 3, cap, seed)
    rep.sampled = sampled
    for a, b, c in triples:
        rep.count()
        f, g, hh = gpd.src[a], gpd.src[b], gpd.src[c]
        lhs = gpd.comp(ctg.assoc[(gpd.tgt[a], gpd.tgt[b], gpd.tgt[c])],
                       ctg.prod_arr(ctg.prod_arr(a, b), c))
        rhs = gpd.comp(ctg.prod_arr(a, ctg.prod_arr(b, c)), ctg.assoc[(f, g, hh)])
        if lhs != rhs:
            rep.fail((a, b, c), lhs, rhs)
    reports.append(rep)

    rep = AuditReport("lunit-natural", ctg.name)
    for d in arrows:
        rep.count()
        g, g2 = gpd.src[d], gpd.tgt[d]
        lhs = gpd.comp(ctg.lunit[g2], ctg.prod_arr(gpd.id(ctg.unit), d))
        rhs = gpd.comp(d, ctg.lunit[g])
        if lhs != rhs:
            rep.fail(d, lhs, rhs)
    reports.append(rep)

    rep = AuditReport("runit-natural", ctg.name)
    for d in arrows:
        rep.count()
        g, g2 = gpd.src[d], gpd.tgt[d]
        lhs = gpd.comp(ctg.runit[g2], ctg.prod_arr(d, gpd.id(ctg.unit)))
        rhs = gpd.comp(d, ctg.runit[g])
        if lhs != rhs:
            rep.fail(d, lhs, rhs)
    reports.append(rep)

    rep = AuditReport("pentagon", ctg.name)
    quads, sampled = _tuples(objs, 4, cap, seed)
    rep.sampled = sampled
    for f, g, hh, k in quads:
        rep.count()
        lhs = gpd.comp(ctg.assoc[(f, g, ctg.prod(hh, k))], ctg.assoc[(ctg.prod(f, g), hh, k)])
        rhs = gpd.comp(
            ctg.prod_arr(gpd.id(f), ctg.assoc[(g, hh, k)]),
            gpd.comp(
                ctg.assoc[(f, ctg.prod(g, hh), k)],
                ctg.prod_arr(ctg.assoc[(f, g, hh)], gpd.id(k)),
            ),
        )
        if lhs != rhs:
            rep.fail((f, g, hh, k), lhs, rhs)
    reports.append(rep)

    rep = AuditReport("unit-triangle", ctg.name)
    for f in objs:
        for g in objs:
            rep.count()
            lhs = gpd.comp(ctg.prod_arr(gpd.id(f), ctg.lunit[g]), ctg.assoc[(f, ctg.unit, g)])
            rhs = ctg.prod_arr(ctg.runit[f], gpd.id(g))
            if lhs != rhs:
                rep.fail((f, g), lhs, rhs)
    reports.append(rep)

    rep = AuditReport("unit-triangle-right", ctg.name)
    for f in objs:
        for g in objs:
            rep.count()
            lhs = gpd.comp(ctg.prod_arr(gpd.id(f), ctg.runit[g]), ctg.assoc[(f, g, ctg.unit)])
            rhs = ctg.runit[ctg.prod(f, g)]
            if lhs != rhs:
                rep.fail((f, g), lhs, rhs)
    reports.append(rep)

    rep = AuditReport("unit-triangle-left", ctg.name)
    for f in objs:
        for g in objs:
            rep.count()
            lhs = gpd.comp(ctg.lunit[ctg.prod(f, g)], ctg.assoc[(ctg.unit, f, g)])
            rhs = ctg.prod_arr(ctg.lunit[f], gpd.id(g))
            if lhs != rhs:
                rep.fail((f, g), lhs, rhs)
    reports.append(rep)

    rep = AuditReport("product-equivalence", ctg.name)
    comps = gpd.components()
    comp_index = {x: i for i, c in enumerate(comps) for x in c}
    for x in objs:
        for z in objs:
            rep.count()
            witness_comps = {comp_index[y] for y in objs if comp_index[ctg.prod(x, y)] == comp_index[z]}
            if len(witness_comps) != 1:
                rep.fail((x, z), f"{len(witness_comps)} iso classes of solutions", "1")
            else:
                ci = witness_comps.pop()
                full = all(comp_index[ctg.prod(x, y)] == comp_index[z] for y in comps[ci])
                if not full:
                    rep.fail((x, z), "solution class not closed under iso", "")
    reports.append(rep)
    return reports


def has_nonidentity_assoc(ctg: CoherentTwoGroup) -> bool:
    gpd = ctg.groupoid
    return any(a != gpd.id(gpd.src[a]) for a in ctg.assoc.values())
