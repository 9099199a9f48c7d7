"""Groupoid actions on finite categories, equivariant functors, pullback
categories along groupoid homomorphisms, and equivariant descent constraints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .errors import BadComposition, BadFunctor, HomomorphismInvalid
from .groupoids import FiniteGroupoid, GroupoidFunctor
from .report import AuditReport


@dataclass(frozen=True)
class FinCat:
    """A finite category: labeled objects and morphisms with explicit tables."""

    name: str
    objects: tuple
    morphisms: tuple
    msrc: dict = field(compare=False, hash=False)
    mtgt: dict = field(compare=False, hash=False)
    comp: dict = field(compare=False, hash=False)
    ids: dict = field(compare=False, hash=False)

    def compose(self, f, g):
        """f∘g: g first."""
        return self.comp[(f, g)]

    def hom(self, x, y):
        return tuple(m for m in self.morphisms if self.msrc[m] == x and self.mtgt[m] == y)

    def id_mor(self, x):
        return self.ids[x]

    def is_iso(self, m):
        x, y = self.msrc[m], self.mtgt[m]
        return any(
            self.comp.get((n, m)) == self.ids[x] and self.comp.get((m, n)) == self.ids[y]
            for n in self.hom(y, x)
        )

    def inverse(self, m):
        x, y = self.msrc[m], self.mtgt[m]
        for n in self.hom(y, x):
            if self.comp.get((n, m)) == self.ids[x] and self.comp.get((m, n)) == self.ids[y]:
                return n
        raise KeyError(f"{m} is not invertible")


def fincat_validate(name, objects, morphisms, msrc, mtgt, comp, ids) -> FinCat:
    objects = tuple(objects)
    morphisms = tuple(morphisms)
    for m in morphisms:
        if msrc[m] not in objects or mtgt[m] not in objects:
            raise BadComposition(f"morphism {m} has bad endpoints", witness=m)
    for f in morphisms:
        for g in morphisms:
            defined = (f, g) in comp
            should = msrc[f] == mtgt[g]
            if defined != should:
                raise BadComposition(f"composition domain wrong at ({f},{g})", witness=(f, g))
            if should:
                h = comp[(f, g)]
                if msrc[h] != msrc[g] or mtgt[h] != mtgt[f]:
                    raise BadComposition(f"composite endpoints wrong at ({f},{g})", witness=(f, g))
    for f in morphisms:
        for g in morphisms:
            if msrc[f] != mtgt[g]:
                continue
            for h in morphisms:
                if msrc[g] != mtgt[h]:
                    continue
                if comp[(comp[(f, g)], h)] != comp[(f, comp[(g, h)])]:
                    raise BadComposition("associativity fails", witness=(f, g, h))
    for x in objects:
        e = ids.get(x)
        if e is None or msrc[e] != x or mtgt[e] != x:
            raise BadComposition(f"identity missing at {x}", witness=x)
    for m in morphisms:
        if comp[(m, ids[msrc[m]])] != m or comp[(ids[mtgt[m]], m)] != m:
            raise BadComposition(f"identity not neutral at {m}", witness=m)
    return FinCat(name, objects, morphisms, dict(msrc), dict(mtgt), dict(comp), dict(ids))


def fincat_from_groupoid(g: FiniteGroupoid, name=None) -> FinCat:
    return fincat_validate(
        name or g.name, g.objects, g.arrows, g.src, g.tgt, g._comp, g._id
    )


@dataclass(frozen=True)
class FinFunctor:
    src: FinCat
    dst: FinCat
    obj: dict = field(compare=False, hash=False)
    mor: dict = field(compare=False, hash=False)

    def __eq__(self, other):
        return isinstance(other, FinFunctor) and self.obj == other.obj and self.mor == other.mor


def fin_functor(src: FinCat, dst: FinCat, obj, mor) -> FinFunctor:
    for x in src.objects:
        if obj.get(x) not in dst.objects:
            raise BadFunctor(f"object {x} unmapped", witness=x)
    for m in src.morphisms:
        fm = mor.get(m)
        if fm not in dst.morphisms:
            raise BadFunctor(f"morphism {m} unmapped", witness=m)
        if dst.msrc[fm] != obj[src.msrc[m]] or dst.mtgt[fm] != obj[src.mtgt[m]]:
            raise BadFunctor(f"boundaries broken at {m}", witness=m)
    for x in src.objects:
        if mor[src.ids[x]] != dst.ids[obj[x]]:
            raise BadFunctor(f"identity broken at {x}", witness=x)
    for f in src.morphisms:
        for g in src.morphisms:
            if src.msrc[f] == src.mtgt[g]:
                if mor[src.comp[(f, g)]] != dst.comp[(mor[f], mor[g])]:
                    raise BadFunctor(f"composition broken at ({f},{g})", witness=(f, g))
    return FinFunctor(src, dst, dict(obj), dict(mor))


def fin_identity(c: FinCat) -> FinFunctor:
    return FinFunctor(c, c, {x: x for x in c.objects}, {m: m for m in c.morphisms})


def fin_compose(f: FinFunctor, g: FinFunctor) -> FinFunctor:
    """f∘g, g first."""
    return FinFunctor(
        g.src,
        f.dst,
        {x: f.obj[g.obj[x]] for x in g.src.objects},
        {m: f.mor[g.mor[m]] for m in g.src.morphisms},
    )


@dataclass(frozen=True)
class GroupoidActionOnCategory:
    """Right action of a finite groupoid on a finite category via moment maps
    on objects and morphisms and translation tables."""

    acting: FiniteGroupoid
    cat: FinCat
    eps0: dict = field(compare=False, hash=False)
    eps1: dict = field(compare=False, hash=False)
    mu0: dict = field(compare=False, hash=False)
    mu1: dict = field(compare=False, hash=False)

    def act_obj(self, v, gamma):
        return self.mu0[(v, gamma)]

    def act_mor(self, m, gamma):
        return self.mu1[(m, gamma)]


def groupoid_action_audit(act: GroupoidActionOnCategory):
    """The four action identities plus functoriality of each translation."""
    g = act.acting
    c = act.cat
    reports = []

    rep = AuditReport("action-moment", c.name)
    for m in c.morphisms:
        rep.count()
        if not (act.eps0[c.msrc[m]] == act.eps1[m] == act.eps0[c.mtgt[m]]):
            rep.fail(m, (act.eps0[c.msrc[m]], act.eps1[m], act.eps0[c.mtgt[m]]), "equal moments")
    reports.append(rep)

    rep = AuditReport("action-compose", c.name)
    for v in c.objects:
        for g1 in g.arrows:
            if act.eps0[v] != g.tgt[g1]:
                continue
            for g2 in g.arrows:
                if g.src[g1] != g.tgt[g2]:
                    continue
                rep.count()
                try:
                    lhs = act.mu0[(act.mu0[(v, g1)], g2)]
                    rhs = act.mu0[(v, g.comp(g1, g2))]
                except KeyError as e:
                    rep.fail((v, g1, g2), f"missing translate {e}", "")
                    continue
                if lhs != rhs:
                    rep.fail((v, g1, g2), lhs, rhs)
    for m in c.morphisms:
        for g1 in g.arrows:
            if act.eps1[m] != g.tgt[g1]:
                continue
            for g2 in g.arrows:
                if g.src[g1] != g.tgt[g2]:
                    continue
                rep.count()
                try:
                    lhs = act.mu1[(act.mu1[(m, g1)], g2)]
                    rhs = act.mu1[(m, g.comp(g1, g2))]
                except KeyError as e:
                    rep.fail((m, g1, g2), f"missing translate {e}", "")
                    continue
                if lhs != rhs:
                    rep.fail((m, g1, g2), lhs, rhs)
    reports.append(rep)

    rep = AuditReport("action-unit", c.name)
    for v in c.objects:
        rep.count()
        try:
            if act.mu0[(v, g.id(act.eps0[v]))] != v:
                rep.fail(v, act.mu0[(v, g.id(act.eps0[v]))], v)
        except KeyError as e:
            rep.fail(v, f"missing unit translate {e}", "")
    for m in c.morphisms:
        rep.count()
        try:
            if act.mu1[(m, g.id(act.eps1[m]))] != m:
                rep.fail(m, act.mu1[(m, g.id(act.eps1[m]))], m)
        except KeyError as e:
            rep.fail(m, f"missing unit translate {e}", "")
    reports.append(rep)

    rep = AuditReport("action-moment-shift", c.name)
    for v in c.objects:
        for g1 in g.arrows:
            if act.eps0[v] != g.tgt[g1]:
                continue
            rep.count()
            try:
                if act.eps0[act.mu0[(v, g1)]] != g.src[g1]:
                    rep.fail((v, g1), act.eps0[act.mu0[(v, g1)]], g.src[g1])
            except KeyError as e:
                rep.fail((v, g1), f"missing translate {e}", "")
    for m in c.morphisms:
        for g1 in g.arrows:
            if act.eps1[m] != g.tgt[g1]:
                continue
            rep.count()
            try:
                if act.eps1[act.mu1[(m, g1)]] != g.src[g1]:
                    rep.fail((m, g1), act.eps1[act.mu1[(m, g1)]], g.src[g1])
            except KeyError as e:
                rep.fail((m, g1), f"missing translate {e}", "")
    reports.append(rep)

    rep = AuditReport("action-functorial", c.name)
    for g1 in g.arrows:
        for m in c.morphisms:
            if act.eps1[m] != g.tgt[g1]:
                continue
            rep.count()
            try:
                mm = act.mu1[(m, g1)]
                if c.msrc[mm] != act.mu0[(c.msrc[m], g1)] or c.mtgt[mm] != act.mu0[(c.mtgt[m], g1)]:
                    rep.fail((m, g1), "translated boundaries", "boundary of translate")
            except KeyError as e:
                rep.fail((m, g1), f"missing translate {e}", "")
        for v in c.objects:
            if act.eps0[v] != g.tgt[g1]:
                continue
            rep.count()
            try:
                if act.mu1[(c.ids[v], g1)] != c.ids[act.mu0[(v, g1)]]:
                    rep.fail((v, g1), "identity translate", "translate identity")
            except KeyError as e:
                rep.fail((v, g1), f"missing translate {e}", "")
        for f in c.morphisms:
            for h in c.morphisms:
                if c.msrc[f] != c.mtgt[h] or act.eps1[f] != g.tgt[g1] or act.eps1[h] != g.tgt[g1]:
                    continue
                rep.count()
                try:
                    lhs = act.mu1[(c.comp[(f, h)], g1)]
                    rhs = c.comp[(act.mu1[(f, g1)], act.mu1[(h, g1)])]
                except KeyError as e:
                    rep.fail((f, h, g1), f"ill-typed translate {e}", "")
                    continue
                if lhs != rhs:
                    rep.fail((f, h, g1), lhs, rhs)
    reports.append(rep)
    return reports


def equivariant_functor_audit(f: FinFunctor, act1: GroupoidActionOnCategory, act2: GroupoidActionOnCategory):
    reports = []
    rep = AuditReport("equivariant-moment", f"{act1.cat.name}->{act2.cat.name}")
    for v in act1.cat.objects:
        rep.count()
        if act2.eps0[f.obj[v]] != act1.eps0[v]:
            rep.fail(v, act2.eps0[f.obj[v]], act1.eps0[v])
    for m in act1.cat.morphisms:
        rep.count()
        if act2.eps1[f.mor[m]] != act1.eps1[m]:
            rep.fail(m, act2.eps1[f.mor[m]], act1.eps1[m])
    reports.append(rep)
    rep = AuditReport("equivariant-action", f"{act1.cat.name}->{act2.cat.name}")
    g = act1.acting
    for v in act1.cat.objects:
        for g1 in g.arrows:
            if act1.eps0[v] != g.tgt[g1]:
                continue
            rep.count()
            try:
                if f.obj[act1.mu0[(v, g1)]] != act2.mu0[(f.obj[v], g1)]:
                    rep.fail((v, g1), "f(v·g)", "f(v)·g")
            except KeyError as e:
                rep.fail((v, g1), f"ill-typed translate {e}", "")
    for m in act1.cat.morphisms:
        for g1 in g.arrows:
            if act1.eps1[m] != g.tgt[g1]:
                continue
            rep.count()
            try:
                if f.mor[act1.mu1[(m, g1)]] != act2.mu1[(f.mor[m], g1)]:
                    rep.fail((m, g1), "f(m·g)", "f(m)·g")
            except KeyError as e:
                rep.fail((m, g1), f"ill-typed translate {e}", "")
    reports.append(rep)
    return reports


def vect_family_action(rep) -> GroupoidActionOnCategory:
    """The family-of-fibers action induced by a permutation-style groupoid
    representation: objects are (object, vector) pairs, morphisms the loop
    matrices, translation is conjugation."""
    gpd = rep.groupoid
    fld = rep.field
    # vectors: orbit of the standard basis under all inverse translations
    vectors = {}
    for x in gpd.objects:
        base = []
        n = rep.dims[x]
        from .matrices import Mat

        for k in range(n):
            base.append(Mat(fld, [[fld.one if i == k else fld.zero] for i in range(n)]))
        vectors[x] = base
    objs = []
    for x in gpd.objects:
        for v in vectors[x]:
            objs.append((x, v))
    # closure under the action
    changed = True
    while changed:
        changed = False
        for (x, v) in list(objs):
            for a in gpd.arrows:
                if gpd.tgt[a] != x:
                    continue
                w = rep.mats[a].inverse() @ v
                key = (gpd.src[a], w)
                if key not in objs:
                    objs.append(key)
                    changed = True
    loop_mats = {}
    for x in gpd.objects:
        loops = [a for a in gpd.arrows if gpd.src[a] == x and gpd.tgt[a] == x]
        loop_mats[x] = []
        for a in loops:
            if rep.mats[a] not in loop_mats[x]:
                loop_mats[x].append(rep.mats[a])
    morphisms = []
    msrc, mtgt = {}, {}
    for (x, v) in objs:
        for m in loop_mats[x]:
            w = m @ v
            if (x, w) in objs:
                label = (x, m, v)
                morphisms.append(label)
                msrc[label] = (x, v)
                mtgt[label] = (x, w)
    comp = {}
    for f in morphisms:
        for g in morphisms:
            if msrc[f] == mtgt[g]:
                comp[(f, g)] = (f[0], f[1] @ g[1], g[2])
    ids = {}
    from .matrices import Mat

    for (x, v) in objs:
        ids[(x, v)] = (x, Mat.identity(fld, rep.dims[x]), v)
    cat = fincat_validate("vect-family", objs, morphisms, msrc, mtgt, comp, ids)
    eps0 = {(x, v): x for (x, v) in objs}
    eps1 = {m: m[0] for m in morphisms}
    mu0, mu1 = {}, {}
    for (x, v) in objs:
        for a in gpd.arrows:
            if gpd.tgt[a] != x:
                continue
            mu0[((x, v), a)] = (gpd.src[a], rep.mats[a].inverse() @ v)
    for m in morphisms:
        x, mat, v = m
        for a in gpd.arrows:
            if gpd.tgt[a] != x:
                continue
            ia = rep.mats[a].inverse()
            mu1[(m, a)] = (gpd.src[a], ia @ mat @ rep.mats[a], ia @ v)
    return GroupoidActionOnCategory(gpd, cat, eps0, eps1, mu0, mu1)


def action_pullback_category(act: GroupoidActionOnCategory, beta: GroupoidFunctor):
    """Pull a groupoid action back along a homomorphism into the acting
    groupoid; returns (pulled action, iota) where iota maps equivariant
    functors of the original category to equivariant functors of the pullback."""
    if beta.dst is not act.acting:
        raise HomomorphismInvalid("homomorphism does not land in the acting groupoid")
    gp = beta.src
    c = act.cat
    objs = [
        (v, y) for v in c.objects for y in gp.objects if act.eps0[v] == beta.obj_map[y]
    ]
    morphisms = []
    msrc, mtgt = {}, {}
    for m in c.morphisms:
        for y in gp.objects:
            if act.eps1[m] == beta.obj_map[y]:
                label = (m, y)
                morphisms.append(label)
                msrc[label] = (c.msrc[m], y)
                mtgt[label] = (c.mtgt[m], y)
    comp = {}
    for f in morphisms:
        for g in morphisms:
            if msrc[f] == mtgt[g]:
                comp[(f, g)] = (c.comp[(f[0], g[0])], f[1])
    ids = {(v, y): (c.ids[v], y) for (v, y) in objs}
    cat = fincat_validate(f"{c.name}^*", objs, morphisms, msrc, mtgt, comp, ids)
    eps0 = {(v, y): y for (v, y) in objs}
    eps1 = {(m, y): y for (m, y) in morphisms}
    mu0, mu1 = {}, {}
    for (v, y) in objs:
        for g1 in gp.arrows:
            if gp.tgt[g1] != y:
                continue
            mu0[((v, y), g1)] = (act.mu0[(v, beta.arr_map[g1])], gp.src[g1])
    for (m, y) in morphisms:
        for g1 in gp.arrows:
            if gp.tgt[g1] != y:
                continue
            mu1[((m, y), g1)] = (act.mu1[(m, beta.arr_map[g1])], gp.src[g1])
    pulled = GroupoidActionOnCategory(gp, cat, eps0, eps1, mu0, mu1)

    def iota(f: FinFunctor) -> FinFunctor:
        return fin_functor(
            cat,
            cat,
            {(v, y): (f.obj[v], y) for (v, y) in objs},
            {(m, y): (f.mor[m], y) for (m, y) in morphisms},
        )

    return pulled, iota


def enumerate_equivariant_autos(act: GroupoidActionOnCategory, cap=20000):
    """All equivariant automorphisms of the category, by brute force."""
    c = act.cat
    g = act.acting
    obj_candidates = {
        v: [w for w in c.objects if act.eps0[w] == act.eps0[v]] for v in c.objects
    }
    results = []
    total = 1
    for v in c.objects:
        total *= len(obj_candidates[v])
        if total > cap:
            raise ValueError("automorphism enumeration too large")

    def extend_mor(obj_map):
        mor_candidates = {}
        for m in c.morphisms:
            tgtset = [
                n
                for n in c.morphisms
                if c.msrc[n] == obj_map[c.msrc[m]]
                and c.mtgt[n] == obj_map[c.mtgt[m]]
                and act.eps1[n] == act.eps1[m]
            ]
            if not tgtset:
                return
            mor_candidates[m] = tgtset
        keys = list(c.morphisms)
        for pick in iproduct(*(mor_candidates[m] for m in keys)):
            mor_map = dict(zip(keys, pick))
            if len(set(mor_map.values())) != len(keys):
                continue
            try:
                f = fin_functor(c, c, obj_map, mor_map)
            except BadFunctor:
                continue
            ok = True
            for v in c.objects:
                for g1 in g.arrows:
                    if act.eps0[v] == g.tgt[g1] and f.obj[act.mu0[(v, g1)]] != act.mu0[(f.obj[v], g1)]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                for m in c.morphisms:
                    for g1 in g.arrows:
                        if act.eps1[m] == g.tgt[g1] and f.mor[act.mu1[(m, g1)]] != act.mu1[(f.mor[m], g1)]:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                results.append(f)

    keys = list(c.objects)
    for pick in iproduct(*(obj_candidates[v] for v in keys)):
        if len(set(pick)) != len(keys):
            continue
        extend_mor(dict(zip(keys, pick)))
    return results


def equivariant_nat_transforms(act, f1: FinFunctor, f2: FinFunctor):
    """Natural transformations f1 => f2 whose components are compatible with
    the action: nu_{v·g} = nu_v · g."""
    c = act.cat
    g = act.acting
    per_obj = {v: c.hom(f1.obj[v], f2.obj[v]) for v in c.objects}
    out = []
    keys = list(c.objects)
    for pick in iproduct(*(per_obj[v] for v in keys)):
        nu = dict(zip(keys, pick))
        ok = all(
            c.comp[(nu[c.mtgt[m]], f1.mor[m])] == c.comp[(f2.mor[m], nu[c.msrc[m]])]
            for m in c.morphisms
        )
        if ok:
            ok = all(
                nu[act.mu0[(v, g1)]] == act.mu1[(nu[v], g1)]
                for v in c.objects
                for g1 in g.arrows
                if act.eps0[v] == g.tgt[g1]
            )
        if ok:
            out.append(nu)
    return out


def iota_fully_faithful_audit(act, beta: GroupoidFunctor):
    """iota is injective on objects, fully faithful, and an isomorphism onto
    the pullback's equivariant automorphisms when beta is surjective."""
    pulled, iota = action_pullback_category(act, beta)
    autos = enumerate_equivariant_autos(act)
    pulled_autos = enumerate_equivariant_autos(pulled)
    reports = []

    rep = AuditReport("iota-injective", act.cat.name)
    images = []
    for f in autos:
        rep.count()
        jf = iota(f)
        if any(jf == other for other in images):
            rep.fail(str(f.obj), "duplicate image", "")
        images.append(jf)
    reports.append(rep)

    rep = AuditReport("iota-fully-faithful", act.cat.name)
    for i, f1 in enumerate(autos):
        for j, f2 in enumerate(autos):
            rep.count()
            upstairs = equivariant_nat_transforms(act, f1, f2)
            downstairs = equivariant_nat_transforms(pulled, iota(f1), iota(f2))
            mapped = []
            for nu in upstairs:
                nu2 = {(v, y): (nu[v], y) for (v, y) in pulled.cat.objects}
                mapped.append(nu2)
            if len(mapped) != len({tuple(sorted(m.items(), key=str)) for m in mapped}):
                rep.fail((i, j), "faithfulness", "")
            for m in mapped:
                if m not in downstairs:
                    rep.fail((i, j), "image not a valid transformation", "")
            if len(mapped) != len(downstairs):
                rep.fail((i, j), f"{len(mapped)} mapped", f"{len(downstairs)} downstairs")
    reports.append(rep)

    surjective = set(beta.obj_map.values()) == set(act.acting.objects) and set(
        beta.arr_map.values()
    ) == set(act.acting.arrows)
    rep = AuditReport("iota-iso-when-surjective", act.cat.name)
    if surjective:
        rep.count()
        if len(images) != len(pulled_autos):
            rep.fail("object count", len(images), len(pulled_autos))
        for pf in pulled_autos:
            if not any(pf == jf for jf in images):
                rep.fail("essential surjectivity", str(pf.obj), "")
    reports.append(rep)
    return reports


def autoprop_tower_audit(act, phi: GroupoidFunctor, psi: GroupoidFunctor):
    """The iterated pullback agrees with the composite pullback through an
    equivariant isomorphism j, and iota composes accordingly."""
    from .groupoids import functor_compose

    p1, iota1 = action_pullback_category(act, phi)
    p2, iota2 = action_pullback_category(p1, psi)
    q, iotaq = action_pullback_category(act, functor_compose(phi, psi))
    reports = []

    j_obj = {((v, y1), y2): (v, y2) for ((v, y1), y2) in p2.cat.objects}
    j_mor = {((m, y1), y2): (m, y2) for ((m, y1), y2) in p2.cat.morphisms}
    rep = AuditReport("pullback-iso", act.cat.name)
    rep.count()
    try:
        j = fin_functor(p2.cat, q.cat, j_obj, j_mor)
    except BadFunctor as e:
        rep.fail("functor", str(e), "")
        reports.append(rep)
        return reports
    if sorted(map(str, j_obj.values())) != sorted(map(str, q.cat.objects)):
        rep.fail("object bijection", "", "")
    if sorted(map(str, j_mor.values())) != sorted(map(str, q.cat.morphisms)):
        rep.fail("morphism bijection", "", "")
    reports.append(rep)

    rep = AuditReport("pullback-iso-equivariant", act.cat.name)
    gpp = psi.src
    for v in p2.cat.objects:
        for g1 in gpp.arrows:
            if p2.eps0[v] == gpp.tgt[g1]:
                rep.count()
                if j.obj[p2.mu0[(v, g1)]] != q.mu0[(j.obj[v], g1)]:
                    rep.fail((v, g1), "j of translate", "translate of j")
    for m in p2.cat.morphisms:
        for g1 in gpp.arrows:
            if p2.eps1[m] == gpp.tgt[g1]:
                rep.count()
                if j.mor[p2.mu1[(m, g1)]] != q.mu1[(j.mor[m], g1)]:
                    rep.fail((m, g1), "j of translate", "translate of j")
    reports.append(rep)

    rep = AuditReport("iota-composition", act.cat.name)
    j_inv = fin_functor(
        q.cat,
        p2.cat,
        {v: k for k, v in j_obj.items()},
        {m: k for k, m in j_mor.items()},
    )
    for f in enumerate_equivariant_autos(act):
        rep.count()
        lhs = iotaq(f)
        rhs = fin_compose(j, fin_compose(iota2(iota1(f)), j_inv))
        if lhs != rhs:
            rep.fail(str(f.obj), "composite pullback", "iterated pullback")
    reports.append(rep)
    return reports


@dataclass(frozen=True)
class EquivariantBase:
    """A groupoid base whose arrows are labeled by arrows of the acting
    groupoid, compatibly with the moment map."""

    base: FiniteGroupoid
    acting: FiniteGroupoid
    moment: dict = field(compare=False, hash=False)  # base object -> acting object
    lab: dict = field(compare=False, hash=False)  # base arrow -> acting arrow


def equivariant_base_validate(base, acting, moment, lab) -> EquivariantBase:
    for a in base.arrows:
        g1 = lab.get(a)
        if g1 not in acting.arrows:
            raise BadFunctor(f"arrow {a} unlabeled", witness=a)
        if acting.src[g1] != moment[base.src[a]] or acting.tgt[g1] != moment[base.tgt[a]]:
            raise BadFunctor(f"label boundary wrong at {a}", witness=a)
    for x in base.objects:
        if lab[base.id(x)] != acting.id(moment[x]):
            raise BadFunctor(f"identity label wrong at {x}", witness=x)
    for a in base.arrows:
        for b in base.arrows:
            if base.composable(a, b):
                if lab[base.comp(a, b)] != acting.comp(lab[a], lab[b]):
                    raise BadFunctor(f"label composition wrong at ({a},{b})", witness=(a, b))
    return EquivariantBase(base, acting, dict(moment), dict(lab))


def equivariant_descent_audit(eb: EquivariantBase, act: GroupoidActionOnCategory, gammas, phis=None):
    """gammas: edge name -> {base object: FinFunctor}; the 1-simplex constraint
    is checked over every base arrow, 2-simplices (when given as
    phis[(e1, e2, e12)] -> {base object: nat dict}) as pointwise squares."""
    base = eb.base
    c = act.cat
    reports = []

    rep = AuditReport("base-equivariance", base.name)
    for edge, fam in gammas.items():
        for a in base.arrows:
            m1, m2 = base.src[a], base.tgt[a]
            g1 = eb.lab[a]
            inv_g1 = eb.acting.inv(g1)
            for v in c.objects:
                if act.eps0[v] != eb.moment[m2]:
                    continue
                rep.count()
                lhs = fam[m2].obj[v]
                rhs = act.mu0[(fam[m1].obj[act.mu0[(v, g1)]], inv_g1)]
                if lhs != rhs:
                    rep.fail((edge, a, v), lhs, rhs)
            for m in c.morphisms:
                if act.eps1[m] != eb.moment[m2]:
                    continue
                rep.count()
                lhs = fam[m2].mor[m]
                rhs = act.mu1[(fam[m1].mor[act.mu1[(m, g1)]], inv_g1)]
                if lhs != rhs:
                    rep.fail((edge, a, m), lhs, rhs)
    reports.append(rep)

    rep = AuditReport("gauge-equivariant", base.name)
    g = act.acting
    for edge, fam in gammas.items():
        for x, f in fam.items():
            for v in c.objects:
                for g1 in g.arrows:
                    if act.eps0[v] == g.tgt[g1]:
                        rep.count()
                        if f.obj[act.mu0[(v, g1)]] != act.mu0[(f.obj[v], g1)]:
                            rep.fail((edge, x, v, g1), "gauge of translate", "translate of gauge")
    reports.append(rep)

    if phis:
        rep = AuditReport("simplex-square", base.name)
        for (e02, e01, e12), fam in phis.items():
            for x, nu in fam.items():
                f02 = gammas[e02][x]
                f01 = gammas[e01][x]
                f12 = gammas[e12][x]
                bounds_ok = True
                for v in c.objects:
                    rep.count()
                    comp = nu[v]
                    if c.msrc[comp] != f02.obj[v] or c.mtgt[comp] != f01.obj[f12.obj[v]]:
                        rep.fail((x, v), "filler boundary", "")
                        bounds_ok = False
                if not bounds_ok:
                    continue
                for m in c.morphisms:
                    rep.count()
                    lhs = c.comp[(nu[c.mtgt[m]], f02.mor[m])]
                    rhs = c.comp[(f01.mor[f12.mor[m]], nu[c.msrc[m]])]
                    if lhs != rhs:
                        rep.fail((x, m), lhs, rhs)
        reports.append(rep)
    return reports
