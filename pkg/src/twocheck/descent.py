"""Cocycle descent data for categorified vector bundles over finite covers,
the gluing checks for its 1- and 2-morphisms, refinement and composition via
fibered products, principal cocycles with their associated bundles,
hypercovers, and the prestack bijection along them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .actions import FinCat, FinFunctor, fin_compose, fin_identity
from .errors import CocycleInvalid, LevelFail, NotACover, NotARefinement
from .groupoids import FiniteGroupoid, GroupoidFunctor, groupoid_validate
from .report import AuditReport


@dataclass(frozen=True)
class FiniteCover:
    name: str
    base: tuple
    pieces: dict = field(compare=False, hash=False)  # name -> frozenset

    def piece_names(self):
        return tuple(self.pieces.keys())


def finite_cover(name, base, pieces) -> FiniteCover:
    base = tuple(base)
    pieces = {k: frozenset(v) for k, v in pieces.items()}
    for k, s in pieces.items():
        if not s <= set(base):
            raise NotACover(f"piece {k} leaves the base", witness=k)
    missing = set(base) - set().union(*pieces.values()) if pieces else set(base)
    if missing:
        raise NotACover(f"uncovered points {sorted(missing)}", witness=sorted(missing)[0])
    return FiniteCover(name, base, pieces)


def cech_nerve(cover: FiniteCover, depth=3):
    """Overlap sets for all index tuples up to the given length."""
    names = cover.piece_names()
    nerve = {}
    for k in range(1, depth + 2):
        for idx in iproduct(names, repeat=k):
            s = cover.pieces[idx[0]]
            for nm in idx[1:]:
                s = s & cover.pieces[nm]
            nerve[idx] = tuple(p for p in cover.base if p in s)
    return nerve


class FinCatFiber:
    """Fiber operations for a finite category: endofunctors are FinFunctors,
    morphism values are labels."""

    def __init__(self, cat: FinCat):
        self.cat = cat
        self.objects = list(cat.objects)

    def id_endo(self):
        return fin_identity(self.cat)

    def endo_obj(self, e, v):
        return e.obj[v]

    def endo_mor(self, e, m):
        return e.mor[m]

    def compose_endo(self, e, f):
        return fin_compose(e, f)

    def endo_bijective(self, e):
        return len(set(e.obj.values())) == len(self.objects)

    def comp_mor(self, m2, m1):
        return self.cat.comp[(m2, m1)]

    def eq_mor(self, m1, m2):
        return m1 == m2

    def invertible(self, m):
        return self.cat.is_iso(m)

    def id_mor(self, v):
        return self.cat.ids[v]

    def boundary_ok(self, m, u, v):
        return self.cat.msrc[m] == u and self.cat.mtgt[m] == v

    def gen_morphisms(self):
        return [(self.cat.msrc[m], self.cat.mtgt[m], m) for m in self.cat.morphisms]


class CarrierFiber:
    """Fiber operations for a 2-representation carrier: endofunctors are its
    Endo tables, morphism values are per-object matrix dictionaries."""

    def __init__(self, tr):
        self.tr = tr
        self.carrier = tr.carrier
        self.objects = list(range(len(tr.carrier)))

    def id_endo(self):
        from .tworeps import Endo

        return Endo({i: i for i in self.objects}, lambda m: dict(m))

    def endo_obj(self, e, v):
        return e.obj[v]

    def endo_mor(self, e, m):
        return e.mor(m)

    def compose_endo(self, e, f):
        from .tworeps import Endo

        return Endo({i: e.obj[f.obj[i]] for i in self.objects}, lambda m: e.mor(f.mor(m)))

    def endo_bijective(self, e):
        return len(set(e.obj.values())) == len(self.objects)

    def comp_mor(self, m2, m1):
        return {x: m2[x] @ m1[x] for x in m1}

    def eq_mor(self, m1, m2):
        return m1 == m2

    def invertible(self, m):
        return all(v.is_invertible() for v in m.values())

    def id_mor(self, v):
        r = self.carrier.objects[v]
        from .matrices import Mat

        return {x: Mat.identity(self.carrier.field, r.dims[x]) for x in self.carrier.groupoid.objects}

    def boundary_ok(self, m, u, v):
        ru, rv = self.carrier.objects[u], self.carrier.objects[v]
        return all(
            m[x].cols == ru.dims[x] and m[x].rows == rv.dims[x]
            for x in self.carrier.groupoid.objects
        )

    def gen_morphisms(self):
        out = []
        for (i, j), homs in self.carrier.homs.items():
            for m in homs:
                out.append((i, j, m))
        return out


@dataclass
class DescentObject:
    name: str
    cover: FiniteCover
    fiber: object  # FinCatFiber or CarrierFiber
    gamma: dict  # (i, j) -> {point: endo}
    phi: dict  # (i, j, k) -> {point: {fiber object: morphism}}


def descent_object_validate(d: DescentObject, nerve=None):
    """Pointwise gauge invertibility, filler boundaries and naturality, and
    the cocycle square-pentagon on quadruple overlaps."""
    fib = d.fiber
    nerve = nerve or cech_nerve(d.cover)
    names = d.cover.piece_names()
    reports = []

    rep = AuditReport("gauge-invertible", d.name)
    for (i, j) in iproduct(names, repeat=2):
        for p in nerve[(i, j)]:
            rep.count()
            if not fib.endo_bijective(d.gamma[(i, j)][p]):
                rep.fail((i, j, p), "gauge not invertible", "")
    reports.append(rep)

    rep = AuditReport("cocycle-boundary", d.name)
    for (i, j, k) in iproduct(names, repeat=3):
        for p in nerve[(i, j, k)]:
            nu = d.phi[(i, j, k)][p]
            gik = d.gamma[(i, k)][p]
            gcomp = fib.compose_endo(d.gamma[(i, j)][p], d.gamma[(j, k)][p])
            for v in fib.objects:
                rep.count()
                m = nu[v]
                if not fib.boundary_ok(m, fib.endo_obj(gik, v), fib.endo_obj(gcomp, v)):
                    rep.fail((i, j, k, p, v), "filler boundary", "")
                elif not fib.invertible(m):
                    rep.fail((i, j, k, p, v), "filler not invertible", "")
            for (u, v, m) in fib.gen_morphisms():
                rep.count()
                try:
                    lhs = fib.comp_mor(nu[v], fib.endo_mor(gik, m))
                    rhs = fib.comp_mor(fib.endo_mor(gcomp, m), nu[u])
                except (KeyError, ValueError):
                    rep.fail((i, j, k, p, u, v), "ill-typed naturality square", "")
                    continue
                if not fib.eq_mor(lhs, rhs):
                    rep.fail((i, j, k, p, u, v), "filler not natural", "")
    reports.append(rep)

    rep = AuditReport("cocycle-pentagon", d.name)
    for (i, j, k, l) in iproduct(names, repeat=4):
        for p in nerve[(i, j, k, l)]:
            for v in fib.objects:
                rep.count()
                try:
                    # route 1: phi_ikl then (phi_ijk whiskered by gamma_kl)
                    r1 = fib.comp_mor(
                        d.phi[(i, j, k)][p][fib.endo_obj(d.gamma[(k, l)][p], v)],
                        d.phi[(i, k, l)][p][v],
                    )
                    # route 2: phi_ijl then (gamma_ij applied to phi_jkl)
                    r2 = fib.comp_mor(
                        fib.endo_mor(d.gamma[(i, j)][p], d.phi[(j, k, l)][p][v]),
                        d.phi[(i, j, l)][p][v],
                    )
                except (KeyError, ValueError):
                    rep.fail((i, j, k, l, p, v), "ill-typed composite", "")
                    continue
                if not fib.eq_mor(r1, r2):
                    rep.fail((i, j, k, l, p, v), "route via ik", "route via jl")
    reports.append(rep)
    return reports


def trivial_descent_object(name, cover: FiniteCover, fib) -> DescentObject:
    nerve = cech_nerve(cover)
    names = cover.piece_names()
    gamma = {
        (i, j): {p: fib.id_endo() for p in nerve[(i, j)]} for i in names for j in names
    }
    phi = {
        (i, j, k): {
            p: {v: fib.id_mor(v) for v in fib.objects} for p in nerve[(i, j, k)]
        }
        for i in names
        for j in names
        for k in names
    }
    return DescentObject(name, cover, fib, gamma, phi)


@dataclass
class DescentMorphism:
    name: str
    src: DescentObject
    dst: DescentObject
    # gauge per piece on the (shared or refined) cover, and square fillers
    cover: FiniteCover
    comp: dict  # i -> {point: functor-like (endo table src fiber -> dst fiber)}
    filler: dict  # (i, j) -> {point: {src fiber object: dst morphism}}
    src_piece: dict = None  # refinement maps; identity when None
    dst_piece: dict = None


def _piece(m, side, i):
    mp = m.src_piece if side == "src" else m.dst_piece
    return i if mp is None else mp[i]


def descent_morphism_validate(m: DescentMorphism, nerve=None):
    """Square fillers have the right boundaries and satisfy the prism
    condition over triple overlaps."""
    fs, fd = m.src.fiber, m.dst.fiber
    nerve = nerve or cech_nerve(m.cover)
    names = m.cover.piece_names()
    reports = []

    rep = AuditReport("morphism-filler-boundary", m.name)
    for (i, j) in iproduct(names, repeat=2):
        for p in nerve[(i, j)]:
            nu = m.filler[(i, j)][p]
            left = fd.compose_endo(m.comp[i][p], m.src.gamma[(_piece(m, "src", i), _piece(m, "src", j))][p])
            right = fd.compose_endo(m.dst.gamma[(_piece(m, "dst", i), _piece(m, "dst", j))][p], m.comp[j][p])
            for v in fs.objects:
                rep.count()
                if not fd.boundary_ok(nu[v], fd.endo_obj(left, v), fd.endo_obj(right, v)):
                    rep.fail((i, j, p, v), "filler boundary", "")
    reports.append(rep)

    rep = AuditReport("morphism-prism", m.name)
    for (i, j, k) in iproduct(names, repeat=3):
        for p in nerve[(i, j, k)]:
            si, sj, sk = (_piece(m, "src", n) for n in (i, j, k))
            di, dj, dk = (_piece(m, "dst", n) for n in (i, j, k))
            for v in fs.objects:
                rep.count()
                try:
                    # route A: gamma_i(phi~_ijk), filler_ij whiskered, gamma_ij(filler_jk)
                    step1 = fd.endo_mor(m.comp[i][p], m.src.phi[(si, sj, sk)][p][v])
                    step2 = m.filler[(i, j)][p][fs.endo_obj(m.src.gamma[(sj, sk)][p], v)]
                    step3 = fd.endo_mor(
                        m.dst.gamma[(di, dj)][p], m.filler[(j, k)][p][v]
                    )
                    route_a = fd.comp_mor(step3, fd.comp_mor(step2, step1))
                    # route B: filler_ik then phi_ijk whiskered by gamma_k
                    route_b = fd.comp_mor(
                        m.dst.phi[(di, dj, dk)][p][fd.endo_obj(m.comp[k][p], v)],
                        m.filler[(i, k)][p][v],
                    )
                except (KeyError, ValueError):
                    rep.fail((i, j, k, p, v), "ill-typed composite", "")
                    continue
                if not fd.eq_mor(route_a, route_b):
                    rep.fail((i, j, k, p, v), "five-face route", "direct route")
    reports.append(rep)
    return reports


def _id_filler(d: DescentObject, i, j, p, v):
    fib = d.fiber
    return fib.id_mor(fib.endo_obj(d.gamma[(i, j)][p], v))


def identity_descent_morphism(d: DescentObject) -> DescentMorphism:
    nerve = cech_nerve(d.cover)
    names = d.cover.piece_names()
    fib = d.fiber
    comp = {i: {p: fib.id_endo() for p in nerve[(i,)]} for i in names}
    filler = {
        (i, j): {
            p: {v: _id_filler(d, i, j, p, v) for v in fib.objects}
            for p in nerve[(i, j)]
        }
        for i in names
        for j in names
    }
    return DescentMorphism(f"id-{d.name}", d, d, d.cover, comp, filler)


@dataclass
class Descent2Morphism:
    name: str
    src: DescentMorphism
    dst: DescentMorphism
    comp: dict  # i -> {point: {fiber object: morphism}}


def descent_2morphism_validate(b: Descent2Morphism, nerve=None):
    """The square condition on double overlaps."""
    mA, mB = b.src, b.dst
    fs, fd = mA.src.fiber, mA.dst.fiber
    nerve = nerve or cech_nerve(mA.cover)
    names = mA.cover.piece_names()
    rep = AuditReport("two-morphism-square", b.name)
    for (i, j) in iproduct(names, repeat=2):
        for p in nerve[(i, j)]:
            di, dj = _piece(mA, "dst", i), _piece(mA, "dst", j)
            si, sj = _piece(mA, "src", i), _piece(mA, "src", j)
            for v in fs.objects:
                rep.count()
                try:
                    lhs = fd.comp_mor(
                        fd.endo_mor(mA.dst.gamma[(di, dj)][p], b.comp[j][p][v]),
                        mA.filler[(i, j)][p][v],
                    )
                    rhs = fd.comp_mor(
                        mB.filler[(i, j)][p][v],
                        b.comp[i][p][fs.endo_obj(mA.src.gamma[(si, sj)][p], v)],
                    )
                except (KeyError, ValueError):
                    rep.fail((i, j, p, v), "ill-typed square", "")
                    continue
                if not fd.eq_mor(lhs, rhs):
                    rep.fail((i, j, p, v), "target square", "source square")
    return [rep]


@dataclass(frozen=True)
class Refinement:
    cover: FiniteCover
    of: FiniteCover
    piece_map: dict = field(compare=False, hash=False)


def refinement(cover: FiniteCover, of: FiniteCover, piece_map) -> Refinement:
    if set(cover.base) != set(of.base):
        raise NotARefinement("refinement changes the base")
    for b, target in piece_map.items():
        if target not in of.pieces:
            raise NotARefinement(f"unknown coarse piece {target}", witness=b)
        if not cover.pieces[b] <= of.pieces[target]:
            raise NotARefinement(f"piece {b} not inside {target}", witness=b)
    for b in cover.pieces:
        if b not in piece_map:
            raise NotARefinement(f"piece {b} unmapped", witness=b)
    return Refinement(cover, of, dict(piece_map))


def refine(d: DescentObject, r: Refinement) -> DescentObject:
    if r.of is not d.cover:
        raise NotARefinement("refinement of a different cover")
    nerve = cech_nerve(r.cover)
    names = r.cover.piece_names()
    gamma = {
        (i, j): {p: d.gamma[(r.piece_map[i], r.piece_map[j])][p] for p in nerve[(i, j)]}
        for i in names
        for j in names
    }
    phi = {
        (i, j, k): {
            p: d.phi[(r.piece_map[i], r.piece_map[j], r.piece_map[k])][p]
            for p in nerve[(i, j, k)]
        }
        for i in names
        for j in names
        for k in names
    }
    return DescentObject(f"{d.name}|{r.cover.name}", r.cover, d.fiber, gamma, phi)


def common_refinement(c1: FiniteCover, c2: FiniteCover):
    """Canonical fibered product of two covers of the same base."""
    if set(c1.base) != set(c2.base):
        raise NotARefinement("covers of different bases")
    pieces = {}
    piece_map1, piece_map2 = {}, {}
    for a in c1.pieces:
        for b in c2.pieces:
            name = f"{a}&{b}"
            pieces[name] = c1.pieces[a] & c2.pieces[b]
            piece_map1[name] = a
            piece_map2[name] = b
    cover = FiniteCover(f"{c1.name}x{c2.name}", c1.base, pieces)
    return cover, piece_map1, piece_map2


def compose_descent_morphisms(m2: DescentMorphism, m1: DescentMorphism) -> DescentMorphism:
    """m2 after m1, over the fibered product of their covers taken over the
    middle object's cover (so the middle gauge index is unambiguous)."""
    if m1.dst is not m2.src:
        raise NotARefinement("morphisms not composable")
    pieces = {}
    pm1, pm2 = {}, {}
    for a in m1.cover.pieces:
        for b in m2.cover.pieces:
            if _piece(m1, "dst", a) != _piece(m2, "src", b):
                continue
            name = f"{a}&{b}"
            pieces[name] = m1.cover.pieces[a] & m2.cover.pieces[b]
            pm1[name] = a
            pm2[name] = b
    cover = finite_cover(f"{m1.cover.name}x{m2.cover.name}", m1.cover.base, pieces)
    nerve = cech_nerve(cover)
    names = cover.piece_names()
    fd = m2.dst.fiber
    comp = {}
    for i in names:
        comp[i] = {}
        for p in nerve[(i,)]:
            comp[i][p] = fd.compose_endo(m2.comp[pm2[i]][p], m1.comp[pm1[i]][p])
    filler = {}
    for (i, j) in iproduct(names, repeat=2):
        filler[(i, j)] = {}
        for p in nerve[(i, j)]:
            out = {}
            for v in m1.src.fiber.objects:
                inner = fd.endo_mor(m2.comp[pm2[i]][p], m1.filler[(pm1[i], pm1[j])][p][v])
                mid_obj = m1.comp[pm1[j]][p]
                outer = m2.filler[(pm2[i], pm2[j])][p][
                    m1.dst.fiber.endo_obj(mid_obj, v)
                ]
                out[v] = fd.comp_mor(outer, inner)
            filler[(i, j)][p] = out
    mm = DescentMorphism(
        f"{m2.name}∘{m1.name}",
        m1.src,
        m2.dst,
        cover,
        comp,
        filler,
        src_piece={i: _piece(m1, "src", pm1[i]) for i in names},
        dst_piece={i: _piece(m2, "dst", pm2[i]) for i in names},
    )
    return mm


# ---------------------------------------------------------------------------
# principal cocycles and associated bundles


@dataclass
class PrincipalDescent:
    name: str
    cover: FiniteCover
    two_group: object  # CoherentTwoGroup
    g: dict  # (i, j) -> {point: object of the 2-group}
    f: dict  # (i, j, k) -> {point: arrow of the 2-group}


def principal_descent_validate(p: PrincipalDescent, nerve=None):
    ctg = p.two_group
    gpd = ctg.groupoid
    nerve = nerve or cech_nerve(p.cover)
    names = p.cover.piece_names()
    reports = []

    rep = AuditReport("principal-boundary", p.name)
    for (i, j, k) in iproduct(names, repeat=3):
        for pt in nerve[(i, j, k)]:
            rep.count()
            arr = p.f[(i, j, k)][pt]
            want_src = p.g[(i, k)][pt]
            want_tgt = ctg.prod(p.g[(i, j)][pt], p.g[(j, k)][pt])
            if gpd.src[arr] != want_src or gpd.tgt[arr] != want_tgt:
                rep.fail((i, j, k, pt), f"{gpd.src[arr]}->{gpd.tgt[arr]}", f"{want_src}->{want_tgt}")
    reports.append(rep)

    rep = AuditReport("principal-cocycle", p.name)
    for (i, j, k, l) in iproduct(names, repeat=4):
        for pt in nerve[(i, j, k, l)]:
            rep.count()
            gij = p.g[(i, j)][pt]
            gjk = p.g[(j, k)][pt]
            gkl = p.g[(k, l)][pt]
            try:
                route1 = gpd.comp(
                    ctg.prod_arr(gpd.id(gij), p.f[(j, k, l)][pt]), p.f[(i, j, l)][pt]
                )
                route2 = gpd.comp(
                    ctg.assoc[(gij, gjk, gkl)],
                    gpd.comp(ctg.prod_arr(p.f[(i, j, k)][pt], gpd.id(gkl)), p.f[(i, k, l)][pt]),
                )
            except KeyError:
                rep.fail((i, j, k, l, pt), "ill-typed route", "")
                continue
            if route1 != route2:
                rep.fail((i, j, k, l, pt), route1, route2)
    reports.append(rep)
    return reports


def associated_bundle(p: PrincipalDescent, tr, name=None) -> DescentObject:
    """Turn a principal cocycle into bundle descent data through a
    2-representation: gauges are the translation functors, fillers the cells
    composed with the inverse compositor."""
    from .tworeps import TwoRepresentation

    assert isinstance(tr, TwoRepresentation)
    if tr.two_group is not p.two_group:
        raise CocycleInvalid("2-representation of a different 2-group")
    fib = CarrierFiber(tr)
    nerve = cech_nerve(p.cover)
    names = p.cover.piece_names()
    gamma = {}
    for (i, j) in iproduct(names, repeat=2):
        gamma[(i, j)] = {pt: tr.F[p.g[(i, j)][pt]] for pt in nerve[(i, j)]}
    phi = {}
    for (i, j, k) in iproduct(names, repeat=3):
        phi[(i, j, k)] = {}
        for pt in nerve[(i, j, k)]:
            arr = p.f[(i, j, k)][pt]
            pair = (p.g[(i, j)][pt], p.g[(j, k)][pt])
            out = {}
            for v in fib.objects:
                eta_comp = tr.eta[arr][v]
                phi_comp = tr.phi[pair][v]
                out[v] = {
                    x: phi_comp[x].inverse() @ eta_comp[x] for x in eta_comp
                }
            phi[(i, j, k)][pt] = out
    return DescentObject(name or f"assoc-{p.name}", p.cover, fib, gamma, phi)


# ---------------------------------------------------------------------------
# hypercovers and the prestack bijection


@dataclass
class HypercoverWitness:
    functor: GroupoidFunctor
    levels: dict  # level -> dict(verdicts)

    @property
    def ok(self):
        return all(v.get("ok") for v in self.levels.values())


def hypercover_check(psi: GroupoidFunctor, strict=True) -> HypercoverWitness:
    """Level 0 must be surjective, level 1 an isomorphism onto the matching
    object, level 2 (determined for groupoid nerves) an isomorphism too."""
    gam, x = psi.src, psi.dst
    levels = {}

    image = set(psi.obj_map.values())
    missing = [v for v in x.objects if v not in image]
    levels[0] = {"ok": not missing, "missing": missing}
    if strict and missing:
        raise LevelFail(f"level 0 misses {missing[0]}", witness=(0, missing[0]))

    matching = [
        (u1, u2, a)
        for u1 in gam.objects
        for u2 in gam.objects
        for a in x.arrows
        if x.src[a] == psi.obj_map[u1] and x.tgt[a] == psi.obj_map[u2]
    ]
    comparison = {}
    fail = None
    for b in gam.arrows:
        key = (gam.src[b], gam.tgt[b], psi.arr_map[b])
        if key in comparison:
            fail = ("not injective", key)
            break
        comparison[key] = b
    onto = [key for key in matching if key not in comparison]
    ok1 = fail is None and not onto
    levels[1] = {"ok": ok1, "missing": onto[:3], "conflict": fail}
    if strict and not ok1:
        witness = onto[0] if onto else fail[1]
        raise LevelFail(f"level 1 comparison not bijective: {witness}", witness=(1, witness))

    # level 2: boundary triples upstairs plus a filler downstairs
    matching2 = []
    for a01 in gam.arrows:
        for a12 in gam.arrows:
            if gam.src[a12] != gam.tgt[a01]:
                continue
            for a02 in gam.arrows:
                if gam.src[a02] != gam.src[a01] or gam.tgt[a02] != gam.tgt[a12]:
                    continue
                if x.comp(psi.arr_map[a12], psi.arr_map[a01]) == psi.arr_map[a02]:
                    matching2.append((a01, a12, a02))
    upstairs2 = [
        (a01, a12, gam.comp(a12, a01))
        for a01 in gam.arrows
        for a12 in gam.arrows
        if gam.src[a12] == gam.tgt[a01]
    ]
    ok2 = set(matching2) == set(upstairs2)
    levels[2] = {"ok": ok2, "missing": list(set(matching2) - set(upstairs2))[:3]}
    if strict and not ok2:
        bad = list(set(matching2) - set(upstairs2))[0]
        raise LevelFail(f"level 2 comparison not bijective: {bad}", witness=(2, bad))
    return HypercoverWitness(psi, levels)


def cech_groupoid_of_surjection(p: dict, name="cech"):
    """The pair groupoid of the fibers of a surjection, mapping down to the
    discrete groupoid on the target."""
    from .groupoids import discrete_groupoid, groupoid_functor

    src_objs = tuple(p.keys())
    dst_objs = tuple(dict.fromkeys(p.values()))
    arrows = [(u1, u2) for u1 in src_objs for u2 in src_objs if p[u1] == p[u2]]
    srcm = {a: a[0] for a in arrows}
    tgtm = {a: a[1] for a in arrows}
    comp = {}
    for a in arrows:
        for b in arrows:
            if a[0] == b[1]:
                comp[(a, b)] = (b[0], a[1])
    ids = {u: (u, u) for u in src_objs}
    inv = {a: (a[1], a[0]) for a in arrows}
    gam = groupoid_validate(src_objs, arrows, srcm, tgtm, comp, ids, inv, name=name)
    down = discrete_groupoid(dst_objs, name=f"{name}-base")
    psi = groupoid_functor(
        gam, down, {u: p[u] for u in src_objs}, {a: down.id(p[a[0]]) for a in arrows}
    )
    return gam, down, psi


def _nats_between(fib, e1, e2):
    """All natural transformations e1 => e2 over a finite fiber."""
    per_obj = {}
    for v in fib.objects:
        per_obj[v] = [
            m
            for (u, w, m) in fib.gen_morphisms()
            if u == fib.endo_obj(e1, v) and w == fib.endo_obj(e2, v)
        ]
    out = []
    keys = list(fib.objects)
    for pick in iproduct(*(per_obj[v] for v in keys)):
        nu = dict(zip(keys, pick))
        ok = all(
            fib.eq_mor(
                fib.comp_mor(nu[w], fib.endo_mor(e1, m)),
                fib.comp_mor(fib.endo_mor(e2, m), nu[u]),
            )
            for (u, w, m) in fib.gen_morphisms()
        )
        if ok:
            out.append(nu)
    return out


def _valid_two_morphism_families(fib, base: FiniteGroupoid, e1, e2):
    """Families over the base objects of natural transformations e1 => e2,
    constant along the base's arrows (the gauges here are constant)."""
    nats = _nats_between(fib, e1, e2)
    out = []
    comps = base.components()
    for pick in iproduct(range(len(nats)), repeat=len(comps)):
        fam = {}
        for comp, k in zip(comps, pick):
            for v in comp:
                fam[v] = nats[k]
        out.append(fam)
    return out


def prestack_fully_faithful_audit(fib, psi: GroupoidFunctor, e1, e2):
    """Pulling 2-morphism families back along a hypercover is a bijection:
    injective because level 0 is onto, surjective because level 1 forces
    fiberwise agreement."""
    hypercover_check(psi)
    down_f = _valid_two_morphism_families(fib, psi.dst, e1, e2)
    up_f = _valid_two_morphism_families(fib, psi.src, e1, e2)
    reports = []
    rep = AuditReport("prestack-faithful", psi.src.name)
    pulled = []
    for fam in down_f:
        rep.count()
        pf = {u: fam[psi.obj_map[u]] for u in psi.src.objects}
        if pf in pulled:
            rep.fail("duplicate pullback", str(fam), "")
        pulled.append(pf)
    reports.append(rep)
    rep = AuditReport("prestack-full", psi.src.name)
    for fam in up_f:
        rep.count()
        if fam not in pulled:
            rep.fail("family does not descend", str(fam), "")
    reports.append(rep)
    return reports


def descent_agree_after_refinement(b1, b2):
    """Two 2-morphism families (cover, data) are identified when they agree
    after pullback to the canonical common refinement."""
    (c1, data1), (c2, data2) = b1, b2
    cover, pm1, pm2 = common_refinement(c1, c2)
    nerve = cech_nerve(cover, depth=1)
    for i in cover.piece_names():
        for p in nerve[(i,)]:
            if data1[pm1[i]][p] != data2[pm2[i]][p]:
                return False
    return True
