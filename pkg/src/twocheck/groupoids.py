"""Finite groupoids, functors, natural transformations, action groupoids, and
full essentially-surjective inclusions with chosen sections.

Composition convention, used everywhere in the package: ``comp(a, b)`` means
"b then a", i.e. a∘b with src(a) == tgt(b). Objects and arrows are opaque
hashable labels; iteration order is construction order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    ActionInvalid,
    BadComposition,
    BadFunctor,
    BoundaryMismatch,
    MissingIdentity,
    MissingInverse,
    QuasiInverseInvalid,
    SectionArrowNotLandingInSub,
)
from .groups import FiniteGroup


@dataclass(frozen=True)
class FiniteGroupoid:
    name: str
    objects: tuple
    arrows: tuple
    src: dict = field(compare=False, hash=False)
    tgt: dict = field(compare=False, hash=False)
    _comp: dict = field(compare=False, hash=False, default_factory=dict)
    _id: dict = field(compare=False, hash=False, default_factory=dict)
    _inv: dict = field(compare=False, hash=False, default_factory=dict)

    def comp(self, a, b):
        """a∘b: first b, then a. Defined when src(a) == tgt(b)."""
        return self._comp[(a, b)]

    def id(self, x):
        return self._id[x]

    def inv(self, a):
        return self._inv[a]

    def composable(self, a, b):
        return self.src[a] == self.tgt[b]

    def hom(self, x, y):
        return tuple(a for a in self.arrows if self.src[a] == x and self.tgt[a] == y)

    def arrows_from(self, x):
        return tuple(a for a in self.arrows if self.src[a] == x)

    def components(self):
        """Connected components as a tuple of tuples of objects (stable order)."""
        parent = {x: x for x in self.objects}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arrows:
            rx, ry = find(self.src[a]), find(self.tgt[a])
            if rx != ry:
                parent[ry] = rx
        comps = {}
        for x in self.objects:
            comps.setdefault(find(x), []).append(x)
        return tuple(tuple(v) for v in comps.values())

    def component_of(self, x):
        for c in self.components():
            if x in c:
                return c
        raise KeyError(x)

    def iso(self, x, y) -> bool:
        return y in self.component_of(x)


def groupoid_validate(objects, arrows, src, tgt, comp, ids, inv=None, name="groupoid") -> FiniteGroupoid:
    """Exhaustively validate groupoid tables.

    ``comp`` must be defined exactly on tgt-matching pairs; associativity,
    units and inverses are checked over all instances.
    """
    objects = tuple(objects)
    arrows = tuple(arrows)
    src = dict(src)
    tgt = dict(tgt)
    comp = dict(comp)
    ids = dict(ids)
    for a in arrows:
        if src[a] not in objects or tgt[a] not in objects:
            raise BadComposition(f"arrow {a} has endpoints outside objects", witness=a)
    for a in arrows:
        for b in arrows:
            defined = (a, b) in comp
            should = src[a] == tgt[b]
            if defined != should:
                raise BadComposition(
                    f"comp defined on ({a},{b})={defined}, expected {should}", witness=(a, b)
                )
            if should:
                c = comp[(a, b)]
                if c not in arrows or src[c] != src[b] or tgt[c] != tgt[a]:
                    raise BadComposition(f"bad composite for ({a},{b})", witness=(a, b))
    for a in arrows:
        for b in arrows:
            if src[a] != tgt[b]:
                continue
            for c in arrows:
                if src[b] != tgt[c]:
                    continue
                if comp[(comp[(a, b)], c)] != comp[(a, comp[(b, c)])]:
                    raise BadComposition(f"associativity fails at ({a},{b},{c})", witness=(a, b, c))
    for x in objects:
        if x not in ids:
            raise MissingIdentity(f"no identity at {x}", witness=x)
        e = ids[x]
        if src[e] != x or tgt[e] != x:
            raise MissingIdentity(f"identity at {x} has wrong endpoints", witness=x)
    for a in arrows:
        if comp[(a, ids[src[a]])] != a or comp[(ids[tgt[a]], a)] != a:
            raise MissingIdentity(f"identity not a unit for {a}", witness=a)
    inverse = dict(inv) if inv else {}
    if not inverse:
        for a in arrows:
            for b in arrows:
                if (
                    src[b] == tgt[a]
                    and tgt[b] == src[a]
                    and comp[(b, a)] == ids[src[a]]
                    and comp[(a, b)] == ids[tgt[a]]
                ):
                    inverse[a] = b
                    break
            else:
                raise MissingInverse(f"no inverse for {a}", witness=a)
    else:
        for a in arrows:
            b = inverse.get(a)
            if b is None or comp[(b, a)] != ids[src[a]] or comp[(a, b)] != ids[tgt[a]]:
                raise MissingInverse(f"declared inverse wrong for {a}", witness=a)
    return FiniteGroupoid(name, objects, arrows, src, tgt, comp, ids, inverse)


def delooping(g: FiniteGroup, name=None) -> FiniteGroupoid:
    """One object "*" whose loops are the group elements."""
    star = "*"
    arrows = g.elements
    comp = {(a, b): g.mul(a, b) for a in arrows for b in arrows}
    return groupoid_validate(
        [star],
        arrows,
        {a: star for a in arrows},
        {a: star for a in arrows},
        comp,
        {star: g.identity},
        {a: g.inv(a) for a in arrows},
        name=name or f"B{g.name}",
    )


def discrete_groupoid(objects, name="discrete") -> FiniteGroupoid:
    objects = tuple(objects)
    arrows = tuple(f"1_{x}" for x in objects)
    src = {f"1_{x}": x for x in objects}
    comp = {(a, a): a for a in arrows}
    return groupoid_validate(
        objects, arrows, src, dict(src), comp, {x: f"1_{x}" for x in objects}, name=name
    )


def arrow_label(h, x) -> str:
    return f"{h}|{x}"


def action_groupoid(h_group: FiniteGroup, base, act, name=None) -> FiniteGroupoid:
    """Action groupoid of a left action of ``h_group`` on the set ``base``.

    Arrows are pairs ``h|x`` with source x and target act(h, x); composition
    ``(h2|x2) ∘ (h1|x1) = (h2·h1|x1)`` when x2 == act(h1, x1).
    """
    base = tuple(base.elements) if isinstance(base, FiniteGroup) else tuple(base)
    table = {}
    for h in h_group.elements:
        for x in base:
            v = act[(h, x)] if not callable(act) else act(h, x)
            if v not in base:
                raise ActionInvalid(f"action value {v!r} outside base", witness=(h, x))
            table[(h, x)] = v
    for x in base:
        if table[(h_group.identity, x)] != x:
            raise ActionInvalid(f"identity moves {x}", witness=x)
    for h1 in h_group.elements:
        for h2 in h_group.elements:
            for x in base:
                if table[(h1, table[(h2, x)])] != table[(h_group.mul(h1, h2), x)]:
                    raise ActionInvalid("not a left action", witness=(h1, h2, x))
    arrows = [arrow_label(h, x) for h in h_group.elements for x in base]
    src = {arrow_label(h, x): x for h in h_group.elements for x in base}
    tgt = {arrow_label(h, x): table[(h, x)] for h in h_group.elements for x in base}
    comp = {}
    for h2 in h_group.elements:
        for h1 in h_group.elements:
            for x in base:
                a = arrow_label(h2, table[(h1, x)])
                b = arrow_label(h1, x)
                comp[(a, b)] = arrow_label(h_group.mul(h2, h1), x)
    ids = {x: arrow_label(h_group.identity, x) for x in base}
    inv = {
        arrow_label(h, x): arrow_label(h_group.inv(h), table[(h, x)])
        for h in h_group.elements
        for x in base
    }
    return groupoid_validate(
        base, arrows, src, tgt, comp, ids, inv, name=name or f"{h_group.name}:action"
    )


def action_arrow_parts(a: str):
    h, x = a.split("|", 1)
    return h, x


@dataclass(frozen=True)
class GroupoidFunctor:
    src: FiniteGroupoid
    dst: FiniteGroupoid
    obj_map: dict = field(compare=False, hash=False)
    arr_map: dict = field(compare=False, hash=False)

    def obj(self, x):
        return self.obj_map[x]

    def arr(self, a):
        return self.arr_map[a]

    def __eq__(self, other):
        return (
            isinstance(other, GroupoidFunctor)
            and self.src is other.src
            and self.dst is other.dst
            and self.obj_map == other.obj_map
            and self.arr_map == other.arr_map
        )


def groupoid_functor(src: FiniteGroupoid, dst: FiniteGroupoid, obj_map, arr_map) -> GroupoidFunctor:
    obj_map = dict(obj_map)
    arr_map = dict(arr_map)
    for x in src.objects:
        if obj_map.get(x) not in dst.objects:
            raise BadFunctor(f"object {x} unmapped", witness=x)
    for a in src.arrows:
        fa = arr_map.get(a)
        if fa not in dst.arrows:
            raise BadFunctor(f"arrow {a} unmapped", witness=a)
        if dst.src[fa] != obj_map[src.src[a]] or dst.tgt[fa] != obj_map[src.tgt[a]]:
            raise BadFunctor(f"boundaries not preserved at {a}", witness=a)
    for x in src.objects:
        if arr_map[src.id(x)] != dst.id(obj_map[x]):
            raise BadFunctor(f"identity not preserved at {x}", witness=x)
    for a in src.arrows:
        for b in src.arrows:
            if src.composable(a, b):
                if arr_map[src.comp(a, b)] != dst.comp(arr_map[a], arr_map[b]):
                    raise BadFunctor(f"composition not preserved at ({a},{b})", witness=(a, b))
    return GroupoidFunctor(src, dst, obj_map, arr_map)


def identity_functor(g: FiniteGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(g, g, {x: x for x in g.objects}, {a: a for a in g.arrows})


def functor_compose(f: GroupoidFunctor, g: GroupoidFunctor) -> GroupoidFunctor:
    """f∘g (g first)."""
    if g.dst is not f.src:
        raise BoundaryMismatch("functor composition boundary mismatch")
    return GroupoidFunctor(
        g.src,
        f.dst,
        {x: f.obj_map[g.obj_map[x]] for x in g.src.objects},
        {a: f.arr_map[g.arr_map[a]] for a in g.src.arrows},
    )


@dataclass(frozen=True)
class NatTrans:
    src_f: GroupoidFunctor
    dst_f: GroupoidFunctor
    comp_map: dict = field(compare=False, hash=False)

    def at(self, x):
        return self.comp_map[x]

    def __eq__(self, other):
        return isinstance(other, NatTrans) and self.comp_map == other.comp_map


def nat_trans(src_f: GroupoidFunctor, dst_f: GroupoidFunctor, comp_map) -> NatTrans:
    if src_f.src is not dst_f.src or src_f.dst is not dst_f.dst:
        raise BoundaryMismatch("natural transformation between non-parallel functors")
    comp_map = dict(comp_map)
    cat = src_f.src
    tgt = src_f.dst
    for x in cat.objects:
        c = comp_map.get(x)
        if c not in tgt.arrows or tgt.src[c] != src_f.obj_map[x] or tgt.tgt[c] != dst_f.obj_map[x]:
            raise BoundaryMismatch(f"component at {x} has wrong boundary", witness=x)
    for a in cat.arrows:
        x, y = cat.src[a], cat.tgt[a]
        if tgt.comp(comp_map[y], src_f.arr_map[a]) != tgt.comp(dst_f.arr_map[a], comp_map[x]):
            raise BoundaryMismatch(f"naturality fails at {a}", witness=a)
    return NatTrans(src_f, dst_f, comp_map)


def nat_id(f: GroupoidFunctor) -> NatTrans:
    return nat_trans(f, f, {x: f.dst.id(f.obj_map[x]) for x in f.src.objects})


def nat_vcomp(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """beta after alpha (vertical)."""
    if beta.src_f != alpha.dst_f:
        raise BoundaryMismatch("vertical composition boundary mismatch")
    tgt = alpha.src_f.dst
    return nat_trans(
        alpha.src_f,
        beta.dst_f,
        {x: tgt.comp(beta.comp_map[x], alpha.comp_map[x]) for x in alpha.src_f.src.objects},
    )


def nat_hcomp(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """Horizontal composite: beta∘alpha for beta between outer functors.

    alpha: F => F' (A -> B), beta: G => G' (B -> C); result G∘F => G'∘F'.
    """
    if alpha.src_f.dst is not beta.src_f.src:
        raise BoundaryMismatch("horizontal composition boundary mismatch")
    cat = alpha.src_f.src
    c = beta.src_f.dst
    comp_map = {}
    for x in cat.objects:
        comp_map[x] = c.comp(
            beta.comp_map[alpha.dst_f.obj_map[x]], beta.src_f.arr_map[alpha.comp_map[x]]
        )
    return nat_trans(
        functor_compose(beta.src_f, alpha.src_f),
        functor_compose(beta.dst_f, alpha.dst_f),
        comp_map,
    )


def nat_inv(alpha: NatTrans) -> NatTrans:
    tgt = alpha.src_f.dst
    return nat_trans(
        alpha.dst_f, alpha.src_f, {x: tgt.inv(alpha.comp_map[x]) for x in alpha.comp_map}
    )


@dataclass(frozen=True)
class SubgroupoidInclusion:
    """A full injective inclusion with an essential-surjectivity section.

    ``section[y] = (a, x)`` with a: incl(x) -> y. The default section uses the
    identity arrow at objects in the image; arbitrary witnesses are accepted.
    """

    sub: FiniteGroupoid
    ambient: FiniteGroupoid
    incl: GroupoidFunctor
    section: dict = field(compare=False, hash=False)

    def image_objects(self):
        return set(self.incl.obj_map.values())


def default_section(sub: FiniteGroupoid, ambient: FiniteGroupoid, incl: GroupoidFunctor, overrides=None):
    """Identity arrows on image objects, lexicographically least witness elsewhere."""
    image = {incl.obj_map[x]: x for x in sub.objects}
    section = {}
    for y in ambient.objects:
        if y in image:
            section[y] = (ambient.id(y), image[y])
        else:
            candidates = sorted(
                (str(a), a, x)
                for x in sub.objects
                for a in ambient.hom(incl.obj_map[x], y)
            )
            if not candidates:
                raise SectionArrowNotLandingInSub(f"no witness arrow into {y}", witness=y)
            _, a, x = candidates[0]
            section[y] = (a, x)
    if overrides:
        section.update(overrides)
    return section


def subgroupoid_inclusion(sub, ambient, incl, section=None) -> SubgroupoidInclusion:
    obj_img = list(incl.obj_map.values())
    if len(set(obj_img)) != len(obj_img):
        raise BadFunctor("inclusion not injective on objects")
    arr_img = list(incl.arr_map.values())
    if len(set(arr_img)) != len(arr_img):
        raise BadFunctor("inclusion not injective on arrows")
    # fullness: every ambient arrow between image objects is an image arrow
    image_objs = set(obj_img)
    image_arrs = set(arr_img)
    for a in ambient.arrows:
        if ambient.src[a] in image_objs and ambient.tgt[a] in image_objs and a not in image_arrs:
            raise BadFunctor(f"inclusion not full: {a} missed", witness=a)
    if section is None:
        section = default_section(sub, ambient, incl)
    obj_of = {incl.obj_map[x]: x for x in sub.objects}
    for y in ambient.objects:
        a, x = section[y]
        if x not in sub.objects:
            raise SectionArrowNotLandingInSub(f"section object at {y} not in sub", witness=y)
        if ambient.tgt[a] != y:
            raise SectionArrowNotLandingInSub(
                f"section arrow at {y} does not land at {y}", witness=y
            )
        if ambient.src[a] != incl.obj_map[x]:
            raise SectionArrowNotLandingInSub(
                f"section arrow at {y} does not start in the image", witness=y
            )
    assert obj_of  # image lookup is consistent by injectivity
    return SubgroupoidInclusion(sub, ambient, incl, dict(section))


def quasi_inverse(inc: SubgroupoidInclusion):
    """Build (xi, eps, eta): xi a functor ambient -> sub with eps: xi∘incl => id
    and eta: id => incl∘xi assembled from the section arrows."""
    sub, amb, incl = inc.sub, inc.ambient, inc.incl
    arr_of = {incl.arr_map[a]: a for a in sub.arrows}
    obj_of = {incl.obj_map[x]: x for x in sub.objects}
    xi_obj = {y: inc.section[y][1] for y in amb.objects}
    xi_arr = {}
    for c in amb.arrows:
        a1, _ = inc.section[amb.src[c]]
        a2, _ = inc.section[amb.tgt[c]]
        composite = amb.comp(amb.inv(a2), amb.comp(c, a1))
        if composite not in arr_of:
            raise QuasiInverseInvalid(f"conjugate of {c} misses the image", witness=c)
        xi_arr[c] = arr_of[composite]
    try:
        xi = groupoid_functor(amb, sub, xi_obj, xi_arr)
    except BadFunctor as e:  # pragma: no cover - construction is functorial
        raise QuasiInverseInvalid(str(e), witness=e.witness)
    eps = nat_trans(
        functor_compose(xi, incl),
        identity_functor(sub),
        {x: arr_of[inc.section[incl.obj_map[x]][0]] for x in sub.objects},
    )
    eta = nat_trans(
        identity_functor(amb),
        functor_compose(incl, xi),
        {y: amb.inv(inc.section[y][0]) for y in amb.objects},
    )
    assert obj_of
    return xi, eps, eta


def adjoint_equivalence_audit(inc: SubgroupoidInclusion, xi, eps, eta):
    """Check both triangle identities componentwise; returns list of failures."""
    sub, amb, incl = inc.sub, inc.ambient, inc.incl
    failures = []
    # triangle on incl: eta^{-1}_{incl(x)} ∘ incl(eps^{-1}_x) = id
    for x in sub.objects:
        lhs = amb.comp(amb.inv(eta.comp_map[incl.obj_map[x]]), incl.arr_map[sub.inv(eps.comp_map[x])])
        if lhs != amb.id(incl.obj_map[x]):
            failures.append(("incl-triangle", x))
    # triangle on xi: xi(eta^{-1}_y) ∘ eps^{-1}_{xi(y)} = id
    for y in amb.objects:
        lhs = sub.comp(xi.arr_map[amb.inv(eta.comp_map[y])], sub.inv(eps.comp_map[xi.obj_map[y]]))
        if lhs != sub.id(xi.obj_map[y]):
            failures.append(("xi-triangle", y))
    return failures


def double_object(gpd: FiniteGroupoid, obj, copy_label, name=None):
    """Adjoin a clone of ``obj`` with a full set of arrows; returns
    (ambient, inclusion_functor). The clone is isomorphic to ``obj``."""
    if obj not in gpd.objects:
        raise KeyError(obj)
    if copy_label in gpd.objects:
        raise ValueError("copy label collides")

    def variants(a):
        out = [(a, gpd.src[a], gpd.tgt[a])]
        if gpd.src[a] == obj:
            out.append((f"{a}#s", copy_label, gpd.tgt[a]))
        if gpd.tgt[a] == obj:
            out.append((f"{a}#t", gpd.src[a], copy_label))
        if gpd.src[a] == obj and gpd.tgt[a] == obj:
            out.append((f"{a}#st", copy_label, copy_label))
        return out

    objects = gpd.objects + (copy_label,)
    arrows, src, tgt, base = [], {}, {}, {}
    for a in gpd.arrows:
        for lbl, s, t in variants(a):
            arrows.append(lbl)
            src[lbl], tgt[lbl] = s, t
            base[lbl] = a
    comp = {}
    for la in arrows:
        for lb in arrows:
            if src[la] != tgt[lb]:
                continue
            c = gpd.comp(base[la], base[lb])
            s, t = src[lb], tgt[la]
            suffix = ""
            if s == copy_label and t == copy_label:
                suffix = "#st"
            elif s == copy_label:
                suffix = "#s"
            elif t == copy_label:
                suffix = "#t"
            comp[(la, lb)] = f"{c}{suffix}"
    ids = {x: gpd.id(x) for x in gpd.objects}
    ids[copy_label] = f"{gpd.id(obj)}#st"
    inv = {}
    for la in arrows:
        b = gpd.inv(base[la])
        s, t = tgt[la], src[la]
        suffix = ""
        if s == copy_label and t == copy_label:
            suffix = "#st"
        elif s == copy_label:
            suffix = "#s"
        elif t == copy_label:
            suffix = "#t"
        inv[la] = f"{b}{suffix}"
    ambient = groupoid_validate(
        objects, arrows, src, tgt, comp, ids, inv, name=name or f"{gpd.name}+{copy_label}"
    )
    incl = groupoid_functor(
        gpd, ambient, {x: x for x in gpd.objects}, {a: a for a in gpd.arrows}
    )
    return ambient, incl
