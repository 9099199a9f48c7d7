"""Definition files: JSON documents naming groups, actions, crossed modules,
groupoids, inclusions, representation lists, 2-representations, covers and
descent data, plus the audits to run against them.

Every cross-reference is resolved by name; every section is validated through
its module's validator, and validation failures surface with their witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import actions as actions_mod
from . import descent as descent_mod
from . import groupoids as gpd_mod
from . import groups as groups_mod
from . import reps as reps_mod
from . import twogroups as tg_mod
from . import tworeps as tr_mod
from .errors import DefinitionError, ParseError, UnknownAudit, UnresolvedReference, WitnessError
from .matrices import Mat
from .scalars import FIELDS


@dataclass
class Definitions:
    source: str
    groups: dict = field(default_factory=dict)
    actions: dict = field(default_factory=dict)
    crossed_modules: dict = field(default_factory=dict)
    groupoids: dict = field(default_factory=dict)
    inclusions: dict = field(default_factory=dict)
    two_groups: dict = field(default_factory=dict)
    reps: dict = field(default_factory=dict)
    two_reps: dict = field(default_factory=dict)
    covers: dict = field(default_factory=dict)
    descent_data: dict = field(default_factory=dict)
    cat_actions: dict = field(default_factory=dict)
    equivariant: dict = field(default_factory=dict)
    audits: list = field(default_factory=list)


def _need(table, name, section):
    if name not in table:
        raise UnresolvedReference(f"unknown {section} {name!r}", witness=name)
    return table[name]


def _wrap(section, name, fn):
    try:
        return fn()
    except (UnresolvedReference, ParseError):
        raise
    except WitnessError as e:
        raise DefinitionError(
            f"section {section}/{name}: {e}", witness=(section, name, e.witness)
        ) from e


def _parse_group(spec, name):
    kind = spec.get("kind", "table")
    if kind == "cyclic":
        return groups_mod.cyclic_group(int(spec["order"]), name=name)
    if kind == "symmetric":
        return groups_mod.symmetric_group(int(spec["degree"]), name=name)
    if kind == "trivial":
        return groups_mod.trivial_group(name=name)
    if kind == "table":
        els = list(spec["elements"])
        mul = {}
        for key, val in spec["table"].items():
            a, b = key.split("|", 1)
            mul[(a, b)] = val
        return groups_mod.group_validate(els, mul, identity=spec.get("identity"), name=name)
    raise ParseError(f"unknown group kind {kind!r}", witness=name)


def _parse_action(spec, defs, name):
    actor = _need(defs.groups, spec["actor"], "group")
    target = _need(defs.groups, spec["target"], "group")
    kind = spec.get("kind", "map")
    if kind == "trivial":
        return groups_mod.trivial_action(actor, target)
    if kind == "inversion":
        return groups_mod.inversion_action(actor, target)
    if kind == "conjugation":
        return groups_mod.conjugation_action(actor)
    if kind == "map":
        act = {}
        for key, val in spec["map"].items():
            g, h = key.split("|", 1)
            act[(g, h)] = val
        return groups_mod.right_action_validate(actor, target, act)
    raise ParseError(f"unknown action kind {kind!r}", witness=name)


def _parse_crossed_module(spec, defs, name):
    h = _need(defs.groups, spec["h"], "group")
    g = _need(defs.groups, spec["g"], "group")
    bd = spec.get("boundary", "trivial")
    if bd == "trivial":
        boundary = groups_mod.trivial_hom(h, g)
    elif bd == "identity":
        boundary = groups_mod.group_hom(h, g, {a: a for a in h.elements})
    else:
        boundary = groups_mod.group_hom(h, g, dict(bd))
    action = _need(defs.actions, spec["action"], "action")
    return tg_mod.crossed_module_validate(h, g, boundary, action, name=name)


def _parse_groupoid(spec, defs, name):
    kind = spec["kind"]
    if kind == "delooping":
        return gpd_mod.delooping(_need(defs.groups, spec["group"], "group"), name=name)
    if kind == "discrete":
        return gpd_mod.discrete_groupoid(spec["objects"], name=name)
    if kind == "action":
        h = _need(defs.groups, spec["h_group"], "group")
        base = _need(defs.groups, spec["base_group"], "group")
        how = spec.get("action", "translation")
        if how == "translation":
            act = {(a, x): base.mul(a, x) for a in h.elements for x in base.elements}
        elif how == "trivial":
            act = {(a, x): x for a in h.elements for x in base.elements}
        else:
            act = {tuple(k.split("|", 1)): v for k, v in how.items()}
        return gpd_mod.action_groupoid(h, base, act, name=name)
    if kind == "strict_underlying":
        return _need(defs.two_groups, spec["two_group"], "two_group").groupoid
    raise ParseError(f"unknown groupoid kind {kind!r}", witness=name)


def _parse_inclusion(spec, defs, name):
    """A full inclusion obtained by doubling an object of a named groupoid,
    with optional section overrides {ambient object: [arrow, sub object]}."""
    if spec.get("kind", "double") != "double":
        raise ParseError(f"unknown inclusion kind {spec.get('kind')!r}", witness=name)
    gpd = _need(defs.groupoids, spec["of"], "groupoid")
    amb, incl = gpd_mod.double_object(gpd, spec["object"], spec["copy"])
    overrides = {y: (pair[0], pair[1]) for y, pair in spec.get("section", {}).items()}
    section = gpd_mod.default_section(gpd, amb, incl, overrides=overrides)
    return gpd_mod.subgroupoid_inclusion(gpd, amb, incl, section)


def _parse_two_group(spec, defs, name):
    kind = spec["kind"]
    if kind == "strict":
        xm = _need(defs.crossed_modules, spec["crossed_module"], "crossed_module")
        tg = tg_mod.strict_two_group(xm, name=name)
        defs.two_groups[f"{name}#strict"] = tg
        return tg_mod.strict_as_coherent(tg)
    if kind == "transfer":
        strict = _need(defs.two_groups, spec["strict"] + "#strict", "two_group")
        gpd = strict.groupoid
        amb, incl = gpd_mod.double_object(gpd, spec["double_object"], spec["copy"])
        overrides = {}
        for y, pair in spec.get("section", {}).items():
            overrides[y] = (pair[0], pair[1])
        section = gpd_mod.default_section(gpd, amb, incl, overrides=overrides)
        inc = gpd_mod.subgroupoid_inclusion(gpd, amb, incl, section)
        defs.inclusions[f"{name}#inclusion"] = inc
        return tg_mod.transfer_structure(strict, inc, name=name)
    if kind == "mutate":
        base = _need(defs.two_groups, spec["of"], "two_group")
        assoc = dict(base.assoc)
        for key, val in spec.get("assoc", {}).items():
            f, g, h = key.split(",")
            assoc[(f, g, h)] = val
        lunit = dict(base.lunit)
        lunit.update(spec.get("lunit", {}))
        runit = dict(base.runit)
        runit.update(spec.get("runit", {}))
        m_obj = dict(base.m_obj)
        for key, val in spec.get("m_obj", {}).items():
            x, y = key.split(",")
            m_obj[(x, y)] = val
        m_arr = dict(base.m_arr)
        for key, val in spec.get("m_arr", {}).items():
            a, b = key.split(",")
            m_arr[(a, b)] = val
        return tg_mod.coherent_two_group(
            name, base.groupoid, m_obj, m_arr, base.unit, assoc, lunit, runit
        )
    if kind == "absorber":
        return _absorber_two_group(defs, spec, name)
    raise ParseError(f"unknown two_group kind {kind!r}", witness=name)


def _absorber_two_group(defs, spec, name):
    """A product table with an absorbing isolated object: every law holds but
    division fails (no solution through the absorber's row)."""
    g = _need(defs.groups, spec["group"], "group")
    act = {(a, x): x for a in g.elements for x in g.elements}
    base = gpd_mod.action_groupoid(g, g, act, name=f"{name}-loops")
    amb_objects = base.objects + ("w",)
    arrows = list(base.arrows) + [f"{h}|w" for h in g.elements]
    src = dict(base.src)
    tgt = dict(base.tgt)
    for h in g.elements:
        src[f"{h}|w"] = "w"
        tgt[f"{h}|w"] = "w"
    comp = dict(base._comp)
    for h1 in g.elements:
        for h2 in g.elements:
            comp[(f"{h1}|w", f"{h2}|w")] = f"{g.mul(h1, h2)}|w"
    ids = dict(base._id)
    ids["w"] = f"{g.identity}|w"
    inv = dict(base._inv)
    for h in g.elements:
        inv[f"{h}|w"] = f"{g.inv(h)}|w"
    gpd = gpd_mod.groupoid_validate(amb_objects, arrows, src, tgt, comp, ids, inv, name=name)

    def prod(x, y):
        if x == "w" or y == "w":
            return "w"
        return g.mul(x, y)

    m_obj = {(x, y): prod(x, y) for x in gpd.objects for y in gpd.objects}
    m_arr = {}
    for a in gpd.arrows:
        for b in gpd.arrows:
            ha, xa = a.split("|", 1)
            hb, xb = b.split("|", 1)
            m_arr[(a, b)] = f"{g.mul(ha, hb)}|{prod(xa, xb)}"
    unit = g.identity
    assoc = {
        (x, y, z): gpd.id(prod(prod(x, y), z))
        for x in gpd.objects
        for y in gpd.objects
        for z in gpd.objects
    }
    lunit = {x: gpd.id(x) for x in gpd.objects}
    runit = {x: gpd.id(x) for x in gpd.objects}
    return tg_mod.coherent_two_group(name, gpd, m_obj, m_arr, unit, assoc, lunit, runit)


def _parse_reps(spec, defs, name):
    kind = spec["kind"]
    if kind == "one_dim_all":
        ctg = _need(defs.two_groups, spec["two_group"], "two_group")
        fld = FIELDS[spec.get("scalars", "rational")]
        seeds = reps_mod.all_one_dim_reps(ctg.groupoid, field=fld)
        if spec.get("close", True):
            return tr_mod.close_rep_list(ctg, seeds)
        return seeds
    if kind == "group_list":
        g = _need(defs.groups, spec["group"], "group")
        bh = gpd_mod.delooping(g)
        fld = FIELDS[spec.get("scalars", "rational")]
        out = []
        for which in spec["which"]:
            if which == "trivial":
                out.append(reps_mod.trivial_rep(bh, field=fld, name="triv"))
            elif which == "sign":
                out.append(reps_mod.sign_rep_s3(g, field=fld, gpd=bh))
            elif which == "standard":
                out.append(reps_mod.standard_rep_s3(g, field=fld, gpd=bh))
            elif which == "regular":
                out.append(reps_mod.regular_rep(g, field=fld, gpd=bh))
            elif isinstance(which, dict):
                mats = {
                    h: Mat(fld, [[fld.parse(str(x)) for x in row] for row in m])
                    for h, m in which["mats"].items()
                }
                out.append(reps_mod.group_rep(g, mats, field=fld, name=which["name"], gpd=bh))
            else:
                raise ParseError(f"unknown rep selector {which!r}", witness=name)
        return out
    if kind == "tables":
        gpd = _need(defs.groupoids, spec["groupoid"], "groupoid")
        fld = FIELDS[spec.get("scalars", "rational")]
        dims = {k: int(v) for k, v in spec["dims"].items()}
        mats = {
            a: Mat(fld, [[fld.parse(str(x)) for x in row] for row in m])
            for a, m in spec["mats"].items()
        }
        return [reps_mod.rep_validate(gpd, dims, mats, field=fld, name=name)]
    raise ParseError(f"unknown reps kind {kind!r}", witness=name)


def _parse_two_rep(spec, defs, name):
    kind = spec["kind"]
    if kind == "canonical":
        ctg = _need(defs.two_groups, spec["two_group"], "two_group")
        reps = _need(defs.reps, spec["reps"], "reps")
        return tr_mod.canonical_2rep(ctg, reps, name=name)
    if kind == "crossed":
        xm = _need(defs.crossed_modules, spec["crossed_module"], "crossed_module")
        reps = _need(defs.reps, spec["reps"], "reps")
        tg = defs.two_groups.get(spec.get("strict", "") + "#strict")
        return tr_mod.crossed_2rep(xm, reps, tg=tg, name=name)
    if kind == "embed":
        tg = _need(defs.two_groups, spec["two_group"] + "#strict", "two_group")
        zeta = _need(defs.reps, spec["rep"], "reps")[0]
        return tr_mod.embed_rep(tg, zeta, name=name)
    if kind == "mutate":
        base = _need(defs.two_reps, spec["of"], "two_rep")
        fld = base.carrier.field
        eta = {z: {i: dict(c) for i, c in cn.items()} for z, cn in base.eta.items()}
        phi = {k: {i: dict(c) for i, c in cn.items()} for k, cn in base.phi.items()}
        psi = {i: dict(c) for i, c in base.psi.items()}
        for z, factor in spec.get("eta_scale", {}).items():
            c = fld.parse(str(factor))
            eta[z] = {i: {x: m.scale(c) for x, m in comp.items()} for i, comp in eta[z].items()}
        for key, factor in spec.get("phi_scale", {}).items():
            gk, hk = key.split(",")
            c = fld.parse(str(factor))
            phi[(gk, hk)] = {
                i: {x: m.scale(c) for x, m in comp.items()} for i, comp in phi[(gk, hk)].items()
            }
        if "psi_scale" in spec:
            c = fld.parse(str(spec["psi_scale"]))
            psi = {i: {x: m.scale(c) for x, m in comp.items()} for i, comp in psi.items()}
        return tr_mod.TwoRepresentation(name, base.two_group, base.carrier, base.F, eta, phi, psi)
    raise ParseError(f"unknown two_rep kind {kind!r}", witness=name)


def _parse_cover(spec, name):
    return descent_mod.finite_cover(name, spec["base"], spec["pieces"])


def _swap_fiber():
    objects = ["p", "q"]
    morphisms = ["1p", "1q", "s", "t"]
    msrc = {"1p": "p", "1q": "q", "s": "p", "t": "q"}
    mtgt = {"1p": "p", "1q": "q", "s": "q", "t": "p"}
    comp = {
        ("1p", "1p"): "1p",
        ("1q", "1q"): "1q",
        ("s", "1p"): "s",
        ("1q", "s"): "s",
        ("t", "1q"): "t",
        ("1p", "t"): "t",
        ("t", "s"): "1p",
        ("s", "t"): "1q",
    }
    cat = actions_mod.fincat_validate(
        "swap", objects, morphisms, msrc, mtgt, comp, {"p": "1p", "q": "1q"}
    )
    return descent_mod.FinCatFiber(cat)


def _swap_functor(cat):
    return actions_mod.fin_functor(
        cat, cat, {"p": "q", "q": "p"}, {"1p": "1q", "1q": "1p", "s": "t", "t": "s"}
    )


def _parse_descent(spec, defs, name):
    kind = spec["kind"]
    if kind == "trivial":
        cover = _need(defs.covers, spec["cover"], "cover")
        return descent_mod.trivial_descent_object(name, cover, _swap_fiber())
    if kind == "swap_cocycle":
        cover = _need(defs.covers, spec["cover"], "cover")
        fib = _swap_fiber()
        cat = fib.cat
        swap_f = _swap_functor(cat)
        nerve = descent_mod.cech_nerve(cover)
        weights = spec.get("weights") or {
            nm: idx % 2 for idx, nm in enumerate(cover.piece_names())
        }
        names = cover.piece_names()
        gamma = {}
        for i in names:
            for j in names:
                e = (
                    actions_mod.fin_identity(cat)
                    if (weights[i] + weights[j]) % 2 == 0
                    else swap_f
                )
                gamma[(i, j)] = {p: e for p in nerve[(i, j)]}
        phi = {
            (i, j, k): {
                p: {v: cat.ids[gamma[(i, k)][p].obj[v]] for v in fib.objects}
                for p in nerve[(i, j, k)]
            }
            for i in names
            for j in names
            for k in names
        }
        return descent_mod.DescentObject(name, cover, fib, gamma, phi)
    if kind == "principal":
        cover = _need(defs.covers, spec["cover"], "cover")
        ctg = _need(defs.two_groups, spec["two_group"], "two_group")
        nerve = descent_mod.cech_nerve(cover)
        names = cover.piece_names()
        g = {
            (i, j): {p: spec["g"][f"{i},{j}"] for p in nerve[(i, j)]}
            for i in names
            for j in names
        }
        f = {
            (i, j, k): {p: spec["f"][f"{i},{j},{k}"] for p in nerve[(i, j, k)]}
            for i in names
            for j in names
            for k in names
        }
        return descent_mod.PrincipalDescent(name, cover, ctg, g, f)
    if kind == "associated":
        p = _need(defs.descent_data, spec["principal"], "descent_data")
        tr = _need(defs.two_reps, spec["two_rep"], "two_rep")
        return descent_mod.associated_bundle(p, tr, name=name)
    if kind == "mutate":
        base = _need(defs.descent_data, spec["of"], "descent_data")
        gamma = {k: dict(v) for k, v in base.gamma.items()}
        phi = {k: {p: dict(nu) for p, nu in v.items()} for k, v in base.phi.items()}
        fib = base.fiber
        for key, val in spec.get("gamma_swap", {}).items():
            i, j, p = key.split(",")
            if isinstance(fib, descent_mod.FinCatFiber):
                gamma[(i, j)] = dict(gamma[(i, j)])
                gamma[(i, j)][p] = (
                    _swap_functor(fib.cat) if val == "swap" else actions_mod.fin_identity(fib.cat)
                )
        for key, factor in spec.get("phi_scale", {}).items():
            i, j, k, p, v = key.split(",")
            vv = int(v) if isinstance(fib, descent_mod.CarrierFiber) else v
            comp = dict(phi[(i, j, k)][p])
            if isinstance(fib, descent_mod.CarrierFiber):
                fld = fib.carrier.field
                c = fld.parse(str(factor))
                comp[vv] = {x: m.scale(c) for x, m in comp[vv].items()}
            else:
                comp[vv] = factor
            phi[(i, j, k)][p] = comp
        return descent_mod.DescentObject(name, base.cover, fib, gamma, phi)
    if kind == "mutate_principal":
        base = _need(defs.descent_data, spec["of"], "descent_data")
        base_f = {kk: dict(vv) for kk, vv in base.f.items()}
        for key, val in spec.get("f_shift", {}).items():
            i, j, k, p = key.split(",")
            fam = dict(base_f[(i, j, k)])
            fam[p] = val
            base_f[(i, j, k)] = fam
        return descent_mod.PrincipalDescent(name, base.cover, base.two_group, base.g, base_f)
    raise ParseError(f"unknown descent kind {kind!r}", witness=name)


def _parse_cat_action(spec, defs, name):
    kind = spec["kind"]
    if kind == "swap":
        fib = _swap_fiber()
        cat = fib.cat
        bz2 = gpd_mod.delooping(groups_mod.cyclic_group(2))
        eps0 = {x: "*" for x in cat.objects}
        eps1 = {m: "*" for m in cat.morphisms}
        swap_obj = {"p": "q", "q": "p"}
        swap_mor = {"1p": "1q", "1q": "1p", "s": "t", "t": "s"}
        mu0, mu1 = {}, {}
        for v in cat.objects:
            mu0[(v, "0")] = v
            mu0[(v, "1")] = swap_obj[v]
        for m in cat.morphisms:
            mu1[(m, "0")] = m
            mu1[(m, "1")] = swap_mor[m]
        return actions_mod.GroupoidActionOnCategory(bz2, cat, eps0, eps1, mu0, mu1)
    if kind == "vect_family":
        g = _need(defs.groups, spec["group"], "group")
        rep = reps_mod.regular_rep(g)
        return actions_mod.vect_family_action(rep)
    if kind == "mutate":
        base = _need(defs.cat_actions, spec["of"], "cat_action")
        mu0 = dict(base.mu0)
        mu1 = dict(base.mu1)
        eps1 = dict(base.eps1)
        for key, val in spec.get("mu0", {}).items():
            v, gamma = key.split("|", 1)
            mu0[(v, gamma)] = val
        return actions_mod.GroupoidActionOnCategory(
            base.acting, base.cat, base.eps0, eps1, mu0, mu1
        )
    raise ParseError(f"unknown cat_action kind {kind!r}", witness=name)


def parse_document(doc, source="<mem>") -> Definitions:
    defs = Definitions(source)
    try:
        for name, spec in doc.get("groups", {}).items():
            defs.groups[name] = _wrap("groups", name, lambda s=spec, n=name: _parse_group(s, n))
        for name, spec in doc.get("actions", {}).items():
            defs.actions[name] = _wrap(
                "actions", name, lambda s=spec, n=name: _parse_action(s, defs, n)
            )
        for name, spec in doc.get("crossed_modules", {}).items():
            defs.crossed_modules[name] = _wrap(
                "crossed_modules", name, lambda s=spec, n=name: _parse_crossed_module(s, defs, n)
            )
        for name, spec in doc.get("two_groups", {}).items():
            defs.two_groups[name] = _wrap(
                "two_groups", name, lambda s=spec, n=name: _parse_two_group(s, defs, n)
            )
        for name, spec in doc.get("groupoids", {}).items():
            defs.groupoids[name] = _wrap(
                "groupoids", name, lambda s=spec, n=name: _parse_groupoid(s, defs, n)
            )
        for name, spec in doc.get("inclusions", {}).items():
            defs.inclusions[name] = _wrap(
                "inclusions", name, lambda s=spec, n=name: _parse_inclusion(s, defs, n)
            )
        for name, spec in doc.get("reps", {}).items():
            defs.reps[name] = _wrap("reps", name, lambda s=spec, n=name: _parse_reps(s, defs, n))
        for name, spec in doc.get("two_reps", {}).items():
            defs.two_reps[name] = _wrap(
                "two_reps", name, lambda s=spec, n=name: _parse_two_rep(s, defs, n)
            )
        for name, spec in doc.get("covers", {}).items():
            defs.covers[name] = _wrap("covers", name, lambda s=spec, n=name: _parse_cover(s, n))
        for name, spec in doc.get("descent_data", {}).items():
            defs.descent_data[name] = _wrap(
                "descent_data", name, lambda s=spec, n=name: _parse_descent(s, defs, n)
            )
        for name, spec in doc.get("cat_actions", {}).items():
            defs.cat_actions[name] = _wrap(
                "cat_actions", name, lambda s=spec, n=name: _parse_cat_action(s, defs, n)
            )
    except RecursionError:  # pragma: no cover
        raise ParseError("definition recursion too deep", witness=source)
    defs.audits = list(doc.get("audits", []))
    return defs


def parse(path) -> Definitions:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}", witness=str(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}", witness=str(path))
    return parse_document(doc, source=str(path))


AUDIT_RUNNERS = {}


def _runner(name):
    def deco(fn):
        AUDIT_RUNNERS[name] = fn
        return fn

    return deco


@_runner("coherence")
def _run_coherence(defs, entry, seed):
    ctg = _need(defs.two_groups, entry["two_group"], "two_group")
    return tg_mod.coherence_audit(ctg, seed=seed)


@_runner("interchange")
def _run_interchange(defs, entry, seed):
    tg = _need(defs.two_groups, entry["two_group"] + "#strict", "two_group")
    return [tg_mod.interchange_audit(tg)]


@_runner("two_rep")
def _run_two_rep(defs, entry, seed):
    tr = _need(defs.two_reps, entry["two_rep"], "two_rep")
    return tr_mod.two_rep_audit(tr)


@_runner("cell_interchange")
def _run_cell_interchange(defs, entry, seed):
    tr = _need(defs.two_reps, entry["two_rep"], "two_rep")
    return [tr_mod.eta_interchange_audit(tr)]


@_runner("descent_object")
def _run_descent_object(defs, entry, seed):
    d = _need(defs.descent_data, entry["descent"], "descent_data")
    return descent_mod.descent_object_validate(d)


@_runner("principal")
def _run_principal(defs, entry, seed):
    p = _need(defs.descent_data, entry["descent"], "descent_data")
    return descent_mod.principal_descent_validate(p)


@_runner("cat_action")
def _run_cat_action(defs, entry, seed):
    act = _need(defs.cat_actions, entry["cat_action"], "cat_action")
    return actions_mod.groupoid_action_audit(act)


@_runner("equivariant_descent")
def _run_equivariant_descent(defs, entry, seed):
    act = _need(defs.cat_actions, entry["cat_action"], "cat_action")
    from .groups import cyclic_group

    z2 = cyclic_group(2)
    translation = {(h, g): z2.mul(h, g) for h in z2.elements for g in z2.elements}
    base = gpd_mod.action_groupoid(z2, z2, translation, name="pair")
    eb = actions_mod.equivariant_base_validate(
        base,
        act.acting,
        {x: "*" for x in base.objects},
        {a: a.split("|", 1)[0] for a in base.arrows},
    )
    cat = act.cat
    swap_f = _swap_functor(cat)
    ident = actions_mod.fin_identity(cat)
    fam = {x: (swap_f if entry.get("family") == "swap" else ident) for x in base.objects}
    if entry.get("mutate_at") is not None:
        fam = dict(fam)
        fam[entry["mutate_at"]] = swap_f if fam[entry["mutate_at"]] == ident else ident
    return actions_mod.equivariant_descent_audit(eb, act, {"e01": fam})


def run_audits(defs: Definitions, only=None, seed=0):
    """Execute the definition file's audit plan; returns AuditReports."""
    reports = []
    for entry in defs.audits:
        kind = entry.get("run")
        if kind not in AUDIT_RUNNERS:
            raise UnknownAudit(f"unknown audit {kind!r}", witness=kind)
        reports.extend(AUDIT_RUNNERS[kind](defs, entry, seed))
    if only:
        wanted = set(only)
        reports = [r for r in reports if r.law in wanted]
    return reports
