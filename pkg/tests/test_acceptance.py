"""Acceptance suite: every criterion as a dedicated test, each printing one
pass/fail line and enforcing its runtime budget."""

import time

import pytest

from twocheck.groups import (
    cyclic_group,
    identity_hom,
    inversion_action,
    symmetric_group,
    trivial_action,
    trivial_hom,
)
from twocheck.groupoids import (
    default_section,
    delooping,
    double_object,
    subgroupoid_inclusion,
)
from twocheck.matrices import Mat
from twocheck.report import failing_laws
from twocheck.reps import all_one_dim_reps, group_rep, sign_rep_s3, standard_rep_s3, trivial_rep
from twocheck.scalars import QQ, QW
from twocheck.twogroups import (
    coherence_audit,
    crossed_module_validate,
    has_nonidentity_assoc,
    inner_crossed_module,
    interchange_audit,
    strict_as_coherent,
    strict_two_group,
    transfer_structure,
)
from twocheck.tworeps import (
    adjoint_pullback,
    canonical_2rep,
    close_rep_list,
    compose_automorphisms,
    compose_two_rep_morphisms,
    crossed_2rep,
    embed_rep,
    embed_rep_morphism,
    eta_interchange_audit,
    fixed_point_morphism,
    identity_two_rep_morphism,
    inner_automorphism,
    transformation_audit,
    two_rep_audit,
    two_rep_eq,
)


def _report(criterion, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"{status}  {criterion}: {detail}")
    assert ok, f"{criterion} failed: {detail}"


def _strict_fixtures():
    out = {}
    h, g = cyclic_group(3), cyclic_group(2)
    out["z3_z2"] = crossed_module_validate(
        h, g, trivial_hom(h, g), inversion_action(g, h), name="z3_z2"
    )
    for n in range(2, 7):
        zn = cyclic_group(n)
        out[f"id_z{n}"] = crossed_module_validate(
            zn, zn, identity_hom(zn), trivial_action(zn, zn), name=f"id_z{n}"
        )
    out["inner_s3"] = inner_crossed_module(symmetric_group(3))
    return out


def test_criterion_1_crossed_module_suite():
    t0 = time.monotonic()
    fixtures = _strict_fixtures()
    total = 0
    for name, xm in fixtures.items():
        tg = strict_two_group(xm)
        rep = interchange_audit(tg)
        assert rep.passed, name
        total += rep.instances
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0, f"{elapsed:.2f}s exceeds 5s budget"
    _report(
        "criterion-1 crossed-module suite",
        True,
        f"{len(fixtures)} fixtures, {total} interchange squares, {elapsed:.2f}s",
    )


def _doubled_inclusion(tg, overrides_builder=None):
    gpd = tg.groupoid
    dup = gpd.objects[0]
    amb, incl = double_object(gpd, dup, f"{dup}*")
    overrides = {}
    # nonidentity witness at the duplicate, plus a nonidentity loop at an
    # image object when one exists (counit becomes nontrivial)
    cands = sorted(a for a in amb.arrows if amb.tgt[a] == f"{dup}*" and amb.src[a] in gpd.objects)
    nonid = [a for a in cands if not a.startswith(f"{tg.xm.h.identity}|")]
    overrides[f"{dup}*"] = ((nonid or cands)[-1], amb.src[(nonid or cands)[-1]])
    loops = sorted(
        a
        for a in gpd.arrows
        if gpd.src[a] == dup and gpd.tgt[a] == dup and a != gpd.id(dup)
    )
    if loops:
        overrides[dup] = (loops[0], dup)
    section = default_section(gpd, amb, incl, overrides=overrides)
    return subgroupoid_inclusion(gpd, amb, incl, section)


def test_criterion_2_transfer_coherence_suite():
    t0 = time.monotonic()
    fixtures = _strict_fixtures()
    nonidentity_seen = False
    for name, xm in fixtures.items():
        tg = strict_two_group(xm)
        inc = _doubled_inclusion(tg)
        ctg = transfer_structure(tg, inc)
        reports = coherence_audit(ctg)
        failed = failing_laws(reports)
        assert failed == set(), (name, failed)
        assert not any(r.sampled for r in reports), name
        nonidentity_seen = nonidentity_seen or has_nonidentity_assoc(ctg)
    elapsed = time.monotonic() - t0
    assert nonidentity_seen, "no fixture exhibited a nonidentity associator"
    assert elapsed < 30.0, f"{elapsed:.2f}s exceeds 30s budget"
    _report(
        "criterion-2 transfer/coherence suite",
        True,
        f"{len(fixtures)} doubled fixtures, nonidentity associator seen, {elapsed:.2f}s",
    )


def test_criterion_3_two_representation_suite():
    t0 = time.monotonic()
    s3 = symmetric_group(3)
    xm = inner_crossed_module(s3)
    bh = delooping(s3)
    tr_a = crossed_2rep(
        xm, [trivial_rep(bh, name="triv"), sign_rep_s3(s3, gpd=bh), standard_rep_s3(s3, gpd=bh)]
    )
    assert failing_laws(two_rep_audit(tr_a)) == set()
    inter = eta_interchange_audit(tr_a)
    assert inter.passed and inter.instances == 36 * 36

    xm_b = _strict_fixtures()["z3_z2"]
    tg_b = strict_two_group(xm_b)
    ctg_b = strict_as_coherent(tg_b)
    reps_b = all_one_dim_reps(tg_b.groupoid, field=QW)
    tr_b = canonical_2rep(ctg_b, close_rep_list(ctg_b, reps_b))
    assert failing_laws(two_rep_audit(tr_b)) == set()

    inc = _doubled_inclusion(tg_b)
    ctg_c = transfer_structure(tg_b, inc)
    reps_c = close_rep_list(ctg_c, all_one_dim_reps(ctg_c.groupoid, field=QW))
    tr_c = canonical_2rep(ctg_c, reps_c)
    nontrivial_phi = any(
        any(not m.is_identity() for m in comp.values())
        for cn in tr_c.phi.values()
        for comp in cn.values()
    )
    assert nontrivial_phi, "transferred compositor is trivial"
    assert failing_laws(two_rep_audit(tr_c)) == set()
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, f"{elapsed:.2f}s exceeds 60s budget"
    _report(
        "criterion-3 2-representation suite",
        True,
        f"crossed inner-S3, canonical strict, canonical transferred; {elapsed:.2f}s",
    )


def _embed_fixture(order=2):
    zn = cyclic_group(order)
    xm = crossed_module_validate(
        zn, zn, trivial_hom(zn, zn), trivial_action(zn, zn), name=f"z{order}z{order}"
    )
    tg = strict_two_group(xm)
    bh = delooping(zn)
    sgn = group_rep(
        zn,
        {a: Mat.identity(QQ, 1) if a == "0" else Mat(QQ, [[-1]]) for a in zn.elements},
        name="sgn",
        gpd=bh,
    ) if order == 2 else trivial_rep(bh, name="triv")
    return xm, tg, bh, sgn


def test_criterion_4_embedding_suite():
    t0 = time.monotonic()
    xm, tg, bh, sgn = _embed_fixture(2)
    triv = trivial_rep(bh, name="triv")
    emb_sgn = embed_rep(tg, sgn)
    emb_triv = embed_rep(tg, triv)
    for emb in (emb_sgn, emb_triv):
        assert failing_laws(two_rep_audit(emb)) == set()
    # intertwiners pass the transformation axioms
    for omega, emb in [(Mat(QQ, [[2]]), emb_sgn), (Mat(QQ, [[3]]), emb_triv)]:
        zeta = sgn if emb is emb_sgn else triv
        t = embed_rep_morphism(omega, zeta, zeta, emb, emb)
        assert failing_laws(transformation_audit(t)) == set()
    # the embedding preserves identities and composition exactly
    ident = identity_two_rep_morphism(emb_sgn)
    e1 = embed_rep_morphism(Mat(QQ, [[1]]), sgn, sgn, emb_sgn, emb_sgn)
    assert e1.t_obj == ident.t_obj and e1.t == ident.t
    t2 = embed_rep_morphism(Mat(QQ, [[2]]), sgn, sgn, emb_sgn, emb_sgn)
    t3 = embed_rep_morphism(Mat(QQ, [[3]]), sgn, sgn, emb_sgn, emb_sgn)
    t6 = embed_rep_morphism(Mat(QQ, [[6]]), sgn, sgn, emb_sgn, emb_sgn)
    comp = compose_two_rep_morphisms(t3, t2)
    assert comp.t_obj == t6.t_obj and comp.t == t6.t
    # and on the inner-S3 2-group with the sign representation
    s3 = symmetric_group(3)
    xm3 = inner_crossed_module(s3)
    tg3 = strict_two_group(xm3)
    bh3 = delooping(s3)
    sgn3 = sign_rep_s3(s3, gpd=bh3)
    emb3 = embed_rep(tg3, sgn3)
    assert failing_laws(two_rep_audit(emb3)) == set()
    elapsed = time.monotonic() - t0
    _report(
        "criterion-4 embedding suite",
        True,
        f"audits and functoriality exact; {elapsed:.2f}s",
    )


def test_criterion_5_adjoint_suite():
    t0 = time.monotonic()
    s3 = symmetric_group(3)
    xm = inner_crossed_module(s3)
    bh = delooping(s3)
    tr = crossed_2rep(
        xm, [trivial_rep(bh, name="triv"), sign_rep_s3(s3, gpd=bh), standard_rep_s3(s3, gpd=bh)]
    )
    a1 = inner_automorphism(tr.two_group, xm, "102")
    a2 = inner_automorphism(tr.two_group, xm, "120")
    both = compose_automorphisms(a2, a1)
    assert two_rep_eq(adjoint_pullback(both, tr), adjoint_pullback(a2, adjoint_pullback(a1, tr)))
    assert failing_laws(two_rep_audit(adjoint_pullback(a1, tr))) == set()

    sgn3 = sign_rep_s3(s3, gpd=bh)
    emb = embed_rep(strict_two_group(xm), sgn3)
    checked = 0
    for u in s3.elements:
        fwd, back = fixed_point_morphism(emb, xm, u)
        assert failing_laws(transformation_audit(fwd)) == set(), u
        assert failing_laws(transformation_audit(back)) == set(), u
        ident = identity_two_rep_morphism(emb)
        round1 = compose_two_rep_morphisms(back, fwd)
        round2 = compose_two_rep_morphisms(fwd, back)
        assert round1.t == ident.t and round1.t_obj == ident.t_obj, u
        assert round2.t_obj == ident.t_obj, u
        checked += 1
    elapsed = time.monotonic() - t0
    _report(
        "criterion-5 adjoint suite",
        True,
        f"composition law exact; {checked} invertible fixed-point morphisms; {elapsed:.2f}s",
    )


def test_criterion_6_descent_suite():
    import tests.test_descent as td
    from twocheck.descent import (
        DescentObject,
        associated_bundle,
        cech_groupoid_of_surjection,
        descent_object_validate,
        finite_cover,
        prestack_fully_faithful_audit,
        trivial_descent_object,
    )
    from twocheck.actions import fin_identity

    t0 = time.monotonic()
    fib = td.swap_fiber()
    cover3 = td.cover3()
    assert failing_laws(descent_object_validate(trivial_descent_object("t", cover3, fib))) == set()

    # associated bundles over 3- and 4-piece covers of <=6-point bases
    for builder in (td.cover3, None):
        if builder is not None:
            cover = builder()
        else:
            cover = finite_cover(
                "c4",
                ["a", "b", "c", "d", "e", "f"],
                {
                    "U": ["a", "b", "c"],
                    "V": ["b", "c", "d"],
                    "W": ["c", "d", "e"],
                    "X": ["e", "f", "a"],
                },
            )
        p, xm, tg, ctg = td.z3_principal(cover)
        from twocheck.descent import principal_descent_validate
        from twocheck.tworeps import canonical_2rep, close_rep_list
        from twocheck.reps import all_one_dim_reps

        assert failing_laws(principal_descent_validate(p)) == set()
        reps = close_rep_list(ctg, all_one_dim_reps(tg.groupoid, field=QW))
        tr = canonical_2rep(ctg, reps)
        d = associated_bundle(p, tr)
        assert failing_laws(descent_object_validate(d)) == set()

    # every single-entry mutation of a gauge or filler is caught, localized
    d = td.swap_cocycle_object()
    cat = d.fiber.cat
    swap_f = td.conjugated_morphism(d)[1].comp["U"][list(d.cover.pieces["U"])[0]]
    mutations = caught = 0
    for (i, j), fam in d.gamma.items():
        for p, e in fam.items():
            gamma = {k: dict(v) for k, v in d.gamma.items()}
            inner = dict(gamma[(i, j)])
            inner[p] = swap_f if e.obj == {"p": "p", "q": "q"} else fin_identity(cat)
            gamma[(i, j)] = inner
            bad = DescentObject("mut", d.cover, d.fiber, gamma, d.phi)
            reports = descent_object_validate(bad)
            mutations += 1
            witnesses = [f["instance"] for r in reports for f in r.failures]
            if witnesses and any(repr(p) in w or f"'{p}'" in w for w in witnesses):
                caught += 1
    for (i, j, k), fam in d.phi.items():
        for p, nu in fam.items():
            for v in d.fiber.objects:
                phi = {kk: {pp: dict(x) for pp, x in vv.items()} for kk, vv in d.phi.items()}
                cur = phi[(i, j, k)][p][v]
                phi[(i, j, k)][p][v] = "s" if cur == "1p" else ("t" if cur == "1q" else "1p")
                bad = DescentObject("mut", d.cover, d.fiber, d.gamma, phi)
                reports = descent_object_validate(bad)
                mutations += 1
                witnesses = [f["instance"] for r in reports for f in r.failures]
                if witnesses and any(repr(p) in w or f"'{p}'" in w for w in witnesses):
                    caught += 1
    assert caught == mutations, f"{caught}/{mutations} mutations localized"

    # prestack bijection along hypercover fixtures
    surj = {"u1": "x", "u2": "x", "u3": "y"}
    gam, down, psi = cech_groupoid_of_surjection(surj)
    swap_auto = td.conjugated_morphism(d)[1].comp["U"][list(d.cover.pieces["U"])[0]]
    for e1, e2 in [
        (fin_identity(cat), fin_identity(cat)),
        (fin_identity(cat), swap_auto),
        (swap_auto, swap_auto),
    ]:
        assert failing_laws(prestack_fully_faithful_audit(fib, psi, e1, e2)) == set()
    from twocheck.groupoids import action_groupoid, discrete_groupoid, groupoid_functor

    z2 = cyclic_group(2)
    translation = {(h, g): z2.mul(h, g) for h in z2.elements for g in z2.elements}
    pair = action_groupoid(z2, z2, translation)
    pt = discrete_groupoid(["*"])
    psi2 = groupoid_functor(
        pair, pt, {x: "*" for x in pair.objects}, {a: "1_*" for a in pair.arrows}
    )
    assert failing_laws(
        prestack_fully_faithful_audit(fib, psi2, fin_identity(cat), fin_identity(cat))
    ) == set()
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0, f"{elapsed:.2f}s exceeds 30s budget"
    _report(
        "criterion-6 descent suite",
        True,
        f"{mutations} single-entry mutations all localized; {elapsed:.2f}s",
    )


def test_criterion_7_equivariance_suite():
    import tests.test_actions as ta
    from twocheck.actions import (
        autoprop_tower_audit,
        equivariant_descent_audit,
        fin_identity,
        groupoid_action_audit,
        vect_family_action,
    )
    from twocheck.groupoids import delooping as dl, groupoid_functor, identity_functor
    from twocheck.reps import regular_rep

    t0 = time.monotonic()
    act = vect_family_action(regular_rep(cyclic_group(2)))
    assert failing_laws(groupoid_action_audit(act)) == set()

    # three-stage tower: B(trivial) -> BZ/4 -> BZ/2 acting on the swap fiber
    sw = ta.bz2_swap_action()
    z4 = cyclic_group(4)
    bz4 = dl(z4)
    phi = groupoid_functor(bz4, sw.acting, {"*": "*"}, {a: str(int(a) % 2) for a in z4.elements})
    from twocheck.groups import trivial_group

    t1 = dl(trivial_group())
    psi = groupoid_functor(t1, bz4, {"*": "*"}, {"0": "0"})
    assert failing_laws(autoprop_tower_audit(sw, phi, psi)) == set()
    assert failing_laws(autoprop_tower_audit(sw, identity_functor(sw.acting), phi)) == set()

    # the equivariance constraint catches every single-object family mutation
    eb, _ = ta.contractible_pair_base()
    ident = fin_identity(sw.cat)
    swap_f = ta.fin_functor(
        sw.cat,
        sw.cat,
        {"p": "q", "q": "p"},
        {"1p": "1q", "1q": "1p", "s": "t", "t": "s"},
    )
    for base_fam in ({"0": ident, "1": ident}, {"0": swap_f, "1": swap_f}):
        assert failing_laws(equivariant_descent_audit(eb, sw, {"e": base_fam})) == set()
        for x in ("0", "1"):
            fam = dict(base_fam)
            fam[x] = swap_f if fam[x] is ident else ident
            reports = equivariant_descent_audit(eb, sw, {"e": fam})
            bad = [r for r in reports if r.law == "base-equivariance"][0]
            assert not bad.passed
            # the counterexample names an arrow touching the mutated object
            assert any(x in f["instance"] for f in bad.failures)
    elapsed = time.monotonic() - t0
    _report(
        "criterion-7 equivariance suite",
        True,
        f"conjugation family, tower parts 1+2, constraint mutations; {elapsed:.2f}s",
    )


def test_criterion_8_mutation_coverage():
    from twocheck.fixtures import CORE_LAWS, MUTATION_MATRIX, mutant_failures

    t0 = time.monotonic()
    for name, expected in MUTATION_MATRIX.items():
        actual = mutant_failures(name)
        assert actual == expected, (name, sorted(actual), sorted(expected))
    for law in CORE_LAWS:
        assert any(law in s for s in MUTATION_MATRIX.values()), law
    singletons = {next(iter(s)) for s in MUTATION_MATRIX.values() if len(s) == 1}
    laws = sorted(CORE_LAWS)
    for i, l1 in enumerate(laws):
        for l2 in laws[i + 1 :]:
            assert any((l1 in s) != (l2 in s) for s in MUTATION_MATRIX.values()), (l1, l2)
    elapsed = time.monotonic() - t0
    _report(
        "criterion-8 mutation coverage",
        True,
        f"{len(MUTATION_MATRIX)} mutants, {len(CORE_LAWS)} laws, "
        f"{len(singletons)} isolated exactly, all pairs separated; {elapsed:.2f}s",
    )
