import pytest

from twocheck.errors import EquivarianceFail, PeifferFail
from twocheck.groups import (
    cyclic_group,
    group_hom,
    identity_hom,
    inversion_action,
    symmetric_group,
    trivial_action,
    trivial_group,
    trivial_hom,
)
from twocheck.groupoids import (
    default_section,
    double_object,
    quasi_inverse,
    subgroupoid_inclusion,
)
from twocheck.report import failing_laws
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


def xm_z3_z2():
    h = cyclic_group(3)
    g = cyclic_group(2)
    return crossed_module_validate(
        h, g, trivial_hom(h, g), inversion_action(g, h), name="z3-z2"
    )


def xm_id_zn(n):
    g = cyclic_group(n)
    return crossed_module_validate(
        g, g, identity_hom(g), trivial_action(g, g), name=f"id-z{n}"
    )


def test_crossed_module_z3_z2_valid():
    xm = xm_z3_z2()
    assert xm.boundary("1") == "0"


def test_crossed_module_inner_s3_valid():
    xm = inner_crossed_module(symmetric_group(3))
    assert xm.action("102", "021") == xm.h.conj("102", "021")


def test_peiffer_failure_witnessed():
    s3 = symmetric_group(3)
    z2 = cyclic_group(2)
    with pytest.raises(PeifferFail) as ei:
        crossed_module_validate(s3, z2, trivial_hom(s3, z2), trivial_action(z2, s3))
    h1, h2 = ei.value.witness
    assert s3.conj(h1, h2) != h2


def test_equivariance_failure_witnessed():
    # identity boundary with a genuinely nontrivial action on an abelian group
    # violates equivariance: bd(act(x,h)) = -h but x^-1 bd(h) x = h.
    from twocheck.groups import right_action_validate

    z4 = cyclic_group(4)
    act = {}
    for g in z4.elements:
        for h in z4.elements:
            act[(g, h)] = h if int(g) % 2 == 0 else z4.inv(h)
    action = right_action_validate(z4, z4, act)
    with pytest.raises(EquivarianceFail) as ei:
        crossed_module_validate(z4, z4, identity_hom(z4), action)
    g, h = ei.value.witness
    assert int(g) % 2 == 1 and h != z4.inv(h)
    # boundary between the wrong groups is rejected before laws
    gh = group_hom(cyclic_group(3), cyclic_group(3), {str(i): str(i) for i in range(3)})
    with pytest.raises(ValueError):
        crossed_module_validate(cyclic_group(3), cyclic_group(2), gh, action)


def test_strict_two_group_trivial_h():
    g = cyclic_group(3)
    t = trivial_group()
    xm = crossed_module_validate(t, g, trivial_hom(t, g), trivial_action(g, t))
    tg = strict_two_group(xm)
    assert len(tg.groupoid.arrows) == 3  # identities only
    assert all(tg.groupoid.src[a] == tg.groupoid.tgt[a] for a in tg.groupoid.arrows)


def test_strict_two_group_z3_z2_horizontal_formula():
    tg = strict_two_group(xm_z3_z2())
    # labels are h|g; product is (h + (-1)^{g} h') | (g + g')
    assert tg.prod_arr("1|1", "1|0") == "0|1"  # 1 + (-1)*1 = 0
    assert tg.prod_arr("1|0", "1|1") == "2|1"  # 1 + 1 = 2
    # independent target cross-check: t(a x b) = t(a) * t(b)
    gpd = tg.groupoid
    for a in gpd.arrows:
        for b in gpd.arrows:
            c = tg.prod_arr(a, b)
            assert gpd.tgt[c] == tg.prod(gpd.tgt[a], gpd.tgt[b])


def test_inner_s3_interchange_exhaustive():
    tg = strict_two_group(inner_crossed_module(symmetric_group(3)))
    rep = interchange_audit(tg)
    assert rep.passed
    # contractible groupoid on 6 objects: 36 arrows, 216 composable pairs
    assert rep.instances == 216**2


def test_strict_as_coherent_all_laws_pass():
    tg = strict_two_group(xm_z3_z2())
    ctg = strict_as_coherent(tg)
    reports = coherence_audit(ctg)
    assert failing_laws(reports) == set()
    assert not has_nonidentity_assoc(ctg)


def doubled_transfer(xm, section_overrides=None, obj=None):
    tg = strict_two_group(xm)
    gpd = tg.groupoid
    target = obj if obj is not None else gpd.objects[0]
    amb, incl = double_object(gpd, target, f"{target}*")
    section = default_section(gpd, amb, incl, overrides=section_overrides or {})
    inc = subgroupoid_inclusion(gpd, amb, incl, section)
    return tg, inc


def test_transfer_identity_like_inclusion_stays_strict():
    tg = strict_two_group(xm_z3_z2())
    gpd = tg.groupoid
    from twocheck.groupoids import identity_functor

    inc = subgroupoid_inclusion(gpd, gpd, identity_functor(gpd))
    ctg = transfer_structure(tg, inc)
    assert not has_nonidentity_assoc(ctg)
    assert failing_laws(coherence_audit(ctg)) == set()


def test_transfer_doubled_z3_z2_nonidentity_assoc_passes_all():
    xm = xm_z3_z2()
    # nonidentity section loop at image object "0" makes the counit nontrivial
    tg, inc = doubled_transfer(xm, section_overrides={"0": ("1|0", "0"), "0*": ("2|0#t", "0")})
    ctg = transfer_structure(tg, inc)
    assert has_nonidentity_assoc(ctg)
    reports = coherence_audit(ctg)
    assert failing_laws(reports) == set()


def test_transfer_doubled_inner_s3_passes_all():
    xm = inner_crossed_module(symmetric_group(3))
    tg, inc = doubled_transfer(xm)
    # overriding the duplicate's section with a non-canonical witness
    gpd = tg.groupoid
    amb = inc.ambient
    dup = [y for y in amb.objects if y not in gpd.objects][0]
    cands = [a for a in amb.arrows if amb.tgt[a] == dup and amb.src[a] in gpd.objects]
    override = {dup: (sorted(cands)[-1], amb.src[sorted(cands)[-1]])}
    section = default_section(gpd, amb, inc.incl, overrides=override)
    inc2 = subgroupoid_inclusion(gpd, amb, inc.incl, section)
    ctg = transfer_structure(tg, inc2)
    assert failing_laws(coherence_audit(ctg)) == set()


def test_transfer_corrupted_associator_caught_with_quadruple():
    xm = xm_z3_z2()
    tg, inc = doubled_transfer(xm, section_overrides={"0": ("1|0", "0")})
    ctg = transfer_structure(tg, inc)
    bad = dict(ctg.assoc)
    key = ("0", "0", "0")
    gpd = ctg.groupoid
    cur = bad[key]
    # replace with a different parallel arrow
    others = [a for a in gpd.arrows if a != cur and gpd.src[a] == gpd.src[cur] and gpd.tgt[a] == gpd.tgt[cur]]
    bad[key] = others[0]
    from twocheck.twogroups import coherent_two_group

    mutant = coherent_two_group(
        "mutant", gpd, ctg.m_obj, ctg.m_arr, ctg.unit, bad, ctg.lunit, ctg.runit
    )
    reports = coherence_audit(mutant)
    pentagon = [r for r in reports if r.law == "pentagon"][0]
    assert not pentagon.passed
    assert any("0" in f["instance"] for f in pentagon.failures)


def test_interchange_all_crossed_module_fixtures():
    for xm in [xm_z3_z2(), xm_id_zn(3), inner_crossed_module(symmetric_group(3))]:
        assert interchange_audit(strict_two_group(xm)).passed


def test_quasi_inverse_reused_by_transfer():
    xm = xm_id_zn(2)
    tg, inc = doubled_transfer(xm)
    qi = quasi_inverse(inc)
    ctg = transfer_structure(tg, inc, qi=qi)
    assert failing_laws(coherence_audit(ctg)) == set()


def test_coherence_audit_sampling_path():
    tg = strict_two_group(inner_crossed_module(symmetric_group(3)))
    ctg = strict_as_coherent(tg)
    reports = coherence_audit(ctg, seed=3, cap=50)
    pentagon = [r for r in reports if r.law == "pentagon"][0]
    assert pentagon.sampled and pentagon.instances == 50 and pentagon.passed
    # identical seed reproduces the identical sample
    again = [r for r in coherence_audit(ctg, seed=3, cap=50) if r.law == "pentagon"][0]
    assert again.instances == pentagon.instances and again.failures == pentagon.failures
