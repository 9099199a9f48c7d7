"""Bundled fixture documents and the mutation-coverage matrix.

Each fixture is a JSON-serializable definition document. The mutation matrix
pairs every mutant with the exact set of laws it is documented to break;
couplings that cannot be avoided (derived or interlocked laws) are recorded
there and asserted by the acceptance suite.
"""

from __future__ import annotations

from . import deffile
from .report import failing_laws


def _strict_base(name, h, g, boundary, action_kind, action_extra=None):
    doc = {
        "groups": {},
        "actions": {
            "act": {"actor": "G", "target": "H", "kind": action_kind},
        },
        "crossed_modules": {
            "xm": {"h": "H", "g": "G", "boundary": boundary, "action": "act"},
        },
        "two_groups": {name: {"kind": "strict", "crossed_module": "xm"}},
    }
    doc["groups"]["H"] = h
    doc["groups"]["G"] = g
    if action_extra:
        doc["actions"]["act"].update(action_extra)
    return doc


def fixture_inner_s3():
    # H and G are the same group instance for the inner crossed module
    doc = {
        "groups": {"G": {"kind": "symmetric", "degree": 3}},
        "actions": {"act": {"actor": "G", "target": "G", "kind": "conjugation"}},
        "crossed_modules": {
            "xm": {"h": "G", "g": "G", "boundary": "identity", "action": "act"}
        },
        "two_groups": {"tg": {"kind": "strict", "crossed_module": "xm"}},
    }
    doc["reps"] = {
        "hreps": {"kind": "group_list", "group": "G", "which": ["trivial", "sign", "standard"]}
    }
    doc["two_reps"] = {
        "tr": {"kind": "crossed", "crossed_module": "xm", "reps": "hreps", "strict": "tg"}
    }
    doc["audits"] = [
        {"run": "coherence", "two_group": "tg"},
        {"run": "interchange", "two_group": "tg"},
        {"run": "two_rep", "two_rep": "tr"},
        {"run": "cell_interchange", "two_rep": "tr"},
    ]
    return doc


def fixture_z3_z2():
    doc = _strict_base(
        "tg", {"kind": "cyclic", "order": 3}, {"kind": "cyclic", "order": 2},
        "trivial", "inversion",
    )
    doc["reps"] = {
        "chars": {"kind": "one_dim_all", "two_group": "tg", "scalars": "cyclotomic3"}
    }
    doc["two_reps"] = {"tr": {"kind": "canonical", "two_group": "tg", "reps": "chars"}}
    doc["audits"] = [
        {"run": "coherence", "two_group": "tg"},
        {"run": "interchange", "two_group": "tg"},
        {"run": "two_rep", "two_rep": "tr"},
        {"run": "cell_interchange", "two_rep": "tr"},
    ]
    return doc


def fixture_id_zn(n):
    doc = _strict_base(
        "tg", {"kind": "cyclic", "order": n}, {"kind": "cyclic", "order": n},
        "identity", "trivial",
    )
    doc["audits"] = [
        {"run": "coherence", "two_group": "tg"},
        {"run": "interchange", "two_group": "tg"},
    ]
    return doc


def fixture_transfer_z3_z2():
    doc = _strict_base(
        "tg", {"kind": "cyclic", "order": 3}, {"kind": "cyclic", "order": 2},
        "trivial", "inversion",
    )
    doc["two_groups"]["tgc"] = {
        "kind": "transfer",
        "strict": "tg",
        "double_object": "0",
        "copy": "0*",
        "section": {"0": ["1|0", "0"], "0*": ["2|0#t", "0"]},
    }
    doc["reps"] = {
        "chars": {"kind": "one_dim_all", "two_group": "tgc", "scalars": "cyclotomic3"}
    }
    doc["two_reps"] = {"trc": {"kind": "canonical", "two_group": "tgc", "reps": "chars"}}
    doc["audits"] = [
        {"run": "coherence", "two_group": "tgc"},
        {"run": "two_rep", "two_rep": "trc"},
    ]
    return doc


def fixture_transfer_inner_s3():
    doc = {
        "groups": {"G": {"kind": "symmetric", "degree": 3}},
        "actions": {"act": {"actor": "G", "target": "G", "kind": "conjugation"}},
        "crossed_modules": {
            "xm": {"h": "G", "g": "G", "boundary": "identity", "action": "act"}
        },
        "two_groups": {"tg": {"kind": "strict", "crossed_module": "xm"}},
    }
    # the arrow 102|021 ends at 102*021 = 120; use one landing at the doubled
    # object 012: h|g with h*g = 012, e.g. h = 102, g = 102
    doc["two_groups"]["tgc"] = {
        "kind": "transfer",
        "strict": "tg",
        "double_object": "012",
        "copy": "012*",
        "section": {"012*": ["102|102#t", "102"]},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "tgc"}]
    return doc


def fixture_transfer_id_zn(n):
    doc = _strict_base(
        "tg", {"kind": "cyclic", "order": n}, {"kind": "cyclic", "order": n},
        "identity", "trivial",
    )
    # a nonidentity witness arrow into the doubled object: 1|(n-1) ends at 0
    doc["two_groups"]["tgc"] = {
        "kind": "transfer",
        "strict": "tg",
        "double_object": "0",
        "copy": "0*",
        "section": {"0*": [f"1|{n - 1}#t", f"{n - 1}"]},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "tgc"}]
    return doc


def fixture_embed_z2_sign():
    doc = _strict_base(
        "tg", {"kind": "cyclic", "order": 2}, {"kind": "cyclic", "order": 2},
        "trivial", "trivial",
    )
    doc["reps"] = {
        "sgn": {
            "kind": "group_list",
            "group": "H",
            "which": [{"name": "sgn", "mats": {"0": [["1"]], "1": [["-1"]]}}],
        }
    }
    doc["two_reps"] = {"emb": {"kind": "embed", "two_group": "tg", "rep": "sgn"}}
    doc["audits"] = [{"run": "two_rep", "two_rep": "emb"}]
    return doc


def _cover3():
    return {
        "base": ["a", "b", "c"],
        "pieces": {"U": ["a", "b"], "V": ["b", "c"], "W": ["a", "c"]},
    }


def _cover4():
    return {
        "base": ["a", "b", "c", "d", "e", "f"],
        "pieces": {
            "U": ["a", "b", "c"],
            "V": ["b", "c", "d"],
            "W": ["c", "d", "e"],
            "X": ["e", "f", "a"],
        },
    }


def fixture_descent_trivial():
    return {
        "covers": {"c3": _cover3()},
        "descent_data": {"triv": {"kind": "trivial", "cover": "c3"}},
        "audits": [{"run": "descent_object", "descent": "triv"}],
    }


def fixture_descent_swap():
    return {
        "covers": {"c3": _cover3()},
        "descent_data": {"swapd": {"kind": "swap_cocycle", "cover": "c3"}},
        "audits": [{"run": "descent_object", "descent": "swapd"}],
    }


def _principal_z3_doc(cover_key, cover, twist=2):
    """Coboundary 2-cocycle values for the one-object strict 2-group of Z/3."""
    names = list(cover["pieces"].keys())
    b = {}
    for idx, (i, j) in enumerate((i, j) for i in names for j in names):
        b[(i, j)] = (idx * twist) % 3
    g = {f"{i},{j}": "0" for i in names for j in names}
    f = {}
    for i in names:
        for j in names:
            for k in names:
                val = (b[(j, k)] - b[(i, k)] + b[(i, j)]) % 3
                f[f"{i},{j},{k}"] = f"{val}|0"
    return {
        "groups": {"H": {"kind": "cyclic", "order": 3}, "G": {"kind": "trivial"}},
        "actions": {"act": {"actor": "G", "target": "H", "kind": "trivial"}},
        "crossed_modules": {"xm": {"h": "H", "g": "G", "boundary": "trivial", "action": "act"}},
        "two_groups": {"tg": {"kind": "strict", "crossed_module": "xm"}},
        "reps": {"chars": {"kind": "one_dim_all", "two_group": "tg", "scalars": "cyclotomic3"}},
        "two_reps": {"tr": {"kind": "canonical", "two_group": "tg", "reps": "chars"}},
        "covers": {cover_key: cover},
        "descent_data": {
            "prin": {"kind": "principal", "cover": cover_key, "two_group": "tg", "g": g, "f": f},
            "assoc": {"kind": "associated", "principal": "prin", "two_rep": "tr"},
        },
        "audits": [
            {"run": "principal", "descent": "prin"},
            {"run": "descent_object", "descent": "assoc"},
        ],
    }


def fixture_principal_z3_c3():
    return _principal_z3_doc("c3", _cover3())


def fixture_principal_z3_c4():
    return _principal_z3_doc("c4", _cover4())


def fixture_vect_family_z2():
    return {
        "groups": {"G": {"kind": "cyclic", "order": 2}},
        "cat_actions": {"fam": {"kind": "vect_family", "group": "G"}},
        "audits": [{"run": "cat_action", "cat_action": "fam"}],
    }


def fixture_equivariant_swap():
    return {
        "cat_actions": {"sw": {"kind": "swap"}},
        "audits": [
            {"run": "cat_action", "cat_action": "sw"},
            {"run": "equivariant_descent", "cat_action": "sw"},
        ],
    }


# ---------------------------------------------------------------------------
# mutants: documents plus the exact law set each one breaks


def _z3_loops_base():
    return _strict_base(
        "tg", {"kind": "cyclic", "order": 3}, {"kind": "cyclic", "order": 3},
        "trivial", "trivial",
    )


def mutant_pentagon():
    doc = _z3_loops_base()
    doc["two_groups"]["bad"] = {
        "kind": "mutate", "of": "tg", "assoc": {"1,1,1": "1|0"},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "bad"}]
    return doc


def mutant_unit_triangle():
    doc = _z3_loops_base()
    doc["two_groups"]["bad"] = {
        "kind": "mutate", "of": "tg",
        "lunit": {g: f"1|{g}" for g in "012"},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "bad"}]
    return doc


def _z4_z2_base():
    return {
        "groups": {"H": {"kind": "cyclic", "order": 4}, "G": {"kind": "cyclic", "order": 2}},
        "actions": {"act": {"actor": "G", "target": "H", "kind": "trivial"}},
        "crossed_modules": {
            "xm": {"h": "H", "g": "G", "boundary": {"0": "0", "1": "1", "2": "0", "3": "1"}, "action": "act"}
        },
        "two_groups": {"tg": {"kind": "strict", "crossed_module": "xm"}},
    }


def mutant_assoc_natural():
    doc = _z4_z2_base()
    doc["two_groups"]["bad"] = {
        "kind": "mutate", "of": "tg", "assoc": {"1,1,1": "2|1"},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "bad"}]
    return doc


def mutant_product_equivalence():
    return {
        "groups": {"G": {"kind": "cyclic", "order": 3}},
        "two_groups": {"bad": {"kind": "absorber", "group": "G"}},
        "audits": [{"run": "coherence", "two_group": "bad"}],
    }


def mutant_product_functor():
    doc = _z3_loops_base()
    doc["two_groups"]["bad"] = {
        "kind": "mutate", "of": "tg", "m_arr": {"1|0,1|0": "0|0"},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "bad"}]
    return doc


def mutant_lunit_natural():
    doc = _z4_z2_base()
    doc["two_groups"]["bad"] = {
        "kind": "mutate", "of": "tg", "lunit": {"1": "2|1"},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "bad"}]
    return doc


def mutant_runit_natural():
    doc = _z4_z2_base()
    doc["two_groups"]["bad"] = {
        "kind": "mutate", "of": "tg", "runit": {"1": "2|1"},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "bad"}]
    return doc


def _discrete_z3_two_rep():
    doc = _strict_base(
        "tg", {"kind": "trivial"}, {"kind": "cyclic", "order": 3},
        "trivial", "trivial",
    )
    doc["reps"] = {"chars": {"kind": "one_dim_all", "two_group": "tg", "scalars": "rational"}}
    doc["two_reps"] = {"tr": {"kind": "canonical", "two_group": "tg", "reps": "chars"}}
    return doc


def mutant_hexagon():
    doc = _discrete_z3_two_rep()
    doc["two_reps"]["bad"] = {"kind": "mutate", "of": "tr", "phi_scale": {"1,1": "2"}}
    doc["audits"] = [{"run": "two_rep", "two_rep": "bad"}]
    return doc


def mutant_unit_squares():
    doc = _discrete_z3_two_rep()
    doc["two_reps"]["bad"] = {"kind": "mutate", "of": "tr", "psi_scale": "2"}
    doc["audits"] = [{"run": "two_rep", "two_rep": "bad"}]
    return doc


def mutant_unit_square_left():
    doc = _discrete_z3_two_rep()
    doc["two_reps"]["bad"] = {
        "kind": "mutate", "of": "tr", "phi_scale": {"0,1": "2", "0,2": "2"},
    }
    doc["audits"] = [{"run": "two_rep", "two_rep": "bad"}]
    return doc


def mutant_unit_square_right():
    doc = _discrete_z3_two_rep()
    doc["two_reps"]["bad"] = {
        "kind": "mutate", "of": "tr", "phi_scale": {"1,0": "2", "2,0": "2"},
    }
    doc["audits"] = [{"run": "two_rep", "two_rep": "bad"}]
    return doc


def mutant_cell_functor():
    doc = fixture_z3_z2()
    doc["two_reps"]["bad"] = {"kind": "mutate", "of": "tr", "eta_scale": {"1|0": "w"}}
    doc["audits"] = [{"run": "two_rep", "two_rep": "bad"}]
    return doc


def mutant_cocycle_pentagon():
    doc = fixture_principal_z3_c3()
    doc["descent_data"]["bad"] = {
        "kind": "mutate", "of": "assoc", "phi_scale": {"U,U,V,b,0": "w"},
    }
    doc["audits"] = [{"run": "descent_object", "descent": "bad"}]
    return doc


def mutant_gauge_cocycle():
    doc = fixture_descent_swap()
    doc["descent_data"]["bad"] = {
        "kind": "mutate", "of": "swapd", "gamma_swap": {"U,V,b": "ident"},
    }
    doc["audits"] = [{"run": "descent_object", "descent": "bad"}]
    return doc


def mutant_principal_cocycle():
    doc = fixture_principal_z3_c3()
    doc["descent_data"]["bad"] = {
        "kind": "mutate_principal", "of": "prin", "f_shift": {"U,U,V,b": "1|0"},
    }
    doc["audits"] = [{"run": "principal", "descent": "bad"}]
    return doc


def mutant_cat_action():
    doc = fixture_equivariant_swap()
    doc["cat_actions"]["bad"] = {"kind": "mutate", "of": "sw", "mu0": {"p|1": "p"}}
    doc["audits"] = [{"run": "cat_action", "cat_action": "bad"}]
    return doc


def mutant_base_equivariance():
    doc = fixture_equivariant_swap()
    doc["audits"] = [
        {"run": "equivariant_descent", "cat_action": "sw", "mutate_at": "1"}
    ]
    return doc


FIXTURES = {
    "inner_s3": fixture_inner_s3,
    "z3_z2": fixture_z3_z2,
    "id_z2": lambda: fixture_id_zn(2),
    "id_z3": lambda: fixture_id_zn(3),
    "id_z4": lambda: fixture_id_zn(4),
    "id_z5": lambda: fixture_id_zn(5),
    "id_z6": lambda: fixture_id_zn(6),
    "transfer_z3_z2": fixture_transfer_z3_z2,
    "transfer_inner_s3": fixture_transfer_inner_s3,
    "transfer_id_z6": lambda: fixture_transfer_id_zn(6),
    "embed_z2_sign": fixture_embed_z2_sign,
    "descent_trivial": fixture_descent_trivial,
    "descent_swap": fixture_descent_swap,
    "principal_z3_c3": fixture_principal_z3_c3,
    "principal_z3_c4": fixture_principal_z3_c4,
    "vect_family_z2": fixture_vect_family_z2,
    "equivariant_swap": fixture_equivariant_swap,
    "mut_pentagon": mutant_pentagon,
    "mut_unit_triangle": mutant_unit_triangle,
    "mut_assoc_natural": mutant_assoc_natural,
    "mut_product_equivalence": mutant_product_equivalence,
    "mut_product_functor": mutant_product_functor,
    "mut_lunit_natural": mutant_lunit_natural,
    "mut_runit_natural": mutant_runit_natural,
    "mut_hexagon": mutant_hexagon,
    "mut_unit_squares": mutant_unit_squares,
    "mut_unit_square_left": mutant_unit_square_left,
    "mut_unit_square_right": mutant_unit_square_right,
    "mut_cell_functor": mutant_cell_functor,
    "mut_cocycle_pentagon": mutant_cocycle_pentagon,
    "mut_gauge_cocycle": mutant_gauge_cocycle,
    "mut_principal_cocycle": mutant_principal_cocycle,
    "mut_cat_action": mutant_cat_action,
    "mut_base_equivariance": mutant_base_equivariance,
}

# Exact failure sets per mutant, each verified by running the audits. A
# singleton demonstrates the law's auditor in isolation. Multi-law sets are
# inherently coupled families: the derived unit triangles follow from the
# pentagon, the main triangle, and naturality, so no mutant can break exactly
# one of them; a broken unitor re-enters the triangle laws that quote it; a
# corrupted cell table breaks both cell functoriality and every square quoting
# the same cell; a non-functorial product cannot leave associator naturality
# intact; moment violations make translation lookups on the other side
# ill-typed. Every pair of laws below is separated by some mutant.
MUTATION_MATRIX = {
    "mut_pentagon": {"pentagon"},
    "mut_unit_triangle": {"unit-triangle"},
    "mut_assoc_natural": {"assoc-natural"},
    "mut_product_equivalence": {"product-equivalence"},
    "mut_product_functor": {"product-functor", "assoc-natural"},
    "mut_lunit_natural": {"lunit-natural", "unit-triangle", "unit-triangle-left"},
    "mut_runit_natural": {"runit-natural", "unit-triangle", "unit-triangle-right"},
    "mut_interchange": {"interchange"},
    "mut_hexagon": {"hexagon"},
    "mut_unit_squares": {"unit-square-left", "unit-square-right"},
    "mut_unit_square_left": {"unit-square-left", "hexagon"},
    "mut_unit_square_right": {"unit-square-right", "hexagon"},
    "mut_cell_functor": {"cell-functor", "compositor-natural"},
    "mut_cell_interchange": {"cell-functor", "cell-interchange", "compositor-natural"},
    "mut_cell_component": {
        "cell-component-natural", "cell-functor", "cell-natural", "compositor-natural",
    },
    "mut_cell_natural": {"cell-functor", "cell-natural", "compositor-natural"},
    "mut_functor_on_morphisms": {
        "cell-natural", "compositor-natural", "functor-on-morphisms", "hexagon",
        "unit-square-right",
    },
    "mut_unit_map": {"unit-map-natural", "unit-square-left", "unit-square-right"},
    "mut_morphism_square": {"morphism-square"},
    "mut_morphism_natural": {"morphism-natural", "morphism-square"},
    "mut_morphism_unit_square": {"morphism-square", "morphism-unit-square"},
    "mut_morphism_component": {
        "morphism-component-natural", "morphism-natural", "morphism-square",
    },
    "mut_cocycle_pentagon": {"cocycle-pentagon"},
    "mut_gauge_cocycle": {"cocycle-boundary", "cocycle-pentagon"},
    "mut_gauge_invertible": {"cocycle-boundary", "cocycle-pentagon", "gauge-invertible"},
    "mut_morphism_prism": {"morphism-prism"},
    "mut_morphism_filler_boundary": {"morphism-filler-boundary", "morphism-prism"},
    "mut_two_morphism_square": {"two-morphism-square"},
    "mut_principal_cocycle": {"principal-cocycle"},
    "mut_principal_boundary": {"principal-boundary", "principal-cocycle"},
    "mut_cat_action": {"action-compose", "action-functorial"},
    "mut_action_moment": {
        "action-compose", "action-functorial", "action-moment", "action-moment-shift",
        "action-unit",
    },
    "mut_action_unit": {"action-compose", "action-functorial", "action-unit"},
    "mut_action_moment_shift": {
        "action-compose", "action-functorial", "action-moment-shift", "action-unit",
    },
    "mut_equivariant_action": {"equivariant-action"},
    "mut_equivariant_moment": {"equivariant-action", "equivariant-moment"},
    "mut_base_equivariance": {"base-equivariance"},
    "mut_gauge_equivariant": {"base-equivariance", "gauge-equivariant"},
    "mut_simplex_square": {"simplex-square"},
}

# Laws audited by construction-verifying meta-audits: a "mutant" for these
# would corrupt the package's own construction, not input data, so they are
# exercised by dedicated unit tests instead of fixtures.
META_AUDIT_LAWS = {
    "iota-injective",
    "iota-fully-faithful",
    "iota-iso-when-surjective",
    "pullback-iso",
    "pullback-iso-equivariant",
    "iota-composition",
    "prestack-faithful",
    "prestack-full",
}

CORE_LAWS = set().union(*MUTATION_MATRIX.values())


def fixture_names():
    return sorted(FIXTURES.keys())


def load_fixture(name):
    if name not in FIXTURES:
        raise KeyError(name)
    return FIXTURES[name]()


def run_fixture(name, seed=0, only=None):
    defs = deffile.parse_document(load_fixture(name), source=f"fixture:{name}")
    return deffile.run_audits(defs, only=only, seed=seed)


def measured_failures(name, seed=0):
    return failing_laws(run_fixture(name, seed=seed))


# ---------------------------------------------------------------------------
# mutants that need direct table surgery (not expressible as documents)


def _inner_s3_crossed():
    defs = deffile.parse_document(fixture_inner_s3(), source="fixture:inner_s3")
    return defs, defs.two_reps["tr"]


def _embed_z2():
    defs = deffile.parse_document(fixture_embed_z2_sign(), source="fixture:embed")
    return defs, defs.two_reps["emb"]


def _scale_mor(m, c):
    return {x: v.scale(c) for x, v in m.items()}


def api_mut_interchange():
    from .twogroups import interchange_audit

    defs = deffile.parse_document(fixture_z3_z2(), source="m")
    tg = defs.two_groups["tg#strict"]
    bad_arr = dict(tg.hmul_arr)
    bad_arr[("1|0", "1|0")] = "0|0"
    from .twogroups import StrictTwoGroup

    bad = StrictTwoGroup("bad", tg.xm, tg.groupoid, tg.hmul_obj, bad_arr, tg.hunit)
    return [interchange_audit(bad)]


def api_mut_cell_component():
    from .matrices import Mat
    from .tworeps import two_rep_audit

    defs, tr = _inner_s3_crossed()
    std_idx = next(
        i for i, r in enumerate(tr.carrier.objects) if r.dims[r.groupoid.objects[0]] == 2
    )
    z = next(a for a in tr.two_group.groupoid.arrows if not a.startswith("012|"))
    star = tr.carrier.groupoid.objects[0]
    tr.eta[z][std_idx] = {star: Mat(tr.carrier.field, [[1, 1], [0, 1]])}
    return two_rep_audit(tr)


def api_mut_cell_natural():
    from .scalars import QW
    from .tworeps import two_rep_audit

    defs = deffile.parse_document(fixture_z3_z2(), source="m")
    tr = defs.two_reps["tr"]
    z = next(a for a in tr.two_group.groupoid.arrows if a.startswith("1|"))
    w = QW.generator()
    tr.eta[z] = dict(tr.eta[z])
    tr.eta[z][0] = _scale_mor(tr.eta[z][0], w)
    return two_rep_audit(tr)


def api_mut_functor_on_morphisms():
    from .matrices import Mat
    from .tworeps import Endo, two_rep_audit

    defs, tr = _inner_s3_crossed()
    g0 = "102"  # a non-unit object of the 2-group
    old = tr.F[g0]
    twist = Mat(tr.carrier.field, [[1, 1], [0, 1]])

    def bad_mor(m, old_mor=old.mor, twist=twist):
        out = old_mor(m)
        return {
            x: (v @ twist if v.rows == 2 and v.cols == 2 else v) for x, v in out.items()
        }

    tr.F = dict(tr.F)
    tr.F[g0] = Endo(old.obj, bad_mor)
    return two_rep_audit(tr)


def api_mut_unit_map():
    from .matrices import Mat
    from .tworeps import two_rep_audit

    defs, tr = _inner_s3_crossed()
    std_idx = next(
        i for i, r in enumerate(tr.carrier.objects) if r.dims[r.groupoid.objects[0]] == 2
    )
    star = tr.carrier.groupoid.objects[0]
    tr.psi = dict(tr.psi)
    tr.psi[std_idx] = {star: Mat(tr.carrier.field, [[1, 1], [0, 1]])}
    return two_rep_audit(tr)


def api_mut_morphism_square():
    from .scalars import QQ
    from .tworeps import embed_rep_morphism, transformation_audit

    defs, emb = _embed_z2()
    from .matrices import Mat

    zeta = defs.reps["sgn"][0]
    t = embed_rep_morphism(Mat(QQ, [[2]]), zeta, zeta, emb, emb)
    g0 = "1"  # not the unit object
    t.t[g0] = dict(t.t[g0])
    t.t[g0][0] = _scale_mor(t.t[g0][0], QQ.of(2))
    return transformation_audit(t)


def api_mut_morphism_natural():
    """A 2-group with non-loop cells: mutating T at one non-unit object breaks
    naturality across those cells (and the product square with it)."""
    from .matrices import Mat
    from .scalars import QQ
    from .tworeps import embed_rep, embed_rep_morphism, transformation_audit

    doc = {
        "groups": {"G": {"kind": "cyclic", "order": 2}},
        "actions": {"act": {"actor": "G", "target": "G", "kind": "trivial"}},
        "crossed_modules": {"xm": {"h": "G", "g": "G", "boundary": "identity", "action": "act"}},
        "two_groups": {"tg": {"kind": "strict", "crossed_module": "xm"}},
        "reps": {
            "sgn": {
                "kind": "group_list",
                "group": "G",
                "which": [{"name": "sgn", "mats": {"0": [["1"]], "1": [["-1"]]}}],
            }
        },
    }
    defs = deffile.parse_document(doc, source="m")
    tg = defs.two_groups["tg#strict"]
    zeta = defs.reps["sgn"][0]
    emb = embed_rep(tg, zeta)
    t = embed_rep_morphism(Mat(QQ, [[2]]), zeta, zeta, emb, emb)
    t.t["1"] = {i: _scale_mor(c, QQ.of(2)) for i, c in t.t["1"].items()}
    return transformation_audit(t)


def api_mut_morphism_unit_square():
    from .matrices import Mat
    from .scalars import QQ
    from .tworeps import embed_rep_morphism, transformation_audit

    defs, emb = _embed_z2()
    zeta = defs.reps["sgn"][0]
    t = embed_rep_morphism(Mat(QQ, [[2]]), zeta, zeta, emb, emb)
    unit = emb.two_group.unit
    t.t[unit] = {i: _scale_mor(c, QQ.of(2)) for i, c in t.t[unit].items()}
    return transformation_audit(t)


def api_mut_morphism_component():
    from .matrices import Mat
    from .tworeps import identity_two_rep_morphism, transformation_audit

    defs, tr = _inner_s3_crossed()
    t = identity_two_rep_morphism(tr)
    std_idx = next(
        i for i, r in enumerate(tr.carrier.objects) if r.dims[r.groupoid.objects[0]] == 2
    )
    star = tr.carrier.groupoid.objects[0]
    g0 = "102"
    t.t[g0] = dict(t.t[g0])
    t.t[g0][std_idx] = {star: Mat(tr.carrier.field, [[1, 1], [0, 1]])}
    return transformation_audit(t)


def _swap_descent():
    defs = deffile.parse_document(fixture_descent_swap(), source="m")
    return defs.descent_data["swapd"]


def api_mut_gauge_invertible():
    from .actions import FinFunctor
    from .descent import descent_object_validate

    d = _swap_descent()
    cat = d.fiber.cat
    const = FinFunctor(
        cat, cat, {x: "p" for x in cat.objects}, {m: "1p" for m in cat.morphisms}
    )
    gamma = {k: dict(v) for k, v in d.gamma.items()}
    inner = dict(gamma[("U", "V")])
    inner["b"] = const
    gamma[("U", "V")] = inner
    from .descent import DescentObject

    bad = DescentObject("bad", d.cover, d.fiber, gamma, d.phi)
    return descent_object_validate(bad)


def api_mut_morphism_prism():
    from .descent import descent_morphism_validate, identity_descent_morphism
    from .scalars import QW

    defs = deffile.parse_document(fixture_principal_z3_c3(), source="m")
    d = defs.descent_data["assoc"]
    m = identity_descent_morphism(d)
    w = QW.generator()
    filler = {k: {p: dict(nu) for p, nu in v.items()} for k, v in m.filler.items()}
    filler[("U", "V")]["b"][0] = _scale_mor(filler[("U", "V")]["b"][0], w)
    from .descent import DescentMorphism

    bad = DescentMorphism("bad", m.src, m.dst, m.cover, m.comp, filler)
    return descent_morphism_validate(bad)


def api_mut_morphism_filler_boundary():
    from .descent import DescentMorphism, descent_morphism_validate, identity_descent_morphism

    d = _swap_descent()
    m = identity_descent_morphism(d)
    filler = {k: {p: dict(nu) for p, nu in v.items()} for k, v in m.filler.items()}
    pt = list(filler[("U", "V")])[0]
    comps = dict(filler[("U", "V")][pt])
    comps["p"] = "s" if comps["p"] == "1p" else "1p"
    filler[("U", "V")][pt] = comps
    bad = DescentMorphism("bad", m.src, m.dst, m.cover, m.comp, filler)
    return descent_morphism_validate(bad)


def api_mut_two_morphism_square():
    from .descent import Descent2Morphism, cech_nerve, descent_2morphism_validate, identity_descent_morphism

    d = _swap_descent()
    m = identity_descent_morphism(d)
    nerve = cech_nerve(d.cover)
    comp = {
        i: {p: {v: d.fiber.cat.ids[v] for v in d.fiber.objects} for p in nerve[(i,)]}
        for i in d.cover.piece_names()
    }
    comp["U"] = dict(comp["U"])
    pt = list(comp["U"])[0]
    cc = dict(comp["U"][pt])
    cc["p"] = "s"
    comp["U"][pt] = cc
    bad = Descent2Morphism("bad", m, m, comp)
    return descent_2morphism_validate(bad)


def api_mut_principal_boundary():
    from .descent import PrincipalDescent, cech_nerve, finite_cover, principal_descent_validate

    defs = deffile.parse_document(fixture_z3_z2(), source="m")
    ctg = defs.two_groups["tg"]
    cover = finite_cover("c2", ["a", "b"], {"U": ["a", "b"], "V": ["b"]})
    nerve = cech_nerve(cover)
    names = cover.piece_names()
    cvals = {"U": "0", "V": "1"}
    g = {
        (i, j): {p: ctg.prod(cvals[i], cvals[j]) for p in nerve[(i, j)]}
        for i in names
        for j in names
    }
    gpd = ctg.groupoid
    f = {
        (i, j, k): {p: gpd.id(g[(i, k)][p]) for p in nerve[(i, j, k)]}
        for i in names
        for j in names
        for k in names
    }
    p0 = PrincipalDescent("p", cover, ctg, g, f)
    ok = principal_descent_validate(p0)
    assert not failing_laws(ok)
    bad_g = {k: dict(v) for k, v in g.items()}
    inner = dict(bad_g[("U", "V")])
    inner["b"] = "0"  # should be 1
    bad_g[("U", "V")] = inner
    bad = PrincipalDescent("bad", cover, ctg, bad_g, f)
    return principal_descent_validate(bad)


def api_mut_simplex_square():
    from .actions import equivariant_descent_audit, fin_identity

    defs = deffile.parse_document(fixture_equivariant_swap(), source="m")
    act = defs.cat_actions["sw"]
    from .groupoids import action_groupoid
    from .groups import cyclic_group
    from .actions import equivariant_base_validate

    z2 = cyclic_group(2)
    translation = {(h, g): z2.mul(h, g) for h in z2.elements for g in z2.elements}
    base = action_groupoid(z2, z2, translation, name="pair")
    eb = equivariant_base_validate(
        base, act.acting, {x: "*" for x in base.objects},
        {a: a.split("|", 1)[0] for a in base.arrows},
    )
    ident = fin_identity(act.cat)
    gammas = {e: {"0": ident, "1": ident} for e in ("e01", "e12", "e02")}
    phis = {
        ("e02", "e01", "e12"): {
            "0": {v: act.cat.ids[v] for v in act.cat.objects},
            "1": {"p": "s", "q": act.cat.ids["q"]},
        }
    }
    return equivariant_descent_audit(eb, act, gammas, phis)


def api_mut_gauge_equivariant():
    from .actions import FinFunctor, equivariant_descent_audit

    defs = deffile.parse_document(fixture_equivariant_swap(), source="m")
    act = defs.cat_actions["sw"]
    from .groupoids import action_groupoid
    from .groups import cyclic_group
    from .actions import equivariant_base_validate

    z2 = cyclic_group(2)
    translation = {(h, g): z2.mul(h, g) for h in z2.elements for g in z2.elements}
    base = action_groupoid(z2, z2, translation, name="pair")
    eb = equivariant_base_validate(
        base, act.acting, {x: "*" for x in base.objects},
        {a: a.split("|", 1)[0] for a in base.arrows},
    )
    cat = act.cat
    const = FinFunctor(cat, cat, {x: "p" for x in cat.objects}, {m: "1p" for m in cat.morphisms})
    fam = {"0": const, "1": const}
    return equivariant_descent_audit(eb, act, {"e01": fam})


def api_mut_equivariant_action():
    from .actions import (
        FinFunctor,
        GroupoidActionOnCategory,
        equivariant_functor_audit,
        fincat_validate,
    )
    from .groupoids import delooping
    from .groups import cyclic_group

    objects = ["p", "q"]
    morphisms = ["1p", "1q"]
    cat = fincat_validate(
        "disc2", objects, morphisms,
        {"1p": "p", "1q": "q"}, {"1p": "p", "1q": "q"},
        {("1p", "1p"): "1p", ("1q", "1q"): "1q"}, {"p": "1p", "q": "1q"},
    )
    bz2 = delooping(cyclic_group(2))
    act = GroupoidActionOnCategory(
        bz2, cat,
        {x: "*" for x in objects}, {m: "*" for m in morphisms},
        {("p", "0"): "p", ("q", "0"): "q", ("p", "1"): "q", ("q", "1"): "p"},
        {("1p", "0"): "1p", ("1q", "0"): "1q", ("1p", "1"): "1q", ("1q", "1"): "1p"},
    )
    const = FinFunctor(cat, cat, {"p": "p", "q": "p"}, {"1p": "1p", "1q": "1p"})
    return equivariant_functor_audit(const, act, act)


def api_mut_equivariant_moment():
    from .actions import (
        FinFunctor,
        GroupoidActionOnCategory,
        equivariant_functor_audit,
        fincat_validate,
    )
    from .groupoids import discrete_groupoid

    objects = ["p", "q"]
    morphisms = ["1p", "1q"]
    cat = fincat_validate(
        "disc2", objects, morphisms,
        {"1p": "p", "1q": "q"}, {"1p": "p", "1q": "q"},
        {("1p", "1p"): "1p", ("1q", "1q"): "1q"}, {"p": "1p", "q": "1q"},
    )
    acting = discrete_groupoid(["0", "1"])
    act = GroupoidActionOnCategory(
        acting, cat,
        {"p": "0", "q": "1"}, {"1p": "0", "1q": "1"},
        {("p", "1_0"): "p", ("q", "1_1"): "q"},
        {("1p", "1_0"): "1p", ("1q", "1_1"): "1q"},
    )
    swap = FinFunctor(cat, cat, {"p": "q", "q": "p"}, {"1p": "1q", "1q": "1p"})
    return equivariant_functor_audit(swap, act, act)


def _vect_family_two_component():
    from .reps import trivial_rep
    from .groupoids import action_groupoid
    from .groups import cyclic_group
    from .actions import vect_family_action

    z2 = cyclic_group(2)
    act = {(h, g): g for h in z2.elements for g in z2.elements}
    gpd = action_groupoid(z2, z2, act)  # two disjoint loop components
    return vect_family_action(trivial_rep(gpd))


def api_mut_action_moment():
    from .actions import GroupoidActionOnCategory, groupoid_action_audit

    base = _vect_family_two_component()
    eps1 = dict(base.eps1)
    m0 = base.cat.morphisms[0]
    eps1[m0] = "1" if eps1[m0] == "0" else "0"
    bad = GroupoidActionOnCategory(base.acting, base.cat, base.eps0, eps1, base.mu0, base.mu1)
    return groupoid_action_audit(bad)


def api_mut_action_unit():
    from .actions import GroupoidActionOnCategory, groupoid_action_audit

    defs = deffile.parse_document(fixture_equivariant_swap(), source="m")
    base = defs.cat_actions["sw"]
    mu0 = dict(base.mu0)
    mu0[("p", "0")] = "q"
    bad = GroupoidActionOnCategory(base.acting, base.cat, base.eps0, base.eps1, mu0, base.mu1)
    return groupoid_action_audit(bad)


def api_mut_action_moment_shift():
    from .actions import GroupoidActionOnCategory, groupoid_action_audit

    base = _vect_family_two_component()
    mu0 = dict(base.mu0)
    key = next(k for k in mu0 if base.eps0[mu0[k]] == "0")
    other = next(v for v in base.cat.objects if base.eps0[v] == "1")
    mu0[key] = other
    bad = GroupoidActionOnCategory(base.acting, base.cat, base.eps0, base.eps1, mu0, base.mu1)
    return groupoid_action_audit(bad)


def mutant_cell_interchange():
    doc = fixture_z3_z2()
    doc["two_reps"]["bad"] = {"kind": "mutate", "of": "tr", "eta_scale": {"1|0": "w"}}
    doc["audits"] = [
        {"run": "two_rep", "two_rep": "bad"},
        {"run": "cell_interchange", "two_rep": "bad"},
    ]
    return doc


FIXTURES["mut_cell_interchange"] = mutant_cell_interchange

API_MUTANTS = {
    "mut_interchange": api_mut_interchange,
    "mut_cell_component": api_mut_cell_component,
    "mut_cell_natural": api_mut_cell_natural,
    "mut_functor_on_morphisms": api_mut_functor_on_morphisms,
    "mut_unit_map": api_mut_unit_map,
    "mut_morphism_square": api_mut_morphism_square,
    "mut_morphism_natural": api_mut_morphism_natural,
    "mut_morphism_unit_square": api_mut_morphism_unit_square,
    "mut_morphism_component": api_mut_morphism_component,
    "mut_gauge_invertible": api_mut_gauge_invertible,
    "mut_morphism_prism": api_mut_morphism_prism,
    "mut_morphism_filler_boundary": api_mut_morphism_filler_boundary,
    "mut_two_morphism_square": api_mut_two_morphism_square,
    "mut_principal_boundary": api_mut_principal_boundary,
    "mut_simplex_square": api_mut_simplex_square,
    "mut_gauge_equivariant": api_mut_gauge_equivariant,
    "mut_equivariant_action": api_mut_equivariant_action,
    "mut_equivariant_moment": api_mut_equivariant_moment,
    "mut_action_moment": api_mut_action_moment,
    "mut_action_unit": api_mut_action_unit,
    "mut_action_moment_shift": api_mut_action_moment_shift,
}


def run_mutant(name, seed=0):
    if name in API_MUTANTS:
        return API_MUTANTS[name]()
    return run_fixture(name, seed=seed)


def mutant_failures(name, seed=0):
    return failing_laws(run_mutant(name, seed=seed))


def mutant_triangle_left_pair():
    # per-component-constant unitor shift: naturality survives (loops only),
    # the triangles quoting l across components do not
    doc = _z3_loops_base()
    doc["two_groups"]["bad"] = {
        "kind": "mutate", "of": "tg", "lunit": {"1": "1|1", "2": "1|2"},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "bad"}]
    return doc


def mutant_triangle_right_pair():
    doc = _z3_loops_base()
    doc["two_groups"]["bad"] = {
        "kind": "mutate", "of": "tg", "runit": {"1": "1|1", "2": "1|2"},
    }
    doc["audits"] = [{"run": "coherence", "two_group": "bad"}]
    return doc


def api_mut_action_compose():
    """Translating a loop category by the identity-composite disagrees with
    iterated translation while staying functorial in each step."""
    from .actions import GroupoidActionOnCategory, fincat_validate, groupoid_action_audit
    from .groupoids import delooping
    from .groups import cyclic_group

    cat = fincat_validate(
        "bz2cat", ["p"], ["1", "a"],
        {"1": "p", "a": "p"}, {"1": "p", "a": "p"},
        {("1", "1"): "1", ("1", "a"): "a", ("a", "1"): "a", ("a", "a"): "1"},
        {"p": "1"},
    )
    bz2 = delooping(cyclic_group(2))
    mu1 = {("1", "0"): "1", ("a", "0"): "a", ("1", "1"): "1", ("a", "1"): "1"}
    act = GroupoidActionOnCategory(
        bz2, cat, {"p": "*"}, {"1": "*", "a": "*"},
        {("p", "0"): "p", ("p", "1"): "p"}, mu1,
    )
    return groupoid_action_audit(act)


FIXTURES["mut_triangle_left_pair"] = mutant_triangle_left_pair
FIXTURES["mut_triangle_right_pair"] = mutant_triangle_right_pair
API_MUTANTS["mut_action_compose"] = api_mut_action_compose
MUTATION_MATRIX["mut_triangle_left_pair"] = {"unit-triangle", "unit-triangle-left"}
MUTATION_MATRIX["mut_triangle_right_pair"] = {"unit-triangle", "unit-triangle-right"}
MUTATION_MATRIX["mut_action_compose"] = {"action-compose"}
