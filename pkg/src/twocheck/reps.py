"""Representation categories of finite groupoids over exact scalars: objects,
equivariant morphisms, hom-space bases, biproducts, kernels and cokernels.

A group representation is the special case of a representation of the
delooping groupoid; that keeps one carrier type for everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DimMismatch,
    GroupoidMismatch,
    NonConstantRank,
    NotFunctorial,
    NotInvertible,
)
from .groupoids import FiniteGroupoid, delooping
from .groups import FiniteGroup
from .matrices import Mat, block_diag, from_columns
from .scalars import Field, QQ


@dataclass(frozen=True)
class GroupoidRep:
    name: str
    groupoid: FiniteGroupoid
    field: Field
    dims: dict = field(compare=False, hash=False)
    mats: dict = field(compare=False, hash=False)

    def dim(self, x):
        return self.dims[x]

    def mat(self, a) -> Mat:
        return self.mats[a]

    def same_data(self, other: "GroupoidRep") -> bool:
        return (
            self.groupoid is other.groupoid
            and self.field == other.field
            and self.dims == other.dims
            and self.mats == other.mats
        )


def rep_validate(groupoid: FiniteGroupoid, dims, mats, field=QQ, name="rep") -> GroupoidRep:
    dims = dict(dims)
    mats = dict(mats)
    for x in groupoid.objects:
        if x not in dims or dims[x] < 0:
            raise DimMismatch(f"missing dimension at {x}", witness=x)
    for a in groupoid.arrows:
        m = mats.get(a)
        if m is None or m.rows != dims[groupoid.tgt[a]] or m.cols != dims[groupoid.src[a]]:
            raise DimMismatch(f"matrix shape wrong at {a}", witness=a)
        if m.field != field:
            raise DimMismatch(f"matrix field wrong at {a}", witness=a)
        if not m.is_invertible():
            raise NotInvertible(f"matrix at {a} not invertible", witness=a)
    for x in groupoid.objects:
        if not mats[groupoid.id(x)].is_identity():
            raise NotFunctorial(f"identity arrow at {x} not the identity matrix", witness=x)
    for a in groupoid.arrows:
        for b in groupoid.arrows:
            if groupoid.composable(a, b):
                if mats[groupoid.comp(a, b)] != mats[a] @ mats[b]:
                    raise NotFunctorial(f"composition fails at ({a},{b})", witness=(a, b))
    return GroupoidRep(name, groupoid, field, dims, mats)


def trivial_rep(groupoid: FiniteGroupoid, field=QQ, dim=1, name="triv") -> GroupoidRep:
    dims = {x: dim for x in groupoid.objects}
    mats = {a: Mat.identity(field, dim) for a in groupoid.arrows}
    return rep_validate(groupoid, dims, mats, field=field, name=name)


def zero_rep(groupoid: FiniteGroupoid, field=QQ, name="zero") -> GroupoidRep:
    return trivial_rep(groupoid, field=field, dim=0, name=name)


def group_rep(g: FiniteGroup, mats, field=QQ, name="rep", gpd=None) -> GroupoidRep:
    """Representation of a group as a rep of its delooping; ``mats`` maps
    group elements to matrices."""
    b = gpd if gpd is not None else delooping(g)
    dim = mats[g.identity].rows
    return rep_validate(b, {"*": dim}, dict(mats), field=field, name=name)


def regular_rep(g: FiniteGroup, field=QQ, gpd=None) -> GroupoidRep:
    """Left regular representation by permutation matrices."""
    n = len(g.elements)
    index = {e: i for i, e in enumerate(g.elements)}
    mats = {}
    for a in g.elements:
        m = [[field.zero] * n for _ in range(n)]
        for e in g.elements:
            m[index[g.mul(a, e)]][index[e]] = field.one
        mats[a] = Mat(field, m)
    return group_rep(g, mats, field=field, name=f"reg-{g.name}", gpd=gpd)


def sign_rep_s3(s3: FiniteGroup, field=QQ, gpd=None) -> GroupoidRep:
    def sign(label):
        inversions = sum(
            1
            for i in range(len(label))
            for j in range(i + 1, len(label))
            if label[i] > label[j]
        )
        return 1 if inversions % 2 == 0 else -1

    mats = {e: Mat(field, [[sign(e)]]) for e in s3.elements}
    return group_rep(s3, mats, field=field, name="sign", gpd=gpd)


def standard_rep_s3(s3: FiniteGroup, field=QQ, gpd=None) -> GroupoidRep:
    """Two-dimensional irreducible of S3 over the rationals: the permutation
    action on the plane x0+x1+x2 = 0 in the basis e0-e1, e1-e2."""
    basis = [(1, -1, 0), (0, 1, -1)]

    def perm_image(label, vec):
        out = [0, 0, 0]
        for i, c in enumerate(vec):
            out[int(label[i])] += c
        return tuple(out)

    def coords(vec):
        # vec sums to zero: vec = a*(e0-e1) + b*(e1-e2) with a = v0, b = v0+v1
        return (vec[0], vec[0] + vec[1])

    mats = {}
    for e in s3.elements:
        cols = [coords(perm_image(e, b)) for b in basis]
        mats[e] = Mat(field, [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]])
    return group_rep(s3, mats, field=field, name="std", gpd=gpd)


def precompose_group_rep(rep: GroupoidRep, auto) -> GroupoidRep:
    """rep ∘ auto for an automorphism given as an arrow relabeling map."""
    mats = {a: rep.mats[auto(a)] for a in rep.groupoid.arrows}
    return GroupoidRep(f"{rep.name}∘", rep.groupoid, rep.field, dict(rep.dims), mats)


@dataclass(frozen=True)
class RepMorphism:
    src: GroupoidRep
    dst: GroupoidRep
    comps: dict = field(compare=False, hash=False)

    def at(self, x) -> Mat:
        return self.comps[x]

    def __eq__(self, other):
        return isinstance(other, RepMorphism) and self.comps == other.comps


def rep_hom_validate(src: GroupoidRep, dst: GroupoidRep, comps) -> RepMorphism:
    if src.groupoid is not dst.groupoid:
        raise GroupoidMismatch("morphism between reps of different groupoids")
    comps = dict(comps)
    g = src.groupoid
    for x in g.objects:
        m = comps.get(x)
        if m is None or m.rows != dst.dims[x] or m.cols != src.dims[x]:
            raise DimMismatch(f"component shape wrong at {x}", witness=x)
    for a in g.arrows:
        x, y = g.src[a], g.tgt[a]
        if comps[y] @ src.mats[a] != dst.mats[a] @ comps[x]:
            raise NotFunctorial(f"equivariance fails at {a}", witness=a)
    return RepMorphism(src, dst, comps)


def hom_compose(f2: RepMorphism, f1: RepMorphism) -> RepMorphism:
    """f2 after f1."""
    return RepMorphism(
        f1.src, f2.dst, {x: f2.comps[x] @ f1.comps[x] for x in f1.comps}
    )


def hom_identity(rep: GroupoidRep) -> RepMorphism:
    return RepMorphism(
        rep, rep, {x: Mat.identity(rep.field, rep.dims[x]) for x in rep.groupoid.objects}
    )


def hom_scale(f: RepMorphism, c) -> RepMorphism:
    return RepMorphism(f.src, f.dst, {x: m.scale(c) for x, m in f.comps.items()})


def hom_add(f: RepMorphism, g: RepMorphism) -> RepMorphism:
    return RepMorphism(f.src, f.dst, {x: f.comps[x] + g.comps[x] for x in f.comps})


def hom_inverse(f: RepMorphism) -> RepMorphism:
    return RepMorphism(f.dst, f.src, {x: m.inverse() for x, m in f.comps.items()})


def direct_sum(r1: GroupoidRep, r2: GroupoidRep, name=None) -> GroupoidRep:
    if r1.groupoid is not r2.groupoid:
        raise GroupoidMismatch("direct sum across different groupoids")
    dims = {x: r1.dims[x] + r2.dims[x] for x in r1.groupoid.objects}
    mats = {
        a: block_diag(r1.field, [r1.mats[a], r2.mats[a]]) for a in r1.groupoid.arrows
    }
    return GroupoidRep(name or f"{r1.name}+{r2.name}", r1.groupoid, r1.field, dims, mats)


def hom_space_basis(src: GroupoidRep, dst: GroupoidRep):
    """Exact basis of the space of equivariant morphisms, ordered by the
    reduced-row-echelon pivot order of the naturality system."""
    if src.groupoid is not dst.groupoid:
        raise GroupoidMismatch("hom space across different groupoids")
    g = src.groupoid
    fld = src.field
    # unknowns: entries of f_x (dst.dims[x] x src.dims[x]) per object, row-major
    offsets, total = {}, 0
    for x in g.objects:
        offsets[x] = total
        total += dst.dims[x] * src.dims[x]

    def var(x, i, j):
        return offsets[x] + i * src.dims[x] + j

    rows = []
    for a in g.arrows:
        x, y = g.src[a], g.tgt[a]
        # f_y @ src(a) - dst(a) @ f_x = 0, entrywise (i over dst.dims[y], j over src.dims[x])
        for i in range(dst.dims[y]):
            for j in range(src.dims[x]):
                row = [fld.zero] * total
                for k in range(src.dims[y]):
                    row[var(y, i, k)] = row[var(y, i, k)] + src.mats[a].entries[k][j]
                for k in range(dst.dims[x]):
                    row[var(x, k, j)] = row[var(x, k, j)] - dst.mats[a].entries[i][k]
                rows.append(row)
    if not rows:
        rows = [[fld.zero] * total]
    system = Mat(fld, rows)
    basis = []
    for vec in system.nullspace():
        comps = {}
        for x in g.objects:
            m = [
                [vec.entries[var(x, i, j)][0] for j in range(src.dims[x])]
                for i in range(dst.dims[x])
            ]
            comps[x] = Mat(fld, m)
        basis.append(rep_hom_validate(src, dst, comps))
    return basis


def kernel_cokernel(f: RepMorphism):
    """Kernel and cokernel reps with their canonical mono/epi; requires
    constant rank across objects (otherwise NonConstantRank names a pair)."""
    src, dst = f.src, f.dst
    g = src.groupoid
    fld = src.field
    ranks = {x: f.comps[x].rank() for x in g.objects}
    vals = sorted(set(ranks.values()))
    if len(vals) > 1:
        lo = next(x for x in g.objects if ranks[x] == vals[0])
        hi = next(x for x in g.objects if ranks[x] == vals[-1])
        raise NonConstantRank(f"rank {vals[0]} at {lo} vs {vals[-1]} at {hi}", witness=(lo, hi))

    ker_basis = {x: f.comps[x].nullspace() for x in g.objects}
    ker_dims = {x: len(ker_basis[x]) for x in g.objects}
    ker_mats = {}
    incl = {x: from_columns(fld, ker_basis[x], rows=src.dims[x]) for x in g.objects}
    for a in g.arrows:
        x, y = g.src[a], g.tgt[a]
        img = src.mats[a] @ incl[x]
        if ker_dims[y] == 0:
            ker_mats[a] = Mat.zeros(fld, 0, ker_dims[x])
        else:
            ker_mats[a] = incl[y].solve(img)
    kernel = GroupoidRep("ker", g, fld, ker_dims, ker_mats)
    mono = RepMorphism(kernel, src, incl)

    # cokernel: complement coordinates after the image columns
    proj = {}
    cok_dims = {}
    for x in g.objects:
        m = f.comps[x]
        # image basis: nonzero rows of rref(m^T), written as columns
        rt, rpiv = m.transpose().rref()
        imvecs = [Mat(fld, [[v] for v in rt.entries[i]]) for i in range(len(rpiv))]
        im = from_columns(fld, imvecs) if imvecs else Mat.zeros(fld, dst.dims[x], 0)
        n = dst.dims[x]
        # extend image basis to a full basis by standard vectors
        chosen = im
        extras = []
        for j in range(n):
            e = Mat(fld, [[fld.one if i == j else fld.zero] for i in range(n)])
            cand = chosen.hstack(e) if chosen.cols else e
            if cand.rank() > chosen.cols:
                chosen = cand
                extras.append(e)
        full = chosen
        cok_dims[x] = n - im.cols
        # projection: coordinates in the full basis, keeping the extra part
        inv = full.inverse() if n else Mat.zeros(fld, 0, 0)
        proj[x] = Mat(fld, inv.entries[im.cols :], cols=n) if n else Mat.zeros(fld, 0, 0)
    cok_mats = {}
    for a in g.arrows:
        x, y = g.src[a], g.tgt[a]
        # induced map: solve rho_cok(a) @ proj_x = proj_y @ dst(a)
        rhs = proj[y] @ dst.mats[a]
        if cok_dims[x] == 0:
            cok_mats[a] = Mat.zeros(fld, cok_dims[y], 0)
        else:
            # proj_x is surjective: solve via transposes
            sol = proj[x].transpose().solve(rhs.transpose())
            cok_mats[a] = sol.transpose()
    cokernel = GroupoidRep("coker", g, fld, cok_dims, cok_mats)
    epi = RepMorphism(dst, cokernel, proj)
    return kernel, cokernel, mono, epi


def rep_eq(r1: GroupoidRep, r2: GroupoidRep) -> bool:
    return r1.same_data(r2)


def find_iso(r1: GroupoidRep, r2: GroupoidRep, search_range=3):
    """Search the hom space for an invertible element; small deterministic
    integer combinations of the basis. Returns a RepMorphism or None."""
    basis = hom_space_basis(r1, r2)
    if not basis:
        return None
    from itertools import product

    coeffs = range(0, search_range)
    for combo in product(coeffs, repeat=len(basis)):
        if all(c == 0 for c in combo):
            continue
        cand = None
        for c, b in zip(combo, basis):
            term = hom_scale(b, r1.field.of(c))
            cand = term if cand is None else hom_add(cand, term)
        if all(m.is_invertible() for m in cand.comps.values()):
            return rep_hom_validate(r1, r2, cand.comps)
    return None


def all_one_dim_reps(groupoid: FiniteGroupoid, field=QQ):
    """All one-dimensional representations, tree-normalized: spanning-tree
    arrows map to 1 and vertex loops to roots of unity, per component."""
    comps = groupoid.components()
    per_component = []
    for comp in comps:
        base = comp[0]
        # BFS spanning tree from base; path[x] is an arrow base -> x
        path = {base: groupoid.id(base)}
        frontier = [base]
        while frontier:
            nxt = []
            for x in frontier:
                for a in sorted(groupoid.arrows_from(x), key=str):
                    y = groupoid.tgt[a]
                    if y in comp and y not in path:
                        path[y] = groupoid.comp(a, path[x])
                        nxt.append(y)
            frontier = nxt

        loops = [a for a in groupoid.arrows if groupoid.src[a] == base and groupoid.tgt[a] == base]
        n = len(loops)
        roots = field.roots_of_unity(max(n, 1))
        # enumerate multiplicative characters of the vertex group by brute force
        chars = []
        from itertools import product as iproduct

        for assign in iproduct(range(len(roots)), repeat=n):
            char = {loops[i]: roots[assign[i]] for i in range(n)}
            ok = True
            for a in loops:
                for b in loops:
                    c = groupoid.comp(a, b)
                    if char[c] != char[a] * char[b]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                chars.append(char)
        per_component.append((comp, path, chars))
    # combine choices across components
    from itertools import product as iproduct

    choices = [range(len(chars)) for (_, _, chars) in per_component]
    reps = []
    for pick in iproduct(*choices):
        mats = {}
        dims = {x: 1 for x in groupoid.objects}
        for (comp, path, chars), k in zip(per_component, pick):
            char = chars[k]
            for a in groupoid.arrows:
                if groupoid.src[a] not in comp:
                    continue
                # value = char(path_tgt^-1 ∘ a ∘ path_src)
                loop = groupoid.comp(
                    groupoid.inv(path[groupoid.tgt[a]]),
                    groupoid.comp(a, path[groupoid.src[a]]),
                )
                mats[a] = Mat(field, [[char[loop]]])
        reps.append(
            rep_validate(groupoid, dims, mats, field=field, name=f"chi{len(reps)}")
        )
    return reps
