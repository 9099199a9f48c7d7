"""Finite groups, homomorphisms and right actions as validated association tables.

Elements are opaque string labels with a fixed total order (input order); every
law is checked exhaustively at validation time. Values are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .errors import (
    BadHomomorphism,
    IdentityNotFixed,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotAutomorphism,
    NotContravariant,
)

MAX_ORDER = 256


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    elements: tuple
    table: dict = field(compare=False, hash=False)
    identity: str = ""
    inverse: dict = field(default_factory=dict, compare=False, hash=False)

    def mul(self, a, b):
        return self.table[(a, b)]

    def inv(self, a):
        return self.inverse[a]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def conj(self, g, h):
        """g^-1 h g"""
        return self.mul(self.mul(self.inv(g), h), g)


def group_validate(elements, mul, identity=None, name="group", max_order=MAX_ORDER) -> FiniteGroup:
    """Exhaustively validate a multiplication table and return the group.

    ``mul`` maps every ordered pair to an element. Inverses are computed.
    """
    elements = tuple(elements)
    if len(elements) > max_order:
        raise ValueError(f"group order {len(elements)} exceeds cap {max_order}")
    if len(set(elements)) != len(elements):
        raise ValueError("duplicate element labels")
    table = {}
    for a in elements:
        for b in elements:
            c = mul[(a, b)] if not callable(mul) else mul(a, b)
            if c not in elements:
                raise ValueError(f"product {a}*{b} = {c!r} not an element")
            table[(a, b)] = c
    for a in elements:
        for b in elements:
            for c in elements:
                if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]:
                    raise NonAssociative(
                        f"({a}*{b})*{c} != {a}*({b}*{c})", witness=(a, b, c)
                    )
    if identity is None:
        for e in elements:
            if all(table[(e, a)] == a and table[(a, e)] == a for a in elements):
                identity = e
                break
        else:
            raise NoIdentity("no two-sided identity")
    else:
        if not all(table[(identity, a)] == a and table[(a, identity)] == a for a in elements):
            raise NoIdentity(f"{identity!r} is not a two-sided identity", witness=identity)
    inverse = {}
    for a in elements:
        for b in elements:
            if table[(a, b)] == identity and table[(b, a)] == identity:
                inverse[a] = b
                break
        else:
            raise NoInverse(f"no inverse for {a}", witness=a)
    return FiniteGroup(name, elements, table, identity, inverse)


def cyclic_group(n: int, name=None) -> FiniteGroup:
    els = [str(i) for i in range(n)]
    mul = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return group_validate(els, mul, identity="0", name=name or f"Z{n}")


def trivial_group(name="1") -> FiniteGroup:
    return cyclic_group(1, name=name)


def _perm_label(p: tuple) -> str:
    return "".join(str(i) for i in p)


def symmetric_group(n: int, name=None) -> FiniteGroup:
    """S_n on {0..n-1}; an element's label lists the images of 0..n-1."""
    perms = sorted(permutations(range(n)))
    els = [_perm_label(p) for p in perms]
    by_label = {_perm_label(p): p for p in perms}
    mul = {}
    for pa in perms:
        for pb in perms:
            # (pa*pb)(i) = pa(pb(i))
            comp = tuple(pa[pb[i]] for i in range(n))
            mul[(_perm_label(pa), _perm_label(pb))] = _perm_label(comp)
    g = group_validate(els, mul, identity=_perm_label(tuple(range(n))), name=name or f"S{n}")
    assert by_label  # labels are self-describing
    return g


@dataclass(frozen=True)
class GroupHom:
    src: FiniteGroup
    dst: FiniteGroup
    map: dict = field(compare=False, hash=False)

    def __call__(self, a):
        return self.map[a]


def group_hom(src: FiniteGroup, dst: FiniteGroup, mapping) -> GroupHom:
    m = {a: (mapping[a] if not callable(mapping) else mapping(a)) for a in src.elements}
    for a in src.elements:
        if m[a] not in dst.elements:
            raise BadHomomorphism(f"image {m[a]!r} of {a} not in target", witness=a)
    for a in src.elements:
        for b in src.elements:
            if m[src.mul(a, b)] != dst.mul(m[a], m[b]):
                raise BadHomomorphism(f"f({a}{b}) != f({a})f({b})", witness=(a, b))
    if m[src.identity] != dst.identity:
        raise BadHomomorphism("identity not preserved", witness=src.identity)
    return GroupHom(src, dst, m)


def identity_hom(g: FiniteGroup) -> GroupHom:
    return group_hom(g, g, {a: a for a in g.elements})


def trivial_hom(src: FiniteGroup, dst: FiniteGroup) -> GroupHom:
    return group_hom(src, dst, {a: dst.identity for a in src.elements})


@dataclass(frozen=True)
class RightAction:
    """Right action of ``actor`` on ``target`` by group automorphisms."""

    actor: FiniteGroup
    target: FiniteGroup
    act: dict = field(compare=False, hash=False)

    def __call__(self, g, h):
        return self.act[(g, h)]


def right_action_validate(actor: FiniteGroup, target: FiniteGroup, act) -> RightAction:
    table = {}
    for g in actor.elements:
        for h in target.elements:
            v = act[(g, h)] if not callable(act) else act(g, h)
            if v not in target.elements:
                raise ValueError(f"action value {v!r} not in target")
            table[(g, h)] = v
    for h in target.elements:
        if table[(actor.identity, h)] != h:
            raise IdentityNotFixed(f"identity moves {h}", witness=h)
    for g in actor.elements:
        imgs = [table[(g, h)] for h in target.elements]
        if len(set(imgs)) != len(imgs):
            raise NotAutomorphism(f"{g} does not act bijectively", witness=g)
        for h1 in target.elements:
            for h2 in target.elements:
                if table[(g, target.mul(h1, h2))] != target.mul(table[(g, h1)], table[(g, h2)]):
                    raise NotAutomorphism(
                        f"{g} does not act multiplicatively at ({h1},{h2})", witness=g
                    )
    for g1 in actor.elements:
        for g2 in actor.elements:
            for h in target.elements:
                if table[(g2, table[(g1, h)])] != table[(actor.mul(g1, g2), h)]:
                    raise NotContravariant(
                        f"act({g2}, act({g1}, {h})) != act({g1}{g2}, {h})",
                        witness=(g1, g2, h),
                    )
    return RightAction(actor, target, table)


def trivial_action(actor: FiniteGroup, target: FiniteGroup) -> RightAction:
    return right_action_validate(actor, target, {(g, h): h for g in actor for h in target})


def inversion_action(actor: FiniteGroup, target: FiniteGroup) -> RightAction:
    """The nontrivial element(s) of a Z/2-like actor act by inversion."""
    act = {}
    for g in actor.elements:
        for h in target.elements:
            act[(g, h)] = h if g == actor.identity else target.inv(h)
    return right_action_validate(actor, target, act)


def conjugation_action(g: FiniteGroup) -> RightAction:
    """G acting on itself on the right by conjugation: h |-> g^-1 h g."""
    return right_action_validate(g, g, {(a, h): g.conj(a, h) for a in g for h in g})
