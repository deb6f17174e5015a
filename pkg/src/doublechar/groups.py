"""Finite permutation groups as explicit element lists.

Elements are 0-based image tuples, canonically ordered lexicographically.
The scale of interest is small (order cap 10,000 by default), so closure is
a plain BFS and no stabilizer chains are kept.
"""

from __future__ import annotations

import json
from math import gcd

from .errors import InputError

DEFAULT_MAX_ORDER = 10_000


def perm_mul(a, b):
    """Composition a after b: (a*b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def perm_inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def identity_perm(degree):
    return tuple(range(degree))


def perm_order(a):
    """Order = lcm of cycle lengths."""
    seen = [False] * len(a)
    out = 1
    for i in range(len(a)):
        if not seen[i]:
            ln, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = a[j]
                ln += 1
            out = out * ln // gcd(out, ln)
    return out


def check_perm(p, degree):
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise InputError(f"not a permutation of 0..{degree - 1}: {list(p)}")
    return tuple(p)


class FiniteGroup:
    """A finite permutation group with an explicit, canonically sorted element list."""

    def __init__(self, degree, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity = identity_perm(degree)
        self.identity_index = self.index[self.identity]
        self._exponent = None
        self._inverse = None

    @classmethod
    def from_generators(cls, degree, gens, max_order=DEFAULT_MAX_ORDER):
        gens = [check_perm(g, degree) for g in gens]
        e = identity_perm(degree)
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = perm_mul(x, g)
                    if y not in seen:
                        if len(seen) >= max_order:
                            raise InputError(
                                f"group order exceeds the cap ({max_order}); "
                                "raise --max-group-order if this is intended"
                            )
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return cls(degree, gens, sorted(seen))

    @property
    def order(self):
        return len(self.elements)

    def exponent(self):
        if self._exponent is None:
            ex = 1
            for g in self.elements:
                o = perm_order(g)
                ex = ex * o // gcd(ex, o)
            self._exponent = ex
        return self._exponent

    def inverse_index(self, i):
        if self._inverse is None:
            self._inverse = [self.index[perm_inv(g)] for g in self.elements]
        return self._inverse[i]

    def mul_index(self, i, j):
        return self.index[perm_mul(self.elements[i], self.elements[j])]

    def is_abelian(self):
        for a in self.generators:
            for b in self.generators:
                if perm_mul(a, b) != perm_mul(b, a):
                    return False
        return True

    def content_key(self):
        """Canonical string identifying the group by its full element list,
        so different generating sets of the same closure share cache entries."""
        return json.dumps(
            {"degree": self.degree, "elements": [list(g) for g in self.elements]},
            sort_keys=True,
            separators=(",", ":"),
        )

    def to_json(self):
        return {
            "format": 1,
            "degree": self.degree,
            "generators": [list(g) for g in self.generators],
        }

    @classmethod
    def from_json(cls, obj, max_order=DEFAULT_MAX_ORDER):
        if not isinstance(obj, dict):
            raise InputError("group file must be a JSON object")
        if obj.get("format", 1) != 1:
            raise InputError(f"unsupported group file format: {obj.get('format')!r}")
        try:
            degree = int(obj["degree"])
            gens = [list(map(int, g)) for g in obj.get("generators", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed group file: {exc}") from exc
        if degree < 1:
            raise InputError("degree must be at least 1")
        return cls.from_generators(degree, gens, max_order=max_order)

    def __repr__(self):
        return f"FiniteGroup(degree={self.degree}, order={self.order})"


def close_group(degree, gens, max_order=DEFAULT_MAX_ORDER):
    return FiniteGroup.from_generators(degree, gens, max_order=max_order)


class ConjugacyData:
    """Conjugacy classes with canonical representatives and fixed conjugators.

    Representatives are the lexicographically minimal members; classes are
    ordered by representative, so the identity class is always class 0.
    For every element g the stored conjugator x_g satisfies
    x_g * rep * x_g^(-1) = g; x_rep is the identity.
    """

    def __init__(self, group):
        self.group = group
        n = group.order
        elements = group.elements
        class_of = [-1] * n
        conjugator = [None] * n
        classes = []
        reps = []
        gen_pairs = [(s, perm_inv(s)) for s in group.generators]
        for start in range(n):
            if class_of[start] >= 0:
                continue
            cid = len(classes)
            rep = elements[start]
            class_of[start] = cid
            conjugator[start] = group.identity
            members = [start]
            queue = [start]
            while queue:
                i = queue.pop()
                gi = elements[i]
                for s, s_inv in gen_pairs:
                    j = group.index[perm_mul(perm_mul(s, gi), s_inv)]
                    if class_of[j] < 0:
                        class_of[j] = cid
                        conjugator[j] = perm_mul(s, conjugator[i])
                        members.append(j)
                        queue.append(j)
            members.sort()
            classes.append(members)
            reps.append(start)
        self.classes = classes
        self.reps = reps
        self.class_of = class_of
        self.conjugator = conjugator
        self.inverse_class = [
            class_of[group.inverse_index(r)] for r in reps
        ]

    @property
    def count(self):
        return len(self.classes)

    def sizes(self):
        return [len(c) for c in self.classes]


def conjugacy_classes(group):
    return ConjugacyData(group)


def _closure_of(degree, gens):
    e = identity_perm(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def centralizer(group, g):
    """The subgroup commuting with g, on the same points."""
    g = tuple(g)
    if g not in group.index:
        raise InputError("element does not belong to the group")
    members = [h for h in group.elements if perm_mul(h, g) == perm_mul(g, h)]
    gens = []
    have = {group.identity}
    for h in members:
        if h not in have:
            gens.append(h)
            have = _closure_of(group.degree, gens)
    return FiniteGroup(group.degree, gens, members)
