"""Weights of the double of a finite group and their fusion ring.

A weight is a pair (conjugacy class, irreducible character of the
centralizer of the class representative); it labels an irreducible
Yetter-Drinfeld module over the group.  Its pair character assigns to
commuting pairs (g, h) the trace of h on the g-graded component, and
fusion multiplicities come from averaging products of pair characters
over the commuting variety.

Labels are canonical: "g<i>r<j>" for class i and row j of the
centralizer character table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .chartable import CharacterTable
from .cyclotomic import CYC_ZERO, Cyclotomic
from .errors import InconsistencyError, InputError
from .groups import centralizer, conjugacy_classes, perm_inv, perm_mul

_LABEL_RE = re.compile(r"^g(\d+)r(\d+)$")


@dataclass(frozen=True, order=True)
class Weight:
    """A (class, centralizer irrep) pair, ordered and hashable."""

    class_index: int
    irrep_index: int

    @property
    def label(self):
        return f"g{self.class_index}r{self.irrep_index}"

    def __repr__(self):
        return self.label


class WeightSystem:
    """All weights of a finite group, with dimensions, fusion and duals."""

    def __init__(self, group, cache_dir=None):
        self.group = group
        self.conj = conjugacy_classes(group)
        self.centralizers = []
        self.cent_conj = []
        self.tables = []
        shared = {}
        for rep in self.conj.reps:
            z = centralizer(group, group.elements[rep])
            key = z.content_key()
            if key not in shared:
                cd = conjugacy_classes(z)
                shared[key] = (z, cd, CharacterTable.load_or_compute(z, cache_dir, cd))
            self.centralizers.append(shared[key][0])
            self.cent_conj.append(shared[key][1])
            self.tables.append(shared[key][2])
        self.weights = [
            Weight(i, j)
            for i in range(self.conj.count)
            for j in range(self.tables[i].count)
        ]
        self.by_label = {w.label: w for w in self.weights}
        self.unit = Weight(0, 0)
        self._fusion_cache = {}
        self._dual_cache = {}

    # ---- basic data ----

    def parse_label(self, label):
        m = _LABEL_RE.match(label)
        if not m:
            raise InputError(f"malformed weight label {label!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if i >= self.conj.count or j >= self.tables[i].count:
            raise InputError(f"weight label {label!r} is out of range for this group")
        return Weight(i, j)

    def dim(self, w):
        return len(self.conj.classes[w.class_index]) * self.tables[w.class_index].degrees[w.irrep_index]

    def is_one_dimensional(self, w):
        return self.dim(w) == 1

    # ---- pair characters ----

    def pair_char(self, w, g_index, h_index):
        """Trace of (g, h) on the weight w; zero off the commuting variety."""
        conj = self.conj
        if conj.class_of[g_index] != w.class_index:
            return CYC_ZERO
        group = self.group
        g = group.elements[g_index]
        h = group.elements[h_index]
        if perm_mul(g, h) != perm_mul(h, g):
            return CYC_ZERO
        x = conj.conjugator[g_index]
        moved = perm_mul(perm_inv(x), perm_mul(h, x))
        i = w.class_index
        z = self.centralizers[i]
        cls = self.cent_conj[i].class_of[z.index[moved]]
        return self.tables[i].values[w.irrep_index][cls]

    def _tensor_value(self, lam, mu, g_index, h_index):
        """Pair character of lam (x) mu at (g, h): a convolution over the
        group coordinate with the centralizer coordinate fixed."""
        group = self.group
        conj = self.conj
        b = mu.class_index
        total = CYC_ZERO
        for g1 in conj.classes[lam.class_index]:
            g2 = group.mul_index(group.inverse_index(g1), g_index)
            if conj.class_of[g2] != b:
                continue
            v1 = self.pair_char(lam, g1, h_index)
            if v1.is_zero():
                continue
            v2 = self.pair_char(mu, g2, h_index)
            if v2.is_zero():
                continue
            total = total + v1 * v2
        return total

    # ---- fusion ----

    def fusion(self, lam, mu):
        """Decomposition of lam (x) mu as a multiset of weights.

        Returns a dict weight -> positive multiplicity.  Raises
        InconsistencyError if the averaged inner products fail to be
        nonnegative integers or the dimension count does not close.
        """
        key = (min(lam, mu), max(lam, mu))
        hit = self._fusion_cache.get(key)
        if hit is not None:
            return dict(hit)
        group = self.group
        conj = self.conj
        n = group.order
        support = sorted(
            {
                conj.class_of[group.mul_index(x, y)]
                for x in conj.classes[lam.class_index]
                for y in conj.classes[mu.class_index]
            }
        )
        result = {}
        for i in support:
            z = self.centralizers[i]
            cd = self.cent_conj[i]
            table = self.tables[i]
            sums = [CYC_ZERO] * cd.count
            for g_index in conj.classes[i]:
                x = conj.conjugator[g_index]
                x_inv = perm_inv(x)
                for c in z.elements:
                    h_index = group.index[perm_mul(x, perm_mul(c, x_inv))]
                    val = self._tensor_value(lam, mu, g_index, h_index)
                    if not val.is_zero():
                        cls = cd.class_of[z.index[c]]
                        sums[cls] = sums[cls] + val
            for j in range(table.count):
                acc = CYC_ZERO
                for cls in range(cd.count):
                    if sums[cls].is_zero():
                        continue
                    acc = acc + sums[cls] * table.values[j][cls].conjugate()
                mult = _as_count(acc, n, lam, mu)
                if mult:
                    result[Weight(i, j)] = mult
        if sum(m * self.dim(w) for w, m in result.items()) != self.dim(lam) * self.dim(mu):
            raise InconsistencyError(
                f"fusion of {lam} and {mu} does not preserve dimension"
            )
        self._fusion_cache[key] = dict(result)
        return result

    def dual(self, lam):
        """The unique weight pairing with lam into the unit weight."""
        hit = self._dual_cache.get(lam)
        if hit is not None:
            return hit
        group = self.group
        conj = self.conj
        n = group.order
        b = conj.inverse_class[lam.class_index]
        found = []
        for nu in self.weights:
            if nu.class_index != b:
                continue
            acc = CYC_ZERO
            for h_index in range(n):
                v = self._tensor_value(lam, nu, group.identity_index, h_index)
                if not v.is_zero():
                    acc = acc + v
            mult = _as_count(acc, n, lam, nu)
            if mult == 1:
                found.append(nu)
            elif mult:
                raise InconsistencyError(
                    f"unit weight appears {mult} times in {lam} (x) {nu}"
                )
        if len(found) != 1:
            raise InconsistencyError(f"weight {lam} does not have a unique dual")
        self._dual_cache[lam] = found[0]
        return found[0]

    def product_one_dimensional(self, onedim, lam):
        """Fusion with a one-dimensional weight; always a single weight."""
        if self.dim(onedim) != 1:
            raise InputError(f"weight {onedim} is not one-dimensional")
        out = self.fusion(onedim, lam)
        if len(out) != 1 or next(iter(out.values())) != 1:
            raise InconsistencyError(
                f"product of {onedim} and {lam} is not a single weight"
            )
        return next(iter(out))

    def census(self):
        """One row per weight: label, class size, irrep degree, dimension."""
        rows = []
        for w in self.weights:
            rows.append(
                {
                    "label": w.label,
                    "class_size": len(self.conj.classes[w.class_index]),
                    "irrep_degree": self.tables[w.class_index].degrees[w.irrep_index],
                    "dim": self.dim(w),
                }
            )
        return rows


def _as_count(acc, n, lam, mu):
    """Divide an averaged inner product by |G| and demand a count."""
    v = acc / n
    if not v.is_rational():
        raise InconsistencyError(
            f"fusion multiplicity for {lam} (x) {mu} is not rational"
        )
    q = Fraction(v.to_rational())
    if q.denominator != 1 or q < 0:
        raise InconsistencyError(
            f"fusion multiplicity for {lam} (x) {mu} is not a nonnegative integer"
        )
    return int(q)
