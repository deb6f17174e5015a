"""Exact complex character tables of finite permutation groups.

The table is computed by Dixon's modular refinement of Burnside's class
matrix method: all work happens in a prime field F_p with p = 1 (mod
exponent), where every character value becomes a sum of powers of a
fixed primitive root.  Root multiplicities are recovered with a
discrete Fourier transform over F_p and reassembled as exact cyclotomic
integers.  The finished table is verified against the orthogonality
relations before it is returned, so a successfully constructed
CharacterTable is self-certifying.

Row order is canonical: ascending degree, then descending
lexicographic order of the tuple of value coordinates in the power
basis of the cyclotomic field.  The trivial character always lands in
row 0.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

from .cyclotomic import Cyclotomic, _degree, _power_table
from .errors import InconsistencyError
from .groups import conjugacy_classes
from .modp import (
    charpoly,
    is_prime,
    nullspace,
    poly_roots,
    primitive_root,
    rref,
    sqrt_mod,
)

_FORMAT = 1


def _working_prime(exponent, order):
    """Smallest prime p = 1 (mod exponent) with p*p > 4*order.

    Any such p is coprime to the group order, because each prime
    divisor of the order divides the exponent.
    """
    p = exponent + 1
    while True:
        if p * p > 4 * order and is_prime(p):
            return p
        p += exponent


class CharacterTable:
    """Irreducible complex characters of a finite group, exact values.

    values[i][j] is the value of the i-th character on the j-th
    conjugacy class, as a Cyclotomic of order dividing the group
    exponent.  Characters are sorted by (degree, canonical value
    order); row 0 is the trivial character.
    """

    __slots__ = ("group", "conj", "exponent", "values", "degrees")

    def __init__(self, group, conj, exponent, values, degrees):
        self.group = group
        self.conj = conj
        self.exponent = exponent
        self.values = values
        self.degrees = degrees

    @property
    def count(self):
        return len(self.values)

    def value(self, i, element_index):
        """Character i evaluated on a group element given by index."""
        return self.values[i][self.conj.class_of[element_index]]

    @classmethod
    def compute(cls, group, conj=None):
        if conj is None:
            conj = conjugacy_classes(group)
        e = group.exponent()
        rows = _dixon(group, conj, e)
        rows = _sorted_rows(rows, e)
        table = cls(
            group,
            conj,
            e,
            tuple(tuple(r) for r in rows),
            tuple(int(r[0].to_rational()) for r in rows),
        )
        table._verify()
        return table

    def _verify(self):
        group, conj = self.group, self.conj
        k = conj.count
        if len(self.values) != k:
            raise InconsistencyError("character count differs from class count")
        if sum(d * d for d in self.degrees) != group.order:
            raise InconsistencyError("degree squares do not sum to the group order")
        if any(not v.is_rational() or v.to_rational() != 1 for v in self.values[0]):
            raise InconsistencyError("trivial character is not in row 0")
        sizes = conj.sizes()
        inv = conj.inverse_class
        n = group.order
        for a in range(k):
            for b in range(a, k):
                acc = Cyclotomic.from_rational(0)
                for j in range(k):
                    acc = acc + self.values[a][j] * self.values[b][inv[j]] * sizes[j]
                want = n if a == b else 0
                if not (acc.is_rational() and acc.to_rational() == want):
                    raise InconsistencyError(
                        f"orthogonality fails for character rows {a} and {b}"
                    )

    # ---- serialization and caching ----

    def to_json(self):
        return {
            "format": _FORMAT,
            "group": self.group.to_json(),
            "exponent": self.exponent,
            "values": [
                [list(v.embed(self.exponent).coeffs) for v in row]
                for row in self.values
            ],
        }

    @classmethod
    def from_json(cls, obj, group, conj=None):
        if not isinstance(obj, dict) or obj.get("format") != _FORMAT:
            raise ValueError("unrecognized character table payload")
        e = obj["exponent"]
        if conj is None:
            conj = conjugacy_classes(group)
        values = tuple(
            tuple(Cyclotomic(e, coeffs) for coeffs in row) for row in obj["values"]
        )
        degrees = tuple(int(row[0].to_rational()) for row in values)
        table = cls(group, conj, e, values, degrees)
        table._verify()
        return table

    @classmethod
    def load_or_compute(cls, group, cache_dir=None, conj=None):
        """Reuse a cached table when possible, else compute and cache it."""
        if cache_dir is None:
            return cls.compute(group, conj)
        key = hashlib.sha256(group.content_key().encode()).hexdigest()
        path = os.path.join(cache_dir, f"chartable-{key}.json")
        if os.path.exists(path):
            try:
                with open(path, encoding="utf-8") as fh:
                    return cls.from_json(json.load(fh), group, conj)
            except (ValueError, KeyError, OSError):
                pass  # stale or corrupt entry; recompute below
        table = cls.compute(group, conj)
        os.makedirs(cache_dir, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(table.to_json(), fh, sort_keys=True, separators=(",", ":"))
            os.replace(tmp, path)
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
        return table


def _class_matrix(group, conj, i):
    """A[j][r] = number of x in class i with x^(-1) * rep_r in class j."""
    k = conj.count
    A = [[0] * k for _ in range(k)]
    cls_of = conj.class_of
    reps = conj.reps
    for x in conj.classes[i]:
        xi = group.inverse_index(x)
        for r in range(k):
            A[cls_of[group.mul_index(xi, reps[r])]][r] += 1
    return A


def _restrict(A, basis, pivots, p):
    """Matrix of A on the invariant subspace spanned by an RREF basis."""
    d = len(basis)
    cols = []
    for b in basis:
        img = [sum(A[r][c] * b[c] for c in range(len(b))) % p for r in range(len(b))]
        cols.append([img[pc] for pc in pivots])
    return [[cols[s][t] for s in range(d)] for t in range(d)]


def _split_spaces(group, conj, p):
    """Common eigenvectors of all class matrices over F_p, one per character."""
    k = conj.count
    full = [[1 if c == r else 0 for c in range(k)] for r in range(k)]
    spaces = [(full, list(range(k)))]
    for i in range(1, k):
        if all(len(b) == 1 for b, _ in spaces):
            break
        A = _class_matrix(group, conj, i)
        refined = []
        for basis, pivots in spaces:
            if len(basis) == 1:
                refined.append((basis, pivots))
                continue
            R = _restrict(A, basis, pivots, p)
            d = len(R)
            roots = poly_roots(charpoly(R, p), p)
            found = 0
            for root in roots:
                M = [[(R[r][c] - (root if r == c else 0)) % p for c in range(d)] for r in range(d)]
                coords = nullspace(M, p)
                if not coords:
                    continue
                amb = [
                    [sum(cv[t] * basis[t][c] for t in range(d)) % p for c in range(k)]
                    for cv in coords
                ]
                rr, pv = rref(amb, p)
                found += len(rr)
                refined.append((rr, pv))
            if found != d:
                raise InconsistencyError("class matrix failed to split a subspace")
        spaces = refined
    if any(len(b) != 1 for b, _ in spaces):
        raise InconsistencyError("class matrices did not separate all characters")
    return [b[0] for b, _ in spaces]


def _dixon(group, conj, e):
    """All irreducible character rows, unsorted, as lists of Cyclotomic."""
    n = group.order
    k = conj.count
    p = _working_prime(e, n)
    sizes = conj.sizes()
    inv_cls = conj.inverse_class
    vectors = _split_spaces(group, conj, p)

    # power maps: pm[j][s] = class of rep_j^s, for the Fourier lift
    pm = []
    for r in conj.reps:
        row = []
        cur = group.identity_index
        for _ in range(e):
            row.append(conj.class_of[cur])
            cur = group.mul_index(cur, r)
        pm.append(row)

    omega = pow(primitive_root(p), (p - 1) // e, p)
    omega_inv = pow(omega, -1, p)
    ipow = [1] * e
    for s in range(1, e):
        ipow[s] = (ipow[s - 1] * omega_inv) % p
    e_inv = pow(e, -1, p)
    table = _power_table(e)
    dim = _degree(e)
    size_inv = [pow(sz, -1, p) for sz in sizes]

    rows = []
    for w in vectors:
        if w[0] == 0:
            raise InconsistencyError("eigenvector vanishes on the identity class")
        scale = pow(w[0], -1, p)
        w = [(x * scale) % p for x in w]
        s = sum(w[r] * w[inv_cls[r]] * size_inv[r] for r in range(k)) % p
        deg_sq = (n * pow(s, -1, p)) % p
        deg = _sqrt_small(deg_sq, p)
        theta = [(deg * w[j] * size_inv[j]) % p for j in range(k)]
        row = []
        for j in range(k):
            coeffs = [0] * dim
            total = 0
            pmj = pm[j]
            for c in range(e):
                acc = 0
                for s_ in range(e):
                    acc += theta[pmj[s_]] * ipow[(c * s_) % e]
                m = (acc * e_inv) % p
                if m > deg:
                    raise InconsistencyError("root multiplicity exceeds the degree")
                total += m
                if m:
                    trow = table[c]
                    for t in range(dim):
                        coeffs[t] += m * trow[t]
            if total != deg:
                raise InconsistencyError("root multiplicities do not sum to the degree")
            row.append(Cyclotomic(e, coeffs))
        rows.append(row)
    return rows


def _sqrt_small(a, p):
    """The square root of a mod p lying in (0, p/2); degrees always do."""
    r = sqrt_mod(a, p)
    if r is None or r == 0:
        raise InconsistencyError("degree square has no usable square root")
    return min(r, p - r)


def _sorted_rows(rows, e):
    def key(row):
        deg = row[0].to_rational()
        coords = tuple(tuple(-c for c in v.embed(e).coeffs) for v in row)
        return (deg, coords)

    return sorted(rows, key=key)
