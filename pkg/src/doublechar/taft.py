"""Rank-one oracle: the quantum line over a cyclic group, done by brute
force.

Everything downstream trusts closed formulas; this module instead
builds the actual n-dimensional module with explicit matrices over
Q(zeta_n), scans for singular vectors by exact linear algebra, and
reads composition series off the matrix structure.  Closed-form and
matrix routes are compared at every step; a mismatch raises
OracleError rather than picking a side.

Weights here are named by exponent pairs (r, s): class of the r-th
power of the cycle, character sending the cycle to q^s.  The canonical
row order of the character table does not list exponents in order for
every n, so the translation between (r, s) and row labels goes through
the table values, never through index arithmetic.
"""

from __future__ import annotations

from .cyclotomic import CYC_ONE, CYC_ZERO, zeta
from .errors import InputError, OracleError
from .graded import GradedChar, KElement
from .groups import close_group
from .nichols import NicholsProfile, SimpleTable
from .weights import Weight, WeightSystem


class TaftParams:
    """Cyclic group of order n with a fixed primitive root of unity,
    plus the exponent-to-row translation for its weights."""

    __slots__ = ("n", "q", "group", "system", "exp_to_row", "row_to_exp")

    def __init__(self, n, cache_dir=None):
        if not isinstance(n, int) or n < 2:
            raise InputError("the cyclic rank-one case needs an integer n >= 2")
        q = zeta(n)
        if q ** n != CYC_ONE or any(q ** k == CYC_ONE for k in range(1, n)):
            raise OracleError("chosen root of unity is not primitive")
        cycle = tuple((i + 1) % n for i in range(n))
        group = close_group(n, [cycle])
        system = WeightSystem(group, cache_dir=cache_dir)
        # element sigma^a starts with a, so sorted order puts class a at
        # index a; rows, however, must be matched by table values
        table = system.tables[0]
        if table.count != n or system.conj.count != n:
            raise OracleError("cyclic group data has the wrong shape")
        exp_to_row = {}
        gen_class = system.conj.class_of[group.index[cycle]]
        for s in range(n):
            target = zeta(n, s)
            hits = [
                j for j in range(table.count) if table.values[j][gen_class] == target
            ]
            if len(hits) != 1:
                raise OracleError(
                    f"character with generator value q^{s} is not unique in the table"
                )
            exp_to_row[s] = hits[0]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "exp_to_row", exp_to_row)
        object.__setattr__(
            self, "row_to_exp", {j: s for s, j in exp_to_row.items()}
        )

    def __setattr__(self, *a):
        raise AttributeError("TaftParams is immutable")

    def weight_of(self, r, s):
        """The weight with class exponent r and character exponent s."""
        return Weight(r % self.n, self.exp_to_row[s % self.n])

    def rs_of(self, w):
        return (w.class_index, self.row_to_exp[w.irrep_index])

    def aliases(self):
        """label -> "r,s" display names for every weight."""
        out = {}
        for w in self.system.weights:
            r, s = self.rs_of(w)
            out[w.label] = f"{r},{s}"
        return out

    def all_rs(self):
        return [(r, s) for r in range(self.n) for s in range(self.n)]


def q_integer(q, k):
    """1 + q + ... + q^(k-1)."""
    acc = CYC_ZERO
    for i in range(k):
        acc = acc + q ** i
    return acc


def lowering_coeffs(params, r, s):
    """Structure constants of the raising action on the chain basis:
    index k carries [k]_q * (1 - q^(r+s+k-1)), k = 1..n-1."""
    q = params.q
    return [
        q_integer(q, k) * (CYC_ONE - q ** ((r + s + k - 1) % params.n))
        for k in range(1, params.n)
    ]


def head_length(params, r, s):
    """First k with a vanishing chain coefficient, or n if none vanishes."""
    coeffs = lowering_coeffs(params, r, s)
    for k, c in enumerate(coeffs, start=1):
        if c.is_zero():
            return k
    return params.n


def simple_char(params, r, s):
    """Graded character of the simple head: the first head_length rungs
    of the chain, one degree apiece."""
    d = head_length(params, r, s)
    return GradedChar(
        {-k: KElement.of(params.weight_of(r + k, s + k)) for k in range(d)}
    )


def build_profile_and_table(params):
    """Profile with single-weight components (j, j) and the full simple
    table over all n^2 weights."""
    n = params.n
    components = [KElement.of(params.weight_of(j, j)) for j in range(n)]
    profile = NicholsProfile(params.system, components)
    entries = {}
    for r, s in params.all_rs():
        entries[params.weight_of(r, s)] = simple_char(params, r, s)
    return profile, SimpleTable(entries)


class VermaMatrices:
    """Explicit n-dimensional module for one weight: two diagonal
    group-like actions, a raising and a lowering ladder operator, plus
    the verification results derived from them."""

    __slots__ = (
        "params",
        "r",
        "s",
        "g1",
        "g2",
        "raising",
        "lowering",
        "coeffs",
        "singular_indices",
        "head_dim",
        "series",
    )

    def __init__(self, params, r, s):
        n = params.n
        q = params.q
        r %= n
        s %= n
        g1 = _diag([q ** ((r + k) % n) for k in range(n)])
        g2 = _diag([q ** ((s + k) % n) for k in range(n)])
        coeffs = lowering_coeffs(params, r, s)
        raising = _zeros(n)
        for k in range(1, n):
            raising[k - 1][k] = coeffs[k - 1]
        lowering = _zeros(n)
        for k in range(n - 1):
            lowering[k + 1][k] = CYC_ONE
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "g1", g1)
        object.__setattr__(self, "g2", g2)
        object.__setattr__(self, "raising", raising)
        object.__setattr__(self, "lowering", lowering)
        object.__setattr__(self, "coeffs", coeffs)
        self._verify()

    def __setattr__(self, *a):
        raise AttributeError("VermaMatrices is immutable")

    def _verify(self):
        params, n, q = self.params, self.params.n, self.params.q
        r, s = self.r, self.s

        # distinct diagonal weights: every invariant subspace is then a
        # span of basis vectors
        pairs = [((r + k) % n, (s + k) % n) for k in range(n)]
        if len(set(pairs)) != n:
            raise OracleError("chain weights are not pairwise distinct")

        # group-likes commute and scale the ladder operators by q^(-1)/q
        if _mat_mul(self.g1, self.g2) != _mat_mul(self.g2, self.g1):
            raise OracleError("group-like actions do not commute")
        q_inv = q ** (n - 1)
        for g in (self.g1, self.g2):
            if _mat_mul(g, self.raising) != _scale(_mat_mul(self.raising, g), q_inv):
                raise OracleError("raising operator does not have bidegree (1,1)")
            if _mat_mul(g, self.lowering) != _scale(_mat_mul(self.lowering, g), q):
                raise OracleError("lowering operator does not have bidegree (-1,-1)")

        # nilpotency
        if not _is_zero_matrix(_mat_pow(self.raising, n)):
            raise OracleError("raising operator is not nilpotent of order n")
        if not _is_zero_matrix(_mat_pow(self.lowering, n)):
            raise OracleError("lowering operator is not nilpotent of order n")

        # singular vectors: kernel of the raising matrix, computed by
        # exact elimination, must consist of basis vectors
        kernel = _cyc_nullspace(self.raising)
        kernel_indices = set()
        for vec in kernel:
            support = [k for k, x in enumerate(vec) if not x.is_zero()]
            if len(support) != 1:
                raise OracleError("kernel of the raising operator is not diagonal")
            kernel_indices.add(support[0])
        formula_zeros = {k for k, c in enumerate(self.coeffs, start=1) if c.is_zero()}
        if kernel_indices != {0} | formula_zeros:
            raise OracleError(
                "matrix kernel disagrees with the coefficient formula: "
                f"kernel {sorted(kernel_indices)}, formula {sorted({0} | formula_zeros)}"
            )
        singular = sorted(formula_zeros)
        head = head_length(params, r, s)
        if singular and singular[0] != head:
            raise OracleError("head length disagrees with the first singular index")
        if not singular and head != n:
            raise OracleError("simple chain must have head length n")

        # the span of the tail from the first singular index is a
        # submodule; any cut above it fails to be one
        if head < n:
            for mat in (self.g1, self.g2, self.raising, self.lowering):
                if not _tail_invariant(mat, head):
                    raise OracleError("tail span at the singular index is not invariant")
            for cut in range(1, head):
                if _tail_invariant(self.raising, cut):
                    raise OracleError(
                        f"unexpected invariant tail above the singular index (cut {cut})"
                    )

        # composition series: segments of the chain between singular indices
        cuts = [0] + singular + [n]
        series = []
        for a, b in zip(cuts, cuts[1:]):
            factor_r, factor_s = (r + a) % n, (s + a) % n
            if head_length(params, factor_r, factor_s) != b - a:
                raise OracleError(
                    f"segment [{a},{b}) does not match the head length of "
                    f"({factor_r},{factor_s})"
                )
            series.append(((factor_r, factor_s), -a))
        object.__setattr__(self, "singular_indices", tuple(singular))
        object.__setattr__(self, "head_dim", head)
        object.__setattr__(self, "series", tuple(series))


def explicit_matrices(params, r, s):
    return VermaMatrices(params, r, s)


def composition_series(params, r, s):
    """Factors of the chain module as ((r, s), shift) pairs, top first."""
    return explicit_matrices(params, r, s).series


# ---- matrix helpers over the cyclotomics ----


def _zeros(n):
    return [[CYC_ZERO for _ in range(n)] for _ in range(n)]


def _diag(values):
    n = len(values)
    m = _zeros(n)
    for i, v in enumerate(values):
        m[i][i] = v
    return m


def _scale(m, c):
    return [[x * c for x in row] for row in m]


def _mat_mul(a, b):
    n = len(a)
    out = _zeros(n)
    for i in range(n):
        for j in range(n):
            acc = CYC_ZERO
            for k in range(n):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            out[i][j] = acc
    return out


def _mat_pow(m, e):
    n = len(m)
    out = _diag([CYC_ONE] * n)
    for _ in range(e):
        out = _mat_mul(out, m)
    return out


def _is_zero_matrix(m):
    return all(x.is_zero() for row in m for x in row)


def _tail_invariant(mat, cut):
    """True when columns cut..n-1 have support only in rows cut..n-1."""
    n = len(mat)
    return all(
        mat[i][j].is_zero() for j in range(cut, n) for i in range(cut)
    )


def _cyc_nullspace(mat):
    """Right nullspace basis by Gauss-Jordan over the cyclotomics."""
    n = len(mat)
    m = [list(row) for row in mat]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(n):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [CYC_ZERO] * n
        v[free] = CYC_ONE
        for row, c in enumerate(pivots):
            v[c] = -m[row][free]
        basis.append(v)
    return basis
