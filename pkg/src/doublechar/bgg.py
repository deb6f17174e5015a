"""Reciprocity engine: simple-basis decompositions, projective covers,
induced modules and tensor products of projectives.

Everything here is character bookkeeping over the Laurent ring: the
standard-filtration multiplicities of a projective cover are the
bar-involuted composition multiplicities of the matching Verma, the
costandard multiplicities are a twisted shift of the same data, and
induced modules decompose against the weight series of the simples.
The engine consumes validated profiles and simple tables; it never
tries to prove that the filtrations exist.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InconsistencyError, InputError, SpanError
from .graded import GradedChar, KElement
from .laurent import LaurentInt
from .nichols import coverma_char, ind_char, lowest_data, verma_char

SIMPLE_PROJECTIVE = "simple_projective"
NON_SIMPLE = "non_simple"


def decompose_into_simples(char, table):
    """Coefficients of a graded character in the simple basis.

    Eliminates leading terms from the top degree down; each simple
    character starts with its own weight in degree 0, so the top layer
    of the residual is always read off verbatim.  Raises SpanError
    (carrying the residual) when a coefficient would be negative or a
    weight has no simple entry to cancel it.
    """
    out = {}
    residual = char
    guard = sum(abs(m) for k in char.layers.values() for m in k.terms.values()) + 1
    depth = 0
    if table.entries:
        depth = max(0, -min(c.min_degree() for c in table.entries.values()))
    guard *= depth + 2
    steps = 0
    while not residual.is_zero():
        steps += 1
        if steps > guard:
            raise SpanError(
                "decomposition did not terminate; the simple table is corrupt",
                residual=residual,
            )
        d = residual.max_degree()
        layer = residual.layer(d)
        for w, m in layer.items():
            if m < 0:
                raise SpanError(
                    f"character is not in the nonnegative span of the simples: "
                    f"weight {w} has coefficient {m} at degree {d}",
                    residual=residual,
                )
            if w not in table:
                raise SpanError(
                    f"character is not in the span of the simples: "
                    f"no simple entry for weight {w} (degree {d})",
                    residual=residual,
                )
            out.setdefault(w, {})[d] = m
            residual = residual - table[w].shift(d).scale(m)
    return {w: LaurentInt(terms) for w, terms in sorted(out.items())}


class BGGReport:
    """All reciprocity data for one profile and simple table.

    Matrix rows and columns are indexed by weights in canonical order.
    verma_simple[lam][mu] is the graded multiplicity of the simple mu
    in the Verma of lam; projective_verma[mu][lam] the multiplicity of
    the Verma of lam in the projective cover of mu; projective_coverma
    the costandard analogue.  The ungraded route (from a plain
    composition-multiplicity matrix) leaves the fields that need the
    grading set to None.
    """

    __slots__ = (
        "system",
        "weights",
        "n_top",
        "verma_simple",
        "projective_verma",
        "projective_coverma",
        "projective_chars",
        "cartan",
        "flags",
    )

    def __init__(
        self,
        system,
        weights,
        n_top,
        verma_simple,
        projective_verma,
        projective_coverma,
        projective_chars,
        cartan,
        flags,
    ):
        self.system = system
        self.weights = weights
        self.n_top = n_top
        self.verma_simple = verma_simple
        self.projective_verma = projective_verma
        self.projective_coverma = projective_coverma
        self.projective_chars = projective_chars
        self.cartan = cartan
        self.flags = flags

    def dim_projective(self, mu, dim_b):
        return sum(
            coeff.eval_one() * dim_b * self.system.dim(lam)
            for lam, coeff in self.projective_verma[mu].items()
        )

    def to_json(self):
        def matrix(m):
            return {
                row.label: {
                    col.label: coeff.to_json() for col, coeff in sorted(m[row].items())
                }
                for row in sorted(m)
            }

        obj = {
            "format": 1,
            "kind": "bgg_report",
            "weights": [w.label for w in self.weights],
            "n_top": self.n_top,
            "verma_simple": matrix(self.verma_simple),
            "projective_verma": matrix(self.projective_verma),
            "cartan": matrix(self.cartan),
            "flags": {w.label: self.flags[w] for w in self.weights},
        }
        if self.projective_coverma is not None:
            obj["projective_coverma"] = matrix(self.projective_coverma)
        if self.projective_chars is not None:
            obj["projective_chars"] = {
                w.label: self.projective_chars[w].to_json() for w in self.weights
            }
        return obj


def _require_full_table(system, table):
    missing = [w.label for w in system.weights if w not in table]
    if missing:
        raise InputError(
            "simple table is incomplete; missing entries for " + ", ".join(missing)
        )


def bgg_matrices(profile, table):
    """The full reciprocity report for a graded profile and simple table."""
    system = profile.system
    _require_full_table(system, table)
    weights = list(system.weights)
    lowest = lowest_data(table)

    verma_simple = {}
    for lam in weights:
        verma_simple[lam] = decompose_into_simples(verma_char(profile, lam), table)

    projective_verma = {
        mu: {
            lam: verma_simple[lam][mu].bar()
            for lam in weights
            if mu in verma_simple[lam]
        }
        for mu in weights
    }

    lam_v = profile.lambda_v
    projective_coverma = {}
    for mu in weights:
        row = {}
        for lam in weights:
            # the Verma whose composition series governs W(lam) is
            # twisted by the top weight: lam_ov * lam
            twisted = system.product_one_dimensional(profile.lambda_ov, lam)
            coeff = verma_simple[twisted].get(mu)
            if coeff is not None:
                row[lam] = coeff.bar().shift(-profile.n_top)
        projective_coverma[mu] = row

    projective_chars = {}
    for mu in weights:
        total = GradedChar.zero()
        for lam, coeff in projective_verma[mu].items():
            total = total + verma_char(profile, lam).scale(coeff)
        projective_chars[mu] = total

    cartan = {
        mu: decompose_into_simples(projective_chars[mu], table) for mu in weights
    }

    flags = {}
    for lam in weights:
        dec = verma_simple[lam]
        is_simple = list(dec) == [lam] and dec[lam] == LaurentInt.one()
        flags[lam] = SIMPLE_PROJECTIVE if is_simple else NON_SIMPLE

    report = BGGReport(
        system,
        weights,
        profile.n_top,
        verma_simple,
        projective_verma,
        projective_coverma,
        projective_chars,
        cartan,
        flags,
    )
    _check_report(report, profile, table, lowest)
    return report


def _check_report(report, profile, table, lowest):
    """Internal consistency: the two filtrations of each projective
    carry the same character, and the maximal-shift summand obeys the
    twisted lowest-weight law."""
    system = profile.system
    for mu in report.weights:
        rebuilt = GradedChar.zero()
        for lam, coeff in report.projective_coverma[mu].items():
            rebuilt = rebuilt + coverma_char(profile, lam).scale(coeff)
        if rebuilt != report.projective_chars[mu]:
            raise InconsistencyError(
                f"standard and costandard filtrations of the projective of "
                f"{mu} carry different characters"
            )
        top_shift = None
        top_lam = None
        for lam, coeff in report.projective_verma[mu].items():
            s = coeff.max_degree()
            if top_shift is None or s > top_shift or (s == top_shift and lam < top_lam):
                top_shift, top_lam = s, lam
        want_shift = lowest.level[mu] + report.n_top
        want_lam = system.product_one_dimensional(profile.lambda_ov, lowest.bar[mu])
        if top_shift != want_shift or top_lam != want_lam:
            raise InconsistencyError(
                f"maximal Verma shift of the projective of {mu} is "
                f"{top_lam} at t^{top_shift}, expected {want_lam} at t^{want_shift}"
            )


def ind_into_projectives(profile, table, mu, report=None):
    """Decompose the module induced from the weight mu into projectives.

    The coefficient of the projective of lam is the bar of the series
    with which mu appears in the simple of lam.  Cross-checked against
    the product formula for the induced character.
    """
    system = profile.system
    _require_full_table(system, table)
    if report is None:
        report = bgg_matrices(profile, table)
    out = {}
    for lam in system.weights:
        series = table[lam].weight_series().get(mu)
        if series is not None:
            out[lam] = series.bar()
    rebuilt = GradedChar.zero()
    for lam, coeff in out.items():
        rebuilt = rebuilt + report.projective_chars[lam].scale(coeff)
    if rebuilt != ind_char(profile, mu):
        raise InconsistencyError(
            f"projective expansion of the induced module of {mu} does not "
            f"match its character; the simple table is inconsistent"
        )
    return out


def tensor_projectives(report, profile, mu, nu):
    """Expand the tensor product of two projective covers into induced
    modules: sum over pairs of a costandard coefficient of the first
    and a standard coefficient of the second, attached to the fusion
    of the indexing weights.  Returns weight -> Laurent coefficient."""
    system = profile.system
    out = {}
    for lam, c_w in report.projective_coverma[mu].items():
        for kap, c_m in report.projective_verma[nu].items():
            coeff = c_w * c_m
            if coeff.is_zero():
                continue
            for omega, n in system.fusion(lam, kap).items():
                cur = out.get(omega, LaurentInt.zero())
                out[omega] = cur + coeff * n
    out = {w: c for w, c in sorted(out.items()) if not c.is_zero()}
    dim_b = profile.dim_b
    dim_ind = dim_b * dim_b
    got = sum(c.eval_one() * dim_ind * system.dim(w) for w, c in out.items())
    want = report.dim_projective(mu, dim_b) * report.dim_projective(nu, dim_b)
    if got != want:
        raise InconsistencyError(
            f"tensor of projectives of {mu} and {nu} has dimension {got}, "
            f"expected {want}"
        )
    return out


def classify_vermas(report):
    """Weight -> simple_projective or non_simple, straight off the flags."""
    return {w: report.flags[w] for w in report.weights}


class MLMatrixData:
    """Ungraded composition multiplicities [Verma : simple], as shipped
    for examples whose graded refinement is not available."""

    __slots__ = ("rows", "dim_b", "n_top")

    def __init__(self, rows, dim_b, n_top):
        for lam, k in rows.items():
            if not k.is_nonnegative():
                raise InputError(
                    f"multiplicity row of {lam} has a negative entry"
                )
            if k.multiplicity(lam) < 1:
                raise InputError(
                    f"multiplicity row of {lam} must contain its own weight"
                )
        object.__setattr__(self, "rows", dict(rows))
        object.__setattr__(self, "dim_b", dim_b)
        object.__setattr__(self, "n_top", n_top)

    def __setattr__(self, *a):
        raise AttributeError("MLMatrixData is immutable")

    @classmethod
    def from_json(cls, obj, system):
        if not isinstance(obj, dict) or obj.get("kind") != "ml_matrix":
            raise InputError("expected an ml_matrix payload")
        rows = {}
        for item in obj["rows"]:
            lam = system.parse_label(item["w"])
            if lam in rows:
                raise InputError(f"duplicate multiplicity row for {lam.label}")
            terms = {}
            for f in item["factors"]:
                w = system.parse_label(f["w"])
                m = f["m"]
                if not isinstance(m, int):
                    raise InputError("multiplicities must be integers")
                terms[w] = terms.get(w, 0) + m
            rows[lam] = KElement(terms)
        dim_b = obj.get("dim_b")
        n_top = obj.get("n_top")
        if not isinstance(dim_b, int) or dim_b < 1:
            raise InputError("ml_matrix payload needs a positive dim_b")
        if not isinstance(n_top, int) or n_top < 0:
            raise InputError("ml_matrix payload needs a nonnegative n_top")
        return cls(rows, dim_b, n_top)

    def to_json(self, group_ref):
        return {
            "format": 1,
            "kind": "ml_matrix",
            "group": group_ref,
            "dim_b": self.dim_b,
            "n_top": self.n_top,
            "rows": [
                {
                    "w": lam.label,
                    "factors": [{"w": w.label, "m": m} for w, m in k.items()],
                }
                for lam, k in sorted(self.rows.items())
            ],
        }

    def _check_dims(self, system):
        """If the matrix determines the simple dimensions uniquely,
        insist they come out as positive integers."""
        weights = sorted(self.rows)
        k = len(weights)
        idx = {w: i for i, w in enumerate(weights)}
        aug = []
        for lam in weights:
            row = [Fraction(0)] * k
            for w, m in self.rows[lam].terms.items():
                if w not in idx:
                    raise InputError(
                        f"row of {lam} mentions {w}, which has no row of its own"
                    )
                row[idx[w]] = Fraction(m)
            row.append(Fraction(self.dim_b * system.dim(lam)))
            aug.append(row)
        # Gaussian elimination over the rationals
        r = 0
        for c in range(k):
            piv = next((i for i in range(r, k) if aug[i][c]), None)
            if piv is None:
                return  # underdetermined; nothing to certify
            aug[r], aug[piv] = aug[piv], aug[r]
            aug[r] = [x / aug[r][c] for x in aug[r]]
            for i in range(k):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            r += 1
        for i in range(k):
            v = aug[i][k]
            if v.denominator != 1 or v <= 0:
                raise InconsistencyError(
                    "composition matrix does not admit positive integral "
                    "simple dimensions"
                )


def ungraded_bgg(ml, system):
    """Reciprocity report from ungraded composition multiplicities.

    Every Laurent entry is a constant; the fields that need the grading
    (costandard matrix, assembled characters) stay None.
    """
    ml._check_dims(system)
    weights = sorted(ml.rows)
    missing = [w.label for w in system.weights if w not in ml.rows]
    if missing:
        raise InputError(
            "composition matrix is incomplete; missing rows for " + ", ".join(missing)
        )

    verma_simple = {
        lam: {
            w: LaurentInt.monomial(m) for w, m in ml.rows[lam].items()
        }
        for lam in weights
    }
    projective_verma = {
        mu: {
            lam: verma_simple[lam][mu]
            for lam in weights
            if mu in verma_simple[lam]
        }
        for mu in weights
    }
    cartan = {}
    for mu in weights:
        row = {}
        for nu in weights:
            total = 0
            for lam, c in projective_verma[mu].items():
                total += c.eval_one() * verma_simple[lam].get(nu, LaurentInt.zero()).eval_one()
            if total:
                row[nu] = LaurentInt.monomial(total)
        cartan[mu] = row
    flags = {
        lam: SIMPLE_PROJECTIVE
        if list(verma_simple[lam]) == [lam] and verma_simple[lam][lam] == LaurentInt.one()
        else NON_SIMPLE
        for lam in weights
    }
    return BGGReport(
        system,
        weights,
        ml.n_top,
        verma_simple,
        projective_verma,
        None,
        None,
        cartan,
        flags,
    )


def summand_sort_key(system, lam, coeff):
    """Canonical rendering order for filtration summands: lowest shift
    first, then largest multiplicity, then smaller modules, larger
    classes and canonical weight order."""
    return (
        coeff.min_degree(),
        -coeff.eval_one(),
        system.dim(lam),
        -len(system.conj.classes[lam.class_index]),
        lam.class_index,
        lam.irrep_index,
    )
