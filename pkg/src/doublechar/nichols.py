"""Triangular setup data: graded algebra profile and simple-character tables.

A profile records the graded character of a braided graded algebra
whose components are weights of the double: component j sits in degree
-j when inducing from below (standard modules) and degree +j through
its dual when inducing from above (costandard modules).  The top
component must be one-dimensional; its weight and that weight's dual
drive all the twisting in the duality identities.

Profiles and simple tables are input data, validated here; nothing in
this module tries to compute them from a braiding.
"""

from __future__ import annotations

from .errors import InconsistencyError, InputError
from .graded import GradedChar, KElement, gc_dual, gc_mul


class NicholsProfile:
    """Graded character of the inducing algebra, one KElement per degree."""

    __slots__ = ("system", "components", "n_top", "lambda_v", "lambda_ov")

    def __init__(self, system, components):
        components = [
            k if isinstance(k, KElement) else KElement(k) for k in components
        ]
        if not components:
            raise InputError("profile invariant 'nonempty' violated: no components")
        n_top = len(components) - 1
        unit = KElement.of(system.unit)
        if components[0] != unit:
            raise InputError(
                "profile invariant 'bottom-is-unit' violated: "
                "component 0 must be the unit weight with multiplicity 1"
            )
        for j, comp in enumerate(components):
            if not comp.is_nonnegative():
                raise InputError(
                    "profile invariant 'nonnegative' violated: "
                    f"component {j} has a negative multiplicity"
                )
            if comp.is_zero():
                raise InputError(
                    "profile invariant 'no-gaps' violated: "
                    f"component {j} is empty"
                )
        top = components[n_top]
        if len(top.terms) != 1 or next(iter(top.terms.values())) != 1:
            raise InputError(
                "profile invariant 'one-dimensional-top' violated: "
                "the top component must be a single weight with multiplicity 1"
            )
        lam_v = next(iter(top.terms))
        if system.dim(lam_v) != 1:
            raise InputError(
                "profile invariant 'one-dimensional-top' violated: "
                "the top weight must be one-dimensional"
            )
        lam_ov = system.dual(lam_v)
        if system.product_one_dimensional(lam_v, lam_ov) != system.unit:
            raise InconsistencyError(
                "profile invariant 'invertible-top' violated: "
                "the top weight times its dual is not the unit"
            )
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "components", tuple(components))
        object.__setattr__(self, "n_top", n_top)
        object.__setattr__(self, "lambda_v", lam_v)
        object.__setattr__(self, "lambda_ov", lam_ov)

    def __setattr__(self, *a):
        raise AttributeError("NicholsProfile is immutable")

    @property
    def dim_b(self):
        """Total dimension of the inducing algebra."""
        return sum(k.dim(self.system) for k in self.components)

    def to_json(self, group_ref):
        return {
            "group": group_ref,
            "components": [
                {
                    "deg": j,
                    "weights": [{"w": w.label, "m": m} for w, m in k.items()],
                }
                for j, k in enumerate(self.components)
            ],
        }

    @classmethod
    def from_json(cls, obj, system):
        if not isinstance(obj, dict) or "components" not in obj:
            raise InputError("profile payload must have a 'components' list")
        by_deg = {}
        for entry in obj["components"]:
            j = entry.get("deg")
            if not isinstance(j, int) or j < 0:
                raise InputError("profile component degrees must be nonnegative integers")
            if j in by_deg:
                raise InputError(f"duplicate profile component degree {j}")
            terms = {}
            for item in entry["weights"]:
                w = system.parse_label(item["w"])
                m = item["m"]
                if not isinstance(m, int):
                    raise InputError("profile multiplicities must be integers")
                terms[w] = terms.get(w, 0) + m
            by_deg[j] = KElement(terms)
        if sorted(by_deg) != list(range(len(by_deg))):
            raise InputError(
                "profile invariant 'no-gaps' violated: "
                "component degrees must be 0..n_top without gaps"
            )
        return cls(system, [by_deg[j] for j in range(len(by_deg))])


def verma_char(profile, lam):
    """Standard module character: component j acts at degree -j."""
    system = profile.system
    base = KElement.of(lam)
    return GradedChar(
        {-j: comp.mul(base, system) for j, comp in enumerate(profile.components)}
    )


def coverma_char(profile, lam):
    """Costandard module character: dual components act at degree +j."""
    system = profile.system
    base = KElement.of(lam)
    return GradedChar(
        {
            j: comp.dual(system).mul(base, system)
            for j, comp in enumerate(profile.components)
        }
    )


def ind_char(profile, lam):
    """Character of the module induced from the group part alone."""
    system = profile.system
    return gc_mul(coverma_char(profile, system.unit), verma_char(profile, lam), system)


def verify_duality_identities(profile, lam):
    """Exact equalities tying duals, twists and shifts of standard and
    costandard characters.  Returns an ordered dict of named pass/fail
    flags; nothing is thrown on failure."""
    system = profile.system
    n = profile.n_top
    twisted = system.product_one_dimensional(profile.lambda_v, lam)
    lam_star = system.dual(lam)
    twisted_star = system.dual(twisted)

    e1 = gc_dual(coverma_char(profile, twisted), system).shift(n)
    e2 = coverma_char(profile, lam_star)
    e3 = gc_dual(verma_char(profile, lam), system)
    e4 = verma_char(profile, twisted_star).shift(n)

    return {
        "coverma_dual_matches_dual_weight": e1 == e2,
        "dual_weight_matches_verma_dual": e2 == e3,
        "verma_dual_matches_shifted_verma": e3 == e4,
        "ungraded_verma_dual": e3.eval_one() == verma_char(profile, twisted_star).eval_one(),
    }


class SimpleTable:
    """Graded characters of the simple modules, keyed by highest weight."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        data = dict(entries)
        for lam, char in data.items():
            if char.is_zero():
                raise InputError(
                    "simple-table invariant 'leading-term' violated: "
                    f"entry {lam} is zero"
                )
            if char.layer(0) != KElement.of(lam):
                raise InputError(
                    "simple-table invariant 'leading-term' violated: "
                    f"degree 0 of entry {lam} must be exactly {lam}"
                )
            if char.max_degree() > 0:
                raise InputError(
                    "simple-table invariant 'nonpositive-degrees' violated: "
                    f"entry {lam} has terms above degree 0"
                )
            if not char.is_nonnegative():
                raise InputError(
                    "simple-table invariant 'nonnegative' violated: "
                    f"entry {lam} has a negative multiplicity"
                )
        object.__setattr__(self, "entries", data)

    def __setattr__(self, *a):
        raise AttributeError("SimpleTable is immutable")

    def __contains__(self, lam):
        return lam in self.entries

    def __getitem__(self, lam):
        try:
            return self.entries[lam]
        except KeyError:
            raise InputError(f"simple table has no entry for weight {lam}") from None

    def weights(self):
        return sorted(self.entries)

    def to_json(self):
        return {
            "simples": [
                {"w": lam.label, "char": self.entries[lam].to_json()}
                for lam in self.weights()
            ]
        }

    @classmethod
    def from_json(cls, obj, system):
        if not isinstance(obj, dict) or "simples" not in obj:
            raise InputError("simple-table payload must have a 'simples' list")
        entries = {}
        for item in obj["simples"]:
            lam = system.parse_label(item["w"])
            if lam in entries:
                raise InputError(f"duplicate simple-table entry for {lam.label}")
            entries[lam] = GradedChar.from_json(item["char"], system)
        return cls(entries)


class LowestData:
    """For each table entry, the weight and degree of its lowest layer."""

    __slots__ = ("bar", "level")

    def __init__(self, table):
        bar = {}
        level = {}
        for lam in table.weights():
            char = table[lam]
            l = char.min_degree()
            bottom = char.layer(l)
            if len(bottom.terms) != 1:
                raise InconsistencyError(
                    "lowest-layer invariant 'single-weight' violated: "
                    f"entry {lam} has {len(bottom.terms)} weights in degree {l}"
                )
            bar[lam] = next(iter(bottom.terms))
            level[lam] = l
        seen = {}
        for lam, b in bar.items():
            if b in seen:
                raise InconsistencyError(
                    "lowest-layer invariant 'bijection' violated: "
                    f"entries {seen[b]} and {lam} share the lowest weight {b}"
                )
            seen[b] = lam
        if set(bar) != set(bar.values()):
            raise InconsistencyError(
                "lowest-layer invariant 'bijection' violated: "
                "the lowest-weight map does not permute the table's weights"
            )
        object.__setattr__(self, "bar", bar)
        object.__setattr__(self, "level", level)

    def __setattr__(self, *a):
        raise AttributeError("LowestData is immutable")


def lowest_data(table):
    return LowestData(table)
