"""Formal characters: integer combinations of weights, graded by degree.

KElement is a finite multiset of weights with integer multiplicities,
the ungraded character of a finite-dimensional module.  GradedChar
attaches a degree to every layer, so it is a Laurent polynomial in t
whose coefficients are KElements.  Products need fusion, so the
operations that multiply or dualize take the WeightSystem as an
argument; everything else is system-free bookkeeping.
"""

from __future__ import annotations

from .errors import InputError
from .laurent import LaurentInt


class KElement:
    """An integer linear combination of weights."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = dict(terms)
        object.__setattr__(self, "terms", {w: m for w, m in data.items() if m})

    def __setattr__(self, *a):
        raise AttributeError("KElement is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of(cls, weight, mult=1):
        return cls({weight: mult})

    def items(self):
        return sorted(self.terms.items())

    def __add__(self, other):
        out = dict(self.terms)
        for w, m in other.terms.items():
            out[w] = out.get(w, 0) + m
        return KElement(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, m in other.terms.items():
            out[w] = out.get(w, 0) - m
        return KElement(out)

    def __neg__(self):
        return KElement({w: -m for w, m in self.terms.items()})

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return KElement({w: m * k for w, m in self.terms.items()})

    __rmul__ = __mul__

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_nonnegative(self):
        return all(m > 0 for m in self.terms.values())

    def multiplicity(self, w):
        return self.terms.get(w, 0)

    def dim(self, system):
        return sum(m * system.dim(w) for w, m in self.terms.items())

    def mul(self, other, system):
        out = {}
        for w1, m1 in self.terms.items():
            for w2, m2 in other.terms.items():
                for w3, n in system.fusion(w1, w2).items():
                    out[w3] = out.get(w3, 0) + m1 * m2 * n
        return KElement(out)

    def dual(self, system):
        return KElement({system.dual(w): m for w, m in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, KElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, m in self.items():
            parts.append(f"{m}*{w.label}" if m != 1 else w.label)
        return " + ".join(parts)


class GradedChar:
    """A Laurent polynomial in t with KElement coefficients."""

    __slots__ = ("layers",)

    def __init__(self, layers=()):
        data = {}
        for d, k in dict(layers).items():
            if not isinstance(k, KElement):
                k = KElement(k)
            if k:
                data[d] = k
        object.__setattr__(self, "layers", data)

    def __setattr__(self, *a):
        raise AttributeError("GradedChar is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of(cls, weight, deg=0, mult=1):
        return cls({deg: KElement.of(weight, mult)})

    def degrees(self):
        return sorted(self.layers)

    def layer(self, d):
        return self.layers.get(d, KElement.zero())

    def min_degree(self):
        if not self.layers:
            raise InputError("zero character has no degrees")
        return min(self.layers)

    def max_degree(self):
        if not self.layers:
            raise InputError("zero character has no degrees")
        return max(self.layers)

    def is_zero(self):
        return not self.layers

    def __bool__(self):
        return bool(self.layers)

    def __add__(self, other):
        out = dict(self.layers)
        for d, k in other.layers.items():
            out[d] = out.get(d, KElement.zero()) + k
        return GradedChar(out)

    def __sub__(self, other):
        out = dict(self.layers)
        for d, k in other.layers.items():
            out[d] = out.get(d, KElement.zero()) - k
        return GradedChar(out)

    def __neg__(self):
        return GradedChar({d: -k for d, k in self.layers.items()})

    def scale(self, mult):
        """Multiply by a plain integer or by a Laurent polynomial in t."""
        if isinstance(mult, int):
            return GradedChar({d: k * mult for d, k in self.layers.items()})
        if isinstance(mult, LaurentInt):
            out = {}
            for e, c in mult.terms.items():
                for d, k in self.layers.items():
                    cur = out.get(d + e)
                    out[d + e] = (cur + k * c) if cur is not None else k * c
            return GradedChar(out)
        raise InputError("characters scale by integers or Laurent polynomials")

    def shift(self, k):
        return GradedChar({d + k: v for d, v in self.layers.items()})

    def eval_one(self):
        """Forget the grading: the sum of all layers."""
        total = KElement.zero()
        for k in self.layers.values():
            total = total + k
        return total

    def dim(self, system):
        return sum(k.dim(system) for k in self.layers.values())

    def weight_series(self):
        """Weight-major view: weight -> Laurent polynomial of multiplicities."""
        out = {}
        for d, k in self.layers.items():
            for w, m in k.terms.items():
                out.setdefault(w, {})[d] = m
        return {w: LaurentInt(poly) for w, poly in sorted(out.items())}

    def is_nonnegative(self):
        return all(k.is_nonnegative() for k in self.layers.values())

    def __eq__(self, other):
        if not isinstance(other, GradedChar):
            return NotImplemented
        return self.layers == other.layers

    def __hash__(self):
        return hash(frozenset((d, k) for d, k in self.layers.items()))

    def __repr__(self):
        if not self.layers:
            return "0"
        parts = []
        for d in self.degrees():
            k = self.layers[d]
            if d == 0:
                parts.append(f"({k!r})")
            else:
                parts.append(f"({k!r})*t^{d}" if d != 1 else f"({k!r})*t")
        return " + ".join(parts)

    # ---- JSON ----

    def to_json(self):
        return {
            "char": [
                {
                    "deg": d,
                    "weights": [
                        {"w": w.label, "m": m} for w, m in self.layers[d].items()
                    ],
                }
                for d in self.degrees()
            ]
        }

    @classmethod
    def from_json(cls, obj, system):
        if not isinstance(obj, dict) or "char" not in obj:
            raise InputError("graded character payload must have a 'char' list")
        layers = {}
        for entry in obj["char"]:
            d = entry["deg"]
            if not isinstance(d, int):
                raise InputError("layer degrees must be integers")
            terms = {}
            for item in entry["weights"]:
                w = system.parse_label(item["w"])
                m = item["m"]
                if not isinstance(m, int):
                    raise InputError("weight multiplicities must be integers")
                terms[w] = terms.get(w, 0) + m
            if d in layers:
                raise InputError(f"duplicate layer degree {d}")
            layers[d] = KElement(terms)
        return cls(layers)


def gc_mul(a, b, system):
    """Product of graded characters, expanding weight pairs by fusion."""
    out = {}
    for d, ka in a.layers.items():
        for e, kb in b.layers.items():
            prod = ka.mul(kb, system)
            if prod:
                cur = out.get(d + e)
                out[d + e] = (cur + prod) if cur is not None else prod
    return GradedChar(out)


def gc_dual(a, system):
    """Dual character: degrees negate and every weight dualizes."""
    return GradedChar({-d: k.dual(system) for d, k in a.layers.items()})
