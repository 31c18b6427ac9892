"""Exact Laurent-polynomial arithmetic and grading bookkeeping.

Coefficients are Python ints, so overflow cannot occur; every identity
checked downstream is exact.  A polynomial knows its variable names
(e.g. ("T",), ("t",), ("T1", "T2")) and stores a sparse map from
exponent tuples to nonzero integer coefficients.

Canonical text form lists terms in ascending exponent order with
explicit signs, e.g. ``1 - t^2`` or ``T1*T2^-1 + 2``.
"""

from __future__ import annotations

import re


class F2:
    """An element of the two-element field. 1 + 1 = 0, * is AND."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = int(value) & 1

    def __add__(self, other):
        return F2(self.value ^ other.value)

    def __mul__(self, other):
        return F2(self.value & other.value)

    def __eq__(self, other):
        return isinstance(other, F2) and self.value == other.value

    def __hash__(self):
        return hash(("F2", self.value))

    def __repr__(self):
        return f"F2({self.value})"


class Laurent:
    """Integer Laurent polynomial in one or more named variables."""

    __slots__ = ("vars", "coeffs")

    def __init__(self, variables, coeffs=None):
        self.vars = tuple(variables)
        clean = {}
        if coeffs:
            for exps, c in coeffs.items():
                if isinstance(exps, int):
                    exps = (exps,)
                exps = tuple(int(e) for e in exps)
                assert len(exps) == len(self.vars)
                c = int(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self.coeffs = clean

    # ---------- constructors ----------

    @classmethod
    def zero(cls, variables=("T",)):
        return cls(variables)

    @classmethod
    def const(cls, c, variables=("T",)):
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables=("T",)):
        return cls.const(1, variables)

    @classmethod
    def monomial(cls, variables, exps, coeff=1):
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def var(cls, name, power=1):
        """The generator ``name**power`` as a one-variable polynomial."""
        return cls((name,), {(power,): 1})

    # ---------- ring operations ----------

    def _check(self, other):
        assert self.vars == other.vars, (self.vars, other.vars)

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other, self.vars)
        self._check(other)
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return Laurent(self.vars, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Laurent(self.vars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent(self.vars, {e: c * other for e, c in self.coeffs.items()})
        self._check(other)
        coeffs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                coeffs[e] = coeffs.get(e, 0) + c1 * c2
        return Laurent(self.vars, coeffs)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            # only +-monomials are invertible in the Laurent ring
            assert len(self.coeffs) == 1, "negative power of a non-monomial"
            ((e, c),) = self.coeffs.items()
            assert c in (1, -1)
            inv = Laurent(self.vars, {tuple(-x for x in e): c})
            return inv ** (-k)
        out = Laurent.one(self.vars)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, exps):
        """Multiply by the monomial with exponent vector ``exps``."""
        if isinstance(exps, int):
            exps = (exps,)
        return Laurent(self.vars, {tuple(a + b for a, b in zip(e, exps)): c
                                   for e, c in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other, self.vars)
        return isinstance(other, Laurent) and self.vars == other.vars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.vars, frozenset(self.coeffs.items())))

    # ---------- substitution ----------

    def substitute(self, rule):
        """Exact substitution ``variable -> monomial``.

        ``rule`` maps each variable name to a Laurent monomial (in any
        common target variable set).  Used e.g. for T -> t^n and
        (T1, T2) -> (t, t).
        """
        images = []
        target_vars = None
        for v in self.vars:
            img = rule[v]
            assert len(img.coeffs) <= 1, "substitution images must be monomials"
            if target_vars is None:
                target_vars = img.vars
            assert img.vars == target_vars
            images.append(img)
        out = Laurent.zero(target_vars)
        for e, c in self.coeffs.items():
            term = Laurent.const(c, target_vars)
            for v_exp, img in zip(e, images):
                term = term * img ** v_exp
            out = out + term
        return out

    def to_vars(self, variables):
        """Rename variables positionally (same exponents)."""
        assert len(variables) == len(self.vars)
        return Laurent(variables, dict(self.coeffs))

    # ---------- canonical text and JSON forms ----------

    def _term_text(self, exps, coeff):
        parts = []
        for v, e in zip(self.vars, exps):
            if e == 0:
                continue
            parts.append(v if e == 1 else f"{v}^{e}")
        mono = "*".join(parts)
        a = abs(coeff)
        if not mono:
            return str(a)
        return mono if a == 1 else f"{a}*{mono}"

    def to_text(self):
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items())
        out = []
        for i, (e, c) in enumerate(items):
            if i == 0:
                sign = "-" if c < 0 else ""
            else:
                sign = " - " if c < 0 else " + "
            out.append(sign + self._term_text(e, c))
        return "".join(out)

    _TERM_RE = re.compile(r"^(?:(\d+)\*)?([A-Za-z]\w*(?:\^-?\d+)?(?:\*[A-Za-z]\w*(?:\^-?\d+)?)*)?$")

    @classmethod
    def from_text(cls, text, variables=("T",)):
        """Parse the canonical text form produced by :meth:`to_text`."""
        text = text.strip()
        if text == "0":
            return cls.zero(variables)
        text = text.replace(" - ", " +-").replace(" + ", " +")
        if text.startswith("-"):
            text = "-" + text[1:].lstrip()
        coeffs = {}
        for chunk in text.split(" +"):
            chunk = chunk.strip()
            neg = chunk.startswith("-")
            if neg:
                chunk = chunk[1:]
            exps = [0] * len(variables)
            if chunk.isdigit():
                coeff = int(chunk)
            else:
                m = cls._TERM_RE.match(chunk)
                if not m or not m.group(2):
                    raise ValueError(f"bad Laurent term: {chunk!r}")
                coeff = int(m.group(1)) if m.group(1) else 1
                for factor in m.group(2).split("*"):
                    name, _, p = factor.partition("^")
                    if name not in variables:
                        raise ValueError(f"unknown variable {name!r}")
                    exps[variables.index(name)] += int(p) if p else 1
            e = tuple(exps)
            coeffs[e] = coeffs.get(e, 0) + (-coeff if neg else coeff)
        return cls(variables, coeffs)

    def to_json(self):
        items = sorted(self.coeffs.items())
        if len(self.vars) == 1:
            return [[e[0], c] for e, c in items]
        return [[list(e), c] for e, c in items]

    @classmethod
    def from_json(cls, data, variables=("T",)):
        coeffs = {}
        for e, c in data:
            key = (e,) if isinstance(e, int) else tuple(e)
            coeffs[key] = c
        return cls(variables, coeffs)

    def __repr__(self):
        return f"Laurent({self.to_text()!r}, vars={self.vars})"


def bigrade_add(a, b):
    """Componentwise sum of (h, t) bigrades."""
    assert len(a) == 2 and len(b) == 2
    return (a[0] + b[0], a[1] + b[1])


def trigrade_add(a, b):
    """Componentwise sum of (h; t1, t2) trigrades."""
    assert len(a) == 3 and len(b) == 3
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def grade_add(a, b):
    """Componentwise sum for grades of any (equal) arity."""
    assert len(a) == len(b)
    return tuple(x + y for x, y in zip(a, b))
