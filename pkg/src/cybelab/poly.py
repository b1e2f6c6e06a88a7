"""Sparse Laurent polynomials over Q in the fixed variable universe.

The ring has seven variables: the spectral parameters ``l``, ``m``, ``n``,
the shift parameter ``E``, and the pencil coefficients ``a1``, ``a2``, ``a3``.
Exponents may be negative (Laurent), which makes single-variable monomials
units: ``1/l`` is just ``l**-1``, so rational-function denominators only ever
need genuine atoms (differences, shifted variables, densities).

Coefficients are exact ``fractions.Fraction`` values.  All values are
immutable after construction and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from cybelab import kernel

VARS = ("l", "m", "n", "E", "a1", "a2", "a3")
VAR_INDEX = {name: i for i, name in enumerate(VARS)}

Q = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    """Coerce ints / strings / Fractions to Fraction; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class MPoly:
    """Immutable sparse Laurent polynomial."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        self.terms = dict(terms) if terms else {}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def const(cls, q) -> "MPoly":
        q = as_fraction(q)
        return cls({kernel.ZERO_KEY: q} if q else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MPoly":
        exps = [0] * kernel.NVARS
        exps[VAR_INDEX[name]] = power
        return cls({kernel.pack(exps): ONE})

    @classmethod
    def monomial(cls, coeff, exps: Iterable[int]) -> "MPoly":
        coeff = as_fraction(coeff)
        if not coeff:
            return cls()
        return cls({kernel.pack(tuple(exps)): coeff})

    # -- ring structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return MPoly(kernel.add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return MPoly(kernel.sub(self.terms, other.terms))

    def __rsub__(self, other):
        return MPoly.const(other) - self

    def __neg__(self):
        return MPoly(kernel.neg(self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(kernel.scale(self.terms, as_fraction(other)))
        if not isinstance(other, MPoly):
            return NotImplemented
        return MPoly(kernel.mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            inv = self.invert_monomial()
            if inv is None:
                raise ValueError("negative power of a non-monomial")
            return inv ** (-k)
        out = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- structure queries -------------------------------------------------

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and kernel.ZERO_KEY in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return ZERO
        if self.is_const():
            return self.terms[kernel.ZERO_KEY]
        raise ValueError("not a constant")

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def invert_monomial(self) -> "MPoly | None":
        """Inverse, when self is a single term (a unit of the Laurent ring)."""
        if len(self.terms) != 1:
            return None
        (k, c), = self.terms.items()
        return MPoly({2 * kernel.ZERO_KEY - k: 1 / c})

    def variables(self) -> set[str]:
        used = set()
        for k in self.terms:
            exps = kernel.unpack(k)
            for i, e in enumerate(exps):
                if e:
                    used.add(VARS[i])
        return used

    def degree_range(self, var: str) -> tuple[int, int]:
        """(min, max) exponent of var; (0, 0) for the zero polynomial."""
        i = VAR_INDEX[var]
        lo = hi = None
        for k in self.terms:
            e = kernel.unpack(k)[i]
            lo = e if lo is None else min(lo, e)
            hi = e if hi is None else max(hi, e)
        return (lo or 0, hi or 0) if lo is not None else (0, 0)

    def coeffs_in(self, var: str) -> dict[int, "MPoly"]:
        """Split into {degree in var: coefficient polynomial without var}."""
        i = VAR_INDEX[var]
        out: dict[int, dict] = {}
        for k, c in self.terms.items():
            exps = list(kernel.unpack(k))
            d = exps[i]
            exps[i] = 0
            out.setdefault(d, {})[kernel.pack(exps)] = c
        return {d: MPoly(t) for d, t in out.items()}

    def coeff_of(self, var: str, degree: int) -> "MPoly":
        return self.coeffs_in(var).get(degree, MPoly.zero())

    # -- division ----------------------------------------------------------

    def div_exact(self, other: "MPoly") -> "MPoly | None":
        q = kernel.div_exact(self.terms, other.terms)
        return MPoly(q) if q is not None else None

    def divisible_by(self, other: "MPoly") -> bool:
        return kernel.div_exact(self.terms, other.terms) is not None

    # -- substitutions -----------------------------------------------------

    def subs_values(self, values: Mapping[str, Fraction]) -> "MPoly":
        """Substitute exact rational values for some variables."""
        idx = {VAR_INDEX[v]: as_fraction(q) for v, q in values.items()}
        out: dict[int, Fraction] = {}
        for k, c in self.terms.items():
            exps = list(kernel.unpack(k))
            for i, q in idx.items():
                e = exps[i]
                if e:
                    if q == 0 and e < 0:
                        raise ZeroDivisionError("substituting 0 into a negative power")
                    c = c * q ** e
                    exps[i] = 0
            if not c:
                continue
            kk = kernel.pack(exps)
            s = out.get(kk, ZERO) + c
            if s:
                out[kk] = s
            else:
                out.pop(kk, None)
        return MPoly(out)

    def subs_poly(self, var: str, image: "MPoly") -> "MPoly":
        """Substitute a polynomial image for var (var-degrees must be >= 0)."""
        i = VAR_INDEX[var]
        pow_cache: dict[int, MPoly] = {0: MPoly.const(1)}

        def image_pow(e: int) -> MPoly:
            if e not in pow_cache:
                if e < 0:
                    inv = image.invert_monomial()
                    if inv is None:
                        raise ValueError(
                            f"cannot substitute {image} into negative power of {var}")
                    pow_cache[e] = inv ** (-e)
                else:
                    pow_cache[e] = image_pow(e - 1) * image
            return pow_cache[e]

        acc = MPoly.zero()
        for k, c in self.terms.items():
            exps = list(kernel.unpack(k))
            e = exps[i]
            exps[i] = 0
            acc = acc + image_pow(e) * MPoly({kernel.pack(exps): c})
        return acc

    def subs_reciprocal(self, var: str) -> "MPoly":
        """var -> 1/var (exact on the Laurent ring)."""
        i = VAR_INDEX[var]
        out = {}
        for k, c in self.terms.items():
            exps = list(kernel.unpack(k))
            exps[i] = -exps[i]
            out[kernel.pack(exps)] = c
        return MPoly(out)

    def rename_var(self, src: str, dst: str) -> "MPoly":
        """Relabel src as dst (dst must not occur)."""
        si, di = VAR_INDEX[src], VAR_INDEX[dst]
        out = {}
        for k, c in self.terms.items():
            exps = list(kernel.unpack(k))
            if exps[di]:
                raise ValueError(f"target variable {dst} already present")
            exps[di], exps[si] = exps[si], 0
            out[kernel.pack(exps)] = c
        return MPoly(out)

    # -- normalization helpers (used by the atom registry) ------------------

    def monomial_content(self) -> tuple["MPoly", "MPoly"]:
        """Factor as (monomial unit, polynomial with min exponent 0 per var)."""
        if not self.terms:
            return MPoly.const(1), self
        mins = [kernel.EXP_LIMIT] * kernel.NVARS
        for k in self.terms:
            for i, e in enumerate(kernel.unpack(k)):
                if e < mins[i]:
                    mins[i] = e
        if not any(mins):
            return MPoly.const(1), self
        unit_key = kernel.pack(mins)
        off = unit_key - kernel.ZERO_KEY
        shifted = MPoly({k - off: c for k, c in self.terms.items()})
        return MPoly({unit_key: ONE}), shifted

    def content_and_primitive(self) -> tuple[Fraction, "MPoly"]:
        """Factor as content * primitive, primitive with integer coprime
        coefficients and positive leading coefficient in lex order."""
        if not self.terms:
            return ZERO, self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        lead_key = max(self.terms, key=kernel.unpack)
        if self.terms[lead_key] < 0:
            content = -content
        prim = MPoly({k: c / content for k, c in self.terms.items()})
        return content, prim

    # -- printing ----------------------------------------------------------

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, key=kernel.unpack, reverse=True):
            c = self.terms[k]
            exps = kernel.unpack(k)
            factors = []
            for name, e in zip(VARS, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                text = str(c)
            elif c == 1:
                text = mono
            elif c == -1:
                text = f"-{mono}"
            else:
                text = f"{c}*{mono}"
            if bits and not text.startswith("-"):
                bits.append("+" + text)
            else:
                bits.append(text)
        return "".join(bits)


# convenient generators
L = MPoly.var("l")
M = MPoly.var("m")
N = MPoly.var("n")
E = MPoly.var("E")
A1 = MPoly.var("a1")
A2 = MPoly.var("a2")
A3 = MPoly.var("a3")
