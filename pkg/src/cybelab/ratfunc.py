"""Rational functions with atom-factored denominators.

A RatFn is a Laurent polynomial numerator over a multiset of denominator
atoms.  Canonical form divides the numerator by every atom that divides it
exactly; equality is cross-multiplied polynomial equality, so no multivariate
gcd is ever needed.
"""

from __future__ import annotations

from fractions import Fraction

from cybelab.atoms import Atom, AtomEscape, get_atom
from cybelab.poly import MPoly, VAR_INDEX, as_fraction


def _coerce_poly(x) -> MPoly:
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction, str)):
        return MPoly.const(as_fraction(x))
    raise TypeError(f"cannot coerce {x!r} to a polynomial")


def factor_registrable(poly: MPoly):
    """Factor a polynomial as unit_monomial * product of atoms.

    Returns (unit, [(atom, power), ...]); raises AtomEscape if some factor is
    not registrable.  Trial division against already-registered atoms runs
    first, so products of known atoms factor fully.
    """
    if poly.is_zero():
        raise ZeroDivisionError("zero denominator")
    if poly.is_monomial():
        return poly, []
    from cybelab import atoms as _atoms
    factors: dict[Atom, int] = {}
    unit_mono, rest = poly.monomial_content()
    changed = True
    while changed and not rest.is_monomial():
        changed = False
        for atom in list(_atoms._registry.values()):
            if atom.poly.is_monomial():
                continue
            q = rest.div_exact(atom.poly)
            while q is not None:
                factors[atom] = factors.get(atom, 0) + 1
                rest = q
                changed = True
                q = rest.div_exact(atom.poly)
    if not rest.is_monomial():
        content, atom = get_atom(rest)
        factors[atom] = factors.get(atom, 0) + 1
        rest = MPoly.const(content)
    return unit_mono * rest, sorted(factors.items(), key=lambda t: t[0].name)


class RatFn:
    """num / prod(atom^power), canonical."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=()):
        num = _coerce_poly(num)
        powers: dict[Atom, int] = {}
        for atom, k in den:
            if k:
                powers[atom] = powers.get(atom, 0) + k
        if num.is_zero():
            powers = {}
        else:
            # cancel by exact divisibility
            for atom in list(powers):
                while powers[atom] > 0:
                    q = num.div_exact(atom.poly)
                    if q is None:
                        break
                    num = q
                    powers[atom] -= 1
                if powers[atom] == 0:
                    del powers[atom]
        self.num = num
        self.den = tuple(sorted(powers.items(), key=lambda t: t[0].name))
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatFn":
        return cls(MPoly.zero())

    @classmethod
    def one(cls) -> "RatFn":
        return cls(MPoly.const(1))

    @classmethod
    def from_quotient(cls, num, den_poly) -> "RatFn":
        """num / den_poly, factoring den_poly into atoms."""
        num = _coerce_poly(num)
        unit, factors = factor_registrable(_coerce_poly(den_poly))
        inv_unit = unit.invert_monomial()
        return cls(num * inv_unit, factors)

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_poly(self) -> bool:
        return not self.den

    def as_poly(self) -> MPoly:
        if self.den:
            raise ValueError(f"not polynomial: {self}")
        return self.num

    def den_poly(self) -> MPoly:
        out = MPoly.const(1)
        for atom, k in self.den:
            out = out * atom.poly ** k
        return out

    def variables(self) -> set[str]:
        used = self.num.variables()
        for atom, _ in self.den:
            used |= atom.poly.variables()
        return used

    def __eq__(self, other):
        other = ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den_poly()) == (other.num * self.den_poly())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        da = dict(self.den)
        db = dict(other.den)
        union = {a: max(da.get(a, 0), db.get(a, 0)) for a in {*da, *db}}
        mult_a = MPoly.const(1)
        mult_b = MPoly.const(1)
        for a, k in union.items():
            ka, kb = k - da.get(a, 0), k - db.get(a, 0)
            if ka:
                mult_a = mult_a * a.poly ** ka
            if kb:
                mult_b = mult_b * a.poly ** kb
        return RatFn(self.num * mult_a + other.num * mult_b, tuple(union.items()))

    __radd__ = __add__

    def __sub__(self, other):
        other = ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ratfn(other) - self

    def __neg__(self):
        out = RatFn.__new__(RatFn)
        out.num = -self.num
        out.den = self.den
        out._hash = None
        return out

    def __mul__(self, other):
        other = ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ratfn(other) * self.inverse()

    def inverse(self) -> "RatFn":
        """1/self; the numerator must factor over the atom family."""
        unit, factors = factor_registrable(self.num)
        num = unit.invert_monomial()
        for atom, k in self.den:
            num = num * atom.poly ** k
        return RatFn(num, factors)

    # -- substitution --------------------------------------------------------

    def substitute(self, var: str, image) -> "RatFn":
        """Substitute var -> image, image = ("affine", a, b) | ("reciprocal",)."""
        return self.substitute_many({var: image})

    def substitute_many(self, subs: dict) -> "RatFn":
        """Simultaneous substitution of several variables.

        Affine images are a*var + b with rational a != 0 and b free of the
        spectral variables (rational or E-linear); every transformed
        denominator factor must be registrable, else AtomEscape propagates.
        Simultaneity matters: the catalog transforms shift or invert lambda
        and mu together, which keeps the atom family closed.
        """
        images: dict[str, tuple] = {}
        for var, image in subs.items():
            if image[0] == "affine":
                a = as_fraction(image[1])
                b = _coerce_poly(image[2])
                if a == 0:
                    raise ValueError("affine substitution needs a != 0")
                if b.variables() & set(subs):
                    raise ValueError("affine offset must not involve substituted variables")
                images[var] = ("poly", MPoly.const(a) * MPoly.var(var) + b)
            elif image[0] == "reciprocal":
                images[var] = ("reciprocal",)
            else:
                raise ValueError(f"unknown substitution image {image!r}")

        def transform_poly(p: MPoly) -> "RatFn":
            acc = RatFn.zero()
            from cybelab import kernel
            for key, coeff in p.terms.items():
                exps = list(kernel.unpack(key))
                num = MPoly.const(coeff)
                den = MPoly.const(1)
                for var, image in images.items():
                    i = VAR_INDEX[var]
                    e = exps[i]
                    if not e:
                        continue
                    exps[i] = 0
                    if image[0] == "reciprocal":
                        exps[i] = -e
                        continue
                    img = image[1]
                    if e > 0:
                        num = num * img ** e
                    else:
                        den = den * img ** (-e)
                num = num * MPoly({kernel.pack(exps): Fraction(1)})
                term = RatFn(num) if den.is_const() and den.const_value() == 1 \
                    else RatFn.from_quotient(num, den)
                acc = acc + term
            return acc

        out = transform_poly(self.num)
        for atom, k in self.den:
            p = atom.poly
            for var, image in images.items():
                if image[0] == "reciprocal":
                    p = p.subs_reciprocal(var)
                else:
                    p = p.subs_poly(var, image[1])
            # p may be Laurent after reciprocal images; from_quotient handles units
            out = out * RatFn.from_quotient(1, p) ** k
        return out

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFn.one()
        for _ in range(k):
            out = out * self
        return out

    def rename_var(self, src: str, dst: str) -> "RatFn":
        num = self.num.rename_var(src, dst)
        out = RatFn(num)
        for atom, k in self.den:
            out = out * RatFn.from_quotient(1, atom.poly.rename_var(src, dst)) ** k
        return out

    def subs_values(self, values) -> "RatFn":
        """Substitute exact rationals for variables, keeping exactness."""
        num = self.num.subs_values(values)
        out = RatFn(num)
        for atom, k in self.den:
            img = atom.poly.subs_values(values)
            if img.is_zero():
                raise ZeroDivisionError(f"atom {atom.name} vanishes at {values}")
            out = out * RatFn.from_quotient(1, img) ** k
        return out

    def eval_rational(self, values) -> Fraction:
        """Fully evaluate at rational points."""
        out = self.subs_values(values)
        poly = out.as_poly() if out.is_poly() else None
        if poly is None or not poly.is_const():
            raise ValueError(f"evaluation left free variables: {out}")
        return poly.const_value()

    # -- analysis ------------------------------------------------------------

    def expand(self, var: str, point, lo: int, hi: int):
        """Series window of self in var around point (Zero/Infinity/rational)."""
        from cybelab.series import expand_ratfn
        return expand_ratfn(self, var, point, lo, hi)

    def residue(self, var: str, point, sigma_inf: int = -1) -> "RatFn":
        """Residue at a point; at infinity, sigma_inf fixes the sign convention
        (res = sigma_inf * coefficient of var^-1 in the expansion at infinity)."""
        from cybelab.series import INFINITY, ZERO_POINT
        if point is INFINITY or point == "inf":
            w = self.expand(var, INFINITY, -1, -1)
            return RatFn(w.coeff(-1)) * Fraction(sigma_inf)
        if point is ZERO_POINT or point == 0:
            w = self.expand(var, ZERO_POINT, -1, -1)
            return RatFn(w.coeff(-1))
        w = self.expand(var, as_fraction(point), -1, -1)
        return RatFn(w.coeff(-1))

    def __repr__(self):
        return f"RatFn({self})"

    def __str__(self):
        if not self.den:
            return str(self.num)
        dens = "*".join(f"({a.name})^{k}" if k > 1 else f"({a.name})"
                        for a, k in self.den)
        return f"({self.num})/{dens}"


def ratfn(x) -> "RatFn":
    """Coerce to RatFn (int, Fraction, str, MPoly, RatFn)."""
    if isinstance(x, RatFn):
        return x
    if isinstance(x, (int, Fraction, str, MPoly)):
        return RatFn(_coerce_poly(x))
    return NotImplemented
