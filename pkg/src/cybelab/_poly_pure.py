"""Pure-Python sparse polynomial kernel.

Terms are stored as ``{packed_exponent: Fraction}``.  Exponent vectors over the
fixed 7-variable universe are packed into a single int, 8 bits per variable
with a +128 bias, so that the packed key of a monomial product is
``ka + kb - ZERO_KEY`` (one int add).  Packed keys compare in lex order with
the last variable most significant.

The compiled twin (``_poly_core``) implements the same API; ``kernel`` picks
one at import time.
"""

from __future__ import annotations

from fractions import Fraction

NVARS = 7
BIAS = 128
SHIFT = 8
MASK = (1 << SHIFT) - 1
EXP_LIMIT = 100  # |exponent| bound; keeps packed addition overflow-free

ZERO_KEY = sum(BIAS << (SHIFT * i) for i in range(NVARS))

KERNEL_NAME = "pure"


def pack(exps):
    """Pack an exponent tuple into an int key."""
    key = 0
    for i, e in enumerate(exps):
        if not -EXP_LIMIT <= e <= EXP_LIMIT:
            raise OverflowError(f"exponent {e} out of packable range")
        key |= (e + BIAS) << (SHIFT * i)
    return key


def unpack(key):
    """Unpack an int key into an exponent tuple."""
    return tuple(((key >> (SHIFT * i)) & MASK) - BIAS for i in range(NVARS))


def add(a, b):
    """Return a + b as a new canonical term dict."""
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def sub(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def neg(a):
    return {k: -c for k, c in a.items()}


def scale(a, c):
    """Return c * a; c is a Fraction (or int)."""
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def mul_term(a, key, coeff):
    """Multiply by the single monomial coeff * x^key."""
    if not coeff:
        return {}
    off = key - ZERO_KEY
    return {k + off: coeff * v for k, v in a.items()}


def mul(a, b):
    """Return a * b as a new canonical term dict."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ka, ca in a.items():
        off = ka - ZERO_KEY
        for kb, cb in b.items():
            k = kb + off
            c = ca * cb
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def _min_exps(a):
    mins = [EXP_LIMIT] * NVARS
    for k in a:
        for i in range(NVARS):
            e = ((k >> (SHIFT * i)) & MASK) - BIAS
            if e < mins[i]:
                mins[i] = e
    return mins


def div_exact(a, b):
    """Exact division a / b, or None if b does not divide a.

    Operands may be Laurent (negative exponents); both are shifted to a
    non-negative range first, then leading-term elimination runs in lex order
    (packed-key integer order).
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    sa = _min_exps(a)
    sb = _min_exps(b)
    offa = pack(sa) - ZERO_KEY
    offb = pack(sb) - ZERO_KEY
    ra = {k - offa: c for k, c in a.items()}
    rb = {k - offb: c for k, c in b.items()}
    klead_b = max(rb)
    clead_b = rb[klead_b]
    quot = {}
    rem = dict(ra)
    while rem:
        klead_r = max(rem)
        kq = klead_r - klead_b + ZERO_KEY
        # check the quotient monomial has non-negative exponents
        for i in range(NVARS):
            if ((kq >> (SHIFT * i)) & MASK) < BIAS:
                return None
        cq = rem[klead_r] / clead_b
        quot[kq] = cq
        off = kq - ZERO_KEY
        for k, c in rb.items():
            kk = k + off
            s = rem.get(kk)
            if s is None:
                rem[kk] = -cq * c
            else:
                s = s - cq * c
                if s:
                    rem[kk] = s
                else:
                    del rem[kk]
    off = offa - offb
    return {k + off: c for k, c in quot.items()}


def divides(b, a):
    """True iff b exactly divides a."""
    return div_exact(a, b) is not None


__all__ = [
    "NVARS", "BIAS", "SHIFT", "EXP_LIMIT", "ZERO_KEY", "KERNEL_NAME",
    "pack", "unpack", "add", "sub", "neg", "scale", "mul", "mul_term",
    "div_exact", "divides", "Fraction",
]
