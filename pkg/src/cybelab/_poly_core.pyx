# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernel.

Same representation and API as ``_poly_pure``: term dicts keyed by packed
exponent ints (8 bits per variable, +128 bias).  Coefficients stay exact
Python Fractions; the speedup comes from C-level looping over the term pairs.
"""

from fractions import Fraction

cdef int NVARS_C = 7
cdef int SHIFT_C = 8
cdef int BIAS_C = 128
cdef int MASK_C = 255
cdef int EXP_LIMIT_C = 100

NVARS = NVARS_C
BIAS = BIAS_C
SHIFT = SHIFT_C
EXP_LIMIT = EXP_LIMIT_C

cdef unsigned long long _zero_key():
    cdef unsigned long long key = 0
    cdef int i
    for i in range(NVARS_C):
        key |= (<unsigned long long> BIAS_C) << (SHIFT_C * i)
    return key

cdef unsigned long long ZERO_KEY_C = _zero_key()
ZERO_KEY = ZERO_KEY_C

KERNEL_NAME = "cython"


def pack(exps):
    """Pack an exponent tuple into an int key."""
    cdef unsigned long long key = 0
    cdef int i = 0
    cdef long e
    for e in exps:
        if e < -EXP_LIMIT_C or e > EXP_LIMIT_C:
            raise OverflowError(f"exponent {e} out of packable range")
        key |= (<unsigned long long> (e + BIAS_C)) << (SHIFT_C * i)
        i += 1
    return key


def unpack(key):
    """Unpack an int key into an exponent tuple."""
    cdef unsigned long long k = key
    cdef int i
    return tuple([<long> ((k >> (SHIFT_C * i)) & MASK_C) - BIAS_C
                  for i in range(NVARS_C)])


def add(dict a, dict b):
    """Return a + b as a new canonical term dict."""
    cdef dict out = dict(a)
    cdef object k, c, s
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


def sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, c, s
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


def neg(dict a):
    cdef dict out = {}
    cdef object k, c
    for k, c in a.items():
        out[k] = -c
    return out


def scale(dict a, c):
    if not c:
        return {}
    cdef dict out = {}
    cdef object k, v
    for k, v in a.items():
        out[k] = c * v
    return out


def mul_term(dict a, key, coeff):
    """Multiply by the single monomial coeff * x^key."""
    if not coeff:
        return {}
    cdef long long off = <long long> key - <long long> ZERO_KEY_C
    cdef dict out = {}
    cdef object k, v
    for k, v in a.items():
        out[k + off] = coeff * v
    return out


def mul(dict a, dict b):
    """Return a * b as a new canonical term dict."""
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef object ka, ca, kb, cb, s, c, k, off
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


cdef list _min_exps(dict a):
    cdef list mins = [EXP_LIMIT_C] * NVARS_C
    cdef unsigned long long k
    cdef long e
    cdef int i
    cdef object key
    for key in a:
        k = key
        for i in range(NVARS_C):
            e = <long> ((k >> (SHIFT_C * i)) & MASK_C) - BIAS_C
            if e < <long> mins[i]:
                mins[i] = e
    return mins


def div_exact(dict a, dict b):
    """Exact division a / b, or None if b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    cdef list sa = _min_exps(a)
    cdef list sb = _min_exps(b)
    cdef long long offa = <long long> pack(sa) - <long long> ZERO_KEY_C
    cdef long long offb = <long long> pack(sb) - <long long> ZERO_KEY_C
    cdef dict ra = {}
    cdef dict rb = {}
    cdef object k, c
    for k, c in a.items():
        ra[k - offa] = c
    for k, c in b.items():
        rb[k - offb] = c
    cdef object klead_b = max(rb)
    cdef object clead_b = rb[klead_b]
    cdef dict quot = {}
    cdef dict rem = ra
    cdef object klead_r, kq, cq, s, kk
    cdef unsigned long long kqc
    cdef long long off
    cdef int i
    while rem:
        klead_r = max(rem)
        kq = klead_r - klead_b + ZERO_KEY
        kqc = kq
        for i in range(NVARS_C):
            if ((kqc >> (SHIFT_C * i)) & MASK_C) < <unsigned long long> BIAS_C:
                return None
        cq = rem[klead_r] / clead_b
        quot[kq] = cq
        off = <long long> kq - <long long> ZERO_KEY_C
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
    cdef dict out = {}
    for k, c in quot.items():
        out[k + off] = c
    return out


def divides(dict b, dict a):
    """True iff b exactly divides a."""
    return div_exact(a, b) is not None
