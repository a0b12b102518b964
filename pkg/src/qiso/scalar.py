"""Exact commutative scalars.

A :class:`Scalar` is a finite sum of terms

    coefficient * (square-free monomial in radicals) * e(k*theta/2)

where the coefficient is a rational function in the fixed indeterminates
``s, t, c, q1..q4, c1, c2`` with rational coefficients.  ``mu`` is ``s**2``
so that ``mu**(1/2)`` is polynomial.  Radicals are adjoined into a global
tower; each radical squares to a pure rational function and the tower keeps
the radicals multiplicatively independent, so canonical forms are unique.

Rational functions are stored as ``x**shift * num/den`` where neither ``num``
nor ``den`` has a monomial factor, so Laurent polynomials never need a gcd.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from sympy import QQ, factorint, sympify
from sympy.polys.rings import ring

__all__ = [
    "RatFunc", "Scalar", "RadicalError", "ScalarDivisionError",
    "INDETERMINATES", "adjoin_radical", "radical", "sqrt", "var", "phase",
    "S", "one", "zero", "mu", "s", "t", "c", "eval_complex", "scalar_to_data",
    "scalar_from_data", "radical_table",
]

INDETERMINATES = ("s", "t", "c", "q1", "q2", "q3", "q4", "c1", "c2")
_NV = len(INDETERMINATES)
_R, *_GENS = ring(",".join(INDETERMINATES), QQ)
_ZERO_SHIFT = (0,) * _NV

# sample point used to fix the sign of irreducible factors
_SAMPLE = (0.7, 0.6, 0.3, 1.3, 1.7, 2.3, 2.9, 1.1, 0.4)


class ScalarDivisionError(ZeroDivisionError):
    """Division by zero, or by an element that is not a unit."""


class RadicalError(ValueError):
    """Invalid radical adjunction (zero square, dependent radical, ...)."""


def _monomial_content(p):
    """Return (p / m, m) where m is the largest monomial dividing p."""
    it = iter(p)
    lo = list(next(it))
    for mon in it:
        for i, e in enumerate(mon):
            if e < lo[i]:
                lo[i] = e
    if not any(lo):
        return p, _ZERO_SHIFT
    return _R.from_dict({tuple(a - b for a, b in zip(mon, lo)): cf
                         for mon, cf in p.items()}), tuple(lo)


def _addshift(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mulmono(p, shift):
    if not any(shift):
        return p
    return _R.from_dict({tuple(a + b for a, b in zip(mon, shift)): cf
                         for mon, cf in p.items()})


class RatFunc:
    """Rational function ``x**shift * num/den`` in canonical form.

    Invariants: ``num`` and ``den`` have no monomial factor and are coprime,
    ``den`` has leading coefficient 1, zero is ``(0, 1, 0)``.
    """

    __slots__ = ("num", "den", "shift", "_hash")

    def __init__(self, num, den=None, shift=_ZERO_SHIFT, _canonical=False):
        if _canonical:
            self.num, self.den, self.shift = num, den, shift
            self._hash = None
            return
        if den is None:
            den = _R.one
        if not den:
            raise ScalarDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den, self.shift = _R.zero, _R.one, _ZERO_SHIFT
            self._hash = None
            return
        num, sn = _monomial_content(num)
        den, sd = _monomial_content(den)
        shift = tuple(a + b - c for a, b, c in zip(shift, sn, sd))
        if den.is_ground:
            num = num.quo_ground(den.LC)
            den = _R.one
        else:
            num, den = num.cancel(den)
            lc = den.LC
            if lc != 1:
                num = num.quo_ground(lc)
                den = den.quo_ground(lc)
        self.num, self.den, self.shift = num, den, shift
        self._hash = None

    @classmethod
    def const(cls, q) -> "RatFunc":
        q = QQ(q.numerator, q.denominator) if isinstance(q, Fraction) else QQ(q)
        if not q:
            return _RZERO
        return cls(_R(q), _R.one, _ZERO_SHIFT, _canonical=True)

    @classmethod
    def gen(cls, name: str, power: int = 1) -> "RatFunc":
        i = INDETERMINATES.index(name)
        sh = [0] * _NV
        sh[i] = power
        return cls(_R.one, _R.one, tuple(sh), _canonical=True)

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == 1 and self.den == 1 and not any(self.shift)

    def is_laurent(self):
        return self.den == 1

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.shift == other.shift and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shift, self.num, self.den))
        return self._hash

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.shift, _canonical=True)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if not self.num:
            return other
        if not other.num:
            return self
        lo = tuple(min(a, b) for a, b in zip(self.shift, other.shift))
        a = _mulmono(self.num, tuple(x - y for x, y in zip(self.shift, lo)))
        b = _mulmono(other.num, tuple(x - y for x, y in zip(other.shift, lo)))
        if self.den == other.den:
            n = a + b
            if not n:
                return _RZERO
            if self.den == 1:
                n, sh = _monomial_content(n)
                return RatFunc(n, _R.one, _addshift(lo, sh), _canonical=True)
            return RatFunc(n, self.den, lo)
        return RatFunc(a * other.den + b * self.den, self.den * other.den, lo)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if not self.num or not other.num:
            return _RZERO
        sh = _addshift(self.shift, other.shift)
        if self.den == 1 and other.den == 1:
            return RatFunc(self.num * other.num, _R.one, sh, _canonical=True)
        return RatFunc(self.num * other.num, self.den * other.den, sh)

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ScalarDivisionError("division by zero")
        sh = tuple(-x for x in self.shift)
        return RatFunc(self.den, self.num, sh)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = _RONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def as_ground(self):
        """Return the rational constant, or None."""
        if self.den == 1 and self.num.is_ground and not any(self.shift):
            return self.num.LC if self.num else QQ(0)
        return None

    def variables(self):
        out = set()
        for p in (self.num, self.den):
            for mon in p.itermonoms():
                out.update(i for i, e in enumerate(mon) if e)
        out.update(i for i, e in enumerate(self.shift) if e)
        return {INDETERMINATES[i] for i in out}

    def evalf(self, vals) -> complex:
        """Evaluate at ``vals``, a sequence indexed like INDETERMINATES."""
        def ev(p):
            tot = 0.0
            for mon, cf in p.items():
                term = float(cf)
                for i, e in enumerate(mon):
                    if e:
                        term *= vals[i] ** e
                tot += term
            return tot
        v = ev(self.num)
        for i, e in enumerate(self.shift):
            if e:
                v *= vals[i] ** e
        if self.den != 1:
            d = ev(self.den)
            if d == 0:
                raise ScalarDivisionError("denominator vanishes at assignment")
            v /= d
        return v

    def __str__(self):
        parts = []
        for i, e in enumerate(self.shift):
            if e == 1:
                parts.append(INDETERMINATES[i])
            elif e:
                parts.append(f"{INDETERMINATES[i]}**{e}")
        num = str(self.num)
        if self.num.is_ground or not parts and self.den == 1:
            if num == "1" and parts:
                head = "*".join(parts)
            elif num == "-1" and parts:
                head = "-" + "*".join(parts)
            else:
                head = "*".join(([num] if self.num.is_ground else [f"({num})"]) + parts)
        else:
            head = "*".join([f"({num})"] + parts)
        if self.den != 1:
            return f"{head}/({self.den})"
        return head

    __repr__ = __str__


_RZERO = RatFunc(_R.zero, _R.one, _ZERO_SHIFT, _canonical=True)
_RONE = RatFunc(_R.one, _R.one, _ZERO_SHIFT, _canonical=True)


# ---------------------------------------------------------------------------
# radical tower

class _Radical:
    __slots__ = ("name", "square", "index", "kernel")

    def __init__(self, name, square, index, kernel):
        self.name, self.square, self.index, self.kernel = name, square, index, kernel


_RADICALS: list = []
_BY_NAME: Dict[str, _Radical] = {}
_FACTOR_CACHE: Dict[RatFunc, tuple] = {}


def _sign_at_sample(p) -> float:
    return RatFunc(p).evalf(_SAMPLE)


def _squarefree_split(x: RatFunc):
    """Split a nonzero rational function as ``k**2 * kernel``.

    Returns ``(k, kernel_factors)`` where ``kernel_factors`` is a frozenset of
    normalized irreducible polynomials and primes (positive at the sample
    point) whose product times ``sign`` is the square-free part, and ``k`` is
    a RatFunc.  The sign of the constant is returned separately.
    """
    hit = _FACTOR_CACHE.get(x)
    if hit is not None:
        return hit
    root = _RONE
    kernel = []
    sign = 1
    # monomial shift
    sh = []
    for i, e in enumerate(x.shift):
        sh.append(e // 2)
        if e % 2:
            kernel.append(_R.gens[i])
    root = RatFunc(_R.one, _R.one, tuple(sh), _canonical=True)
    const = QQ(1)
    for poly, inv in ((x.num, False), (x.den, True)):
        cst, facs = poly.factor_list()
        const = const / cst if inv else const * cst
        for f, k in facs:
            if _sign_at_sample(f) < 0:
                f = -f
                if k % 2:
                    sign = -sign
            half = RatFunc(f) ** (k // 2)
            root = root / half if inv else root * half
            if k % 2:
                kernel.append(f)
                if inv:
                    # 1/f = f / f**2
                    root = root / RatFunc(f)
    if const < 0:
        sign = -sign
        const = -const
    a, b = int(const.numerator), int(const.denominator)
    # sqrt(a/b) = sqrt(a*b)/b
    n = a * b
    rest = 1
    for p, k in sorted(factorint(n).items()):
        rest *= p ** (k // 2)
        if k % 2:
            kernel.append(_R(p))
    root = root * RatFunc.const(QQ(rest, b))
    out = (root, frozenset(kernel), sign)
    _FACTOR_CACHE[x] = out
    return out


def _span_solve(target: frozenset):
    """Express ``target`` as a GF(2) combination of radical kernels.

    Returns the list of radical indices, or None when not in the span.
    """
    rows = [(set(r.kernel), {r.index}) for r in _RADICALS if r.kernel is not None]
    vec, used = set(target), set()
    basis = []
    for k, ids in rows:
        k, ids = set(k), set(ids)
        for bk, bids, piv in basis:
            if piv in k:
                k ^= bk
                ids ^= bids
        if k:
            piv = min(k, key=str)
            basis.append((k, ids, piv))
    for bk, bids, piv in basis:
        if piv in vec:
            vec ^= bk
            used ^= bids
    if vec:
        return None
    return sorted(used)


def adjoin_radical(name: str, square) -> "Scalar":
    """Adjoin ``name`` with ``name**2 = square`` and return it as a Scalar.

    Re-adjoining an existing name with the same square returns the same
    radical.  The square must be a nonzero pure rational function that is not
    already a product of existing radicals times a square.
    """
    square = _as_scalar(square)
    if name in _BY_NAME:
        r = _BY_NAME[name]
        if r.square != square:
            raise RadicalError(f"radical {name!r} already adjoined with square {r.square}")
        return Scalar({(1 << r.index, 0): _RONE})
    if name in INDETERMINATES:
        raise RadicalError(f"{name!r} is an indeterminate")
    if not square:
        raise RadicalError(f"radical {name!r} with zero square")
    coeff = square.pure()
    if coeff is None:
        raise RadicalError("radical square must not involve radicals of equal "
                           "or later rank, or phases")
    _, kernel, _sign = _squarefree_split(coeff)
    if not kernel:
        raise RadicalError(f"square of {name!r} is a perfect square")
    if _span_solve(kernel) is not None:
        raise RadicalError(f"radical {name!r} depends on earlier radicals")
    r = _Radical(name, square, len(_RADICALS), kernel)
    _RADICALS.append(r)
    _BY_NAME[name] = r
    return Scalar({(1 << r.index, 0): _RONE})


def radical(name: str) -> "Scalar":
    r = _BY_NAME[name]
    return Scalar({(1 << r.index, 0): _RONE})


def radicals() -> Tuple[Tuple[str, "Scalar"], ...]:
    return tuple((r.name, r.square) for r in _RADICALS)


def sqrt(x) -> "Scalar":
    """Principal square root of a pure rational function.

    Existing radicals are reused when their product matches the square-free
    kernel; otherwise a fresh radical named ``sqrt(<kernel>)`` is adjoined.
    The caller is responsible for ``x`` being positive on the domain.
    """
    x = _as_scalar(x)
    if not x:
        return Scalar.zero()
    coeff = x.pure()
    if coeff is None:
        raise RadicalError("sqrt is only available for pure rational functions")
    root, kernel, sign = _squarefree_split(coeff)
    if sign < 0:
        raise RadicalError(f"sqrt of an element negative at the sample point: {x}")
    out = Scalar.from_ratfunc(root)
    if not kernel:
        return out
    ids = _span_solve(kernel)
    if ids is None:
        kpoly = _R.one
        for f in sorted(kernel, key=str):
            kpoly *= f
        adjoin_radical(f"sqrt({kpoly})", Scalar.from_ratfunc(RatFunc(kpoly)))
        ids = _span_solve(kernel)
    mono = Scalar.one()
    for i in ids:
        mono = mono * Scalar({(1 << i, 0): _RONE})
    # mono**2 equals kernel times a square; fix the rational factor
    ratio = (x / (mono * mono)).pure()
    root2, k2, sign2 = _squarefree_split(ratio)
    if k2 or sign2 < 0:
        raise RadicalError("internal: radical kernel mismatch")
    return mono * Scalar.from_ratfunc(root2)


# ---------------------------------------------------------------------------

def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Scalar:
    """Exact scalar: ``{(radical_mask, half_phase): RatFunc}``.

    ``half_phase = k`` stands for ``e(k*theta/2)``.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Tuple[int, int], RatFunc] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # constructors
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): _RONE})

    @classmethod
    def from_ratfunc(cls, r: RatFunc):
        return cls({(0, 0): r}) if r else cls()

    @classmethod
    def const(cls, q):
        return cls.from_ratfunc(RatFunc.const(q))

    # predicates
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def pure(self):
        """The RatFunc when there are no radicals or phases, else None."""
        if not self.terms:
            return _RZERO
        if len(self.terms) == 1 and (0, 0) in self.terms:
            return self.terms[(0, 0)]
        return None

    def as_rational(self):
        p = self.pure()
        return None if p is None else p.as_ground()

    def is_one(self):
        p = self.pure()
        return p is not None and p.is_one()

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = _as_scalar(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # arithmetic
    def __neg__(self):
        return Scalar({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            out[k] = v if w is None else w + v
        return Scalar(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Scalar()
        out: Dict[Tuple[int, int], RatFunc] = {}
        for (m1, p1), c1 in self.terms.items():
            for (m2, p2), c2 in other.terms.items():
                cf = c1 * c2
                key = (m1 ^ m2, p1 + p2)
                common = m1 & m2
                if not common:
                    w = out.get(key)
                    out[key] = cf if w is None else w + cf
                    continue
                piece = Scalar({key: cf})
                for i in _bits(common):
                    piece = piece * _RADICALS[i].square
                for k, v in piece.terms.items():
                    w = out.get(k)
                    out[k] = v if w is None else w + v
        return Scalar(out)

    __rmul__ = __mul__

    def star(self):
        if all(p == 0 for _, p in self.terms):
            return self
        return Scalar({(m, -p): v for (m, p), v in self.terms.items()})

    conjugate = star

    def inverse(self):
        if not self.terms:
            raise ScalarDivisionError("division by zero")
        if len(self.terms) == 1:
            (m, p), v = next(iter(self.terms.items()))
            out = Scalar({(m, -p): v.inverse()})
            for i in _bits(m):
                out = out * _RADICALS[i].square.inverse()
            return out
        mask = 0
        for m, _ in self.terms:
            mask |= m
        if not mask:
            raise ScalarDivisionError("inverse of a multi-phase element is not supported")
        top = mask.bit_length() - 1
        bit = 1 << top
        conj = Scalar({(m, p): (-v if m & bit else v) for (m, p), v in self.terms.items()})
        norm = self * conj
        return conj * norm.inverse()

    def __truediv__(self, other):
        return self * _as_scalar(other).inverse()

    def __rtruediv__(self, other):
        return _as_scalar(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def radical_parts(self, name: str):
        """Split ``x = a + b*r`` for the radical ``r = name``."""
        bit = 1 << _BY_NAME[name].index
        a = {k: v for k, v in self.terms.items() if not k[0] & bit}
        b = {(k[0] ^ bit, k[1]): v for k, v in self.terms.items() if k[0] & bit}
        return Scalar(a), Scalar(b)

    def phases(self):
        return sorted({p for _, p in self.terms})

    def radical_names(self):
        mask = 0
        for m, _ in self.terms:
            mask |= m
        return sorted(_RADICALS[i].name for i in _bits(mask))

    def variables(self):
        out = set()
        for v in self.terms.values():
            out |= v.variables()
        return out

    def subs_phase(self, k: int = 0) -> "Scalar":
        """Drop phases by setting theta so that e(theta/2) is 1."""
        out = Scalar()
        for (m, p), v in self.terms.items():
            out = out + Scalar({(m, 0): v})
        return out

    def eval(self, assignment: Mapping[str, float] | None = None, theta: float | None = None,
             **kw) -> complex:
        return eval_complex(self, assignment, theta, **kw)

    def __complex__(self):
        return eval_complex(self, {})

    def __float__(self):
        v = eval_complex(self, {})
        return v.real

    def __str__(self):
        if not self.terms:
            return "0"
        items = []
        for (m, p), v in self.terms.items():
            names = sorted(_RADICALS[i].name for i in _bits(m))
            items.append(((p, names), _term_str(p, names, v)))
        items.sort(key=lambda it: it[0])
        return " + ".join(s for _, s in items).replace("+ -", "- ")

    def __repr__(self):
        return f"Scalar({self})"


def _phase_str(p: int) -> str:
    if p % 2 == 0:
        k = p // 2
        return "e(theta)" if k == 1 else f"e({k}*theta)"
    return f"e({p}/2*theta)"


def _term_str(p, names, v: RatFunc) -> str:
    head = []
    if p:
        head.append(_phase_str(p))
    head.extend(names)
    if not head:
        return str(v)
    g = v.as_ground()
    if g == 1:
        return "*".join(head)
    if g == -1:
        return "-" + "*".join(head)
    if g is not None and g.denominator == 1 and g > 0:
        return "*".join(head + [str(v)])
    return "*".join(head + [f"({v})"])


def _as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.const(x)
    if isinstance(x, RatFunc):
        return Scalar.from_ratfunc(x)
    if type(x).__name__ == "mpq":
        return Scalar.from_ratfunc(RatFunc(_R(x)))
    raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")


S = _as_scalar


def _coerce(x):
    try:
        return _as_scalar(x)
    except TypeError:
        return NotImplemented


def var(name: str, power: int = 1) -> Scalar:
    return Scalar.from_ratfunc(RatFunc.gen(name, power))


def phase(half_units: int) -> Scalar:
    """``e(half_units * theta / 2)``."""
    return Scalar({(0, half_units): _RONE})


def one():
    return Scalar.one()


def zero():
    return Scalar.zero()


s = var("s")
t = var("t")
c = var("c")
mu = var("s", 2)

# named radicals used by the sphere constructions; registered first so that
# later calls to sqrt() reuse them instead of adjoining anonymous copies
adjoin_radical("u", 1 + mu ** 2)
adjoin_radical("rho", mu ** 2 * t ** 2 / ((1 + mu ** 2) ** 2 * (1 - t)))


def eval_complex(x: Scalar, assignment: Mapping[str, float] | None = None,
                 theta: float | None = None, mu: float | None = None, **kw) -> complex:
    """Evaluate ``x`` as a complex number.

    ``assignment`` maps indeterminate names to reals; ``mu`` may be given in
    place of ``s`` (then ``s = sqrt(mu)``).  Radicals take the principal root.
    """
    x = _as_scalar(x)
    vals = dict(assignment or {})
    vals.update(kw)
    if mu is not None:
        vals["s"] = math.sqrt(mu)
    if "mu" in vals:
        vals["s"] = math.sqrt(vals.pop("mu"))
    needed = x.variables()
    mask = 0
    for m, _ in x.terms:
        mask |= m
    rad_vals: Dict[int, float] = {}

    def rad(i):
        if i not in rad_vals:
            r = _RADICALS[i]
            sq = eval_complex(r.square, vals)
            if abs(sq.imag) > 1e-14 * max(1.0, abs(sq)) or sq.real < 0:
                raise ValueError(f"radical {r.name} has negative square {sq} at assignment")
            rad_vals[i] = math.sqrt(sq.real)
        return rad_vals[i]

    for i in _bits(mask):
        needed |= _RADICALS[i].square.variables()
    missing = sorted(n for n in needed if n not in vals)
    if missing:
        raise KeyError(f"missing assignment for {', '.join(missing)}")
    if any(p for _, p in x.terms) and theta is None:
        raise KeyError("missing assignment for theta")
    point = [float(vals.get(n, 0.0)) for n in INDETERMINATES]
    tot = 0j
    for (m, p), v in x.terms.items():
        term = complex(v.evalf(point))
        for i in _bits(m):
            term *= rad(i)
        if p:
            term *= cmath.exp(1j * math.pi * p * theta)
        tot += term
    return tot


# ---------------------------------------------------------------------------
# plain-data serialization (JSON friendly)

def _ratfunc_to_data(r: RatFunc):
    return [str(r.num), str(r.den), list(r.shift)]


def _ratfunc_from_data(d) -> RatFunc:
    num, den, shift = d
    return RatFunc(_R.from_expr(sympify(num)), _R.from_expr(sympify(den)), tuple(shift))


def scalar_to_data(x) -> list:
    """``[[radical names], half_phase, [num, den, shift]]`` per term, sorted."""
    x = _as_scalar(x)
    out = []
    for (m, p), v in x.terms.items():
        out.append([sorted(_RADICALS[i].name for i in _bits(m)), p, _ratfunc_to_data(v)])
    out.sort(key=lambda it: (it[1], it[0], it[2]))
    return out


def scalar_from_data(data) -> Scalar:
    """Inverse of :func:`scalar_to_data`; radicals must already be adjoined."""
    tot = Scalar.zero()
    for names, p, rf in data:
        mono = Scalar({(0, p): _ratfunc_from_data(rf)})
        for nm in names:
            if nm not in _BY_NAME:
                raise RadicalError(f"unknown radical {nm!r}; load the radical table first")
            mono = mono * radical(nm)
        tot = tot + mono
    return tot


def radical_table(names: Iterable[str] | None = None) -> list:
    """``[[name, square data]]`` in adjunction order (optionally filtered)."""
    keep = None if names is None else set(names)
    return [[r.name, scalar_to_data(r.square)] for r in _RADICALS if keep is None or r.name in keep]
