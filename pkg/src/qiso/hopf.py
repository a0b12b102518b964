"""Hopf *-algebra structure on presented algebras.

Coproduct, counit and antipode are given on generators and extended
(anti-)multiplicatively.  Tensors keep both legs in normal form.  The module
also carries the SU_mu(2) Haar state and the pairing of SU_mu(2) with
U_mu(su(2)) together with the left and right actions it induces.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .ncalg import GenSet, NCPoly, Presentation, Word, _add_into
from .scalar import Scalar, S, mu, var

__all__ = [
    "TensorPoly", "HopfData", "su2_presentation", "su2_hopf", "uq_presentation",
    "uq_hopf", "haar_su2", "haar_invariance_check", "hopf_axiom_suite",
    "uq_pair", "uq_act", "Pairing", "basis_by_length", "fundamental_su2",
    "star_delta_check",
]


class TensorPoly:
    """Element of ``P1 (x) P2`` as ``{(w1, w2): Scalar}`` with normal legs."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left: Presentation, right: Presentation, terms=None):
        self.left, self.right = left, right
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def pure(cls, left: Presentation, right: Presentation, a: NCPoly, b: NCPoly):
        a, b = left.normal_form(a), right.normal_form(b)
        out = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                out[(w1, w2)] = c1 * c2
        return cls(left, right, out)

    @classmethod
    def one(cls, left, right):
        return cls(left, right, {((), ()): Scalar.one()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __add__(self, other: "TensorPoly"):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return TensorPoly(self.left, self.right, out)

    def __neg__(self):
        return TensorPoly(self.left, self.right, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorPoly":
        c = S(c)
        return TensorPoly(self.left, self.right, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorPoly):
            return self.scale(other)
        L, R = self.left, self.right
        out: Dict = {}
        lcache: Dict = {}
        rcache: Dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                la = lcache.get((a1, a2))
                if la is None:
                    la = lcache[(a1, a2)] = L._extend(a1, a2)
                rb = rcache.get((b1, b2))
                if rb is None:
                    rb = rcache[(b1, b2)] = R._extend(b1, b2)
                c = c1 * c2
                for u, d in la.items():
                    cd = c * d
                    for v, e in rb.items():
                        _add_into(out, (u, v), cd * e)
        return TensorPoly(L, R, out)

    __rmul__ = scale

    def star(self) -> "TensorPoly":
        L, R = self.left, self.right
        out: Dict = {}
        for (a, b), c in self.terms.items():
            la = L._nf_word(L.gens.star_word(a))
            rb = R._nf_word(R.gens.star_word(b))
            cc = c.star()
            for u, d in la.items():
                for v, e in rb.items():
                    _add_into(out, (u, v), cc * d * e)
        return TensorPoly(L, R, out)

    def flip(self) -> "TensorPoly":
        return TensorPoly(self.right, self.left, {(b, a): c for (a, b), c in self.terms.items()})

    def apply_left(self, f) -> NCPoly:
        """``sum f(a) b`` for a scalar functional ``f`` on left words."""
        out: Dict = {}
        for (a, b), c in self.terms.items():
            v = f(a)
            if v:
                _add_into(out, b, c * v)
        return NCPoly(self.right.gens, out)

    def apply_right(self, f) -> NCPoly:
        out: Dict = {}
        for (a, b), c in self.terms.items():
            v = f(b)
            if v:
                _add_into(out, a, c * v)
        return NCPoly(self.left.gens, out)

    def multiply(self) -> NCPoly:
        """``m(a (x) b) = ab`` when both legs live in the same presentation."""
        P = self.left
        out: Dict = {}
        for (a, b), c in self.terms.items():
            for v, d in P._extend(a, b).items():
                _add_into(out, v, c * d)
        return NCPoly(P.gens, out)

    def __str__(self):
        if not self.terms:
            return "0"
        L, R = self.left.gens, self.right.gens
        parts = []
        for (a, b), c in sorted(self.terms.items(), key=lambda it: (L.key(it[0][0]), R.key(it[0][1]))):
            cs = "" if c.is_one() else f"({c}) "
            parts.append(f"{cs}{L.render(a)} (x) {R.render(b)}")
        return " + ".join(parts)

    __repr__ = __str__


class HopfData:
    """Generator-level coproduct, counit and antipode on a presentation."""

    def __init__(self, pres: Presentation, delta: Mapping[str, TensorPoly],
                 eps: Mapping[str, object], kappa: Mapping[str, NCPoly]):
        self.pres = pres
        G = pres.gens
        self.delta_gen: Dict[int, TensorPoly] = {}
        self.eps_gen: Dict[int, Scalar] = {}
        self.kappa_gen: Dict[int, NCPoly] = {}
        for name, d in delta.items():
            self.delta_gen[G.index[name]] = d
        for i in range(len(G)):
            j = G.star[i]
            if i not in self.delta_gen and j in self.delta_gen:
                self.delta_gen[i] = self.delta_gen[j].star()
        for name, e in eps.items():
            self.eps_gen[G.index[name]] = S(e)
        for i in range(len(G)):
            j = G.star[i]
            if i not in self.eps_gen and j in self.eps_gen:
                self.eps_gen[i] = self.eps_gen[j].star()
        for name, k in kappa.items():
            self.kappa_gen[G.index[name]] = pres.normal_form(k)
        self._dcache: Dict[Word, TensorPoly] = {(): TensorPoly.one(pres, pres)}
        self._kcache: Dict[Word, NCPoly] = {(): pres.one()}
        # generators eliminated by a rule get their data from the rule's rhs
        for i in range(len(G)):
            if (i,) not in pres.rules:
                continue
            rhs = NCPoly(G, pres.rules[(i,)])
            if i not in self.delta_gen:
                self.delta_gen[i] = self.delta(rhs)
            if i not in self.eps_gen:
                self.eps_gen[i] = self.counit(rhs)
            if i not in self.kappa_gen:
                self.kappa_gen[i] = self.antipode(rhs)
        missing = [G.names[i] for i in range(len(G))
                   if i not in self.delta_gen or i not in self.eps_gen or i not in self.kappa_gen]
        if missing:
            raise ValueError(f"incomplete Hopf data for {missing}")

    def delta_word(self, w: Word) -> TensorPoly:
        hit = self._dcache.get(w)
        if hit is None:
            hit = self.delta_word(w[:-1]) * self.delta_gen[w[-1]]
            self._dcache[w] = hit
        return hit

    def delta(self, x) -> TensorPoly:
        x = self.pres.normal_form(x)
        out = TensorPoly(self.pres, self.pres)
        for w, c in x.terms.items():
            out = out + self.delta_word(w).scale(c)
        return out

    def counit_word(self, w: Word) -> Scalar:
        out = Scalar.one()
        for g in w:
            out = out * self.eps_gen[g]
            if not out:
                break
        return out

    def counit(self, x) -> Scalar:
        x = self.pres.normal_form(x) if isinstance(x, NCPoly) else self.pres.normal_form(x)
        tot = Scalar.zero()
        for w, c in x.terms.items():
            tot = tot + c * self.counit_word(w)
        return tot

    def antipode_word(self, w: Word) -> NCPoly:
        hit = self._kcache.get(w)
        if hit is None:
            hit = self.pres.mul(self.kappa_gen[w[-1]], self.antipode_word(w[:-1]))
            self._kcache[w] = hit
        return hit

    def antipode(self, x) -> NCPoly:
        x = self.pres.normal_form(x)
        out = self.pres.zero()
        for w, c in x.terms.items():
            out = out + self.antipode_word(w) * c
        return out


# ---------------------------------------------------------------------------
# SU_mu(2)

_SU2 = None
_SU2H = None


def su2_presentation(bound: int = 8) -> Presentation:
    """SU_mu(2) on alpha, alpha*, gamma*, gamma with weights 2, 2, 1, 1."""
    global _SU2
    if _SU2 is not None and _SU2.bound == bound:
        return _SU2
    G = GenSet(["alpha", "alpha*", "gamma*", "gamma"],
               {"alpha": "alpha*", "gamma": "gamma*"}, [2, 2, 1, 1])
    a, a_, g_, g = (NCPoly.gen(G, n) for n in G.names)
    rels = [
        ("alpha* alpha + gamma* gamma = 1", a_ * a + g_ * g - 1),
        ("alpha alpha* + mu^2 gamma gamma* = 1", a * a_ + mu ** 2 * g * g_ - 1),
        ("gamma gamma* = gamma* gamma", g * g_ - g_ * g),
        ("mu gamma alpha = alpha gamma", mu * g * a - a * g),
        ("mu gamma* alpha = alpha gamma*", mu * g_ * a - a * g_),
    ]
    P = Presentation("SUmu2", G, rels, degree_bound=bound)
    if bound == 8:
        _SU2 = P
    return P


def fundamental_su2(P: Presentation | None = None):
    """The fundamental corepresentation ``[[alpha, -mu gamma*], [gamma, alpha*]]``."""
    P = P or su2_presentation()
    return [[P["alpha"], P["gamma*"] * (-mu)], [P["gamma"], P["alpha*"]]]


def su2_hopf() -> HopfData:
    global _SU2H
    if _SU2H is not None:
        return _SU2H
    P = su2_presentation()
    a, a_, g_, g = P["alpha"], P["alpha*"], P["gamma*"], P["gamma"]
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    delta = {
        "alpha": T(a, a) - T(g_, g).scale(mu),
        "gamma": T(g, a) + T(a_, g),
    }
    eps = {"alpha": 1, "gamma": 0}
    kappa = {"alpha": a_, "alpha*": a, "gamma": g * (-mu), "gamma*": g_ * (-mu ** -1)}
    _SU2H = HopfData(P, delta, eps, kappa)
    return _SU2H


def _su2_word_haar(P: Presentation, w: Word) -> Scalar:
    ia, ias = P.gens.index["alpha"], P.gens.index["alpha*"]
    igs = P.gens.index["gamma*"]
    if ia in w or ias in w:
        return Scalar.zero()
    m = sum(1 for g in w if g == igs)
    l = len(w) - m
    if l != m:
        return Scalar.zero()
    return (1 - mu ** 2) / (1 - mu ** (2 * m + 2))


def haar_su2(x, P: Presentation | None = None) -> Scalar:
    """Haar state of SU_mu(2) on the normal-form basis, extended linearly."""
    P = P or su2_presentation()
    x = P.normal_form(x)
    tot = Scalar.zero()
    for w, c in x.terms.items():
        v = _su2_word_haar(P, w)
        if v:
            tot = tot + c * v
    return tot


def basis_by_length(P: Presentation, n: int) -> List[Word]:
    out = []
    frontier = [()]
    out.append(())
    lens = P._lhs_lengths
    for _ in range(n):
        nxt = []
        for u in frontier:
            for g in range(len(P.gens)):
                w = u + (g,)
                if all(w[len(w) - L:] not in P.rules for L in lens if L <= len(w)):
                    nxt.append(w)
        out.extend(nxt)
        frontier = nxt
    return out


def haar_invariance_check(degree: int, H: HopfData | None = None):
    """Per-word verdicts of (h (x) id)D(x) = h(x)1 = (id (x) h)D(x)."""
    H = H or su2_hopf()
    P = H.pres
    hw = lambda w: _su2_word_haar(P, w)
    out = []
    for w in basis_by_length(P, degree):
        d = H.delta_word(w)
        target = NCPoly(P.gens, {(): hw(w)})
        lhs = d.apply_left(hw)
        rhs = d.apply_right(hw)
        out.append((P.gens.render(w), lhs == target and rhs == target))
    return out


def _triple_left(H: HopfData, d: TensorPoly):
    """(Delta (x) id) applied to a tensor, as {(w1,w2,w3): c}."""
    out: Dict = {}
    for (a, b), c in d.terms.items():
        for (a1, a2), e in H.delta_word(a).terms.items():
            _add_into(out, (a1, a2, b), c * e)
    return out


def _triple_right(H: HopfData, d: TensorPoly):
    out: Dict = {}
    for (a, b), c in d.terms.items():
        for (b1, b2), e in H.delta_word(b).terms.items():
            _add_into(out, (a, b1, b2), c * e)
    return out


def hopf_axiom_suite(H: HopfData, sample: Iterable) -> List[dict]:
    """Coassociativity, counit and antipode laws on each sample element."""
    P = H.pres
    records = []
    for x in sample:
        x = P.normal_form(x) if isinstance(x, NCPoly) else P.normal_form(x)
        d = H.delta(x)
        coassoc = _triple_left(H, d) == _triple_right(H, d)
        left_counit = d.apply_left(H.counit_word) == x
        right_counit = d.apply_right(H.counit_word) == x
        e = NCPoly(P.gens, {(): H.counit(x)})
        s1 = P.zero()
        s2 = P.zero()
        for (a, b), c in d.terms.items():
            s1 = s1 + P.mul(H.antipode_word(a), NCPoly.word(P.gens, b, c))
            s2 = s2 + P.mul(NCPoly.word(P.gens, a, c), H.antipode_word(b))
        records.append({
            "element": str(x),
            "coassociativity": coassoc,
            "counit": left_counit and right_counit,
            "antipode": s1 == e and s2 == e,
        })
    return records


def star_delta_check(H: HopfData, x) -> bool:
    x = H.pres.normal_form(x)
    return H.delta(x.star()) == H.delta(x).star()


# ---------------------------------------------------------------------------
# U_mu(su(2)) and the pairing

_UQ = None
_UQH = None


def uq_presentation() -> Presentation:
    global _UQ
    if _UQ is not None:
        return _UQ
    G = GenSet(["E", "F", "K", "Kinv"], {"E": "F"}, [2, 2, 1, 1])
    E, F, K, Ki = (NCPoly.gen(G, n) for n in G.names)
    rels = [
        ("K Kinv = 1", K * Ki - 1),
        ("Kinv K = 1", Ki * K - 1),
        ("K E = mu E K", K * E - mu * E * K),
        ("F K = mu K F", F * K - mu * K * F),
        ("E F - F E = (K^2 - Kinv^2)/(mu - mu^-1)",
         E * F - F * E - (K * K - Ki * Ki) * (mu - mu ** -1).inverse()),
    ]
    _UQ = Presentation("Umu_su2", G, rels, degree_bound=8)
    return _UQ


def uq_hopf() -> HopfData:
    global _UQH
    if _UQH is not None:
        return _UQH
    P = uq_presentation()
    E, F, K, Ki = P["E"], P["F"], P["K"], P["Kinv"]
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    delta = {"E": T(E, K) + T(Ki, E), "F": T(F, K) + T(Ki, F), "K": T(K, K), "Kinv": T(Ki, Ki)}
    eps = {"E": 0, "F": 0, "K": 1, "Kinv": 1}
    kappa = {"E": E * (-mu), "F": F * (-mu ** -1), "K": Ki, "Kinv": K}
    _UQH = HopfData(P, delta, eps, kappa)
    return _UQH


class Pairing:
    """Dual pairing of U_mu(su(2)) with SU_mu(2).

    Two recursions are available: ``route="A"`` splits the U_mu(su(2)) word
    through the coproduct of SU_mu(2); ``route="B"`` splits the SU_mu(2) word
    through the coproduct of U_mu(su(2)).  Both bottom out in the generator
    table.
    """

    def __init__(self):
        self.U = uq_hopf()
        self.H = su2_hopf()
        P, Q = self.H.pres, self.U.pres
        s = var("s")
        si = var("s", -1)
        tab = {
            ("K", "alpha"): si, ("K", "alpha*"): s,
            ("Kinv", "alpha"): s, ("Kinv", "alpha*"): si,
            ("E", "gamma"): Scalar.one(), ("F", "gamma*"): -mu ** -1,
        }
        self.table: Dict[Tuple[int, int], Scalar] = {
            (Q.gens.index[f], P.gens.index[x]): v for (f, x), v in tab.items()}
        self._memo: Dict = {}

    def _gen(self, f: int, x: int) -> Scalar:
        return self.table.get((f, x), Scalar.zero())

    def pair_words(self, fw: Word, xw: Word, route: str = "A") -> Scalar:
        key = (fw, xw, route)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not fw:
            out = self.H.counit_word(xw)
        elif not xw:
            out = self.U.counit_word(fw)
        elif len(fw) == 1 and len(xw) == 1:
            out = self._gen(fw[0], xw[0])
        elif (route == "A" and len(fw) > 1) or len(xw) == 1:
            f1, rest = fw[:1], fw[1:]
            out = Scalar.zero()
            for (a, b), c in self.H.delta_word(xw).terms.items():
                v = self.pair_words(f1, a, route)
                if v:
                    w = self.pair_words(rest, b, route)
                    if w:
                        out = out + c * v * w
        else:
            x1, rest = xw[:1], xw[1:]
            out = Scalar.zero()
            for (a, b), c in self.U.delta_word(fw).terms.items():
                v = self.pair_words(a, x1, route)
                if v:
                    w = self.pair_words(b, rest, route)
                    if w:
                        out = out + c * v * w
        self._memo[key] = out
        return out

    def pair(self, f: NCPoly, x: NCPoly, route: str = "A") -> Scalar:
        tot = Scalar.zero()
        for fw, c in f.terms.items():
            for xw, d in x.terms.items():
                v = self.pair_words(fw, xw, route)
                if v:
                    tot = tot + c * d * v
        return tot

    def left(self, f: NCPoly, x: NCPoly) -> NCPoly:
        """``f |> x = sum x_(1) <f, x_(2)>``."""
        P = self.H.pres
        out = P.zero()
        for fw, c in f.terms.items():
            d = self.H.delta(x)
            out = out + d.apply_right(lambda b: self.pair_words(fw, b)) * c
        return out

    def right(self, f: NCPoly, x: NCPoly) -> NCPoly:
        """``x <| f = sum <f, x_(1)> x_(2)``."""
        P = self.H.pres
        out = P.zero()
        for fw, c in f.terms.items():
            d = self.H.delta(x)
            out = out + d.apply_left(lambda a: self.pair_words(fw, a)) * c
        return out


_PAIRING = None


def _pairing() -> Pairing:
    global _PAIRING
    if _PAIRING is None:
        _PAIRING = Pairing()
    return _PAIRING


def uq_pair(f: NCPoly, x: NCPoly, route: str = "A") -> Scalar:
    return _pairing().pair(f, x, route)


def uq_act(side: str, f: NCPoly, x: NCPoly) -> NCPoly:
    pr = _pairing()
    if side == "left":
        return pr.left(f, x)
    if side == "right":
        return pr.right(f, x)
    raise ValueError("side must be 'left' or 'right'")
