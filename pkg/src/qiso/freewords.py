"""The group algebra of Z_2 * Z^(*inf) and the conjugation action on the sphere triple.

Letters are ``y`` (order two) and ``g_n^(+-1)`` for ``n >= 0``; the copies of
Z are free, so only ``y y`` and ``g_n g_n^-1`` cancel.  Coefficients of
:class:`GroupAlgElem` are plain Python numbers: exact ``Fraction`` where the
combinatorics is rational (unitarity of V, projections) and floats where the
square roots c_pm(n)^(1/2) enter.

The unitary V sends the D-eigenvectors (e_n, e_n)/sqrt2 and (e_n, -e_n)/sqrt2
to themselves tensored with ``g_n`` and ``g_n y``; ``ad_V(X) = V (X (x) 1) V*``.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Number
from typing import Dict, Hashable, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

from .report import Report
from .repnum import CPTriple, SparseOp, build_cp

__all__ = [
    "GroupWord", "GroupAlgElem", "GAMatrix", "VRep", "word_ops", "ad_V", "closed_forms",
    "closed_form_suite", "character_eval", "character_value", "no_action_witness", "q_plus",
    "q_minus", "Y",
]

Letter = Tuple[int, int]
_Y = -1


class GroupWord:
    """A reduced word; letters are ``(-1, 1)`` for y and ``(n, +-1)`` for g_n^(+-1)."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = self._reduce(tuple(letters))
        self._hash = hash(self.letters)

    @staticmethod
    def _reduce(letters: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
        out: List[Letter] = []
        for g, e in letters:
            if g == _Y:
                e = 1
            elif g < 0 or e not in (1, -1):
                raise ValueError(f"bad letter {(g, e)!r}")
            if out and out[-1][0] == g and (g == _Y or out[-1][1] == -e):
                out.pop()
            else:
                out.append((g, e))
        return tuple(out)

    @classmethod
    def y(cls) -> "GroupWord":
        return cls([(_Y, 1)])

    @classmethod
    def g(cls, n: int, e: int = 1) -> "GroupWord":
        return cls([(n, 1 if e > 0 else -1)] * abs(e))

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        """Inverse of :meth:`render`: ``"g0.y.g1^-1"``; ``"e"`` is the identity."""
        text = text.strip()
        if text in ("", "e"):
            return cls()
        letters = []
        for tok in text.split("."):
            if tok == "y":
                letters.append((_Y, 1))
            elif tok.startswith("g"):
                body, _, exp = tok[1:].partition("^")
                letters.append((int(body), int(exp) if exp else 1))
            else:
                raise ValueError(f"cannot parse letter {tok!r}")
        return cls(letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def star(self) -> "GroupWord":
        """Formal inverse: reverse the word and invert each letter."""
        return GroupWord((g, 1 if g == _Y else -e) for g, e in reversed(self.letters))

    inverse = star

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __lt__(self, other: "GroupWord"):
        return self.sort_key() < other.sort_key()

    def render(self) -> str:
        if not self.letters:
            return "e"
        return ".".join("y" if g == _Y else (f"g{g}" if e == 1 else f"g{g}^-1") for g, e in self.letters)

    __str__ = render

    def __repr__(self):
        return f"GroupWord({self.render()!r})"


EPS = GroupWord()


def word_ops(w1: GroupWord, w2: GroupWord | None = None, op: str = "mul") -> GroupWord:
    if op == "mul":
        return w1 * w2
    if op == "star":
        return w1.star()
    if op == "reduce":
        return GroupWord(w1.letters)
    raise ValueError(f"unknown op {op!r}")


def _is_zero(c, tol: float) -> bool:
    return c == 0 if tol == 0 else abs(c) <= tol


class GroupAlgElem:
    """Finite linear combination of reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[GroupWord, Number] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def word(cls, w: GroupWord, c=1) -> "GroupAlgElem":
        return cls({w: c})

    @classmethod
    def scalar(cls, c) -> "GroupAlgElem":
        return cls({EPS: c})

    def _coerce(self, other) -> "GroupAlgElem":
        if isinstance(other, GroupAlgElem):
            return other
        if isinstance(other, GroupWord):
            return GroupAlgElem.word(other)
        return GroupAlgElem.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupAlgElem(out)

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgElem({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (GroupAlgElem, GroupWord)):
            other = self._coerce(other)
            out: Dict[GroupWord, Number] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 * w2
                    out[w] = out.get(w, 0) + c1 * c2
            return GroupAlgElem(out)
        return GroupAlgElem({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, GroupWord):
            return GroupAlgElem.word(other) * self
        return GroupAlgElem({w: other * c for w, c in self.terms.items()})

    def star(self) -> "GroupAlgElem":
        return GroupAlgElem({w.star(): (c.conjugate() if isinstance(c, complex) else c)
                             for w, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def norm1(self) -> float:
        return float(sum(abs(c) for c in self.terms.values()))

    def support(self, tol: float = 0.0) -> frozenset:
        return frozenset(w for w, c in self.terms.items() if not _is_zero(c, tol))

    def close_to(self, other, tol: float = 1e-12) -> bool:
        """Same support above ``tol`` and coefficients within ``tol``."""
        other = self._coerce(other)
        if self.support(tol) != other.support(tol):
            return False
        return (self - other).norm1() <= tol * max(1, len(self.terms) + len(other.terms))

    def coeff(self, w: GroupWord):
        return self.terms.get(w, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            parts.append(f"{c}*{w.render()}")
        return " + ".join(parts)

    __repr__ = __str__


def Y() -> GroupAlgElem:
    return GroupAlgElem.word(GroupWord.y())


def q_plus(n: int) -> GroupAlgElem:
    return GroupAlgElem.word(GroupWord.g(n))


def q_minus(n: int) -> GroupAlgElem:
    return GroupAlgElem.word(GroupWord.g(n) * GroupWord.y())


# ---------------------------------------------------------------------------
# matrices over the group algebra


class GAMatrix:
    """Sparse matrix with GroupAlgElem entries on a labeled basis."""

    def __init__(self, labels: Sequence[Hashable], entries: Mapping[Tuple[Hashable, Hashable], GroupAlgElem] | None = None):
        self.labels = tuple(labels)
        self.entries: Dict[Tuple[Hashable, Hashable], GroupAlgElem] = {
            k: v for k, v in (entries or {}).items() if v}

    @classmethod
    def from_op(cls, X: SparseOp, unit: GroupAlgElem | None = None) -> "GAMatrix":
        """``X (x) unit`` (default unit: the identity word)."""
        unit = unit or GroupAlgElem.scalar(1)
        m = X.mat.tocoo()
        ent = {}
        for i, j, v in zip(m.row, m.col, m.data):
            if v != 0:
                c = v.real if v.imag == 0 else complex(v)
                ent[(X.labels[i], X.labels[j])] = unit * c
        return cls(X.labels, ent)

    def __getitem__(self, key) -> GroupAlgElem:
        return self.entries.get(key, GroupAlgElem())

    def __add__(self, other: "GAMatrix") -> "GAMatrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return GAMatrix(self.labels, out)

    def __sub__(self, other: "GAMatrix") -> "GAMatrix":
        return self + GAMatrix(other.labels, {k: -v for k, v in other.entries.items()})

    def __matmul__(self, other: "GAMatrix") -> "GAMatrix":
        rows: Dict[Hashable, List[Tuple[Hashable, GroupAlgElem]]] = {}
        for (i, k), v in other.entries.items():
            rows.setdefault(i, []).append((k, v))
        out: Dict[Tuple[Hashable, Hashable], GroupAlgElem] = {}
        for (i, j), a in self.entries.items():
            for k, b in rows.get(j, ()):
                p = a * b
                out[(i, k)] = out[(i, k)] + p if (i, k) in out else p
        return GAMatrix(self.labels, out)

    def star(self) -> "GAMatrix":
        return GAMatrix(self.labels, {(j, i): v.star() for (i, j), v in self.entries.items()})

    def column(self, col) -> Dict[Hashable, GroupAlgElem]:
        return {i: v for (i, j), v in self.entries.items() if j == col}

    def is_identity(self) -> bool:
        one = GroupAlgElem.scalar(1)
        for lab in self.labels:
            if self[(lab, lab)] != one:
                return False
        return all(i == j for (i, j) in self.entries)

    def compare(self, other: "GAMatrix", cols: Iterable[Hashable], tol: float = 1e-12):
        """Worst entry discrepancy on the given columns: ``(ok, max_norm, bad_key)``."""
        cols = set(cols)
        keys = {k for k in list(self.entries) + list(other.entries) if k[1] in cols}
        worst, bad = 0.0, None
        ok = True
        for k in sorted(keys, key=repr):
            a, b = self[k], other[k]
            if not a.close_to(b, tol):
                ok = False
                d = (a - b).norm1()
                if d >= worst:
                    worst, bad = d, k
            else:
                worst = max(worst, (a - b).norm1())
        return ok, worst, bad

    def evaluate(self, chi) -> np.ndarray:
        """Apply a character ``chi: GroupWord -> complex`` entrywise."""
        idx = {lab: i for i, lab in enumerate(self.labels)}
        M = np.zeros((len(self.labels),) * 2, complex)
        for (i, j), v in self.entries.items():
            M[idx[i], idx[j]] = sum(c * chi(w) for w, c in v.terms.items())
        return M


class VRep:
    """The unitary V on the truncation 0 <= n <= N_max of the sphere triple."""

    def __init__(self, N_max: int):
        self.N_max = N_max
        self.labels = tuple((n, sg) for sg in (1, -1) for n in range(N_max + 1))

    def v(self, n: int, a: int) -> GroupAlgElem:
        """Coefficient on the eigenvector (e_n, a e_n)/sqrt2."""
        return q_plus(n) if a > 0 else q_minus(n)

    def matrix(self) -> GAMatrix:
        """V = sum_a |f_a><f_a| (x) v_a; entry ((n,s),(n,t)) = (g_n + s t g_n y)/2."""
        half = Fraction(1, 2)
        ent = {}
        for n in range(self.N_max + 1):
            for s in (1, -1):
                for t in (1, -1):
                    ent[((n, s), (n, t))] = (self.v(n, 1) + self.v(n, -1) * (s * t)) * half
        return GAMatrix(self.labels, ent)

    def unitarity(self) -> Tuple[bool, bool]:
        V = self.matrix()
        return (V.star() @ V).is_identity(), (V @ V.star()).is_identity()

    def character_unitary(self, chi) -> np.ndarray:
        """(id (x) chi)(V) as a numeric matrix."""
        return self.matrix().evaluate(chi)


def ad_V(X: SparseOp, rep: VRep) -> GAMatrix:
    """V (X (x) 1) V* over the group algebra."""
    if X.labels != rep.labels:
        raise ValueError(f"operator truncation does not match VRep(N_max={rep.N_max})")
    V = rep.matrix()
    return V @ GAMatrix.from_op(X) @ V.star()


# ---------------------------------------------------------------------------
# closed forms of the action on generators

def _s(T: CPTriple, n: int) -> Tuple[float, float]:
    cp, cm = T.c_pm(n)
    return math.sqrt(max(cp, 0.0)), math.sqrt(max(cm, 0.0))


def closed_forms(T: CPTriple, printed_b: bool = False) -> Dict[str, GAMatrix]:
    """The closed forms of ad_V on A, B, tau built from q_n^+ = g_n, q_n^- = g_n y.

    alpha(A) = sum A P_n (x) (1/2lam_+){lam_+(1 + q+q-*) + lam_-(1 - q+q-*)}
             + A Q_n (x) (1/2lam_-){lam_+(1 - q+q-*) + lam_-(1 + q+q-*)};
    alpha(B) = sum_(n>=1) B P_n (x) (1/(4 c_+(n)^(1/2)))[(s_+ + s_-) X_n + (s_+ - s_-) Z_n]
             + B Q_n (x) (1/(4 c_-(n)^(1/2)))[(s_+ + s_-) X_n - (s_+ - s_-) Z_n]
    with X_n = q+_(n-1) q+_n* + q-_(n-1) q-_n*, Z_n = q-_(n-1) q+_n* + q+_(n-1) q-_n*;
    alpha(tau) = sum_(n>=1) tau (P_n + Q_n) (x) q+_(n-1) q+_n*.

    ``printed_b=True`` uses the prefactor 1/(4 c_pm(n)) instead of
    1/(4 c_pm(n)^(1/2)); the two differ by c_pm(n)^(1/2), and only the
    square-root prefactor agrees with the pointwise action on (e_n, 0).
    """
    lp, lm = T.lam
    m = T.mu
    A, B, tau = {}, {}, {}
    for n in range(T.N_max + 1):
        w = q_plus(n) * q_minus(n).star()
        one = GroupAlgElem.scalar(1)
        A[((n, 1), (n, 1))] = ((one + w) * lp + (one - w) * lm) * (lp * m ** (2 * n) / (2 * lp))
        A[((n, -1), (n, -1))] = ((one - w) * lp + (one + w) * lm) * (lm * m ** (2 * n) / (2 * lm))
        if n >= 1:
            sp_, sm_ = _s(T, n)
            X = q_plus(n - 1) * q_plus(n).star() + q_minus(n - 1) * q_minus(n).star()
            Z = q_minus(n - 1) * q_plus(n).star() + q_plus(n - 1) * q_minus(n).star()
            cp, cm = T.c_pm(n)
            pre_p = 1 / (4 * (cp if printed_b else sp_))
            pre_m = 1 / (4 * (cm if printed_b else sm_))
            B[((n - 1, 1), (n, 1))] = (X * (sp_ + sm_) + Z * (sp_ - sm_)) * (sp_ * pre_p)
            B[((n - 1, -1), (n, -1))] = (X * (sp_ + sm_) - Z * (sp_ - sm_)) * (sm_ * pre_m)
            step = q_plus(n - 1) * q_plus(n).star()
            tau[((n - 1, 1), (n, 1))] = step
            tau[((n - 1, -1), (n, -1))] = step
    return {"A": GAMatrix(T.labels, A), "B": GAMatrix(T.labels, B), "tau": GAMatrix(T.labels, tau)}


def algebra_relations(T: CPTriple, n: int) -> Dict[str, GroupAlgElem]:
    """The four relation residues at index ``n`` (alg2 and alg3 need n >= 1)."""
    qp, qm = q_plus, q_minus
    out = {"alg1": qp(n) * qm(n).star() - qm(n) * qp(n).star()}
    if n >= 1:
        sp_, sm_ = _s(T, n)
        out["alg2"] = ((qp(n - 1) * qp(n).star() - qm(n - 1) * qm(n).star()) * (sp_ + sm_)
                       + (qp(n - 1) * qm(n).star() - qm(n - 1) * qp(n).star()) * (sp_ - sm_))
        out["alg3"] = ((qp(n - 1) * qp(n).star() - qm(n - 1) * qm(n).star()) * (sp_ + sm_)
                       + (qm(n - 1) * qp(n).star() - qp(n - 1) * qm(n).star()) * (sp_ - sm_))
    sp1, sm1 = _s(T, n + 1)
    out["alg4"] = ((qp(n + 1) * qp(n).star() - qm(n + 1) * qm(n).star()) * (sp1 + sm1)
                   - (qm(n + 1) * qp(n).star() - qp(n + 1) * qm(n).star()) * (sp1 - sm1))
    return out


def character_value(w: GroupWord, theta: float, y_sign: int = 1) -> complex:
    """phi(g_n) = e(-theta n(n+1)/2), phi(y) = y_sign, so phi(g_(n-1) g_n^-1) = e(n theta)."""
    val = 1 + 0j
    for g, e in w.letters:
        if g == _Y:
            val *= y_sign
        else:
            val *= cmath.exp(-1j * math.pi * theta * g * (g + 1) * e)
    return val


def character_eval(x: GroupAlgElem | GroupWord, theta: float, y_sign: int = 1) -> complex:
    if isinstance(x, GroupWord):
        return character_value(x, theta, y_sign)
    return complex(sum(c * character_value(w, theta, y_sign) for w, c in x.terms.items()))


def _interior_cols(T: CPTriple):
    return [lab for lab, ok in zip(T.labels, T.interior) if ok]


def closed_form_suite(rep: VRep | None = None, T: CPTriple | None = None, mu: float = 0.5,
                      c: float = 0.3, N_max: int = 40, tol: float = 1e-12,
                      theta: float = 0.1234) -> Report:
    T = T or build_cp(mu, c, N_max)
    rep = rep or VRep(T.N_max)
    out = Report("qiso-cp")
    pars = dict(mu=T.mu, c=T.c, N_max=T.N_max)
    cols = _interior_cols(T)
    u1, u2 = rep.unitarity()
    out.add("V* V = 1", u1, "unitarity of V over the group algebra", **pars)
    out.add("V V* = 1", u2, "unitarity of V over the group algebra", **pars)
    adI = ad_V(T["1"], rep)
    out.add("ad_V(1) = 1 (x) e", adI.is_identity(), "unitality", **pars)
    ads = {nm: ad_V(T[nm], rep) for nm in ("A", "B", "tau")}
    cf = closed_forms(T)
    for nm, label in (("A", "ad_V(A) = closed form"), ("B", "ad_V(B) = closed form"),
                      ("tau", "ad_V(tau) = sum tau (P_n + Q_n) (x) g_(n-1) g_n^-1")):
        ok, worst, bad = ads[nm].compare(cf[nm], cols, tol)
        out.add(label, ok, "closed form of the action on generators",
                "" if ok else f"mismatch at {bad}", worst, **pars)
    ok_printed, worst_p, _ = ads["B"].compare(closed_forms(T, printed_b=True)["B"], cols, tol)
    out.add("B prefactor 1/(4 c_pm(n)) disagrees with the action", not ok_printed,
            "prefactor must be 1/(4 c_pm(n)^(1/2))", f"discrepancy {worst_p:.3e} with 1/(4 c_pm(n))",
            worst_p, **pars)
    col0 = ads["B"].column((0, 1))
    out.add("ad_V(B) has no n = 0 column", not col0 and not ads["B"].column((0, -1)), "B e_0 = 0", **pars)
    step = ads["tau"][((0, 1), (1, 1))]
    expect = GroupAlgElem.word(GroupWord.g(0) * GroupWord.g(1, -1))
    out.add("ad_V(tau) entry (0,1) = g0.g1^-1", step == expect, "closed form of the action on tau",
            str(step), **pars)
    worst = 0.0
    ok = True
    for n in range(T.N_max + 1):
        adP = ad_V(T.Ptilde(n), rep)
        target = GAMatrix.from_op(T.Ptilde(n))
        good, w, _ = adP.compare(target, T.labels, tol)
        ok = ok and good
        worst = max(worst, w)
    out.add("ad_V(P~_n) = P~_n (x) e", ok, "projections are fixed by the action", f"{worst:.3e}", worst, **pars)
    # relations
    for key in ("alg1", "alg2", "alg3", "alg4"):
        worst = 0.0
        for n in range(0 if key in ("alg1", "alg4") else 1, T.N_max):
            r = algebra_relations(T, n).get(key)
            if r is not None:
                worst = max(worst, r.norm1())
        out.add(f"{key} with q+ = g_n, q- = g_n y", worst < tol, "relations among the q_n^pm",
                f"max residue {worst:.3e}", worst, **pars)
    y = GroupWord.y()
    yn = [(q_minus(n).star() * q_plus(n)) for n in range(T.N_max + 1)]
    out.add("y_n = q-_n* q+_n is constant (= y)", all(v == GroupAlgElem.word(y) for v in yn),
            "the self-adjoint unitary y_n", **pars)
    out.add("q-_n = q+_n y_(n-1)", all(q_minus(n) == q_plus(n) * yn[n - 1] for n in range(1, T.N_max + 1)),
            "identities among the q_n^pm", **pars)
    # multiplicativity on the interior
    gens = {"A": T["A"], "B": T["B"], "P~3": T.Ptilde(3)}
    adg = {"A": ads["A"], "B": ads["B"], "P~3": ad_V(T.Ptilde(3), rep)}
    worst = 0.0
    ok = True
    for a in gens:
        for b in gens:
            lhs = ad_V(gens[a] @ gens[b], rep)
            good, w, _ = lhs.compare(adg[a] @ adg[b], cols, tol)
            ok = ok and good
            worst = max(worst, w)
    out.add("ad_V(XY) = ad_V(X) ad_V(Y)", ok, "multiplicativity of the conjugation action",
            f"{worst:.3e}", worst, **pars)
    # a character commutes with evaluation
    chi = lambda w: character_value(w, theta, 1)
    U = rep.character_unitary(chi)
    worst = 0.0
    mask = np.asarray(T.interior)
    for nm in ("A", "B", "tau"):
        direct = U @ T[nm].dense() @ U.conj().T
        via = ads[nm].evaluate(chi)
        worst = max(worst, float(np.abs((direct - via)[:, mask]).max()))
    out.add("character evaluation commutes with ad_V", worst < tol, "evaluations are homomorphisms",
            f"{worst:.3e}", worst, theta=theta, **pars)
    return out


def no_action_witness(theta: float, N_max: int = 40, mu: float = 0.5, c: float = 0.3,
                      tol: float = 1e-12) -> Report:
    """Column norms of [alpha_phi(tau) P_+, tau_1] against |1 - e(theta)|."""
    T = build_cp(mu, c, N_max)
    rep = VRep(N_max)
    out = Report("no-action")
    chi = lambda w: character_value(w, theta, 1)
    a_tau = ad_V(T["tau"], rep).evaluate(chi)
    lam = [cmath.exp(2j * math.pi * n * theta) for n in range(N_max + 1)]
    direct = sum((T["tau"] @ T.Ptilde(n)).dense() * lam[n] for n in range(1, N_max + 1))
    d = float(np.abs(a_tau - direct).max())
    pars = dict(theta=theta, N_max=N_max, mu=mu, c=c)
    out.add("alpha_phi(tau) = sum lam_n tau (P_n + Q_n)", d < tol, "the character on the action of tau",
            f"{d:.3e}", d, **pars)
    Pp = T.sigma_projection(1).dense()
    tau1 = T["tau"].dense() @ Pp
    X = a_tau @ Pp
    C = X @ tau1 - tau1 @ X
    target = abs(1 - cmath.exp(2j * math.pi * theta))
    idx = {lab: i for i, lab in enumerate(T.labels)}
    worst_norm = worst_entry = 0.0
    for n in range(2, N_max):
        j = idx[(n, 1)]
        worst_norm = max(worst_norm, abs(np.linalg.norm(C[:, j]) - target))
        e = C[idx[(n - 2, 1)], j]
        worst_entry = max(worst_entry, abs(e - (lam[n - 1] - lam[n])))
    out.add("column norms = |1 - e(theta)| for interior n >= 2", worst_norm < tol,
            "the commutator is not compact", f"|1 - e(theta)| = {target:.12g}", worst_norm, **pars)
    out.add("entry (n-2, n) = lam_(n-1) - lam_n", worst_entry < tol, "the commutator on (e_n, 0)",
            f"{worst_entry:.3e}", worst_entry, **pars)
    return out
