"""Numeric truncated Hilbert-space representations.

Everything here is double precision on finite truncations.  Operators carry
an *interior mask*: the basis vectors whose images under the raising and
lowering operators stay inside the truncation.  Identities are asserted on
interior columns only.

Contents:

* :class:`SparseOp` -- labeled sparse matrices (``scipy.sparse``).
* :func:`build_cp` -- the two-summand spectral triple on the Podles sphere
  with D = [[0, N], [N, 0]].
* :func:`haar_spectral` -- the Haar functional of the sphere on functions of
  A as two geometric spectral series.
* :func:`build_dabrowski` -- spectral data D, R, R_0 of the equivariant Dirac
  operator on the sphere and the weighted heat traces.
* :func:`su2_oracle_rep` -- a faithful model of SU_mu(2) used to cross-check
  symbolic normal forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Hashable, List, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from .report import Report

__all__ = [
    "SparseOp", "CPTriple", "build_cp", "cp_relation_residuals", "cp_structure_checks",
    "haar_spectral", "haar_tail_bound", "haar_closed_form", "haar_closed_form_suite",
    "t_from_c", "c_from_t", "DabrowskiSpec", "build_dabrowski", "weighted_trace",
    "trace_convergence", "OracleRep", "su2_oracle_rep", "oracle_relation_report",
    "oracle_coherence",
]

TOL_IDENTITY = 1e-12
TOL_SERIES = 1e-9


class SparseOp:
    """A complex sparse matrix on a labeled basis with an interior mask."""

    def __init__(self, labels: Sequence[Hashable], mat, interior=None, name: str = ""):
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.mat = sp.csr_matrix(mat, dtype=complex)
        n = len(self.labels)
        if self.mat.shape != (n, n):
            raise ValueError(f"matrix shape {self.mat.shape} does not match {n} labels")
        if not np.all(np.isfinite(self.mat.data)):
            raise ValueError("non-finite operator entry")
        self.interior = np.ones(n, bool) if interior is None else np.asarray(interior, bool)
        self.name = name

    @classmethod
    def from_entries(cls, labels, entries: Dict[Tuple[Hashable, Hashable], complex],
                     interior=None, name: str = "") -> "SparseOp":
        """``entries[(row_label, col_label)] = value``."""
        idx = {lab: i for i, lab in enumerate(labels)}
        rows, cols, vals = [], [], []
        for (r, c), v in entries.items():
            if r in idx and c in idx:
                rows.append(idx[r])
                cols.append(idx[c])
                vals.append(v)
        n = len(labels)
        return cls(labels, sp.coo_matrix((vals, (rows, cols)), shape=(n, n)), interior, name)

    @classmethod
    def diagonal(cls, labels, values, interior=None, name: str = "") -> "SparseOp":
        return cls(labels, sp.diags(np.asarray(values, complex)), interior, name)

    @classmethod
    def identity(cls, labels, interior=None) -> "SparseOp":
        return cls.diagonal(labels, np.ones(len(labels)), interior, "1")

    def _like(self, mat, name="") -> "SparseOp":
        return SparseOp(self.labels, mat, self.interior, name)

    def _check(self, other: "SparseOp"):
        if self.labels != other.labels:
            raise ValueError("operators live on different index sets")

    def __add__(self, other):
        if isinstance(other, SparseOp):
            self._check(other)
            return self._like(self.mat + other.mat)
        return self._like(self.mat + other * sp.identity(len(self.labels)))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-self.mat)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        if isinstance(c, SparseOp):
            return self @ c
        return self._like(self.mat * c)

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseOp"):
        self._check(other)
        return self._like(self.mat @ other.mat)

    def __pow__(self, k: int):
        out = SparseOp.identity(self.labels, self.interior)
        for _ in range(k):
            out = out @ self
        return out

    @property
    def H(self) -> "SparseOp":
        """Adjoint (conjugate transpose)."""
        return self._like(self.mat.conj().T, self.name + "*" if self.name else "")

    def dense(self) -> np.ndarray:
        return self.mat.toarray()

    def entry(self, row, col) -> complex:
        return complex(self.mat[self.index[row], self.index[col]])

    def apply(self, label) -> Dict[Hashable, complex]:
        """Image of a basis vector as a ``{label: coefficient}`` map."""
        col = self.mat.getcol(self.index[label]).tocoo()
        return {self.labels[i]: complex(v) for i, v in zip(col.row, col.data) if v != 0}

    def column_norms(self, mask=None) -> np.ndarray:
        m = self.mat.tocsc()
        sq = np.asarray(abs(m).power(2).sum(axis=0)).ravel()
        norms = np.sqrt(sq)
        if mask is not None:
            norms = norms[np.asarray(mask, bool)]
        return norms

    def interior_residual(self, mask=None) -> float:
        """max over interior basis vectors v of ``||self v||``."""
        mask = self.interior if mask is None else mask
        norms = self.column_norms(mask)
        return float(norms.max()) if norms.size else 0.0

    def commutes_with(self, other: "SparseOp", tol: float = TOL_IDENTITY) -> bool:
        return (self @ other - other @ self).interior_residual() < tol

    def __repr__(self):
        return f"SparseOp({self.name or '?'}, dim={len(self.labels)}, nnz={self.mat.nnz})"


# ---------------------------------------------------------------------------
# the two-summand spectral triple

@dataclass
class CPTriple:
    mu: float
    c: float
    N_max: int
    labels: Tuple[Tuple[int, int], ...]
    ops: Dict[str, SparseOp] = field(repr=False)

    @property
    def lam(self) -> Tuple[float, float]:
        r = math.sqrt(self.c + 0.25)
        return 0.5 + r, 0.5 - r

    def c_pm(self, n: int) -> Tuple[float, float]:
        """c_pm(n) = x - x^2 + c at x = lam_pm mu^2n.

        Evaluated as (1 - mu^2n) lam (lam (1 + mu^2n) - 1), which uses
        lam^2 - lam = c and is exactly 0 at n = 0.
        """
        w = self.mu ** (2 * n)
        return tuple((1 - w) * lam * (lam * (1 + w) - 1) for lam in self.lam)

    def __getitem__(self, name: str) -> SparseOp:
        return self.ops[name]

    @property
    def interior(self) -> np.ndarray:
        return self.ops["A"].interior

    def P(self, n: int) -> SparseOp:
        return SparseOp.from_entries(self.labels, {((n, 1), (n, 1)): 1}, self.interior, f"P{n}")

    def Q(self, n: int) -> SparseOp:
        return SparseOp.from_entries(self.labels, {((n, -1), (n, -1)): 1}, self.interior, f"Q{n}")

    def Ptilde(self, n: int) -> SparseOp:
        return self.P(n) + self.Q(n)

    def sigma_projection(self, sigma: int) -> SparseOp:
        return SparseOp.diagonal(self.labels, [1.0 if s == sigma else 0.0 for _, s in self.labels],
                                 self.interior, "P+" if sigma > 0 else "P-")


def build_cp(mu: float, c: float, N_max: int) -> CPTriple:
    """Truncated representation pi = pi_+ (+) pi_- on basis ``(n, sigma)``.

    pi_sigma(A) e_n = lam_sigma mu^(2n) e_n, pi_sigma(B) e_n = c_sigma(n)^(1/2) e_(n-1),
    D (e_n, sigma) = n (e_n, -sigma), tau = shift down on both summands.
    """
    if not 0 < mu < 1:
        raise ValueError(f"mu must lie in (0, 1), got {mu}")
    if not c > 0:
        raise ValueError(f"c must be positive, got {c}")
    if N_max < 4:
        raise ValueError(f"N_max must be at least 4, got {N_max}")
    labels = tuple((n, sg) for sg in (1, -1) for n in range(N_max + 1))
    interior = np.array([1 <= n <= N_max - 1 for n, _ in labels])
    T = CPTriple(mu, c, N_max, labels, {})
    lam = dict(zip((1, -1), T.lam))
    A, B, absB, tau, D, absD, N = {}, {}, {}, {}, {}, {}, {}
    for n, sg in labels:
        A[(n, sg), (n, sg)] = lam[sg] * mu ** (2 * n)
        cn = T.c_pm(n)[0 if sg > 0 else 1]
        r = math.sqrt(max(cn, 0.0))
        absB[(n, sg), (n, sg)] = r
        N[(n, sg), (n, sg)] = n
        absD[(n, sg), (n, sg)] = n
        D[(n, -sg), (n, sg)] = n
        if n >= 1:
            B[(n - 1, sg), (n, sg)] = r
            tau[(n - 1, sg), (n, sg)] = 1.0
    mk = lambda e, nm: SparseOp.from_entries(labels, e, interior, nm)
    T.ops.update(A=mk(A, "A"), B=mk(B, "B"), absB=mk(absB, "|B|"), tau=mk(tau, "tau"),
                 D=mk(D, "D"), absD=mk(absD, "|D|"), N=mk(N, "N"))
    T.ops["B*"] = T.ops["B"].H
    T.ops["1"] = SparseOp.identity(labels, interior)
    return T


def _dom(T: CPTriple, mask_fn) -> np.ndarray:
    return np.array([mask_fn(n, s) for n, s in T.labels])


def cp_relation_residuals(T: CPTriple, tol: float = TOL_IDENTITY) -> Report:
    A, B, Bs, one = T["A"], T["B"], T["B*"], T["1"]
    m, c = T.mu, T.c
    rep = Report("cp-relations")
    rels = [
        ("A* = A", A.H - A),
        ("AB = mu^-2 BA", A @ B - (B @ A) * m ** -2),
        ("B*B = A - A^2 + c", Bs @ B - A + A @ A - one * c),
        ("BB* = mu^2 A - mu^4 A^2 + c", B @ Bs - A * m ** 2 + (A @ A) * m ** 4 - one * c),
    ]
    for lab, R in rels:
        r = R.interior_residual()
        rep.add(lab, r < tol, "Podles relations in the two-summand representation",
                f"max interior residual {r:.3e}", r, mu=m, c=c, N_max=T.N_max, tol=tol)
    # the truncation edge is genuinely outside: BB* fails there
    top = _dom(T, lambda n, s: n == T.N_max)
    edge = (B @ Bs - A * m ** 2 + (A @ A) * m ** 4 - one * c).interior_residual(top)
    rep.add("top shell excluded by interior mask", edge > tol, "truncation edge",
            f"residual at n = N_max is {edge:.3e}", edge, N_max=T.N_max)
    return rep


def _spectral_projections(op: SparseOp, tol: float = 1e-9):
    """Eigen-decomposition of a Hermitian operator grouped by eigenvalue.

    Eigenvalues are grouped with a relative tolerance: the spectrum of A
    accumulates at 0 geometrically.
    """
    w, v = np.linalg.eigh(op.dense())
    order = np.argsort(w)
    w, v = w[order], v[:, order]
    groups: List[Tuple[float, np.ndarray]] = []
    i = 0
    while i < len(w):
        j = i
        while j + 1 < len(w) and abs(w[j + 1] - w[i]) <= tol * abs(w[i]):
            j += 1
        V = v[:, i:j + 1]
        groups.append((float(w[i:j + 1].mean()), V @ V.conj().T))
        i = j + 1
    return groups


def cp_structure_checks(T: CPTriple, tol: float = TOL_IDENTITY) -> Report:
    rep = Report("cp-structure")
    B, tau, absB = T["B"], T["tau"], T["absB"]
    pars = dict(mu=T.mu, c=T.c, N_max=T.N_max)
    r = (B - tau @ absB).interior_residual()
    rep.add("B = tau |B|", r < tol, "polar decomposition of B", f"{r:.3e}", r, **pars)
    # B*B is diagonal, so |B| = (B*B)^(1/2) is the entrywise root of its diagonal
    BsB = (T["B*"] @ B).dense()
    off = float(np.abs(BsB - np.diag(np.diag(BsB))).max())
    root = np.sqrt(np.clip(np.diag(BsB).real, 0, None))
    r = max(off, float(np.abs(np.diag(root) - absB.dense()).max()))
    rep.add("|B| = (B*B)^(1/2), diagonal entries c_pm(n)^(1/2)", r < tol, "direct diagonal computation",
            f"{r:.3e}", r, **pars)
    # c_+(n) - c_-(n) = (lam_+ - lam_-) mu^2n (1 - mu^2n), evaluated in factored form
    # since both values approach c faster than double precision resolves
    lp, lm = T.lam
    gaps = [(lp - lm) * T.mu ** (2 * n) * (1 - T.mu ** (2 * n)) for n in range(1, T.N_max + 1)]
    direct = max(abs((a - b) - g) for g, (a, b) in zip(gaps, (T.c_pm(n) for n in range(1, T.N_max + 1))))
    gap = min(gaps)
    rep.add("c_+(n) != c_-(n) for n >= 1", gap > 0 and direct < tol, "spectral separation of |B|",
            f"min gap {gap:.3e} at n = {T.N_max}", gap, **pars)
    c0p, c0m = T.c_pm(0)
    rep.add("c_+(0) = c_-(0) = 0", abs(c0p) < tol and abs(c0m) < tol,
            "lambda_pm solve x - x^2 + c = 0, so n = 0 is the only coincidence",
            f"c_+(0) = {c0p:.3e}, c_-(0) = {c0m:.3e}", max(abs(c0p), abs(c0m)), **pars)
    rep.add("lambda_+ + lambda_- = 1, lambda_+ lambda_- = -c",
            abs(lp + lm - 1) < tol and abs(lp * lm + T.c) < tol, "roots of x^2 - x - c", **pars)
    # P_n, Q_n from the spectrum of A
    groups = _spectral_projections(T["A"])
    worst = 0.0
    for n in range(T.N_max + 1):
        for lam, proj in ((lp, T.P(n)), (lm, T.Q(n))):
            target = lam * T.mu ** (2 * n)
            Ps = [Pm for val, Pm in groups if abs(val - target) <= 1e-9 * abs(target)]
            if len(Ps) != 1:
                worst = float("inf")
                continue
            worst = max(worst, float(np.abs(Ps[0] - proj.dense()).max()))
    rep.add("P_n, Q_n are spectral projections of A", worst < 1e-10, "eigenvalue separation of A",
            f"max deviation {worst:.3e}", worst, **pars)
    # B*B is diagonal in the same decomposition with eigenvalues c_pm(n)
    dev = 0.0
    Bd = BsB
    for n in range(T.N_max + 1):
        cp, cm = T.c_pm(n)
        for lab, val in (((n, 1), cp), ((n, -1), cm)):
            i = T.labels.index(lab)
            dev = max(dev, abs(Bd[i, i] - val), float(np.abs(Bd[i]).sum() - abs(Bd[i, i])))
    rep.add("B*B acts on P_n, Q_n by c_+(n), c_-(n)", dev < 1e-10, "spectra of A and B*B", f"{dev:.3e}",
            dev, **pars)
    worst = 0.0
    for n in range(T.N_max + 1):
        Pt = T.Ptilde(n)
        for nm in ("D", "absD"):
            X = T[nm]
            worst = max(worst, float(np.abs((X @ Pt - Pt @ X).dense()).max()))
    rep.add("D and |D| commute with P~_n", worst < tol, "commutant of D", f"{worst:.3e}", worst, **pars)
    w = np.linalg.eigvalsh(T["D"].dense())
    dims = {n: (int(np.sum(np.abs(w - n) < 1e-9)), int(np.sum(np.abs(w + n) < 1e-9)))
            for n in range(1, T.N_max + 1)}
    ok = all(v == (1, 1) for v in dims.values())
    rep.add("dim ker(D -+ n) = 1 for n >= 1", ok, "eigenvalues of D are the integers", **pars)
    r = 0.0
    for n in range(T.N_max + 1):
        for sg in (1, -1):
            f = {(n, 1): 2 ** -0.5, (n, -1): sg * 2 ** -0.5}
            vec = np.zeros(len(T.labels), complex)
            for lab, x in f.items():
                vec[T.labels.index(lab)] = x
            r = max(r, float(np.abs(T["D"].mat @ vec - sg * n * vec).max()))
    rep.add("D (e_n, +-e_n)/sqrt2 = +-n (e_n, +-e_n)/sqrt2", r < tol, "eigenvectors of D", f"{r:.3e}", r, **pars)
    return rep


# ---------------------------------------------------------------------------
# Haar functional of the sphere

def _poly_eval(fpoly, x: np.ndarray) -> np.ndarray:
    if callable(fpoly):
        return np.asarray(fpoly(x), dtype=complex)
    out = np.zeros_like(x, dtype=complex)
    for k, a in enumerate(fpoly):
        out = out + complex(a) * x ** k
    return out


def _haar_weights(mu: float, c: float):
    r = math.sqrt(c + 0.25)
    lp, lm = 0.5 + r, 0.5 - r
    gp = (1 - mu ** 2) * lp / (lp - lm)
    gm = (1 - mu ** 2) * lm / (lm - lp)
    return lp, lm, gp, gm


def haar_tail_bound(fpoly, mu: float, c: float, terms: int) -> float:
    """Bound on the omitted tail of the two spectral series.

    For a coefficient list ``a`` the bound uses sup |f| <= sum |a_k| lam_+^k on
    the spectrum; for a callable it samples ``|f|`` on the spectrum hull.
    """
    lp, lm, gp, gm = _haar_weights(mu, c)
    R = max(abs(lp), abs(lm))
    if callable(fpoly):
        xs = np.linspace(-R, R, 257)
        M = float(np.abs(_poly_eval(fpoly, xs)).max())
    else:
        M = sum(abs(complex(a)) * R ** k for k, a in enumerate(fpoly))
    return (abs(gp) + abs(gm)) * M * mu ** (2 * terms) / (1 - mu ** 2)


def haar_spectral(fpoly, mu: float, c: float, terms: int | None = None, tail: float = 1e-14,
                  return_tail: bool = False):
    """h(f(A)) = g_+ sum f(lam_+ mu^2n) mu^2n + g_- sum f(lam_- mu^2n) mu^2n.

    ``fpoly`` is a coefficient list ``[a_0, a_1, ...]`` (f(x) = sum a_k x^k)
    or a vectorized callable.  With ``terms=None`` enough terms are taken for
    the tail bound to fall below ``tail``; an explicit ``terms`` that misses
    the bound raises ``ValueError``.
    """
    if not 0 < mu < 1:
        raise ValueError(f"mu must lie in (0, 1), got {mu}")
    if c < 0:
        raise ValueError(f"c must be non-negative, got {c}")
    lp, lm, gp, gm = _haar_weights(mu, c)
    if terms is None:
        terms = 8
        while haar_tail_bound(fpoly, mu, c, terms) >= tail:
            terms *= 2
    bound = haar_tail_bound(fpoly, mu, c, terms)
    if bound >= tail:
        raise ValueError(f"tail bound {bound:.3e} not below {tail:.1e} with {terms} terms")
    w = mu ** (2 * np.arange(terms, dtype=float))
    val = gp * np.sum(_poly_eval(fpoly, lp * w) * w) + gm * np.sum(_poly_eval(fpoly, lm * w) * w)
    val = complex(val)
    out = val.real if abs(val.imag) < 1e-15 else val
    return (out, bound) if return_tail else out


def t_from_c(c: float) -> float:
    """The t in (0, 1] with c = (1 - t)/t^2."""
    if c < 0:
        raise ValueError("c must be non-negative")
    if c == 0:
        return 1.0
    return (-1 + math.sqrt(1 + 4 * c)) / (2 * c)


def c_from_t(t: float) -> float:
    return (1 - t) / t ** 2


def haar_closed_form(mu: float, c: float) -> float:
    """t^2 (1-mu^2)(1-mu^6)^-1 [mu^2 + c (1+mu^2)^2] at t = t(c)."""
    t = t_from_c(c)
    return t ** 2 * (1 - mu ** 2) / (1 - mu ** 6) * (mu ** 2 + c * (1 + mu ** 2) ** 2)


@lru_cache(maxsize=None)
def _symbolic_sphere_haar():
    """Exact h(x_i* x_j) for the chi-normalized x-vector, as Scalars."""
    from .hopf import haar_su2, su2_presentation
    from .qgroups import build_podles_xvector
    P = su2_presentation()
    X = build_podles_xvector("chi")
    Xs = [P.normal_form(x.star()) for x in X]
    return {(i, j): haar_su2(P.mul(Xs[i], X[j])) for i in range(3) for j in range(3)}


def haar_closed_form_suite(mu: float, c: float, tol: float = TOL_SERIES) -> Report:
    """Three independent routes to h(x_i* x_i) plus the orthogonality values.

    (i) the closed form; (ii) the spectral series on the A, B expansions
    x_-1* x_-1 = t^2 (1+mu^2) mu^-2 B*B, x_0 = t (1 - (1+mu^2) A),
    x_1* x_1 = t^2 (1+mu^2) B B*; (iii) the symbolic Haar state of SU_mu(2)
    on the x-vector, evaluated at (mu, t).
    """
    from .scalar import eval_complex
    rep = Report("haar-closed-form")
    t = t_from_c(c)
    pars = dict(mu=mu, c=c, t=t)
    ha = haar_spectral([0, 1], mu, c)
    ha2 = haar_spectral([0, 0, 1], mu, c)
    lp, lm, _, _ = _haar_weights(mu, c)
    h1 = haar_spectral([1], mu, c)
    rep.add("h(1) = 1", abs(h1 - 1) < TOL_IDENTITY, "normalization of the Haar state", f"{h1!r}",
            abs(h1 - 1), **pars)
    exp_a = 1 / (1 + mu ** 2)
    rep.add("h(A) = 1/(1+mu^2)", abs(ha - exp_a) < 1e-10, "Haar value of A", f"{ha!r}", abs(ha - exp_a), **pars)
    exp_a2 = (1 - mu ** 2) * (lp ** 3 - lm ** 3) / ((lp - lm) * (1 - mu ** 6))
    rep.add("h(A^2) closed form", abs(ha2 - exp_a2) < 1e-10, "Haar value of A^2", f"{ha2!r}",
            abs(ha2 - exp_a2), **pars)
    closed = haar_closed_form(mu, c)
    u2 = 1 + mu ** 2
    spectral = [
        t ** 2 * u2 / mu ** 2 * haar_spectral([c, 1, -1], mu, c),
        t ** 2 * haar_spectral([1, -2 * u2, u2 ** 2], mu, c),
        t ** 2 * u2 * haar_spectral([c, mu ** 2, -mu ** 4], mu, c),
    ]
    sym = None
    err = ""
    try:
        H = _symbolic_sphere_haar()
        sym = {k: eval_complex(v, {"t": t}, mu=mu) for k, v in H.items()}
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        err = f"symbolic route unavailable: {exc}"
    for i in range(3):
        vals = [closed, spectral[i]]
        if sym is not None:
            vals.append(sym[(i, i)].real)
        spread = max(vals) - min(vals)
        ok = spread < tol and sym is not None
        rep.add(f"h(x_{i - 1}* x_{i - 1}) three routes", ok, "Haar values of the sphere generators",
                err or f"closed {closed:.15g}, spectral {spectral[i]:.15g}, symbolic {vals[-1]:.15g}",
                spread, **pars)
    if sym is not None:
        H = _symbolic_sphere_haar()
        for (i, j) in ((0, 1), (1, 2), (2, 0)):
            rep.add(f"h(x_{i - 1}* x_{j - 1}) = 0", H[(i, j)].is_zero(), "orthogonality of the sphere generators",
                    str(H[(i, j)])[:120], **pars)
    return rep


# ---------------------------------------------------------------------------
# equivariant Dirac operator: spectral data only

@dataclass
class DabrowskiSpec:
    l_max: Fraction
    c1: float
    c2: float
    mu: float
    labels: Tuple[Tuple[Fraction, Fraction, Fraction], ...]
    D: SparseOp = field(repr=False)
    R: SparseOp = field(repr=False)
    R0: SparseOp = field(repr=False)

    def eigenvalue(self, l) -> float:
        return self.c1 * float(l) + self.c2


def _half_range(l: Fraction):
    m = -l
    while m <= l:
        yield m
        m += 1


def build_dabrowski(l_max, c1: float = 1.0, c2: float = 0.0, mu: float = 0.5) -> DabrowskiSpec:
    """D v^l_{m,+-1/2} = (c1 l + c2) v^l_{m,-+1/2}, R = mu^-2m, R_0 = mu^(-2m -+ 1)."""
    l_max = Fraction(l_max)
    if l_max < Fraction(1, 2):
        raise ValueError("l_max must be at least 1/2")
    if c1 == 0:
        raise ValueError("c1 must be nonzero")
    half = Fraction(1, 2)
    labels = []
    l = half
    while l <= l_max:
        for m in _half_range(l):
            for N in (half, -half):
                labels.append((l, m, N))
        l += 1
    labels = tuple(labels)
    D, R, R0 = {}, [], []
    for (l, m, N) in labels:
        D[(l, m, -N), (l, m, N)] = c1 * float(l) + c2
        R.append(mu ** (-2 * float(m)))
        R0.append(mu ** (-2 * float(m) - (1 if N > 0 else -1)))
    return DabrowskiSpec(l_max, c1, c2, mu, labels, SparseOp.from_entries(labels, D, name="D"),
                         SparseOp.diagonal(labels, R, name="R"), SparseOp.diagonal(labels, R0, name="R0"))


def weighted_trace(spec: DabrowskiSpec, W: str = "1", t: float = 1.0) -> float:
    """Tr(W e^(-t D^2)) over the truncation, ``W`` in {"R", "R0", "1"}."""
    if t <= 0:
        raise ValueError("t must be positive")
    if W == "1":
        w = np.ones(len(spec.labels))
    elif W in ("R", "R0"):
        w = getattr(spec, W).mat.diagonal().real
    else:
        raise ValueError(f"unknown weight {W!r}")
    heat = np.array([math.exp(-t * spec.eigenvalue(l) ** 2) for l, _, _ in spec.labels])
    return float(np.sum(w * heat))


def trace_convergence(c1: float = 1.0, c2: float = 0.0, mu: float = 0.5, t: float = 1.0,
                      l_values=(Fraction(5, 2), Fraction(9, 2), Fraction(13, 2), Fraction(17, 2)),
                      tol: float = TOL_SERIES) -> Report:
    """Block structure of D, R, R_0 and monotone convergence of the traces."""
    rep = Report("dabrowski")
    S = build_dabrowski(max(l_values), c1, c2, mu)
    pars = dict(c1=c1, c2=c2, mu=mu, t=t)
    r = 0.0
    for (l, m, N) in S.labels:
        if N > 0:
            v = np.zeros(len(S.labels))
            v[S.labels.index((l, m, N))] = v[S.labels.index((l, m, -N))] = 2 ** -0.5
            r = max(r, float(np.abs(S.D.mat @ v - S.eigenvalue(l) * v).max()))
            v[S.labels.index((l, m, -N))] *= -1
            r = max(r, float(np.abs(S.D.mat @ v + S.eigenvalue(l) * v).max()))
    rep.add("D eigenvectors (v+ +- v-)/sqrt2 with eigenvalues +-(c1 l + c2)", r < TOL_IDENTITY,
            "equivariant Dirac operator", f"{r:.3e}", r, **pars)
    rr = 0.0
    for (l, m, N) in S.labels:
        i = S.labels.index((l, m, N))
        ratio = S.R.mat[i, i].real / S.R0.mat[i, i].real
        rr = max(rr, abs(ratio - (mu if N > 0 else 1 / mu)))
    rep.add("R = mu R_0 on N = 1/2 and mu^-1 R_0 on N = -1/2", rr < TOL_IDENTITY, "twisting operators",
            f"{rr:.3e}", rr, **pars)
    blk = 0.0
    for l in (Fraction(1, 2), Fraction(3, 2)):
        one = build_dabrowski(l, c1, c2, mu)
        prev = build_dabrowski(l - 1, c1, c2, mu) if l > 1 else None
        val = weighted_trace(one, "R", t) - (weighted_trace(prev, "R", t) if prev else 0.0)
        exp = math.exp(-t * (c1 * float(l) + c2) ** 2) * 2 * sum(mu ** (-2 * float(m)) for m in _half_range(l))
        blk = max(blk, abs(val - exp))
    rep.add("Tr(R e^-tD^2) per-l block = 2 e^(-t(c1 l+c2)^2) sum_m mu^-2m", blk < TOL_IDENTITY,
            "geometric sum over m", f"{blk:.3e}", blk, **pars)
    for W in ("1", "R", "R0"):
        seq = [weighted_trace(build_dabrowski(l, c1, c2, mu), W, t) for l in l_values]
        mono = all(b >= a for a, b in zip(seq, seq[1:]))
        cauchy = seq[-1] - seq[-2]
        rep.add(f"Tr({W} e^-tD^2) monotone and convergent in l_max", mono and cauchy < tol,
                "finiteness of the twisted heat trace", f"partial sums {[round(x, 12) for x in seq]}",
                cauchy, W=W, **pars)
    a = weighted_trace(S, "1", t)
    b = weighted_trace(S, "1", 2 * t)
    rep.add("Tr(e^-tD^2) decreasing in t", b < a, "positive terms", f"{a:.6g} > {b:.6g}", **pars)
    return rep


# ---------------------------------------------------------------------------
# numeric oracle for SU_mu(2)

@dataclass
class OracleRep:
    mu: float
    N_max: int
    K_max: int
    labels: Tuple[Tuple[int, int], ...]
    ops: Dict[str, SparseOp] = field(repr=False)
    _coeff_cache: Dict = field(default_factory=dict, repr=False)

    def __getitem__(self, name: str) -> SparseOp:
        return self.ops[name]

    def interior_mask(self, depth: int) -> np.ndarray:
        """Basis vectors whose images under any word of length <= depth are exact."""
        return np.array([n + depth <= self.N_max and abs(k) + depth <= self.K_max
                         for n, k in self.labels])

    def _coeff(self, c) -> complex:
        key = id(c)
        hit = self._coeff_cache.get(key)
        if hit is not None and hit[0] is c:
            return hit[1]
        from .scalar import eval_complex
        v = eval_complex(c, mu=self.mu)
        self._coeff_cache[key] = (c, v)
        return v

    def evaluate(self, p, names: Sequence[str] | None = None) -> SparseOp:
        """Operator of an NCPoly over the SU_mu(2) generators."""
        names = names or p.gens.names
        mats = [self.ops[nm].mat for nm in names]
        dim = len(self.labels)
        out = sp.csr_matrix((dim, dim), dtype=complex)
        cache: Dict[Tuple[int, ...], sp.csr_matrix] = {(): sp.identity(dim, dtype=complex, format="csr")}

        def word(w):
            if w not in cache:
                cache[w] = word(w[:-1]) @ mats[w[-1]]
            return cache[w]

        for w, c in p.terms.items():
            out = out + word(w) * self._coeff(c)
        return SparseOp(self.labels, out, None, "p")


def su2_oracle_rep(mu: float, N_max: int = 16, K_max: int = 8) -> OracleRep:
    """alpha e_n f_k = (1-mu^2n)^(1/2) e_(n-1) f_k, gamma e_n f_k = mu^n e_n f_(k+1)."""
    if not 0 < mu < 1:
        raise ValueError(f"mu must lie in (0, 1), got {mu}")
    labels = tuple((n, k) for n in range(N_max + 1) for k in range(-K_max, K_max + 1))
    a, g = {}, {}
    for n, k in labels:
        if n >= 1:
            a[(n - 1, k), (n, k)] = math.sqrt(1 - mu ** (2 * n))
        g[(n, k + 1), (n, k)] = mu ** n
    al = SparseOp.from_entries(labels, a, name="alpha")
    ga = SparseOp.from_entries(labels, g, name="gamma")
    R = OracleRep(mu, N_max, K_max, labels, {"alpha": al, "gamma": ga, "alpha*": al.H, "gamma*": ga.H})
    R.ops["1"] = SparseOp.identity(labels)
    return R


def oracle_relation_report(R: OracleRep, tol: float = TOL_IDENTITY) -> Report:
    a, a_, g, g_, one = R["alpha"], R["alpha*"], R["gamma"], R["gamma*"], R["1"]
    m = R.mu
    mask = R.interior_mask(2)
    rep = Report("su2-oracle")
    for lab, X in (("alpha* alpha + gamma* gamma = 1", a_ @ a + g_ @ g - one),
                   ("alpha alpha* + mu^2 gamma gamma* = 1", a @ a_ + (g @ g_) * m ** 2 - one),
                   ("gamma gamma* = gamma* gamma", g @ g_ - g_ @ g),
                   ("mu gamma alpha = alpha gamma", (g @ a) * m - a @ g),
                   ("mu gamma* alpha = alpha gamma*", (g_ @ a) * m - a @ g_)):
        r = X.interior_residual(mask)
        rep.add(lab, r < tol, "defining relations of SU_mu(2) in the oracle model", f"{r:.3e}", r,
                mu=m, N_max=R.N_max, K_max=R.K_max)
    return rep


def oracle_coherence(polys, P=None, R: OracleRep | None = None, mu: float = 0.5,
                     tol: float = 1e-10) -> Report:
    """eval(normal_form(p)) = eval(p) on the interior, for each NCPoly ``p``."""
    from .hopf import su2_presentation
    P = P or su2_presentation()
    R = R or su2_oracle_rep(mu)
    rep = Report("oracle-coherence")
    for i, p in enumerate(polys):
        q = P.normal_form(p)
        depth = max([len(w) for w in p.terms] + [len(w) for w in q.terms] + [0])
        mask = R.interior_mask(depth)
        r = (R.evaluate(p) - R.evaluate(q)).interior_residual(mask)
        rep.add(f"poly {i:03d}", r < tol, "normal forms agree with the faithful model", f"{r:.3e}", r,
                mu=R.mu, depth=depth)
    return rep
