"""Catalog of presented quantum groups and their symbolic verification suites.

The catalog covers SU_mu(2), U_mu(2), SO_mu(3), two presentations of the
Podles sphere, Wang's free unitary algebras A_u(Q) for diagonal Q, quantum
permutation algebras and two-level AF presentations.  The suites check
embeddings, coactions and corepresentation identities exactly inside the
rewriting engine.

Conventions used throughout:

* ``u`` is the radical (1 + mu^2)^(1/2) and ``rho`` the radical with
  rho^2 = mu^2 t^2 / ((1 + mu^2)^2 (1 - t)).
* The sphere parameter is c = (1 - t)/t^2; this is the value for which the
  x-vector satisfies the Podles relations and the X_c kernel condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .hopf import (HopfData, TensorPoly, fundamental_su2, haar_su2, su2_hopf,
                   su2_presentation, uq_act, uq_presentation)
from .ncalg import (CONFLUENT, GenSet, NCPoly, Presentation, hom_check)
from .report import Report
from .scalar import S, Scalar, adjoin_radical, eval_complex, mu, s, sqrt, t, var

__all__ = [
    "AlgebraEntry", "CorepMatrix", "make_algebra", "CATALOG_NAMES",
    "podles_radicals", "podles_c", "build_podles_xvector", "podles_AB",
    "kernel_operator", "check_podles_relations", "somu3_images", "z1_matrix",
    "check_somu3_embedding", "check_somu3_action_matrix", "check_umu2_action",
    "psi_images", "irrep_tower", "check_irreps", "check_schur", "compare_t1",
    "T1_DISPLAY", "check_magic_unitary", "check_af_level", "row_sos_certificate",
    "dump_catalog", "load_catalog", "DEFAULT_CATALOG",
]

CATALOG_NAMES = ("SUmu2", "Umu2", "SOmu3", "PodlesAB", "PodlesChi", "WangAu", "QPerm", "AFLevel")


@dataclass
class AlgebraEntry:
    name: str
    params: dict
    pres: Presentation
    hopf: Optional[HopfData] = None
    notes: List[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return self.pres.status

    @property
    def is_cqg(self) -> bool:
        return self.hopf is not None


def _gens(G: GenSet):
    return [NCPoly.gen(G, n) for n in G.names]


def _sum(items, G: GenSet) -> NCPoly:
    out = NCPoly(G)
    for x in items:
        out = out + x
    return out


# ---------------------------------------------------------------------------
# radicals and the sphere parameter

def podles_radicals() -> Tuple[Scalar, Scalar]:
    """The radicals ``u = (1+mu^2)^(1/2)`` and ``rho``."""
    u = adjoin_radical("u", 1 + mu ** 2)
    rho = adjoin_radical("rho", mu ** 2 * t ** 2 / ((1 + mu ** 2) ** 2 * (1 - t)))
    return u, rho


def podles_c() -> Scalar:
    return (1 - t) / t ** 2


def _v() -> Scalar:
    """(1 + mu^-2)^(1/2) = u/mu."""
    u, _ = podles_radicals()
    return u / mu


# ---------------------------------------------------------------------------
# catalog

def _umu2(orientation: str = "generator", bound: int = 6):
    names = ["u11", "u12", "u21", "u22", "Dinv", "D", "u11*", "u12*", "u21*", "u22*"]
    wD = 1 if orientation == "generator" else 3
    G = GenSet(names, {"u11": "u11*", "u12": "u12*", "u21": "u21*", "u22": "u22*", "D": "Dinv"},
               [1, 1, 1, 1, 1, wD, 3, 3, 3, 3])
    u11, u12, u21, u22, Di, D, s11, s12, s21, s22 = _gens(G)
    m = mu
    rels = [
        ("u11 u12 = mu u12 u11", u11 * u12 - m * u12 * u11),
        ("u11 u21 = mu u21 u11", u11 * u21 - m * u21 * u11),
        ("u12 u22 = mu u22 u12", u12 * u22 - m * u22 * u12),
        ("u21 u22 = mu u22 u21", u21 * u22 - m * u22 * u21),
        ("u12 u21 = u21 u12", u12 * u21 - u21 * u12),
        ("u11 u22 - u22 u11 = (mu - mu^-1) u12 u21", u11 * u22 - u22 * u11 - (m - m ** -1) * u12 * u21),
        ("D = u11 u22 - mu u12 u21", D - (u11 * u22 - m * u12 * u21)),
        ("D Dinv = 1", D * Di - 1),
        ("Dinv D = 1", Di * D - 1),
    ]
    for nm, x in (("u11", u11), ("u12", u12), ("u21", u21), ("u22", u22)):
        rels.append((f"Dinv {nm} = {nm} Dinv", Di * x - x * Di))
    rels += [
        ("u11* = u22 Dinv", s11 - u22 * Di),
        ("u12* = -mu u21 Dinv", s12 + m * u21 * Di),
        ("u21* = -mu^-1 u12 Dinv", s21 + m ** -1 * u12 * Di),
        ("u22* = u11 Dinv", s22 - u11 * Di),
    ]
    U = [[u11, u12], [u21, u22]]
    Us = [[s11, s12], [s21, s22]]
    for i in range(2):
        for j in range(2):
            d = 1 if i == j else 0
            rels.append((f"(u u*)_{i + 1}{j + 1} = {d}", _sum((U[i][k] * Us[j][k] for k in range(2)), G) - d))
            rels.append((f"(u* u)_{i + 1}{j + 1} = {d}", _sum((Us[k][i] * U[k][j] for k in range(2)), G) - d))
    P = Presentation("Umu2", G, rels, degree_bound=bound)
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    delta = {f"u{i + 1}{j + 1}": T(U[i][0], U[0][j]) + T(U[i][1], U[1][j])
             for i in range(2) for j in range(2)}
    delta["D"] = T(D, D)
    delta["Dinv"] = T(Di, Di)
    eps = {"u11": 1, "u12": 0, "u21": 0, "u22": 1, "D": 1, "Dinv": 1}
    kappa = {"u11": u22 * Di, "u12": -m ** -1 * u12 * Di, "u21": -m * u21 * Di,
             "u22": u11 * Di, "D": Di, "Dinv": D}
    return P, HopfData(P, delta, eps, kappa)


def _somu3(bound: int = 6):
    names = ["N", "M", "C", "G", "L", "M*", "C*", "G*", "L*"]
    Gs = GenSet(names, {"M": "M*", "C": "C*", "G": "G*", "L": "L*", "N": "N"}, [2] * 9)
    n, m, c, g, l, ms, cs, gs, ls = _gens(Gs)
    rels = somu3_relations(Gs)
    P = Presentation("SOmu3", Gs, rels, degree_bound=bound)
    Z = z1_matrix(P)
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    dz = lambda i, j: _tsum((T(Z[i][k], Z[k][j]) for k in range(3)), P)
    v = _v()
    delta = {
        "L": dz(0, 0),
        "M": dz(1, 0).scale(v.inverse()),
        "C": dz(0, 1).scale((-mu * v).inverse()),
        "G": dz(2, 0),
        "N": (TensorPoly.one(P, P) - dz(1, 1)).scale((1 + mu ** 2).inverse()),
    }
    eps = {"L": 1, "M": 0, "C": 0, "G": 0, "N": 0}
    kappa = {"L": ls, "L*": l, "G": g * mu ** 2, "G*": gs * mu ** -2, "M": -mu * cs,
             "C": -mu ** -1 * ms, "M*": -mu ** -1 * c, "C*": -mu * m, "N": n}
    return P, HopfData(P, delta, eps, kappa)


def somu3_relations(Gs: GenSet):
    n, m, c, g, l, ms, cs, gs, ls = _gens(Gs)
    one = NCPoly.const(Gs, 1)
    q = mu
    return [
        ("L*L = (1-N)(1-mu^-2 N)", ls * l - (one - n) * (one - q ** -2 * n)),
        ("LL* = (1-mu^2 N)(1-mu^4 N)", l * ls - (one - q ** 2 * n) * (one - q ** 4 * n)),
        ("G*G = N^2", gs * g - n * n),
        ("GG* = N^2", g * gs - n * n),
        ("M*M = N - N^2", ms * m - (n - n * n)),
        ("MM* = mu^2 N - mu^4 N^2", m * ms - (q ** 2 * n - q ** 4 * n * n)),
        ("C*C = N - N^2", cs * c - (n - n * n)),
        ("CC* = mu^2 N - mu^4 N^2", c * cs - (q ** 2 * n - q ** 4 * n * n)),
        ("LN = mu^4 NL", l * n - q ** 4 * n * l),
        ("GN = NG", g * n - n * g),
        ("MN = mu^2 NM", m * n - q ** 2 * n * m),
        ("CN = mu^2 NC", c * n - q ** 2 * n * c),
        ("LG = mu^4 GL", l * g - q ** 4 * g * l),
        ("LM = mu^2 ML", l * m - q ** 2 * m * l),
        ("MG = mu^2 GM", m * g - q ** 2 * g * m),
        ("CM = MC", c * m - m * c),
        ("LG* = mu^4 G*L", l * gs - q ** 4 * gs * l),
        ("M^2 = mu^-1 LG", m * m - q ** -1 * l * g),
        ("M*L = mu^-1 (1-N) C", ms * l - q ** -1 * (one - n) * c),
        ("N* = N", n.star() - n),
    ]


def _tsum(items, P: Presentation, Q: Presentation | None = None) -> TensorPoly:
    out = TensorPoly(P, Q or P)
    for x in items:
        out = out + x
    return out


def _podles_ab(bound: int = 6):
    G = GenSet(["A", "B", "B*"], {"A": "A", "B": "B*"}, [1, 1, 1])
    A, B, Bs = _gens(G)
    c = var("c")
    rels = [
        ("A* = A", A.star() - A),
        ("AB = mu^-2 BA", A * B - mu ** -2 * B * A),
        ("B*B = A - A^2 + c", Bs * B - (A - A * A + c)),
        ("BB* = mu^2 A - mu^4 A^2 + c", B * Bs - (mu ** 2 * A - mu ** 4 * A * A + c)),
    ]
    return Presentation("PodlesAB", G, rels, degree_bound=bound)


def chi_beta() -> Scalar:
    return t ** 2 + mu ** -2 * (1 + mu ** 2) ** 2 * (1 - t)


def _podles_chi(bound: int = 6):
    # the involution x_-1* = -mu^-1 x_1 carries a scalar, so it is not a
    # generator involution; the presentation is treated as a plain algebra
    G = GenSet(["x-1", "x0", "x1"], {"x-1": "x1", "x0": "x0"}, [1, 1, 1])
    xm, x0, xp = _gens(G)
    q, al, be = mu, t, chi_beta()
    rels = [
        ("x0^2 - q x1 x-1 - q^-1 x-1 x1 = beta", x0 * x0 - q * xp * xm - q ** -1 * xm * xp - be),
        ("(1-q^2) x0^2 + q x-1 x1 - q x1 x-1 = (1-q^2) alpha' x0",
         (1 - q ** 2) * x0 * x0 + q * xm * xp - q * xp * xm - (1 - q ** 2) * al * x0),
        ("x-1 x0 - q^2 x0 x-1 = (1-q^2) alpha' x-1", xm * x0 - q ** 2 * x0 * xm - (1 - q ** 2) * al * xm),
        ("x0 x1 - q^2 x1 x0 = (1-q^2) alpha' x1", x0 * xp - q ** 2 * xp * x0 - (1 - q ** 2) * al * xp),
    ]
    return Presentation("PodlesChi", G, rels, degree_bound=bound, star_close=False)


def _diag_q(n: int, Q) -> List[Scalar]:
    if Q is None:
        return [var(f"q{i + 1}") for i in range(n)]
    if len(Q) != n:
        raise ValueError("Q must have n diagonal entries")
    if isinstance(Q[0], (list, tuple)):
        for i in range(n):
            for j in range(n):
                if i != j and S(Q[i][j]):
                    raise ValueError("only diagonal Q is supported")
        Q = [Q[i][i] for i in range(n)]
    out = [S(q) for q in Q]
    if any(not q for q in out):
        raise ValueError("Q must be invertible")
    return out


def _wang(n: int, Q=None, bound: int = 4):
    if n < 1:
        raise ValueError("n must be >= 1")
    q = _diag_q(n, Q)
    names = [f"u{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    stars = [x + "*" for x in names]
    G = GenSet(names + stars, {x: x + "*" for x in names}, None)
    u = {(i, j): NCPoly.gen(G, f"u{i}{j}") for i in range(1, n + 1) for j in range(1, n + 1)}
    us = {k: NCPoly.gen(G, f"u{k[0]}{k[1]}*") for k in u}
    R = range(1, n + 1)
    rels = []
    for i in R:
        for j in R:
            d = 1 if i == j else 0
            rels.append((f"(u u*)_{i}{j} = {d}", _sum((u[i, k] * us[j, k] for k in R), G) - d))
            rels.append((f"(u* u)_{i}{j} = {d}", _sum((us[k, i] * u[k, j] for k in R), G) - d))
            rels.append((f"(u' Q ubar Q^-1)_{i}{j} = {d}",
                         _sum((u[k, i] * us[k, j] * (q[k - 1] / q[j - 1]) for k in R), G) - d))
            rels.append((f"(Q ubar Q^-1 u')_{i}{j} = {d}",
                         _sum((us[i, k] * u[j, k] * (q[i - 1] / q[k - 1]) for k in R), G) - d))
    P = Presentation(f"WangAu({n})", G, rels, degree_bound=bound, max_rules=3000)
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    delta = {f"u{i}{j}": _tsum((T(u[i, k], u[k, j]) for k in R), P) for i in R for j in R}
    eps = {f"u{i}{j}": int(i == j) for i in R for j in R}
    kappa = {}
    for i in R:
        for j in R:
            kappa[f"u{i}{j}"] = us[j, i]
            kappa[f"u{i}{j}*"] = u[j, i] * (q[j - 1] / q[i - 1])
    return P, HopfData(P, delta, eps, kappa)


def _qperm_gens(n: int, prefix: str = "a"):
    names = [f"{prefix}{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    return GenSet(names, {}, None)


def magic_relations(G: GenSet, rows: Sequence[Sequence[str]], orthogonality: bool = False):
    """Projection, row-sum and column-sum relations for a square name matrix."""
    gen = lambda x: NCPoly.gen(G, x)
    n = len(rows)
    rels = []
    for r in rows:
        for x in r:
            rels.append((f"{x}^2 = {x}", gen(x) * gen(x) - gen(x)))
    for i in range(n):
        rels.append((f"row {i + 1} sum = 1", _sum((gen(x) for x in rows[i]), G) - 1))
    for j in range(n):
        rels.append((f"column {j + 1} sum = 1", _sum((gen(rows[i][j]) for i in range(n)), G) - 1))
    if orthogonality:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if j != k:
                        rels.append((f"{rows[i][j]} {rows[i][k]} = 0", gen(rows[i][j]) * gen(rows[i][k])))
                        rels.append((f"{rows[j][i]} {rows[k][i]} = 0", gen(rows[j][i]) * gen(rows[k][i])))
    return rels


def _qperm(n: int, bound: int = 4, orthogonality: bool = False):
    if n < 1:
        raise ValueError("n must be >= 1")
    G = _qperm_gens(n)
    rows = [[f"a{i}{j}" for j in range(1, n + 1)] for i in range(1, n + 1)]
    P = Presentation(f"QPerm({n})", G, magic_relations(G, rows, orthogonality),
                     degree_bound=bound, max_rules=20000)
    a = {(i, j): NCPoly.gen(G, rows[i][j]) for i in range(n) for j in range(n)}
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    delta = {rows[i][j]: _tsum((T(a[i, k], a[k, j]) for k in range(n)), P)
             for i in range(n) for j in range(n)}
    eps = {rows[i][j]: int(i == j) for i in range(n) for j in range(n)}
    kappa = {rows[i][j]: a[j, i] for i in range(n) for j in range(n)}
    return P, HopfData(P, delta, eps, kappa)


def _fine_name(p, q) -> str:
    return f"b{p[0]}.{p[1]}_{q[0]}.{q[1]}"


def _af_level(branching: Sequence[int], bound: int = 6):
    br = tuple(int(x) for x in branching)
    if not br or any(x < 1 for x in br):
        raise ValueError("branching must be a nonempty vector of positive integers")
    m = len(br)
    fine = [(i, r) for i in range(1, m + 1) for r in range(1, br[i - 1] + 1)]
    fnames = [[_fine_name(p, q) for q in fine] for p in fine]
    cnames = [[f"a{i}{j}" for j in range(1, m + 1)] for i in range(1, m + 1)]
    # coarse generators are heavier so that compatibility eliminates them
    G = GenSet([x for r in fnames for x in r] + [x for r in cnames for x in r], {},
               [1] * len(fine) ** 2 + [2] * m * m)
    rels = magic_relations(G, fnames, orthogonality=True)
    gen = lambda x: NCPoly.gen(G, x)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            for sj in range(1, br[j - 1] + 1):
                rhs = _sum((gen(_fine_name((i, r), (j, sj))) for r in range(1, br[i - 1] + 1)), G)
                rels.append((f"a{i}{j} = sum_r b({i},r),({j},{sj})", gen(f"a{i}{j}") - rhs))
    P = Presentation(f"AFLevel{br}", G, rels, degree_bound=bound, max_rules=20000)
    return P, {"coarse": cnames, "fine": fnames, "m": m, "m_prime": len(fine), "branching": br}


_CACHE: Dict = {}


def make_algebra(name: str, *args, **params) -> AlgebraEntry:
    """Build (and cache) a catalog entry.

    ``make_algebra("QPerm", 3)``, ``make_algebra("WangAu", 2, Q=[1, mu])``,
    ``make_algebra("AFLevel", branching=(2, 1))``.
    """
    if args:
        if name in ("QPerm", "WangAu"):
            params.setdefault("n", args[0])
            if len(args) > 1:
                params.setdefault("Q", args[1])
        elif name == "AFLevel":
            params.setdefault("branching", args[0])
        else:
            raise TypeError(f"{name} takes keyword parameters only")
    key = (name, repr(sorted(params.items())))
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    notes: List[str] = []
    hopf = None
    if name == "SUmu2":
        pres = su2_presentation(params.get("bound", 8))
        hopf = su2_hopf() if params.get("bound", 8) == 8 else None
    elif name == "Umu2":
        pres, hopf = _umu2(params.get("orientation", "generator"), params.get("bound", 6))
    elif name == "SOmu3":
        pres, hopf = _somu3(params.get("bound", 6))
    elif name == "PodlesAB":
        pres = _podles_ab(params.get("bound", 6))
    elif name == "PodlesChi":
        pres = _podles_chi(params.get("bound", 6))
        notes.append("generator involution not modeled: x_-1* = -mu^-1 x_1 carries a scalar")
    elif name == "WangAu":
        pres, hopf = _wang(params["n"], params.get("Q"), params.get("bound", 4))
    elif name == "QPerm":
        pres, hopf = _qperm(params["n"], params.get("bound", 4), params.get("orthogonality", False))
    elif name == "AFLevel":
        pres, info = _af_level(params["branching"], params.get("bound", 6))
        params = dict(params, **{k: v for k, v in info.items() if k in ("m", "m_prime")})
        notes.append("fine level uses magic-unitary orthogonality (see row_sos_certificate)")
    else:
        raise KeyError(f"unknown catalog entry {name!r}")
    entry = AlgebraEntry(name, dict(params), pres, hopf, notes)
    _CACHE[key] = entry
    return entry


DEFAULT_CATALOG = (("SUmu2", {}), ("Umu2", {}), ("SOmu3", {}), ("PodlesAB", {}), ("PodlesChi", {}),
                   ("WangAu", {"n": 2}), ("QPerm", {"n": 3}), ("AFLevel", {"branching": (2, 1)}))


def dump_catalog(specs=DEFAULT_CATALOG) -> str:
    """JSON list of ``{"entry", "params", "notes", "presentation"}`` records."""
    import json
    out = []
    for name, params in specs:
        e = make_algebra(name, **params)
        out.append({"entry": name, "params": {k: (list(v) if isinstance(v, tuple) else v)
                                              for k, v in sorted(e.params.items()) if k != "Q"},
                    "notes": list(e.notes), "presentation": json.loads(e.pres.to_json())})
    return json.dumps(out, sort_keys=True, indent=1, ensure_ascii=False)


def load_catalog(text: str) -> Dict[str, Presentation]:
    """Presentations keyed by entry name, restored without recompletion."""
    import json
    out = {}
    for rec in json.loads(text):
        out[rec["entry"]] = Presentation.from_json(json.dumps(rec["presentation"]))
    return out


# ---------------------------------------------------------------------------
# SO_mu(3)

def somu3_images(P: Presentation | None = None) -> Dict[str, NCPoly]:
    """Images of N, M, C, G, L inside SU_mu(2)."""
    P = P or su2_presentation()
    a, g = P["alpha"], P["gamma"]
    g_ = P["gamma*"]
    return {"N": g_ * g, "M": a * g, "C": a * g_, "G": g * g, "L": a * a}


def z1_matrix(P: Presentation, images: Dict[str, NCPoly] | None = None):
    """The 3x3 SO_mu(3)-valued action matrix, over ``P``.

    With ``images`` the entries are pulled back into another presentation.
    """
    if images is None:
        get = lambda x: P[x]
    else:
        get = lambda x: P.normal_form(images[x])
    st = lambda x: P.normal_form(get(x).star())
    v = _v()
    L, M, C, G, N = (get(x) for x in "LMCGN")
    return [
        [L, C * (-mu * v), st("G") * mu ** 2],
        [M * v, P.one() - N * (mu * (mu + mu ** -1)), st("M") * (-mu * v)],
        [G, st("C") * v, st("L")],
    ]


def check_somu3_embedding() -> Report:
    so = make_algebra("SOmu3").pres
    su = su2_presentation()
    rep = Report("somu3-embedding", meta={"somu3_status": so.status, "relations": len(so.relations)})
    for lab, ok, nf in hom_check(so, su, somu3_images(su)):
        rep.add(f"relation: {lab}", ok, "SO_mu(3) relation list under the SU_mu(2) embedding",
                "" if ok else f"normal form {nf}")
    return rep


def check_somu3_action_matrix(numeric_mu: float = 0.5, numeric_t: float = 0.8) -> Report:
    P = su2_presentation()
    H = su2_hopf()
    X = build_podles_xvector("chi")
    Z = z1_matrix(P, somu3_images(P))
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    rep = Report("somu3-action")
    assign = {"s": numeric_mu ** 0.5, "t": numeric_t}
    for i in range(3):
        diff = H.delta(X[i]) - _tsum((T(X[j], Z[j][i]) for j in range(3)), P)
        res = max((abs(eval_complex(c, assign)) for c in diff.terms.values()), default=0.0)
        rep.add(f"Delta(x_{i - 1}) = sum_j x_j (x) Z1[j][{i}]", not diff,
                "action matrix of SO_mu(3) on the sphere generators",
                "" if not diff else f"{len(diff.terms)} residual terms", residual=res)
    _corep_checks(rep, Z, H, "Z1")
    so = make_algebra("SOmu3")
    Zs = z1_matrix(so.pres)
    for i in range(3):
        e = [so.hopf.counit(Zs[j][i]) for j in range(3)]
        ok = all((e[j] - (1 if j == i else 0)).is_zero() for j in range(3))
        rep.add(f"counit column {i}", ok, "counit of a corepresentation matrix")
    rep.meta["somu3_status"] = so.status
    return rep


def _corep_checks(rep: Report, Z, H: HopfData, label: str, ref: str = "corepresentation identities"):
    P = H.pres
    n = len(Z)
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    bad = [(i, j) for i in range(n) for j in range(n)
           if H.delta(Z[i][j]) != _tsum((T(Z[i][k], Z[k][j]) for k in range(n)), P)]
    rep.add(f"{label}: Delta(Z_ij) = sum_k Z_ik (x) Z_kj", not bad, ref, f"bad {bad}" if bad else "")
    bad = [(i, j) for i in range(n) for j in range(n)
           if P.normal_form(H.antipode(Z[i][j]) - Z[j][i].star())]
    rep.add(f"{label}: kappa(Z_ij) = Z_ji*", not bad, ref, f"bad {bad}" if bad else "")
    bad = []
    for i in range(n):
        for j in range(n):
            acc = P.zero()
            for k in range(n):
                acc = acc + P.mul(Z[i][k], H.antipode(Z[k][j]))
            if P.normal_form(acc - (1 if i == j else 0)):
                bad.append((i, j))
    rep.add(f"{label}: sum_k Z_ik kappa(Z_kj) = delta_ij", not bad, ref, f"bad {bad}" if bad else "")


# ---------------------------------------------------------------------------
# Podles sphere

def build_podles_xvector(normalization: str = "display", rho=None):
    """Return ``(x_-1, x_0, x_1)`` inside SU_mu(2).

    ``normalization="display"`` is the bare formula in ``rho``; ``"chi"``
    multiplies by ``t/rho`` so that the vector satisfies the chi-relations
    with alpha' = t.  ``rho`` may be overridden (e.g. 0 for the degenerate
    smoke test).
    """
    P = su2_presentation()
    a, a_, g_, g = P["alpha"], P["alpha*"], P["gamma*"], P["gamma"]
    u, r = podles_radicals()
    if rho is not None:
        r = S(rho)
    m = mu
    xm = (a * a * m + a * g * (r * (1 + m ** 2)) - g * g * m ** 2) * (m * u).inverse()
    x0 = g_ * a * (-m) + (P.one() - g_ * g * (1 + m ** 2)) * r - g * a_
    xp = (g_ * g_ * m ** 2 - a_ * g_ * (r * m * (1 + m ** 2)) - a_ * a_ * m) * u.inverse()
    X = [P.normal_form(x) for x in (xm, x0, xp)]
    if normalization == "chi":
        if not r:
            raise ValueError("chi normalization needs rho != 0")
        lam = t * r.inverse()
        X = [x * lam for x in X]
    elif normalization != "display":
        raise ValueError(f"unknown normalization {normalization!r}")
    return tuple(X)


def podles_AB(X=None):
    """A = (1 - t^-1 x_0)/(1+mu^2) and B = mu (1+mu^2)^(-1/2) t^-1 x_-1."""
    P = su2_presentation()
    X = X or build_podles_xvector("chi")
    u, _ = podles_radicals()
    A = (P.one() - X[1] * t ** -1) * (1 + mu ** 2).inverse()
    B = X[0] * (mu * u.inverse() * t ** -1)
    return P.normal_form(A), P.normal_form(B)


def kernel_operator(c=None, scaled: bool = True) -> NCPoly:
    """``c^(1/2) X_c`` in U_mu(su(2)) (or ``X_c`` itself with ``scaled=False``).

    X_c = mu^(1/2) (mu^-1 - mu)^-1 c^(-1/2) (1 - K^2) + E K + mu F K.
    """
    c = podles_c() if c is None else S(c)
    if not c:
        raise ValueError("X_c needs c > 0 (c^(-1/2) undefined at c = 0)")
    U = uq_presentation()
    E, F, K = U["E"], U["F"], U["K"]
    w = sqrt(c)
    lead = s * (mu ** -1 - mu).inverse()
    body = U.one() - K * K
    tail = E * K + F * K * mu
    if scaled:
        return U.normal_form(body * lead + tail * w)
    return U.normal_form(body * (lead * w.inverse()) + tail)


def _rho_split(x: Scalar):
    return x.radical_parts("rho")


def check_podles_relations(numeric=(0.5, 0.8)) -> Report:
    P = su2_presentation()
    m = P.mul
    rep = Report("podles-symbolic")
    Xd = build_podles_xvector("display")
    rep.add("x0* = x0", not P.normal_form(Xd[1].star() - Xd[1]), "sphere involution law")
    rep.add("x-1* = -mu^-1 x1", not P.normal_form(Xd[0].star() + Xd[2] * mu ** -1),
            "sphere involution law")
    X = build_podles_xvector("chi")
    xm, x0, xp = X
    q, al, be = mu, t, chi_beta()
    chi = [
        ("chi-1: x0^2 - q x1 x-1 - q^-1 x-1 x1 - beta",
         m(x0, x0) - m(xp, xm) * q - m(xm, xp) * q ** -1 - be),
        ("chi-2: (1-q^2) x0^2 + q x-1 x1 - q x1 x-1 - (1-q^2) t x0",
         m(x0, x0) * (1 - q ** 2) + m(xm, xp) * q - m(xp, xm) * q - x0 * ((1 - q ** 2) * al)),
        ("chi-3: x-1 x0 - q^2 x0 x-1 - (1-q^2) t x-1",
         m(xm, x0) - m(x0, xm) * q ** 2 - xm * ((1 - q ** 2) * al)),
        ("chi-4: x0 x1 - q^2 x1 x0 - (1-q^2) t x1",
         m(x0, xp) - m(xp, x0) * q ** 2 - xp * ((1 - q ** 2) * al)),
    ]
    for lab, r in chi:
        r = P.normal_form(r)
        even = odd = True
        for c in r.terms.values():
            a, b = _rho_split(c)
            even = even and a.is_zero()
            odd = odd and b.is_zero()
        rep.add(lab, not r, "chi-relations with q = mu, alpha' = t", "" if not r else str(r)[:200],
                rho_even_zero=even, rho_odd_zero=odd)
    A, B = podles_AB(X)
    Bs = P.normal_form(B.star())
    c = podles_c()
    ab = [
        ("A* = A", P.normal_form(A.star()) - A),
        ("AB - mu^-2 BA", m(A, B) - m(B, A) * mu ** -2),
        ("B*B - A + A^2 - c", m(Bs, B) - A + m(A, A) - c),
        ("BB* - mu^2 A + mu^4 A^2 - c", m(B, Bs) - A * mu ** 2 + m(A, A) * mu ** 4 - c),
    ]
    for lab, r in ab:
        r = P.normal_form(r)
        rep.add(lab, not r, "Podles relations in A, B with c = (1-t)/t^2", "" if not r else str(r)[:200])
    Xc = kernel_operator(c)
    for i, x in enumerate(X):
        r = uq_act("right", Xc, x)
        rep.add(f"x_{i - 1} <| c^(1/2) X_c = 0", not r, "kernel condition of the right X_c action",
                "" if not r else str(r)[:200])
    for (i, j) in ((0, 1), (1, 2), (2, 0)):
        h = haar_su2(m(P.normal_form(X[i].star()), X[j]))
        rep.add(f"h(x_{i - 1}* x_{j - 1}) = 0", h.is_zero(), "orthogonality of the sphere generators", str(h))
    closed = haar_xx_closed_form()
    for i in range(3):
        h = haar_su2(m(P.normal_form(X[i].star()), X[i]))
        d = h - closed
        assign = {"s": numeric[0] ** 0.5, "t": numeric[1]}
        rep.add(f"h(x_{i - 1}* x_{i - 1}) closed form", d.is_zero(), "Haar values of the sphere generators",
                f"value {eval_complex(h, assign).real:.12g} at mu={numeric[0]}, t={numeric[1]}")
    return rep


def haar_xx_closed_form() -> Scalar:
    """t^2 (1-mu^2)(1-mu^6)^-1 [mu^2 + c (1+mu^2)^2] with c = (1-t)/t^2."""
    return t ** 2 * (1 - mu ** 2) * (1 - mu ** 6).inverse() * (mu ** 2 + podles_c() * (1 + mu ** 2) ** 2)


# ---------------------------------------------------------------------------
# U_mu(2) acting on SU_mu(2)

def abcd_images(U: Presentation):
    return U["u11"], U["u21"] * mu, U["u12"] * mu ** -1, U["u22"]


def sumu2_relations(A, B, C, D, nf):
    """The seventeen relations satisfied by the coefficients of the action."""
    st = lambda x: nf(x.star())
    As, Bs, Cs, Ds = st(A), st(B), st(C), st(D)
    m = mu
    return [
        ("1: A*A + CC* = 1", As * A + C * Cs - 1),
        ("2: A*A + mu^2 CC* = B*B + DD*", As * A + m ** 2 * C * Cs - Bs * B - D * Ds),
        ("3: A*B = -mu DC*", As * B + m * D * Cs),
        ("4: B*A = -mu CD*", Bs * A + m * C * Ds),
        ("5: AA* + mu^2 CC* = 1", A * As + m ** 2 * C * Cs - 1),
        ("6: BB* + mu^2 DD* = mu^2", B * Bs + m ** 2 * D * Ds - m ** 2),
        ("7: BA* = -mu^2 DC*", B * As + m ** 2 * D * Cs),
        ("8: C*C = CC*", Cs * C - C * Cs),
        ("9: (1-mu^2) C*C = D*D - DD*", (1 - m ** 2) * Cs * C - Ds * D + D * Ds),
        ("10: C*D = mu DC*", Cs * D - m * D * Cs),
        ("11: -mu^2 AC* + BD* - mu D*B + mu C*A = 0", -m ** 2 * A * Cs + B * Ds - m * Ds * B + m * Cs * A),
        ("12: AC* = mu C*A", A * Cs - m * Cs * A),
        ("13: BC* = C*B", B * Cs - Cs * B),
        ("14: AD* = D*A", A * Ds - Ds * A),
        ("15: AC = mu CA", A * C - m * C * A),
        ("16: BD = mu DB", B * D - m * D * B),
        ("17: AD - mu CB = DA - mu^-1 BC", A * D - m * C * B - D * A + m ** -1 * B * C),
    ]


def psi_images(P: Presentation, U: Presentation) -> Dict[str, TensorPoly]:
    """Psi(alpha) = alpha (x) u11 + gamma* (x) mu u21 and its companions."""
    A, B, C, D = abcd_images(U)
    T = lambda x, y: TensorPoly.pure(P, U, x, y)
    pa = T(P["alpha"], A) + T(P["gamma*"], B)
    pg_ = T(P["alpha"], C) + T(P["gamma*"], D)
    return {"alpha": pa, "gamma*": pg_, "alpha*": pa.star(), "gamma": pg_.star()}


def _tensor_substitute(p: NCPoly, imgs: Dict[int, TensorPoly], P, Q) -> TensorPoly:
    out = TensorPoly(P, Q)
    for w, c in p.terms.items():
        val = TensorPoly.one(P, Q)
        for g in w:
            val = val * imgs[g]
        out = out + val.scale(c)
    return out


def check_umu2_action() -> Report:
    entry = make_algebra("Umu2")
    U, H = entry.pres, entry.hopf
    nf = U.normal_form
    rep = Report("umu2-action", meta={"umu2_status": U.status, "umu2_rules": len(U.rules)})
    A, B, C, D = abcd_images(U)
    for lab, r in sumu2_relations(A, B, C, D, nf):
        r = nf(r)
        rep.add(f"relation {lab}", not r, "coefficient relations of the U_mu(2) action",
                "" if not r else str(r)[:200])
    P = su2_presentation()
    imgs = psi_images(P, U)
    idx = {P.gens.index[k]: v for k, v in imgs.items()}
    for lab, r in P.relations:
        val = _tensor_substitute(r, idx, P, U)
        rep.add(f"Psi preserves: {lab}", not val, "Psi is a homomorphism on SU_mu(2)",
                "" if not val else f"{len(val.terms)} residual terms")
    table = [("u11", U["u22"] * U["Dinv"]), ("u12", U["u12"] * U["Dinv"] * (-mu ** -1)),
             ("u21", U["u21"] * U["Dinv"] * (-mu)), ("u22", U["u11"] * U["Dinv"])]
    for name, val in table:
        i, j = name[1], name[2]
        rep.add(f"kappa({name}) table", not nf(H.antipode(U[name]) - val), "antipode table of U_mu(2)")
        rep.add(f"kappa({name}) = u{j}{i}*", not nf(H.antipode(U[name]) - U[f"u{j}{i}*"]),
                "antipode of a unitary corepresentation")
    for name in U.gens.names:
        x = U[name]
        back = H.antipode(nf(H.antipode(nf(x.star())).star()))
        rep.add(f"kappa(kappa({name}*)*) = {name}", not nf(back - x), "Hopf *-algebra axiom")
    return rep


# ---------------------------------------------------------------------------
# corepresentation tower

@dataclass
class CorepMatrix:
    label: Fraction
    entries: List[List[NCPoly]]
    meta: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _single_word(p: NCPoly):
    if len(p.terms) != 1:
        raise ValueError(f"expected a monomial, got {p}")
    return next(iter(p.terms.items()))


_TOWER: Dict[int, List[CorepMatrix]] = {}


def irrep_tower(l_max=Fraction(3, 2), bound: Fraction = Fraction(2)) -> List[CorepMatrix]:
    """Unitary irreducible corepresentations T^0, T^1/2, ..., T^l_max.

    T^(l+1/2) is cut out of T^l (x) T^1/2 by its highest-weight column.
    Basis vectors are weight vectors normalized to length one, with the
    phase fixed so that the first column has positive coefficients.
    """
    l_max = Fraction(l_max)
    if l_max > bound:
        raise ValueError(f"l_max {l_max} exceeds the configured bound {bound}")
    n_max = int(2 * l_max)
    P = su2_presentation()
    tower = _TOWER.setdefault(0, [CorepMatrix(Fraction(0), [[P.one()]])])
    if len(tower) == 1 and n_max >= 1:
        fund = fundamental_su2(P)
        tower.append(CorepMatrix(Fraction(1, 2), [[P.normal_form(x) for x in r] for r in fund]))
    while len(tower) <= n_max:
        tower.append(_next_irrep(tower[-1], tower[1], tower[-2]))
    return tower[:n_max + 1]


def _next_irrep(T: CorepMatrix, f: CorepMatrix, prev: CorepMatrix | None) -> CorepMatrix:
    P = su2_presentation()
    d = T.dim
    idx = [(i, k) for i in range(d) for k in range(2)]
    weight = lambda ik: (d - 1 - 2 * ik[0]) + (1 - 2 * ik[1])
    W = {(a, b): P.mul(T.entries[a[0]][b[0]], f.entries[a[1]][b[1]]) for a in idx for b in idx}
    top = (0, 0)
    dn = d + 1
    basis: List[Dict] = []
    complement: List[Dict] = []
    for bnum in range(dn):
        wgt = d - 2 * bnum
        space = [ik for ik in idx if weight(ik) == wgt]
        word = None
        r = {}
        for ik in space:
            p = W[(ik, top)]
            if not p:
                continue
            w, cf = _single_word(p)
            if word is None:
                word = w
            elif w != word:
                raise ValueError("highest-weight column is not proportional within a weight space")
            r[ik] = cf
        norm2 = Scalar.zero()
        for v in r.values():
            norm2 = norm2 + v * v.star()
        nrm = sqrt(norm2)
        inv = nrm.inverse()
        basis.append({ik: v * inv for ik, v in r.items()})
        if len(space) == 2:
            i1, i2 = space
            a1, a2 = r.get(i1, Scalar.zero()), r.get(i2, Scalar.zero())
            complement.append({i1: -a2.star() * inv, i2: a1.star() * inv})
    def block(rows, cols):
        out = []
        for ua in rows:
            line = []
            for ub in cols:
                acc = P.zero()
                for a, ca in ua.items():
                    cs = ca.star()
                    for b, cb in ub.items():
                        if W[(a, b)]:
                            acc = acc + W[(a, b)] * (cs * cb)
                line.append(P.normal_form(acc))
            out.append(line)
        return out
    E = block(basis, basis)
    off1 = block(complement, basis)
    off2 = block(basis, complement)
    meta = {
        "off_diagonal_zero": all(not x for r in off1 + off2 for x in r),
        "complement_dim": len(complement),
    }
    if prev is not None:
        meta["complement_matches_lower"] = _equivalent_up_to_diagonal(block(complement, complement),
                                                                      prev.entries)
    return CorepMatrix(T.label + Fraction(1, 2), E, meta)


def _ratio(p: NCPoly, q: NCPoly):
    """Scalar ``c`` with ``p = c q`` or None."""
    if not q:
        return Scalar.zero() if not p else None
    w, cq = next(iter(q.terms.items()))
    cp = p.coeff(w)
    if not cp:
        return None
    c = cp / cq
    return c if not (p - q * c) else None


def _equivalent_up_to_diagonal(A, B) -> bool:
    """``A_ij = lam_i / lam_j B_ij`` for some nonzero diagonal ``lam``."""
    n = len(A)
    if n != len(B):
        return False
    lam = [None] * n
    lam[0] = Scalar.one()
    for _ in range(n):
        for i in range(n):
            for j in range(n):
                if lam[j] is not None and lam[i] is None and B[i][j]:
                    c = _ratio(A[i][j], B[i][j])
                    if c is None or not c:
                        return False
                    lam[i] = c * lam[j]
    if any(x is None for x in lam):
        return False
    for i in range(n):
        for j in range(n):
            if (A[i][j] - B[i][j] * (lam[i] / lam[j])):
                return False
    return True


def T1_DISPLAY(P: Presentation | None = None):
    """The three-by-three matrix for spin one in its displayed normalization."""
    P = P or su2_presentation()
    a, a_, g_, g = P["alpha"], P["alpha*"], P["gamma*"], P["gamma"]
    k = 1 + mu ** 2
    rows = [
        [a_ * a_, a_ * g * (-k), g * g * (-mu)],
        [g_ * a_, P.one() - g_ * g * k, a * g],
        [g_ * g_ * (-mu), g_ * a * (-k), a * a],
    ]
    return [[P.normal_form(x) for x in r] for r in rows]


def compare_t1() -> Report:
    """Compare the computed T^1 with the display up to index reversal and diagonal scaling."""
    P = su2_presentation()
    T1 = irrep_tower(1)[2].entries
    D = T1_DISPLAY(P)
    rev = [[T1[2 - i][2 - j] for j in range(3)] for i in range(3)]
    rep = Report("t1-display")
    rep.add("T1 = reversal of display up to diagonal scaling", _equivalent_up_to_diagonal(D, rev),
            "displayed spin-one matrix")
    rep.add("display top-left = alpha*^2", D[0][0] == P.normal_form(P["alpha*"] * P["alpha*"]),
            "displayed spin-one matrix")
    H = su2_hopf()
    T = lambda x, y: TensorPoly.pure(P, P, x, y)
    ok = all(H.delta(D[i][j]) == _tsum((T(D[i][k], D[k][j]) for k in range(3)), P)
             for i in range(3) for j in range(3))
    rep.add("display is a corepresentation", ok, "displayed spin-one matrix")
    return rep


def check_irreps(l_max=Fraction(3, 2)) -> Report:
    H = su2_hopf()
    P = H.pres
    tower = irrep_tower(l_max)
    rep = Report("irreps", meta={"l_max": str(Fraction(l_max))})
    fund = [[P.normal_form(x) for x in r] for r in fundamental_su2(P)]
    rep.add("T^1/2 = [[alpha, -mu gamma*], [gamma, alpha*]]", tower[1].entries == fund,
            "fundamental corepresentation")
    rep.add("T^0 = [1]", tower[0].entries == [[P.one()]], "trivial corepresentation")
    for T in tower[1:]:
        lab = f"T^{T.label}"
        _corep_checks(rep, T.entries, H, lab)
        if "off_diagonal_zero" in T.meta:
            rep.add(f"{lab}: intertwiner block-diagonalizes", T.meta["off_diagonal_zero"],
                    "tensor product decomposition")
        if "complement_matches_lower" in T.meta:
            rep.add(f"{lab}: complement block ~ T^{T.label - 1}", T.meta["complement_matches_lower"],
                    "tensor product decomposition")
    if l_max >= 1:
        rep.extend(compare_t1())
    return rep


def check_schur(l_max=Fraction(3, 2), numeric_mu: float = 0.5) -> Report:
    """Schur orthogonality h(t^l'*_ip t^l_jq) for all l, l' <= l_max."""
    P = su2_presentation()
    tower = irrep_tower(l_max)
    rep = Report("schur", meta={"l_max": str(Fraction(l_max))})
    stars = {}
    for a, T in enumerate(tower):
        for i in range(T.dim):
            for p in range(T.dim):
                stars[(a, i, p)] = P.normal_form(T.entries[i][p].star())
    assign = {"s": numeric_mu ** 0.5}
    rank = 0
    total = 0
    for a, Ta in enumerate(tower):
        for b, Tb in enumerate(tower):
            bad = []
            diag = []
            for i in range(Ta.dim):
                for p in range(Ta.dim):
                    for j in range(Tb.dim):
                        for q in range(Tb.dim):
                            h = haar_su2(P.mul(stars[(a, i, p)], Tb.entries[j][q]))
                            expect_zero = a != b or p != q or i != j
                            if expect_zero:
                                if h:
                                    bad.append((i, p, j, q))
                            else:
                                diag.append((i, p, h))
            if a == b:
                lab = f"l={Ta.label}"
                rep.add(f"{lab}: h(t*_ip t_jq) = delta_pq F_ij with F diagonal", not bad,
                        "Schur orthogonality", f"nonzero at {bad[:6]}" if bad else "")
                vals = {}
                for i, p, h in diag:
                    vals.setdefault(i, []).append(h)
                same = all(all(v == vs[0] for v in vs) for vs in vals.values())
                rep.add(f"{lab}: F independent of p", same, "Schur orthogonality")
                nums = [eval_complex(vs[0], assign).real for _, vs in sorted(vals.items())]
                rep.add(f"{lab}: F > 0 at mu={numeric_mu}", all(x > 0 for x in nums),
                        "Schur orthogonality", "F = " + ", ".join(f"{x:.6g}" for x in nums))
                rep.meta[f"F[{Ta.label}]"] = [str(vs[0]) for _, vs in sorted(vals.items())]
                rank += sum(1 for _, _, h in diag if h)
                total += Ta.dim ** 2
            elif a < b:
                rep.add(f"l'={Ta.label}, l={Tb.label}: cross orthogonality", not bad,
                        "Schur orthogonality", f"nonzero at {bad[:6]}" if bad else "")
    rep.add("Gram rank = sum (2l+1)^2", rank == total, "Peter-Weyl dimension count",
            f"rank {rank} of {total}")
    return rep


# ---------------------------------------------------------------------------
# quantum permutations and AF levels

def row_sos_certificate(n: int) -> Tuple[bool, str]:
    """Positivity certificate for orthogonality of n projections summing to 1.

    sum_{k != j} (p_k p_j)* (p_k p_j) = p_j (1 - p_j) p_j reduces to 0 using
    only idempotence and the sum relation; in a C*-algebra a vanishing sum
    of x*x forces every p_k p_j = 0.
    """
    G = GenSet([f"p{i}" for i in range(1, n + 1)], {}, None)
    p = [NCPoly.gen(G, x) for x in G.names]
    rels = [(f"p{i + 1}^2 = p{i + 1}", x * x - x) for i, x in enumerate(p)]
    rels.append(("sum = 1", _sum(p, G) - 1))
    R = Presentation(f"row({n})", G, rels, degree_bound=4)
    ok = True
    for j in range(n):
        cert = _sum(((p[k] * p[j]).star() * (p[k] * p[j]) for k in range(n) if k != j), G)
        ok = ok and not R.normal_form(cert)
    return ok, R.status


def check_magic_unitary(n: int, bound: int = 4) -> Report:
    entry = make_algebra("QPerm", n, bound=bound)
    P = entry.pres
    rep = Report(f"magic-unitary({n})", meta={"status": P.status, "rules": len(P.rules)})
    a = lambda i, j: P[f"a{i}{j}"]
    R = range(1, n + 1)
    for i in R:
        rep.add(f"row {i} sum", not P.normal_form(_sum((a(i, j) for j in R), P.gens) - 1),
                "quantum permutation relations")
        rep.add(f"column {i} sum", not P.normal_form(_sum((a(j, i) for j in R), P.gens) - 1),
                "quantum permutation relations")
    not_reduced = []
    for i in R:
        for j in R:
            for k in R:
                if j != k and P.normal_form(a(i, j) * a(i, k)):
                    not_reduced.append(f"a{i}{j} a{i}{k}")
    proof = ("confluent rewrite system: the products are provably outside the ideal"
             if P.status == CONFLUENT else f"completion {P.status}")
    rep.add("row orthogonality reduces", not not_reduced, "orthogonality of a row's projections",
            "" if not not_reduced else f"not-reduced ({proof}): {', '.join(not_reduced[:4])}"
            + (" ..." if len(not_reduced) > 4 else ""))
    ok, st = row_sos_certificate(n)
    rep.add("row orthogonality positivity certificate", ok, "orthogonality of a row's projections",
            "sum_k (a_ik a_ij)*(a_ik a_ij) reduces to 0")
    rep.meta["orthogonality"] = "reduced" if not not_reduced else "not-reduced"
    return rep


def check_af_level(branching: Sequence[int], bound: int = 6) -> Report:
    entry = make_algebra("AFLevel", branching=tuple(branching), bound=bound)
    P = entry.pres
    m, mp = entry.params["m"], entry.params["m_prime"]
    br = tuple(branching)
    rep = Report(f"af-level{br}", meta={"status": P.status, "rules": len(P.rules)})
    rep.add("m' = sum l_i", mp == sum(br), "dimension of the next level", f"m={m}, m'={mp}")
    a = lambda i, j: P[f"a{i}{j}"]
    R = range(1, m + 1)
    G = P.gens
    for i in R:
        for j in R:
            x = a(i, j)
            rep.add(f"coarse a{i}{j}^2 = a{i}{j}", not P.normal_form(x * x - x),
                    "coarse magic unitary from fine level and compatibility")
            rep.add(f"coarse a{i}{j}* = a{i}{j}", not P.normal_form(x.star() - x),
                    "coarse magic unitary from fine level and compatibility")
    for i in R:
        rep.add(f"coarse row {i} sum", not P.normal_form(_sum((a(i, j) for j in R), G) - 1),
                "coarse magic unitary from fine level and compatibility")
        rep.add(f"coarse column {i} sum", not P.normal_form(_sum((a(j, i) for j in R), G) - 1),
                "coarse magic unitary from fine level and compatibility")
    for i in R:
        for j in R:
            for k in R:
                if j != k:
                    rep.add(f"coarse a{i}{j} a{i}{k} = 0", not P.normal_form(a(i, j) * a(i, k)),
                            "coarse magic unitary from fine level and compatibility")
    ok, _ = row_sos_certificate(mp)
    rep.add("fine orthogonality positivity certificate", ok, "orthogonality of a row's projections")
    return rep
