"""Command-line suite runner.

``qiso --suite NAME [parameters] [--format text|json] [--out FILE]``

Every suite returns a :class:`~qiso.report.Report`; checks are sorted by id
before emission and the JSON document carries ``"schema": "qiso-report/1"``.
The exit status is 1 iff some check fails (2 for invalid parameters).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .report import Report

__all__ = ["SuiteConfig", "SUITES", "SCHEMA", "run", "emit", "report_document", "build_parser", "main"]

SCHEMA = "qiso-report/1"

SUITES = ("su2-core", "hopf-axioms", "haar", "podles-symbolic", "podles-numeric", "somu3",
          "umu2-action", "irreps", "rieffel-torus", "qiso-atheta", "qiso-cp", "wang-af")

_FLAGS = ("mu", "t", "c", "theta", "nmax", "lmax", "degree", "jtilde", "tol")


@dataclass
class SuiteConfig:
    suite: str
    mu: Optional[float] = None
    t: Optional[float] = None
    c: Optional[float] = None
    theta: Optional[float] = None
    nmax: Optional[int] = None
    lmax: Optional[Fraction] = None
    degree: Optional[int] = None
    jtilde: str = "minus-plus"
    tol: Optional[float] = None
    out: Optional[str] = None
    format: str = "text"

    def validate(self) -> "SuiteConfig":
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.mu is not None and not 0 < self.mu < 1:
            raise ValueError("--mu must lie in (0, 1)")
        if self.t is not None and not 0 < self.t <= 1:
            raise ValueError("--t must lie in (0, 1]")
        if self.c is not None and self.c < 0:
            raise ValueError("--c must be non-negative")
        if self.t is not None and self.c is not None:
            from .repnum import c_from_t
            if abs(c_from_t(self.t) - self.c) > 1e-12:
                raise ValueError("--t and --c are inconsistent (c = (1 - t)/t^2)")
        if self.nmax is not None and self.nmax < 4:
            raise ValueError("--nmax must be at least 4")
        if self.lmax is not None and (self.lmax < Fraction(1, 2) or (2 * self.lmax).denominator != 1):
            raise ValueError("--lmax must be a positive half-integer")
        if self.degree is not None and self.degree < 0:
            raise ValueError("--degree must be non-negative")
        if self.jtilde not in ("plus-minus", "minus-plus"):
            raise ValueError("--jtilde must be plus-minus or minus-plus")
        if self.tol is not None and not self.tol > 0:
            raise ValueError("--tol must be positive")
        if self.format not in ("text", "json"):
            raise ValueError("--format must be text or json")
        return self

    def get(self, name: str, default):
        v = getattr(self, name)
        return default if v is None else v

    def sphere_c(self, default: float = 0.3) -> float:
        from .repnum import c_from_t
        if self.c is not None:
            return self.c
        if self.t is not None:
            return c_from_t(self.t)
        return default

    def sphere_t(self, default: float = 0.8) -> float:
        from .repnum import t_from_c
        if self.t is not None:
            return self.t
        if self.c is not None:
            return t_from_c(self.c)
        return default

    def command_line(self) -> str:
        parts = ["qiso", "--suite", self.suite]
        for k in _FLAGS:
            v = getattr(self, k)
            if v is not None and not (k == "jtilde" and v == "minus-plus"):
                parts += [f"--{k}", str(v)]
        parts += ["--format", "json"]
        return " ".join(parts)

    def parameters(self) -> dict:
        return {k: _plain(getattr(self, k)) for k in _FLAGS if getattr(self, k) is not None}


# ---------------------------------------------------------------------------
# suites

def _suite_su2_core(cfg: SuiteConfig) -> Report:
    from .hopf import su2_presentation
    from .ncalg import CONFLUENT, random_ncpoly
    from .repnum import oracle_coherence, oracle_relation_report, su2_oracle_rep
    from .scalar import mu
    rep = Report("su2-core")
    P = su2_presentation(8)
    rep.meta["SUmu2"] = {"bound": P.bound, "status": P.status, "rules": len(P.rules)}
    rep.add("completion at bound 8 is confluent", P.status == CONFLUENT, "defining relations of SU_mu(2)",
            P.status, bound=8)
    a, a_, g_, g = P["alpha"], P["alpha*"], P["gamma*"], P["gamma"]
    for lab, lhs, rhs in (("rule gamma alpha -> mu^-1 alpha gamma", g * a, a * g * mu ** -1),
                          ("rule alpha* alpha -> 1 - gamma* gamma", a_ * a, 1 - g_ * g),
                          ("rule alpha alpha* -> 1 - mu^2 gamma* gamma", a * a_, 1 - g_ * g * mu ** 2)):
        rep.add(lab, P.normal_form(lhs) == P.normal_form(rhs), "defining relations of SU_mu(2)")
    for lab, r in P.relations:
        rep.add(f"relation {lab} reduces to 0", P.reduces_to_zero(r), "defining relations of SU_mu(2)")
    degree = cfg.get("degree", 4)
    count = 500 if degree > 0 else 0
    rng = random.Random(20240611)
    assoc = star = mult = True
    polys = []
    for _ in range(count):
        raw = [random_ncpoly(P.gens, rng, degree, 3) for _ in range(3)]
        x, y, z = (P.normal_form(r) for r in raw)
        polys.append(raw[0])
        if P.mul(P.mul(x, y), z) != P.mul(x, P.mul(y, z)):
            assoc = False
        if P.normal_form(P.mul(x, y).star()) != P.mul(P.normal_form(y.star()), P.normal_form(x.star())):
            star = False
        if P.mul(x, y) != P.normal_form(raw[0] * raw[1]):
            mult = False
    rep.add("random associativity checks", assoc, "associativity of the reduced product",
            count=count, degree=degree, seed=20240611)
    rep.add("random star checks (xy)* = y* x*", star, "star compatibility of the rewrite system",
            count=count, degree=degree, seed=20240611)
    rep.add("random normal-form multiplicativity", mult, "normal form is a homomorphism",
            count=count, degree=degree, seed=20240611)
    m = cfg.get("mu", 0.5)
    R = su2_oracle_rep(m, 12, 8)
    rep.extend(oracle_relation_report(R, cfg.get("tol", 1e-12)), "oracle/")
    if polys:
        coh = oracle_coherence(polys[:50], P, R, tol=cfg.get("tol", 1e-10))
        worst = max((ch.residual or 0.0) for ch in coh)
        rep.add("oracle: normal forms agree with the faithful model", coh.passed,
                "normal forms agree with the faithful model", f"{len(coh)} polynomials",
                worst, mu=m, count=len(coh))
    return rep


def _suite_hopf_axioms(cfg: SuiteConfig) -> Report:
    from .hopf import basis_by_length, hopf_axiom_suite, su2_hopf
    from .ncalg import NCPoly
    from .qgroups import make_algebra
    rep = Report("hopf-axioms")
    degree = cfg.get("degree", 4)
    H = su2_hopf()
    P = H.pres
    words = basis_by_length(P, degree)
    recs = hopf_axiom_suite(H, [NCPoly.word(P.gens, w) for w in words])
    for law in ("coassociativity", "counit", "antipode"):
        bad = [r["element"] for r in recs if not r[law]]
        rep.add(f"SU_mu(2) {law} on basis monomials", not bad, "Hopf structure of SU_mu(2)",
                "" if not bad else f"fails on {bad[:3]}", count=len(recs), degree=degree)
    U = make_algebra("Umu2")
    HU = U.hopf
    Q = U.pres
    rep.meta["Umu2"] = {"status": Q.status, "rules": len(Q.rules)}
    gens = ["u11", "u12", "u21", "u22", "D", "Dinv"]
    recs = hopf_axiom_suite(HU, [Q[g] for g in gens])
    for g, r in zip(gens, recs):
        for law in ("coassociativity", "counit", "antipode"):
            rep.add(f"U_mu(2) {law} on {g}", r[law], "Hopf structure of U_mu(2)")
    for p in (1, 2):
        for q in (1, 2):
            lhs = Q.normal_form(HU.antipode(Q[f"u{p}{q}"]))
            rhs = Q.normal_form(Q[f"u{q}{p}"].star())
            rep.add(f"antipode table kappa(u{p}{q}) = u{q}{p}*", lhs == rhs, "antipode table of U_mu(2)",
                    f"kappa(u{p}{q}) = {lhs}")
    return rep


def _suite_haar(cfg: SuiteConfig) -> Report:
    from .hopf import haar_invariance_check, haar_su2, su2_presentation
    from .scalar import mu
    rep = Report("haar")
    P = su2_presentation()
    gg = P["gamma*"] * P["gamma"]
    x = P.one()
    for k in range(0, 7):
        h = haar_su2(x)
        want = (1 - mu ** 2) / (1 - mu ** (2 * k + 2))
        rep.add(f"h((gamma* gamma)^{k}) = (1-mu^2)/(1-mu^{2 * k + 2})", h == want,
                "Haar state of SU_mu(2)", str(h))
        x = P.mul(x, gg)
    degree = cfg.get("degree", 4)
    res = haar_invariance_check(degree)
    bad = [w for w, ok in res if not ok]
    rep.add("bilateral invariance (h (x) id)D = h(.)1 = (id (x) h)D", not bad, "invariance of the Haar state",
            "" if not bad else f"fails on {bad[:3]}", count=len(res), degree=degree)
    return rep


def _suite_podles_symbolic(cfg: SuiteConfig) -> Report:
    from .qgroups import check_podles_relations
    return check_podles_relations((cfg.get("mu", 0.5), cfg.sphere_t()))


def _suite_podles_numeric(cfg: SuiteConfig) -> Report:
    from .repnum import (build_cp, cp_relation_residuals, cp_structure_checks, haar_closed_form_suite,
                         trace_convergence)
    m, c, N = cfg.get("mu", 0.5), cfg.sphere_c(), cfg.get("nmax", 64)
    rep = Report("podles-numeric", meta={"mu": m, "c": c, "N_max": N})
    T = build_cp(m, c, N)
    tol = cfg.get("tol", 1e-12)
    rep.extend(cp_relation_residuals(T, tol), "cp/")
    rep.extend(cp_structure_checks(T, tol), "cp/")
    rep.extend(haar_closed_form_suite(m, c, max(tol, 1e-9)), "haar/")
    rep.extend(trace_convergence(mu=m), "dabrowski/")
    return rep


def _suite_somu3(cfg: SuiteConfig) -> Report:
    from .qgroups import check_somu3_action_matrix, check_somu3_embedding
    rep = Report("somu3")
    rep.extend(check_somu3_embedding(), "embedding/")
    rep.extend(check_somu3_action_matrix(cfg.get("mu", 0.5), cfg.sphere_t()), "action/")
    return rep


def _suite_umu2(cfg: SuiteConfig) -> Report:
    from .qgroups import check_umu2_action
    return check_umu2_action()


def _suite_irreps(cfg: SuiteConfig) -> Report:
    from .qgroups import check_irreps, check_schur, compare_t1
    lmax = cfg.get("lmax", Fraction(3, 2))
    rep = Report("irreps", meta={"l_max": str(lmax)})
    rep.extend(check_irreps(lmax), "tower/")
    rep.extend(compare_t1(), "t1/")
    rep.extend(check_schur(lmax, cfg.get("mu", 0.5)), "schur/")
    return rep


def _suite_rieffel_torus(cfg: SuiteConfig) -> Report:
    from .rieffel import check_torus_relations, torus_deform_matrix
    J = torus_deform_matrix(2, convention=cfg.jtilde)
    return check_torus_relations(2, J, max(1, cfg.get("degree", 2)))


def _suite_qiso_atheta(cfg: SuiteConfig) -> Report:
    from .rieffel import qiso_atheta_block_table
    return qiso_atheta_block_table(cfg.jtilde, cfg.get("theta", 0.1234))


def _suite_qiso_cp(cfg: SuiteConfig) -> Report:
    from .freewords import closed_form_suite, no_action_witness
    m, c, N = cfg.get("mu", 0.5), cfg.sphere_c(), cfg.get("nmax", 40)
    theta = cfg.get("theta", 1 / 3)
    tol = cfg.get("tol", 1e-12)
    rep = Report("qiso-cp", meta={"mu": m, "c": c, "N_max": N, "theta": theta})
    rep.extend(closed_form_suite(mu=m, c=c, N_max=N, tol=tol), "closed-form/")
    rep.extend(no_action_witness(theta, N, m, c, tol), "witness/")
    return rep


def _suite_wang_af(cfg: SuiteConfig) -> Report:
    from .qgroups import check_af_level, check_magic_unitary
    rep = Report("wang-af")
    for n in range(1, 5):
        rep.extend(check_magic_unitary(n), f"qperm{n}/")
    for br in ((2,), (2, 1), (3, 2)):
        rep.extend(check_af_level(br), "af" + "-".join(map(str, br)) + "/")
    return rep


DISPATCH: Dict[str, Callable[[SuiteConfig], Report]] = {
    "su2-core": _suite_su2_core, "hopf-axioms": _suite_hopf_axioms, "haar": _suite_haar,
    "podles-symbolic": _suite_podles_symbolic, "podles-numeric": _suite_podles_numeric,
    "somu3": _suite_somu3, "umu2-action": _suite_umu2, "irreps": _suite_irreps,
    "rieffel-torus": _suite_rieffel_torus, "qiso-atheta": _suite_qiso_atheta,
    "qiso-cp": _suite_qiso_cp, "wang-af": _suite_wang_af,
}


def run(config: SuiteConfig) -> Report:
    config.validate()
    rep = DISPATCH[config.suite](config)
    rep.checks.sort(key=lambda ch: ch.id)
    return rep


# ---------------------------------------------------------------------------
# emission

def _plain(x):
    import numpy as np
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (float, np.floating)):
        return float(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if x is None or isinstance(x, (int, str)):
        return x
    return str(x)


def report_document(report: Report, config: SuiteConfig) -> dict:
    checks = []
    for ch in sorted(report.checks, key=lambda c: c.id):
        rec = {"id": ch.id, "paper_ref": ch.ref, "verdict": "pass" if ch.ok else "fail",
               "parameters": _plain(ch.params), "detail": ch.detail,
               "residual": _plain(ch.residual)}
        if not ch.ok:
            rec["reproduce"] = config.command_line()
        checks.append(rec)
    return {"schema": SCHEMA, "suite": config.suite, "config": config.parameters(),
            "summary": report.counts(), "meta": _plain(report.meta), "checks": checks}


def emit(report: Report, config: SuiteConfig, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report_document(report, config), sort_keys=True, indent=1,
                          ensure_ascii=False) + "\n"
    lines = [f"suite {config.suite}: {report.counts()['passed']}/{len(report)} checks pass"]
    width = max((len(ch.id) for ch in report.checks), default=10)
    for ch in sorted(report.checks, key=lambda c: c.id):
        mark = "pass" if ch.ok else "FAIL"
        res = "" if ch.residual is None else f"  residual {ch.residual:.3e}"
        lines.append(f"  {mark}  {ch.id.ljust(width)}{res}")
        if not ch.ok:
            if ch.detail:
                lines.append(f"        {ch.detail}")
            lines.append(f"        reproduce: {config.command_line()}")
    return "\n".join(lines) + "\n"


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qiso", description="Run a verification suite.")
    ap.add_argument("--suite", required=True, choices=SUITES)
    ap.add_argument("--mu", type=float)
    ap.add_argument("--t", type=float)
    ap.add_argument("--c", type=float)
    ap.add_argument("--theta", type=float)
    ap.add_argument("--nmax", type=int)
    ap.add_argument("--lmax", type=_fraction)
    ap.add_argument("--degree", type=int)
    ap.add_argument("--jtilde", choices=("plus-minus", "minus-plus"), default="minus-plus")
    ap.add_argument("--tol", type=float)
    ap.add_argument("--out")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def main(argv: List[str] | None = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    cfg = SuiteConfig(**vars(ns))
    try:
        cfg.validate()
    except ValueError as exc:
        ap.error(str(exc))
    rep = run(cfg)
    text = emit(rep, cfg, cfg.format)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
