"""Noncommutative *-polynomials and presented *-algebras.

Words are tuples of generator indices.  A :class:`Presentation` orders words
by ``(weighted degree, word)`` where generators compare by their index, and
completes its relations into a rewrite system by overlap resolution up to a
weighted degree bound.  Normal forms are computed left to right: appending one
generator to a normal word can only create a rule occurrence as a suffix.
"""

from __future__ import annotations

import heapq
import json
import sys
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from .scalar import (S, Scalar, adjoin_radical, radical_table, scalar_from_data,
                     scalar_to_data)

__all__ = [
    "GenSet", "NCPoly", "Presentation", "CompletionError", "UniverseError",
    "StarCompatibilityError", "hom_check", "substitute", "random_ncpoly",
]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Word = Tuple[int, ...]

CONFLUENT = "confluent"
FIXTURE_ONLY = "fixture-only"


class CompletionError(ValueError):
    pass


class UniverseError(TypeError):
    """Operands live over different generator sets."""


class StarCompatibilityError(ValueError):
    pass


class GenSet:
    """Named generators with weights and a star involution on indices."""

    def __init__(self, names: Sequence[str], star: Mapping[str, str] | None = None,
                 weights: Sequence[int] | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.index = {n: i for i, n in enumerate(self.names)}
        st = list(range(len(self.names)))
        for a, b in (star or {}).items():
            i, j = self.index[a], self.index[b]
            st[i], st[j] = j, i
        self.star = tuple(st)
        for i, j in enumerate(self.star):
            if self.star[j] != i:
                raise ValueError("star pairing is not an involution")
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.names)
        if len(self.weights) != len(self.names) or min(self.weights, default=1) < 1:
            raise ValueError("weights must be positive, one per generator")

    def __len__(self):
        return len(self.names)

    def degree(self, w: Word) -> int:
        ws = self.weights
        return sum(ws[g] for g in w)

    def key(self, w: Word):
        return (self.degree(w), w)

    def star_word(self, w: Word) -> Word:
        st = self.star
        return tuple(st[g] for g in reversed(w))

    def render(self, w: Word) -> str:
        return " ".join(self.names[g] for g in w) if w else "1"

    def __eq__(self, other):
        return (isinstance(other, GenSet) and self.names == other.names
                and self.star == other.star and self.weights == other.weights)

    def __hash__(self):
        return hash((self.names, self.star, self.weights))


class NCPoly:
    """Finite linear combination of words with Scalar coefficients."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GenSet, terms: Mapping[Word, Scalar] | None = None):
        self.gens = gens
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, gens: GenSet, name: str) -> "NCPoly":
        return cls(gens, {(gens.index[name],): Scalar.one()})

    @classmethod
    def const(cls, gens: GenSet, c) -> "NCPoly":
        return cls(gens, {(): S(c)})

    @classmethod
    def word(cls, gens: GenSet, w: Word, c=1) -> "NCPoly":
        return cls(gens, {tuple(w): S(c)})

    def _coerce(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            if other.gens is not self.gens and other.gens != self.gens:
                raise UniverseError("generator-universe mismatch")
            return other
        return NCPoly(self.gens, {(): S(other)})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return NCPoly(self.gens, {w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            out[w] = c if v is None else v + c
        return NCPoly(self.gens, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            c = S(other)
            return NCPoly(self.gens, {w: v * c for w, v in self.terms.items()})
        other = self._coerce(other)
        out: Dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                v = out.get(w)
                out[w] = c if v is None else v + c
        return NCPoly(self.gens, out)

    def __rmul__(self, other):
        c = S(other)
        return NCPoly(self.gens, {w: c * v for w, v in self.terms.items()})

    def __pow__(self, n: int):
        out = NCPoly.const(self.gens, 1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "NCPoly":
        return self * c

    def star(self) -> "NCPoly":
        g = self.gens
        return NCPoly(g, {g.star_word(w): c.star() for w, c in self.terms.items()})

    def leading(self) -> Word:
        return max(self.terms, key=self.gens.key)

    def degree(self) -> int:
        return max((self.gens.degree(w) for w in self.terms), default=-1)

    def length(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def coeff(self, w) -> Scalar:
        if isinstance(w, str):
            w = tuple(self.gens.index[n] for n in w.split())
        return self.terms.get(tuple(w), Scalar.zero())

    def map_coeffs(self, f: Callable[[Scalar], Scalar]) -> "NCPoly":
        return NCPoly(self.gens, {w: f(c) for w, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: self.gens.key(it[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            word = self.gens.render(w) if w else ""
            if c.is_one():
                parts.append(word or "1")
            elif (-c).is_one():
                parts.append("-" + (word or "1"))
            else:
                cs = str(c)
                if len(c.terms) > 1 or " " in cs:
                    cs = f"({cs})"
                parts.append(f"{cs} {word}" if word else cs)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NCPoly({self})"


def _add_into(out: Dict, w, c):
    v = out.get(w)
    if v is None:
        out[w] = c
    else:
        v = v + c
        if v:
            out[w] = v
        else:
            del out[w]


class Presentation:
    """A presented *-algebra with a rewrite system.

    ``relations`` is a list of ``(label, NCPoly)``.  Call :meth:`complete`
    (done by the constructor when ``degree_bound`` is given) to obtain rules.
    """

    def __init__(self, name: str, gens: GenSet, relations: Sequence[Tuple[str, NCPoly]] = (),
                 degree_bound: int | None = None, max_rules: int = 4000,
                 star_close: bool = True):
        self.name = name
        self.gens = gens
        self.relations = [(lab, gens_check(gens, p)) for lab, p in relations]
        self.rules: Dict[Word, Dict[Word, Scalar]] = {}
        self.bound = degree_bound
        self.status = "uncompleted"
        self.unresolved: List[str] = []
        self.max_rules = max_rules
        self.star_close = star_close
        self._lhs_lengths: List[int] = []
        self._mg: Dict[Tuple[Word, int], Dict[Word, Scalar]] = {}
        self._nfw: Dict[Word, Dict[Word, Scalar]] = {}
        if degree_bound is not None:
            self.complete(degree_bound)

    # -- element helpers -------------------------------------------------
    def gen(self, name: str) -> NCPoly:
        return NCPoly.gen(self.gens, name)

    def __getitem__(self, name: str) -> NCPoly:
        return self.gen(name)

    def one(self) -> NCPoly:
        return NCPoly.const(self.gens, 1)

    def zero(self) -> NCPoly:
        return NCPoly(self.gens)

    def word(self, names: str | Sequence[str], c=1) -> NCPoly:
        if isinstance(names, str):
            names = names.split()
        return NCPoly.word(self.gens, tuple(self.gens.index[n] for n in names), c)

    # -- rewriting -------------------------------------------------------
    def _reset_caches(self):
        self._mg = {}
        self._nfw = {}
        self._lhs_lengths = sorted({len(w) for w in self.rules})

    def _mulgen(self, u: Word, g: int) -> Dict[Word, Scalar]:
        """Normal form of ``u + (g,)`` for a normal word ``u``."""
        key = (u, g)
        hit = self._mg.get(key)
        if hit is not None:
            return hit
        w = u + (g,)
        rules = self.rules
        out = None
        for L in self._lhs_lengths:
            if L > len(w):
                break
            rhs = rules.get(w[len(w) - L:])
            if rhs is not None:
                prefix = w[:len(w) - L]
                out = {}
                for m, c in rhs.items():
                    for v, d in self._extend(prefix, m).items():
                        _add_into(out, v, c * d)
                break
        if out is None:
            out = {w: Scalar.one()}
        self._mg[key] = out
        return out

    def _extend(self, u: Word, m: Word) -> Dict[Word, Scalar]:
        """Normal form of ``u + m`` for normal ``u``."""
        cur = {u: Scalar.one()}
        for g in m:
            nxt: Dict[Word, Scalar] = {}
            for v, c in cur.items():
                for x, d in self._mulgen(v, g).items():
                    _add_into(nxt, x, c * d if not c.is_one() else d)
            cur = nxt
            if not cur:
                break
        return cur

    def _nf_word(self, w: Word) -> Dict[Word, Scalar]:
        hit = self._nfw.get(w)
        if hit is None:
            hit = self._extend((), w)
            self._nfw[w] = hit
        return hit

    def _nf_dict(self, terms: Mapping[Word, Scalar]) -> Dict[Word, Scalar]:
        out: Dict[Word, Scalar] = {}
        for w, c in terms.items():
            for v, d in self._nf_word(w).items():
                _add_into(out, v, c * d)
        return out

    def normal_form(self, p) -> NCPoly:
        p = gens_check(self.gens, p) if isinstance(p, NCPoly) else NCPoly.const(self.gens, p)
        return NCPoly(self.gens, self._nf_dict(p.terms))

    nf = normal_form

    def reduces_to_zero(self, p) -> bool:
        return not self.normal_form(p)

    def mul(self, p: NCPoly, q: NCPoly) -> NCPoly:
        """Normal form of ``p*q`` for ``p``, ``q`` already in normal form."""
        out: Dict[Word, Scalar] = {}
        for u, c in p.terms.items():
            for m, d in q.terms.items():
                cd = c * d
                for v, e in self._extend(u, m).items():
                    _add_into(out, v, cd * e)
        return NCPoly(self.gens, out)

    def prod(self, factors: Iterable[NCPoly]) -> NCPoly:
        out = self.one()
        for f in factors:
            out = self.mul(out, self.normal_form(f))
        return out

    def is_normal_word(self, w: Word) -> bool:
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                if w[i:j] in self.rules:
                    return False
        return True

    def basis(self, degree: int) -> List[Word]:
        """Normal words of weighted degree <= ``degree`` in order."""
        out = [()]
        frontier = [()]
        ws = self.gens.weights
        while frontier:
            nxt = []
            for u in frontier:
                du = self.gens.degree(u)
                for g in range(len(self.gens)):
                    if du + ws[g] > degree:
                        continue
                    w = u + (g,)
                    if all(w[len(w) - L:] not in self.rules for L in self._lhs_lengths if L <= len(w)):
                        nxt.append(w)
            out.extend(nxt)
            frontier = nxt
        return sorted(out, key=self.gens.key)

    # -- completion --------------------------------------------------------
    def _orient(self, terms: Dict[Word, Scalar]):
        lead = max(terms, key=self.gens.key)
        c = terms[lead]
        inv = c.inverse()
        rhs = {w: -(v * inv) for w, v in terms.items() if w != lead}
        return lead, rhs

    def _overlaps(self, a: Word, b: Word):
        """Words where a suffix of ``a`` equals a prefix of ``b``."""
        out = []
        for k in range(1, min(len(a), len(b))):
            if a[len(a) - k:] == b[:k]:
                out.append((a + b[k:], a, b, k))
        return out

    def _spoly(self, a: Word, b: Word, k: int) -> Dict[Word, Scalar]:
        """rhs(a)*b[k:] - a[:-k]*rhs(b), reduced."""
        ra, rb = self.rules[a], self.rules[b]
        tail, head = b[k:], a[:len(a) - k]
        out: Dict[Word, Scalar] = {}
        for m, c in ra.items():
            for v, d in self._nf_word(m + tail).items():
                _add_into(out, v, c * d)
        for m, c in rb.items():
            for v, d in self._nf_word(head + m).items():
                _add_into(out, v, -(c * d))
        return out

    def complete(self, degree_bound: int, max_rules: int | None = None) -> "Presentation":
        """Bounded overlap completion; sets ``rules`` and ``status``.

        Status is ``confluent`` when every overlap of the final rule set
        resolves and no relation was dropped for exceeding the bound,
        ``proved-up-to-D`` otherwise, and ``fixture-only`` when the rule
        limit stopped the run.
        """
        if max_rules is not None:
            self.max_rules = max_rules
        self.bound = degree_bound
        G = self.gens
        key = G.key
        heap: list = []
        counter = 0

        def push(k, payload):
            nonlocal counter
            heapq.heappush(heap, (k, counter, payload))
            counter += 1

        seen = set()
        for lab, p in self.relations:
            for q in [p] + ([p.star()] if self.star_close else []):
                fz = frozenset(q.terms.items())
                if fz in seen or not q:
                    continue
                seen.add(fz)
                push(key(q.leading()), dict(q.terms))
        self.rules = {}
        self._reset_caches()
        beyond = set()
        queued = set()

        def add_overlaps(lead):
            for other in list(self.rules):
                for pair in ((lead, other), (other, lead)):
                    for ov, a, b, k in self._overlaps(*pair):
                        if G.degree(ov) > degree_bound or (a, b, k) in queued:
                            continue
                        queued.add((a, b, k))
                        push(key(ov), ("overlap", a, b, k))

        while True:
            while heap:
                _, _, payload = heapq.heappop(heap)
                if isinstance(payload, tuple):
                    _, a, b, k = payload
                    if a not in self.rules or b not in self.rules:
                        continue
                    red = self._spoly(a, b, k)
                else:
                    red = self._nf_dict(payload)
                if not red:
                    continue
                lead, rhs = self._orient(red)
                if G.degree(lead) > degree_bound:
                    beyond.add(G.render(lead))
                    continue
                if len(self.rules) >= self.max_rules:
                    self.status = FIXTURE_ONLY
                    self.unresolved = ["rule limit reached"]
                    self._reset_caches()
                    return self
                for old in list(self.rules):
                    if _contains(old, lead):
                        back = {w: -c for w, c in self.rules.pop(old).items()}
                        _add_into(back, old, Scalar.one())
                        push(key(old), back)
                self.rules[lead] = rhs
                self._reset_caches()
                for l2 in list(self.rules):
                    self.rules[l2] = self._nf_dict(self.rules[l2])
                self._reset_caches()
                add_overlaps(lead)
            # audit every overlap of the final system
            missing = False
            unresolved = []
            for a in list(self.rules):
                for b in list(self.rules):
                    for ov, _, _, k in self._overlaps(a, b):
                        sp = self._spoly(a, b, k)
                        if not sp:
                            continue
                        if G.degree(ov) <= degree_bound:
                            push(key(ov), sp)
                            missing = True
                        else:
                            unresolved.append(G.render(ov))
            if not missing:
                break
        self.unresolved = sorted(set(unresolved) | beyond)
        self.status = CONFLUENT if not self.unresolved else f"proved-up-to-{degree_bound}"
        return self

    def rule_list(self):
        return sorted(self.rules.items(), key=lambda it: self.gens.key(it[0]))

    def render_rules(self) -> List[str]:
        G = self.gens
        return [f"{G.render(l)} -> {NCPoly(G, r)}" for l, r in self.rule_list()]

    def to_json(self) -> str:
        """Deterministic JSON document; :meth:`from_json` restores it exactly.

        Alongside the rendered relations and rules the document carries their
        term data (words as generator names, coefficients via
        :func:`scalar_to_data`) and the radicals they use.
        """
        G = self.gens

        def terms(d):
            return [[[G.names[g] for g in w], scalar_to_data(c)]
                    for w, c in sorted(d.items(), key=lambda it: G.key(it[0]), reverse=True)]

        used = set()
        polys = [p.terms for _, p in self.relations] + [r for _, r in self.rule_list()]
        for d in polys:
            for c in d.values():
                for names, _, _ in scalar_to_data(c):
                    used.update(names)
        doc = {
            "format": "qiso-presentation/1",
            "name": self.name,
            "generators": list(G.names),
            "weights": list(G.weights),
            "star": {G.names[i]: G.names[j] for i, j in enumerate(G.star)},
            "order": "weighted-deglex",
            "relations": [[lab, str(p)] for lab, p in self.relations],
            "bound": self.bound,
            "status": self.status,
            "unresolved": list(self.unresolved),
            "rules": self.render_rules(),
            "radicals": radical_table(used),
            "relation_data": [[lab, terms(p.terms)] for lab, p in self.relations],
            "rule_data": [[[G.names[g] for g in l], terms(r)] for l, r in self.rule_list()],
        }
        return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        """Rebuild a presentation (relations, rules, status) without recompleting."""
        doc = json.loads(text)
        for name, sq in doc.get("radicals", []):
            adjoin_radical(name, scalar_from_data(sq))
        names = doc["generators"]
        G = GenSet(names, doc["star"], doc["weights"])

        def word(ns):
            return tuple(G.index[n] for n in ns)

        def poly(data):
            return NCPoly(G, {word(w): scalar_from_data(c) for w, c in data})

        P = cls(doc["name"], G, [(lab, poly(d)) for lab, d in doc["relation_data"]])
        P.rules = {word(l): poly(r).terms for l, r in doc["rule_data"]}
        P.bound = doc["bound"]
        P.status = doc["status"]
        P.unresolved = list(doc.get("unresolved", []))
        P._reset_caches()
        return P


def _contains(w: Word, sub: Word) -> bool:
    n = len(sub)
    return any(w[i:i + n] == sub for i in range(len(w) - n + 1))


def gens_check(gens: GenSet, p: NCPoly) -> NCPoly:
    if p.gens is not gens and p.gens != gens:
        raise UniverseError("generator-universe mismatch")
    return p


def substitute(p: NCPoly, images: Mapping[int, NCPoly], dst: Presentation) -> NCPoly:
    """Replace each generator index by its image and normal-form in ``dst``."""
    out = dst.zero()
    cache: Dict[Word, NCPoly] = {}
    for w, c in p.terms.items():
        val = cache.get(w)
        if val is None:
            val = dst.one()
            for g in w:
                val = dst.mul(val, images[g])
            cache[w] = val
        out = out + val * c
    return out


def complete_images(src: GenSet, dst: Presentation, images: Mapping[str, NCPoly]) -> Dict[int, NCPoly]:
    """Fill star images and check star compatibility."""
    imgs: Dict[int, NCPoly] = {}
    for name, p in images.items():
        imgs[src.index[name]] = dst.normal_form(p)
    for i in range(len(src)):
        j = src.star[i]
        if i in imgs and j in imgs:
            if dst.normal_form(imgs[i].star()) != imgs[j]:
                raise StarCompatibilityError(
                    f"image of {src.names[j]} is not the star of the image of {src.names[i]}")
        elif j in imgs:
            imgs[i] = dst.normal_form(imgs[j].star())
        elif i not in imgs:
            raise KeyError(f"no image for generator {src.names[i]}")
    return imgs


def hom_check(src: Presentation, dst: Presentation, images: Mapping[str, NCPoly]):
    """Per-relation verdicts ``[(label, ok, normal_form)]``."""
    imgs = complete_images(src.gens, dst, images)
    out = []
    for lab, r in src.relations:
        nf = substitute(r, imgs, dst)
        out.append((lab, not nf, nf))
    return out


def random_ncpoly(gens: GenSet, rng, max_len: int = 4, n_terms: int = 4,
                  coeffs: Sequence = (-3, -2, -1, 1, 2, 3)) -> NCPoly:
    """A random polynomial with up to ``n_terms`` words of length <= ``max_len``.

    ``rng`` is a :class:`random.Random`; coefficients are drawn from ``coeffs``.
    """
    out = NCPoly(gens)
    for _ in range(rng.randint(1, n_terms)):
        w = tuple(rng.randrange(len(gens)) for _ in range(rng.randint(0, max_len)))
        out = out + NCPoly.word(gens, w, rng.choice(coeffs))
    return out
