"""Generalized Verma modules ``M(level, lam)`` of the twisted algebra.

``M(level, lam)`` is induced from the abelian subalgebra
``E (x) C[[t]] + C K`` acting on a line: ``K`` by ``level``, ``B(n, 0)`` by
``lam[n]`` and ``B(n, r)`` with ``r >= 1`` by zero.  By PBW it has a basis
of sorted monomials ``B(m1,r1) ... B(mk,rk) v`` in the creation modes
``r <= -1``; with ``lam = 0`` it is the vacuum module, ``v`` being the
vacuum vector ``1``.

Generators are sorted by mode first, then by row index.  The action of an
element on a monomial ``B(a) w`` is computed recursively::

    X . B(a) w = B(a) . (X . w) + [X, B(a)] . w

where ``B(a) . u`` inserts a creation generator into an already sorted
vector, swapping past larger generators with the bracket as correction.
Every recursive bracket call acts on a strictly shorter monomial, so the
recursion terminates.

:func:`reduce_word` is an independent rewriting normalizer (leftmost or
rightmost redex first) used to cross-check the recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from ._linear import LinearCombination, as_fraction, format_fraction
from .exppoly import ep_coefficient
from .glinf_e import GlInfEElem, B, e_bracket
from .series import TruncSeries

Gen = tuple[int, int]  # (m, r) for B(m, r)
Monomial = tuple[Gen, ...]


def gen_key(a: Gen) -> tuple[int, int]:
    return (a[1], a[0])


class PBWVector(LinearCombination):
    """Keys are sorted tuples of creation generators ``(m, r)``, ``r <= -1``."""

    __slots__ = ()

    def __init__(self, terms=()):
        super().__init__(terms)
        for mono in self._terms:
            for a in mono:
                if a[1] > -1:
                    raise ValueError(f"B({a[0]},{a[1]}) is not a creation mode")
            if any(gen_key(a) > gen_key(b) for a, b in zip(mono, mono[1:])):
                raise ValueError(f"monomial {mono} is not in canonical order")

    @staticmethod
    def sort_key(mono: Monomial):
        return (-len(mono), [gen_key(a) for a in mono])

    def depth(self) -> int:
        return max((len(mono) for mono in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, q in self.sorted_terms():
            body = "".join(f"B[{m},{r}]" for m, r in mono)
            mag = abs(q)
            if not mono:
                text = "1" if mag == 1 else (
                    f"{format_fraction(mag)}.1" if mag.denominator == 1
                    else f"{format_fraction(mag)} .1"
                )
            elif mag == 1:
                text = body + ".1"
            else:
                text = f"{format_fraction(mag)} {body}.1"
            if not out:
                out.append(("-" if q < 0 else "") + text)
            else:
                out.append((" - " if q < 0 else " + ") + text)
        return "".join(out)


def monomial_vector(gens: Iterable[Gen] = (), coeff=1) -> PBWVector:
    """A PBW vector from creation generators, which must already be sorted."""
    mono = tuple(tuple(g) for g in gens)
    for m, r in mono:
        if r > -1:
            raise ValueError(f"B({m},{r}) is not a creation mode")
    if any(gen_key(a) > gen_key(b) for a, b in zip(mono, mono[1:])):
        raise ValueError(f"monomial {mono} is not in canonical order")
    return PBWVector({mono: coeff})


VACUUM = PBWVector({(): 1})


def b_vector(m: int) -> PBWVector:
    """``b^(m) = B(m,-1) 1``."""
    return PBWVector({((m, -1),): 1})


@dataclass(frozen=True)
class ModuleParams:
    level: Fraction = Fraction(0)
    lam: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def make(cls, level=0, lam: Mapping[int, object] | None = None) -> ModuleParams:
        items = tuple(sorted((int(k), as_fraction(v)) for k, v in (lam or {}).items()))
        return cls(as_fraction(level), tuple((k, v) for k, v in items if v))

    def lam_at(self, n: int) -> Fraction:
        return dict(self.lam).get(n, Fraction(0))


@dataclass(eq=False)
class VermaModule:
    """The induced module for fixed ``params``; owns its memo caches."""

    params: ModuleParams = field(default_factory=ModuleParams)
    _act_cache: dict = field(default_factory=dict, repr=False)
    _ins_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._lam = dict(self.params.lam)

    @property
    def level(self) -> Fraction:
        return self.params.level

    # -- core recursion ----------------------------------------------------
    def _act_base(self, X: GlInfEElem) -> dict:
        out: dict = {}
        for (p, r, c), q in X.terms.items():
            for n in range(r, 0):
                k = n - r
                coef = q * Fraction(c**k, factorial(k))
                if coef:
                    key = ((p, n),)
                    out[key] = out.get(key, 0) + coef
            lam = self._lam.get(p)
            if lam and r <= 0:
                coef = q * Fraction(c ** (-r), factorial(-r)) * lam
                out[()] = out.get((), 0) + coef
        return out

    def _act_mono(self, X: GlInfEElem, mono: Monomial) -> dict:
        """Action of a central-free element on a basis monomial, as a dict."""
        key = (X, mono)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        if not mono:
            res = self._act_base(X)
        else:
            a, w = mono[0], mono[1:]
            res = self._insert_into(a, self._act_mono(X, w))
            corr = e_bracket(X, B(*a))
            _accumulate(res, self._act_dict(corr, {w: Fraction(1)}))
            res = {k: v for k, v in res.items() if v}
        self._act_cache[key] = res
        return res

    def _act_dict(self, X: GlInfEElem, vec: dict) -> dict:
        out: dict = {}
        if X.central and self.level:
            scal = X.central * self.level
            for mono, q in vec.items():
                out[mono] = out.get(mono, 0) + scal * q
        Xn = X.without_central() if X.central else X
        if Xn.terms:
            for mono, q in vec.items():
                for m2, q2 in self._act_mono(Xn, mono).items():
                    out[m2] = out.get(m2, 0) + q * q2
        return {k: v for k, v in out.items() if v}

    def _insert_mono(self, a: Gen, mono: Monomial) -> dict:
        if not mono or gen_key(a) <= gen_key(mono[0]):
            return {(a,) + mono: Fraction(1)}
        key = (a, mono)
        hit = self._ins_cache.get(key)
        if hit is not None:
            return hit
        b, w = mono[0], mono[1:]
        res = self._insert_into(b, self._insert_mono(a, w))
        _accumulate(res, self._act_dict(e_bracket(B(*a), B(*b)), {w: Fraction(1)}))
        res = {k: v for k, v in res.items() if v}
        self._ins_cache[key] = res
        return res

    def _insert_into(self, a: Gen, vec: dict) -> dict:
        out: dict = {}
        for mono, q in vec.items():
            for m2, q2 in self._insert_mono(a, mono).items():
                out[m2] = out.get(m2, 0) + q * q2
        return out

    # -- public surface ----------------------------------------------------
    def act(self, X: GlInfEElem, v: PBWVector) -> PBWVector:
        return PBWVector._raw({k: q for k, q in self._act_dict(X, dict(v.terms)).items() if q})

    def mode_apply(self, m: int, r: int, v: PBWVector) -> PBWVector:
        return self.act(B(m, r), v)

    def apply_word(self, word: Sequence[Gen], v: PBWVector = VACUUM) -> PBWVector:
        """Apply ``B(a1) ... B(ak)`` right to left."""
        for m, r in reversed(list(word)):
            v = self.mode_apply(m, r, v)
        return v

    def vertex_series(self, m: int, v: PBWVector, lo: int, hi: int, var: str = "x") -> TruncSeries:
        """``sum_{n=lo}^{hi} B(m,n) v x^{-n-1}``.

        The cut is two-sided unless the caller knows better; see
        :func:`vertex_series_restricted` for the bounded form.
        """
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        terms = {(-n - 1,): self.mode_apply(m, n, v) for n in range(lo, hi + 1)}
        return TruncSeries((var,), terms, lo=(-hi - 1,), hi=(-lo - 1,), bounded=(False,))

    def annihilation_bound(self, v: PBWVector) -> int:
        """A mode ``N`` with ``B(m, n) v = 0`` for all ``m`` and ``n >= N``.

        ``[B(m,n), B(p,s)]`` with ``n >= 0`` only involves modes ``>= n`` of
        row ``p``, so by induction on monomial length the modes ``n >= 1``
        kill all of ``M(level, lam)``, and so does ``n = 0`` when ``lam = 0``.
        """
        return 1 if self._lam else 0

    def vertex_series_restricted(self, m: int, v: PBWVector, lo: int, var: str = "x") -> TruncSeries:
        """``B(m,x) v`` exact from ``x^{-N-1}`` up to ``x^{-lo-1}``.

        Uses :meth:`annihilation_bound` for the missing high modes, so the
        series is bounded below (a genuine element of ``V((x))``).
        """
        top = max(self.annihilation_bound(v) - 1, lo)
        terms = {(-n - 1,): self.mode_apply(m, n, v) for n in range(lo, top + 1)}
        return TruncSeries((var,), terms, lo=(-top - 1,), hi=(-lo - 1,))

    def composite_mode(self, m: int, k: int, n: int) -> PBWVector:
        """``b^(m)_k b^(n)``, i.e. ``B(m, k) B(n, -1) 1``."""
        return self.mode_apply(m, k, b_vector(n))

    def cache_size(self) -> int:
        return len(self._act_cache) + len(self._ins_cache)


def _accumulate(into: dict, other: dict) -> None:
    for k, v in other.items():
        into[k] = into.get(k, 0) + v


_MODULES: dict[ModuleParams, VermaModule] = {}


def module_for(params: ModuleParams) -> VermaModule:
    mod = _MODULES.get(params)
    if mod is None:
        mod = _MODULES[params] = VermaModule(params)
    return mod


def act(X: GlInfEElem, v: PBWVector, params: ModuleParams = ModuleParams()) -> PBWVector:
    return module_for(params).act(X, v)


def mode_apply(m: int, r: int, v: PBWVector, params: ModuleParams = ModuleParams()) -> PBWVector:
    return module_for(params).mode_apply(m, r, v)


def vertex_series(m: int, v: PBWVector, params: ModuleParams, lo: int, hi: int) -> TruncSeries:
    return module_for(params).vertex_series(m, v, lo, hi)


def composite_mode(m: int, k: int, n: int, params: ModuleParams = ModuleParams()) -> PBWVector:
    return module_for(params).composite_mode(m, k, n)


# -- independent normal-ordering by rewriting --------------------------------

def _letter_kind(X: GlInfEElem) -> str:
    """Classify a single-row, central-free letter.

    ``"gen"``: a bare creation mode ``B(m, r)``, ``r <= -1``, coefficient 1.
    ``"plus"``: lies in ``E (x) C[[t]]`` (no negative Laurent powers).
    ``"mixed"``: anything else.
    """
    if len(X.terms) == 1:
        (m, r, c), q = next(iter(X.terms.items()))
        if c == 0 and r <= -1 and q == 1:
            return "gen"
    g = next(iter(X.parts.values()))
    low = g.min_power()
    if low >= 0 or all(ep_coefficient(g, n) == 0 for n in range(low, 0)):
        return "plus"
    return "mixed"


def _split_letter(X: GlInfEElem) -> list[tuple[Fraction, tuple]]:
    """Rewrite a mixed letter as creation modes plus a ``C[[t]]`` remainder."""
    (m, g), = X.parts.items()
    out = []
    remainder = X
    for n in range(g.min_power(), 0):
        q = ep_coefficient(g, n)
        if q:
            out.append((q, (B(m, n),)))
            remainder = remainder - B(m, n, q)
    if remainder:
        out.append((Fraction(1), (remainder,)))
    return out


def _rewrite_at(word: tuple, i: int, params: ModuleParams):
    """Rewrite the redex at position ``i``; ``None`` if there is none."""
    X = word[i]
    if X.central or len(X.parts) != 1:
        pieces = []
        if X.central:
            pieces.append((X.central * params.level, ()))
        for m, g in X.parts.items():
            pieces.append((Fraction(1), (GlInfEElem.from_parts({m: g}),)))
        return [(q, word[:i] + p + word[i + 1:]) for q, p in pieces]
    kind = _letter_kind(X)
    if kind == "mixed":
        return [(q, word[:i] + p + word[i + 1:]) for q, p in _split_letter(X)]
    if kind == "plus":
        if i == len(word) - 1:
            (m, g), = X.parts.items()
            lam = params.lam_at(m)
            scal = ep_coefficient(g, 0) * lam
            return [(scal, word[:i])]
        Y = word[i + 1]
        if Y.central or len(Y.parts) != 1 or _letter_kind(Y) != "gen":
            return None
        swapped = word[:i] + (Y, X) + word[i + 2:]
        return [(Fraction(1), swapped), (Fraction(1), word[:i] + (e_bracket(X, Y),) + word[i + 2:])]
    # kind == "gen"
    if i == len(word) - 1:
        return None
    Y = word[i + 1]
    if Y.central or len(Y.parts) != 1 or _letter_kind(Y) != "gen":
        return None
    (a,) = X.terms
    (b,) = Y.terms
    if gen_key((a[0], a[1])) <= gen_key((b[0], b[1])):
        return None
    swapped = word[:i] + (Y, X) + word[i + 2:]
    return [(Fraction(1), swapped), (Fraction(1), word[:i] + (e_bracket(X, Y),) + word[i + 2:])]


def reduce_word(
    word: Sequence[GlInfEElem],
    params: ModuleParams = ModuleParams(),
    strategy: str = "left",
    max_steps: int = 1_000_000,
) -> PBWVector:
    """Normalize ``X1 X2 ... Xk . v`` by rewriting, independent of :class:`VermaModule`.

    ``strategy="left"`` always rewrites the leftmost redex, ``"right"`` the
    rightmost.  Both must reach the same PBW vector.
    """
    if strategy not in ("left", "right"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pending: dict[tuple, Fraction] = {}
    for X in word:
        if not isinstance(X, GlInfEElem):
            raise TypeError("word letters must be GlInfEElem")
    start = tuple(word)
    if any(X.is_zero() for X in start):
        return PBWVector()
    pending[start] = Fraction(1)
    done: dict[Monomial, Fraction] = {}
    steps = 0
    while pending:
        w, q = pending.popitem()
        if not q:
            continue
        if any(X.is_zero() for X in w):
            continue
        positions = range(len(w)) if strategy == "left" else range(len(w) - 1, -1, -1)
        for i in positions:
            rewritten = _rewrite_at(w, i, params)
            if rewritten is not None:
                break
        else:
            mono = tuple((m, r) for X in w for (m, r, _) in X.terms)
            done[mono] = done.get(mono, 0) + q
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError("rewriting did not terminate within max_steps")
        for q2, w2 in rewritten:
            if q2:
                pending[w2] = pending.get(w2, 0) + q * q2
    return PBWVector(done)
