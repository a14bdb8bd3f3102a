"""Concrete level-0 modules whose generating functions act by Laurent polynomials.

Four families, all with ``E[m,n]`` acting as ``x_m d/dx_n`` (or its
analogue):

* :class:`CInf` -- the natural module with basis ``v[k]``;
* :class:`Sym` -- degree-``r`` polynomials in ``x[n]``, labels are sorted
  index tuples (multisets);
* :class:`Ext` -- ``r``-th exterior power, labels are strictly increasing
  tuples;
* :class:`VSA` -- ``prod_{j in S} x_j^{alpha_j}`` times Laurent polynomials in
  ``x_j`` (``j`` in ``S``) and polynomials in the other variables, with every
  ``alpha_j`` non-integral.  Labels are ``(offsets, free)``: the exponent of
  ``x_j`` is ``alpha_j + offsets[j]``, and ``free`` is the multiset of
  remaining variables.

Every ``E(m,x) w`` is a Laurent polynomial, so the twisted generating
function ``Bbar(m,x) = E(m, e^x) = sum_n E[m,m+n] e^{-nx}`` makes each of
them a module for the twisted algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from ._linear import LinearCombination, as_fraction, format_fraction
from .exppoly import ep_residue_twisted
from .glinf import GlInfElem, f_fn, format_sum, gl_bracket
from .glinf_e import GlInfEElem
from .linalg import solve_vector_system, vandermonde
from .series import TruncSeries, embed, monomial


class ShapeMismatch(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class ZooVector(LinearCombination):
    __slots__ = ()


class ZooModule:
    """Base class; subclasses define the basis labels and the action."""

    selector: str = ""

    # -- to implement ------------------------------------------------------
    def check_label(self, label) -> None:
        raise NotImplementedError

    def act_basis(self, i: int, j: int, label) -> dict:
        raise NotImplementedError

    def label_support(self, label) -> set[int]:
        raise NotImplementedError

    def label_degree(self, label) -> Fraction:
        raise NotImplementedError

    def format_label(self, label) -> str:
        raise NotImplementedError

    # -- shared machinery --------------------------------------------------
    def vector(self, terms) -> ZooVector:
        w = ZooVector(terms)
        self.check(w)
        return w

    def zero(self) -> ZooVector:
        return ZooVector()

    def check(self, w: ZooVector) -> None:
        if not isinstance(w, ZooVector):
            raise ShapeMismatch(f"expected a ZooVector, got {type(w).__name__}")
        for label in w.terms:
            self.check_label(label)

    def support(self, w: ZooVector) -> set[int]:
        """Indices ``j`` such that ``E[i,j] w`` can be nonzero."""
        out: set[int] = set()
        for label in w.terms:
            out |= self.label_support(label)
        return out

    def act_E(self, i: int, j: int, w: ZooVector) -> ZooVector:
        self.check(w)
        return self._act(i, j, w)

    def _act(self, i: int, j: int, w: ZooVector) -> ZooVector:
        acc: dict = {}
        for label, q in w.terms.items():
            for lab2, q2 in self.act_basis(i, j, label).items():
                acc[lab2] = acc.get(lab2, 0) + q * q2
        return ZooVector._raw({k: v for k, v in acc.items() if v})

    def act_gl(self, X: GlInfElem, w: ZooVector) -> ZooVector:
        """Action of a gl-infinity element; ``K`` acts by the level, 0."""
        self.check(w)
        out = self.zero()
        for (i, j), q in X.terms.items():
            out = out + self._act(i, j, w).scale(q)
        return out

    def E_pairs(self, m: int, w: ZooVector) -> dict[int, ZooVector]:
        """``{n: E[m,m+n] w}`` over the finitely many nonzero ``n``."""
        self.check(w)
        out = {}
        for j in sorted(self.support(w)):
            v = self._act(m, j, w)
            if v:
                out[j - m] = v
        return out

    def E_series(self, m: int, w: ZooVector, var: str = "x") -> TruncSeries:
        """``E(m,x) w = sum_n E[m,m+n] w x^{-n}``, an exact Laurent polynomial."""
        return TruncSeries((var,), {(-n,): v for n, v in self.E_pairs(m, w).items()})

    def E_product_series(self, m: int, n: int, w: ZooVector, vars2=("x1", "x2")) -> TruncSeries:
        """``E(m,x1) E(n,x2) w`` as an exact bivariate Laurent polynomial."""
        terms = {}
        for b, v in self.E_pairs(n, w).items():
            for a, u in self.E_pairs(m, v).items():
                terms[(-a, -b)] = u
        return TruncSeries(vars2, terms)

    def bbar(self, m: int, r: int, w: ZooVector) -> ZooVector:
        """Mode ``Bbar(m, r)``: zero for ``r >= 0``, else ``bbar_mode(m, -r-1)``."""
        if r >= 0:
            self.check(w)
            return self.zero()
        return self.bbar_mode(m, -r - 1, w)

    def bbar_mode(self, m: int, k: int, w: ZooVector) -> ZooVector:
        """``Bbar(m, -k-1) w = sum_n (1/k!) (-n)^k E[m,m+n] w``."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        out = self.zero()
        for n, v in self.E_pairs(m, w).items():
            q = Fraction((-n) ** k, factorial(k))
            if q:
                out = out + v.scale(q)
        return out

    def bbar_series(self, m: int, w: ZooVector, order: int, var: str = "x") -> TruncSeries:
        """``sum_n E[m,m+n] w e^{-nx}`` up to ``x^order`` (only nonnegative powers)."""
        pairs = self.E_pairs(m, w)
        terms = {}
        for j in range(order + 1):
            acc = self.zero()
            for n, v in pairs.items():
                q = Fraction((-n) ** j, factorial(j))
                if q:
                    acc = acc + v.scale(q)
            if acc:
                terms[(j,)] = acc
        return TruncSeries((var,), terms, lo=(0,), hi=(order,))

    def act_e(self, X: GlInfEElem, w: ZooVector) -> ZooVector:
        """Action of the twisted algebra through ``B(m,x) = E(m, e^x)``.

        ``e_m (x) g`` acts as ``Res_x g(x) Bbar(m,x)``, which is
        ``sum_n Res_t(g(t) e^{-nt}) E[m,m+n]``.  ``K`` acts as 0.
        """
        self.check(w)
        out = self.zero()
        for m, g in X.parts.items():
            for n, v in self.E_pairs(m, w).items():
                q = ep_residue_twisted(g, -n)
                if q:
                    out = out + v.scale(q)
        return out

    def act_e_modes(self, X: GlInfEElem, w: ZooVector) -> ZooVector:
        """Same action, expanding ``X`` into modes and using :meth:`bbar`.

        ``t^r e^{ct} = sum_{p >= r} c^(p-r)/(p-r)! t^p`` and the modes
        ``p >= 0`` vanish, so only ``p`` in ``[r, -1]`` contribute.
        """
        self.check(w)
        out = self.zero()
        for (m, r, c), q in X.terms.items():
            for p in range(r, 0):
                coef = q * Fraction(c ** (p - r), factorial(p - r))
                if coef:
                    out = out + self.bbar(m, p, w).scale(coef)
        return out

    def recover_E(self, m: int, w: ZooVector, N: int) -> dict[int, ZooVector]:
        """Recover every ``E[m,m+n] w`` (``|n| <= N``) from the modes ``Bbar``.

        Solves ``sum_n n^k E[m,m+n] w = (-1)^k k! Bbar(m,-k-1) w`` for
        ``k = 0..2N`` exactly.  The caller's bound ``N`` is validated.
        """
        if N < 0:
            raise ValueError("N must be nonnegative")
        outside = sorted(n for n in self.E_pairs(m, w) if abs(n) > N)
        if outside:
            raise PreconditionError(
                f"E[{m},{m}+n] w is nonzero for n = {outside[0]} outside |n| <= {N}"
            )
        nodes = list(range(-N, N + 1))
        values = [
            self.bbar_mode(m, k, w).scale((-1) ** k * factorial(k)) for k in range(2 * N + 1)
        ]
        sol = solve_vector_system(vandermonde(nodes), values, self.zero())
        return dict(zip(nodes, sol))

    def level_witness(self, w: ZooVector, scan: int = 64) -> WitnessReport:
        """Force the central action on ``w`` from a pair of indices off its support.

        With ``S`` finite and ``E[p,q] w = 0`` for ``p, q`` not in ``S``, pick
        ``m < 0 < n`` outside ``S``; then
        ``0 = [E[m,n], E[n,m]] w = (E[m,m] - E[n,n]) w + K w``.
        """
        self.check(w)
        S = self.support(w)
        window = range(-scan, scan + 1)
        for p in window:
            if p in S:
                continue
            for q in window:
                if q not in S and self._act(p, q, w):
                    raise PreconditionError(f"E[{p},{q}] w != 0 with {p}, {q} outside {sorted(S)}")
        m = next((i for i in range(-1, -scan - 1, -1) if i not in S), None)
        n = next((i for i in range(1, scan + 1) if i not in S), None)
        if m is None or n is None:
            raise PreconditionError(f"no index pair m < 0 < n outside {sorted(S)} within {scan}")
        double = self._act(m, n, self._act(n, m, w)) - self._act(n, m, self._act(m, n, w))
        br = gl_bracket(GlInfElem({(m, n): 1}), GlInfElem({(n, m): 1}))
        matrix_part = self.act_gl(br.without_central(), w)
        forced = (double - matrix_part).scale(1 / br.central)
        return WitnessReport(m=m, n=n, S=tuple(sorted(S)), double_action=double,
                             matrix_action=matrix_part, psi=br.central, forced_central=forced)

    def format(self, w: ZooVector) -> str:
        return format_sum([(self.format_label(k), q) for k, q in
                           sorted(w.terms.items(), key=lambda kv: self._label_order(kv[0]))])

    def _label_order(self, label):
        return label

    def graded_pieces(self, w: ZooVector) -> set[Fraction]:
        return {self.label_degree(label) for label in w.terms}


@dataclass
class WitnessReport:
    m: int
    n: int
    S: tuple[int, ...]
    double_action: ZooVector
    matrix_action: ZooVector
    psi: Fraction
    forced_central: ZooVector

    @property
    def level_zero(self) -> bool:
        return self.forced_central.is_zero()


class CInf(ZooModule):
    selector = "cinf"

    def check_label(self, label):
        if isinstance(label, bool) or not isinstance(label, int):
            raise ShapeMismatch(f"cinf label must be an int, got {label!r}")

    def act_basis(self, i, j, k):
        return {i: Fraction(1)} if j == k else {}

    def label_support(self, k):
        return {k}

    def label_degree(self, k):
        return Fraction(1)

    def format_label(self, k):
        return f"v[{k}]"

    def basis(self, k: int) -> ZooVector:
        return ZooVector({k: 1})

    def __eq__(self, other):
        return type(other) is CInf

    def __hash__(self):
        return hash("cinf")

    def __repr__(self):
        return "CInf()"


def _check_index_tuple(label, r: int, strict: bool, name: str) -> None:
    if not isinstance(label, tuple) or len(label) != r:
        raise ShapeMismatch(f"{name} label must be a {r}-tuple, got {label!r}")
    for x in label:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ShapeMismatch(f"{name} label entries must be ints, got {label!r}")
    for a, b in zip(label, label[1:]):
        if a > b or (strict and a == b):
            raise ShapeMismatch(f"{name} label {label!r} is not canonically ordered")


def _replace_one(multiset: tuple, old: int, new: int) -> tuple:
    lst = list(multiset)
    lst.remove(old)
    lst.append(new)
    return tuple(sorted(lst))


def _monomial_text(indices: Iterable[int]) -> list[str]:
    counts: dict[int, int] = {}
    for i in indices:
        counts[i] = counts.get(i, 0) + 1
    return [f"x[{i}]" if c == 1 else f"x[{i}]^{c}" for i, c in sorted(counts.items())]


@dataclass(frozen=True)
class Sym(ZooModule):
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("degree must be nonnegative")

    @property
    def selector(self):
        return f"sym:{self.r}"

    def check_label(self, label):
        _check_index_tuple(label, self.r, False, "sym")

    def act_basis(self, i, j, label):
        c = label.count(j)
        if not c:
            return {}
        return {_replace_one(label, j, i): Fraction(c)}

    def label_support(self, label):
        return set(label)

    def label_degree(self, label):
        return Fraction(len(label))

    def format_label(self, label):
        return "*".join(_monomial_text(label)) or "1"

    def basis(self, *indices: int) -> ZooVector:
        return self.vector({tuple(sorted(indices)): 1})


@dataclass(frozen=True)
class Ext(ZooModule):
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("degree must be nonnegative")

    @property
    def selector(self):
        return f"ext:{self.r}"

    def check_label(self, label):
        _check_index_tuple(label, self.r, True, "ext")

    def act_basis(self, i, j, label):
        if j not in label:
            return {}
        if i != j and i in label:
            return {}
        lst = [i if x == j else x for x in label]
        # sign of the permutation sorting lst: one element moved past others
        inversions = sum(1 for a in range(len(lst)) for b in range(a + 1, len(lst)) if lst[a] > lst[b])
        sign = -1 if inversions % 2 else 1
        return {tuple(sorted(lst)): Fraction(sign)}

    def label_support(self, label):
        return set(label)

    def label_degree(self, label):
        return Fraction(len(label))

    def format_label(self, label):
        return "^".join(f"v[{i}]" for i in label) or "1"

    def basis(self, *indices: int) -> ZooVector:
        """Wedge of ``v[i]`` in the given order, normalized with its sign."""
        lst = list(indices)
        if len(set(lst)) != len(lst):
            return self.zero()
        inversions = sum(1 for a in range(len(lst)) for b in range(a + 1, len(lst)) if lst[a] > lst[b])
        return self.vector({tuple(sorted(lst)): -1 if inversions % 2 else 1})


@dataclass(frozen=True)
class VSA(ZooModule):
    """Intermediate-series module with non-integral exponents on ``S``."""

    S: tuple[int, ...]
    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        S = tuple(self.S)
        alpha = tuple(as_fraction(a) for a in self.alpha)
        if len(S) != len(alpha):
            raise ValueError("S and alpha must have the same length")
        if len(set(S)) != len(S):
            raise ValueError("S has repeated indices")
        order = sorted(range(len(S)), key=lambda i: S[i])
        S = tuple(S[i] for i in order)
        alpha = tuple(alpha[i] for i in order)
        for j, a in zip(S, alpha):
            if a.denominator == 1:
                raise ValueError(f"alpha_{j} = {a} must not be an integer")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def make(cls, alpha: dict[int, object]) -> VSA:
        return cls(tuple(alpha), tuple(as_fraction(v) for v in alpha.values()))

    @property
    def selector(self):
        data = {"S": list(self.S), "alpha": {str(j): format_fraction(a) for j, a in zip(self.S, self.alpha)}}
        return "vsa:" + json.dumps(data, separators=(",", ":"))

    def _pos(self, j):
        try:
            return self.S.index(j)
        except ValueError:
            return None

    def check_label(self, label):
        if not (isinstance(label, tuple) and len(label) == 2):
            raise ShapeMismatch(f"vsa label must be (offsets, free), got {label!r}")
        offsets, free = label
        if not isinstance(offsets, tuple) or len(offsets) != len(self.S):
            raise ShapeMismatch(f"vsa offsets must have length {len(self.S)}")
        if any(isinstance(a, bool) or not isinstance(a, int) for a in offsets):
            raise ShapeMismatch("vsa offsets must be ints")
        _check_index_tuple(free, len(free), False, "vsa free part")
        if any(i in self.S for i in free):
            raise ShapeMismatch(f"free variables {free} overlap S = {self.S}")

    def _multiply(self, i: int, offsets: list, free: list) -> None:
        p = self._pos(i)
        if p is None:
            free.append(i)
        else:
            offsets[p] += 1

    def act_basis(self, i, j, label):
        offsets, free = label
        p = self._pos(j)
        offs = list(offsets)
        fr = list(free)
        if p is not None:
            coef = self.alpha[p] + offs[p]
            offs[p] -= 1
        else:
            c = fr.count(j)
            if not c:
                return {}
            coef = Fraction(c)
            fr.remove(j)
        self._multiply(i, offs, fr)
        return {(tuple(offs), tuple(sorted(fr))): coef}

    def label_support(self, label):
        return set(self.S) | set(label[1])

    def label_degree(self, label):
        offsets, free = label
        return sum((a + o for a, o in zip(self.alpha, offsets)), Fraction(0)) + len(free)

    def format_label(self, label):
        offsets, free = label
        parts = []
        for j, a, o in zip(self.S, self.alpha, offsets):
            sign = "+" if o >= 0 else "-"
            parts.append(f"x[{j}]^{{{format_fraction(a)}{sign}{abs(o)}}}")
        parts.extend(_monomial_text(free))
        return "*".join(parts) or "1"

    def basis(self, offsets: dict[int, int] | None = None, free: Iterable[int] = ()) -> ZooVector:
        offsets = offsets or {}
        offs = tuple(offsets.get(j, 0) for j in self.S)
        return self.vector({(offs, tuple(sorted(free))): 1})


def parse_selector(text: str) -> ZooModule:
    text = text.strip()
    if text == "cinf":
        return CInf()
    kind, _, rest = text.partition(":")
    if kind in ("sym", "ext"):
        try:
            r = int(rest)
        except ValueError:
            raise ValueError(f"bad module selector {text!r}") from None
        return Sym(r) if kind == "sym" else Ext(r)
    if kind == "vsa":
        data = json.loads(rest)
        alpha = data.get("alpha", {})
        S = data.get("S", [int(k) for k in alpha])
        return VSA(tuple(int(j) for j in S), tuple(as_fraction(alpha[str(j)]) for j in S))
    raise ValueError(f"unknown module selector {text!r}")


def strig_locality_sides(module: ZooModule, m: int, n: int, w: ZooVector, k: int = 0):
    """Both sides of the trigonometric locality relation for ``E(m,.)``, ``E(n,.)``.

    ``(x1-x2)^k E(m,x1) E(n,x2) w`` against
    ``(x1-x2)^k sum_i f_i(x1/x2) v_i(x2) u_i(x1) w`` with the data read off
    the commutator relation at level 0:

    ======================  ============  ============
    ``f_i(z)``              ``v_i``       ``u_i``
    ======================  ============  ============
    ``1``                   ``E(n,.)``    ``E(m,.)``
    ``z^(m-n)``             ``E(m,.)``    ``1``
    ``-z^(m-n)``            ``1``         ``E(n,.)``
    ======================  ============  ============

    Each ``f_i`` is a Laurent monomial, so its expansion is itself.
    """
    vars2 = ("x1", "x2")
    lhs = module.E_product_series(m, n, w, vars2)
    reordered = TruncSeries(vars2, {(a, b): v for (b, a), v in
                                    module.E_product_series(n, m, w, ("x2", "x1")).terms.items()})
    d = m - n
    twist = monomial(vars2, (d, -d))
    e_m_x2 = embed(module.E_series(m, w, "x2"), vars2)
    e_n_x1 = embed(module.E_series(n, w, "x1"), vars2)
    rhs = reordered + twist * e_m_x2 - twist * e_n_x1
    if k:
        factor = TruncSeries(vars2, {(a, k - a): Fraction((-1) ** (k - a) * factorial(k),
                                                          factorial(a) * factorial(k - a))
                                     for a in range(k + 1)})
        lhs = factor * lhs
        rhs = factor * rhs
    return lhs, rhs


def lemma_sides_on_module(module: ZooModule, m: int, n: int, w: ZooVector):
    """``[E(m,x1), E(n,x2)] w`` and ``(x1/x2)^(m-n) (E(m,x2) - E(n,x1) + f(m,n) K) w``.

    ``K`` acts by the level, which is 0 here; ``f(m,n)`` is kept in the
    signature of the relation but contributes nothing.
    """
    vars2 = ("x1", "x2")
    lhs = module.E_product_series(m, n, w, vars2)
    swapped = module.E_product_series(n, m, w, ("x2", "x1"))
    lhs = lhs - TruncSeries(vars2, {(a, b): v for (b, a), v in swapped.terms.items()})
    d = m - n
    inner = embed(module.E_series(m, w, "x2"), vars2) - embed(module.E_series(n, w, "x1"), vars2)
    level = 0
    if f_fn(m, n) * level:
        inner = inner + TruncSeries(vars2, {(0, 0): w.scale(f_fn(m, n) * level)})
    rhs = monomial(vars2, (d, -d)) * inner
    return lhs, rhs


def prop_bracket_sides(module: ZooModule, m: int, n: int, w: ZooVector, order: int):
    """``[Bbar(m,x1), Bbar(n,x2)] w`` and ``e^{(m-n)(x1-x2)}(Bbar(m,x2) - Bbar(n,x1)) w``.

    Both expanded to total degree ``order`` in ``(x1, x2)``.
    """
    from .series import ts_exp_diff

    vars2 = ("x1", "x2")
    lhs_terms = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            a = module.bbar_mode(m, i, module.bbar_mode(n, j, w))
            b = module.bbar_mode(n, j, module.bbar_mode(m, i, w))
            if a - b:
                lhs_terms[(i, j)] = a - b
    lhs = TruncSeries(vars2, lhs_terms, lo=(0, 0), hi=(order, order), order=order)
    inner = embed(module.bbar_series(m, w, order, "x2"), vars2) - embed(
        module.bbar_series(n, w, order, "x1"), vars2
    )
    rhs = ts_exp_diff(m - n, order, vars2) * inner
    return lhs, rhs
