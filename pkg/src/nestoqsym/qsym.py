"""Exact quasisymmetric-function arithmetic with integer coefficients.

Elements are finite Z-linear combinations of basis functions indexed by
compositions, in either the monomial (M) or fundamental (L) basis.
Compositions are plain tuples of positive ints; the empty tuple indexes the
unit.  Coefficients are Python ints, so arithmetic is exact at every size
(an arithmetic-overflow failure mode cannot occur); the practical limit is
the enumeration cost of the callers, not the coefficient width.

Values are immutable after construction and every operation is a pure
function, so elements can be shared freely across threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import InputError, ParseError

# A composition is a tuple of ints >= 1; () is the unique composition of 0.
Composition = tuple


def composition(parts) -> Composition:
    """Validate an iterable of parts as a composition."""
    alpha = tuple(int(a) for a in parts)
    if any(a < 1 for a in alpha):
        raise InputError(f"composition parts must be positive, got {alpha}")
    return alpha


def partition_of(alpha) -> Composition:
    """s(alpha): the parts sorted weakly decreasing."""
    return tuple(sorted(alpha, reverse=True))


def term_key(alpha):
    """Canonical total order on compositions: weight, length, lexicographic."""
    return (sum(alpha), len(alpha), alpha)


def refines(beta, alpha) -> bool:
    """True iff beta cuts into consecutive blocks summing to alpha's parts."""
    i = 0
    for a in alpha:
        s = 0
        while s < a:
            if i >= len(beta):
                return False
            s += beta[i]
            i += 1
        if s != a:
            return False
    return i == len(beta)


def coarsenings(alpha) -> set:
    """All beta obtained by merging adjacent parts of alpha (2^(k-1) many)."""
    alpha = tuple(alpha)
    if not alpha:
        return {()}
    k = len(alpha)
    out = set()
    for cuts in range(1 << (k - 1)):
        parts, acc = [], alpha[0]
        for j in range(1, k):
            if cuts >> (j - 1) & 1:
                parts.append(acc)
                acc = alpha[j]
            else:
                acc += alpha[j]
        parts.append(acc)
        out.add(tuple(parts))
    return out


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple:
    """All compositions of n in canonical term order."""
    if n < 0:
        raise InputError(f"negative weight {n}")
    if n == 0:
        return ((),)
    res = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            res.append((first,) + rest)
    return tuple(sorted(res, key=term_key))


@lru_cache(maxsize=None)
def refinements(alpha) -> tuple:
    """All beta with refines(beta, alpha), concatenating per-part refinements."""
    out = [()]
    for a in alpha:
        out = [b + c for b in out for c in compositions_of(a)]
    return tuple(out)


@dataclass(frozen=True)
class QSymElement:
    """Immutable linear combination of M_alpha or L_alpha basis functions.

    ``terms`` is a tuple of (composition, coefficient) pairs in canonical
    term order with no zero coefficients, so equality and rendering are
    byte-stable.  Inhomogeneous combinations are allowed.
    """

    basis: str
    terms: tuple

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coeff(self, alpha) -> int:
        alpha = tuple(alpha)
        for a, c in self.terms:
            if a == alpha:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(a) for a, _ in self.terms}

    def __add__(self, other):
        self._check_same_basis(other)
        acc = self.as_dict()
        for a, c in other.terms:
            acc[a] = acc.get(a, 0) + c
        return _element(self.basis, acc)

    def __neg__(self):
        return QSymElement(self.basis, tuple((a, -c) for a, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def scale(self, c: int):
        if c == 0:
            return QSymElement(self.basis, ())
        return QSymElement(self.basis, tuple((a, c * v) for a, v in self.terms))

    def _check_same_basis(self, other):
        if self.basis != other.basis:
            raise InputError(
                f"basis mismatch: {self.basis} vs {other.basis}; convert first"
            )

    def __str__(self):
        return render(self)


def _element(basis: str, d: dict) -> QSymElement:
    if basis not in ("M", "L"):
        raise InputError(f"unknown basis tag {basis!r}")
    items = tuple(
        sorted(((a, c) for a, c in d.items() if c), key=lambda t: term_key(t[0]))
    )
    return QSymElement(basis, items)


def element(basis: str, terms) -> QSymElement:
    """Build an element from any mapping or pair iterable of (parts, coeff)."""
    items = terms.items() if hasattr(terms, "items") else terms
    acc = {}
    for parts, c in items:
        alpha = composition(parts)
        acc[alpha] = acc.get(alpha, 0) + int(c)
    return _element(basis, acc)


def zero(basis: str = "M") -> QSymElement:
    return QSymElement(basis, ())


def one(basis: str = "M") -> QSymElement:
    return QSymElement(basis, (((), 1),))


def monomial(alpha, coeff: int = 1) -> QSymElement:
    return _element("M", {composition(alpha): coeff})


def fundamental(alpha, coeff: int = 1) -> QSymElement:
    return _element("L", {composition(alpha): coeff})


@lru_cache(maxsize=None)
def _quasi_shuffle(a, b) -> tuple:
    """Quasi-shuffles of two compositions with multiplicity.

    Interleavings where at each step the head of a, the head of b, or their
    sum is emitted.  Returns ((composition, multiplicity), ...).
    """
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc = {}
    for gamma, c in _quasi_shuffle(a[1:], b):
        g = (a[0],) + gamma
        acc[g] = acc.get(g, 0) + c
    for gamma, c in _quasi_shuffle(a, b[1:]):
        g = (b[0],) + gamma
        acc[g] = acc.get(g, 0) + c
    for gamma, c in _quasi_shuffle(a[1:], b[1:]):
        g = (a[0] + b[0],) + gamma
        acc[g] = acc.get(g, 0) + c
    return tuple(acc.items())


def mul(F: QSymElement, G: QSymElement) -> QSymElement:
    """Product in the M basis (quasi-shuffle on basis elements)."""
    if F.basis != "M" or G.basis != "M":
        raise InputError("mul requires both operands in the M basis")
    acc = {}
    for a, ca in F.terms:
        for b, cb in G.terms:
            for g, m in _quasi_shuffle(a, b):
                acc[g] = acc.get(g, 0) + ca * cb * m
    return _element("M", acc)


def shift1(F: QSymElement) -> QSymElement:
    """The shifting operator: M_alpha goes to M_(alpha,1), extended linearly."""
    if F.basis != "M":
        raise InputError("shift1 is defined on the M basis")
    return _element("M", {a + (1,): c for a, c in F.terms})


@dataclass(frozen=True)
class QSymTensor:
    """Two-slot tensor of monomial quasisymmetric functions, exact coefficients."""

    terms: tuple  # (((alpha, beta), coeff), ...), left slot major

    def as_dict(self):
        return dict(self.terms)

    def __add__(self, other):
        acc = self.as_dict()
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) + c
        return _tensor(acc)

    def scale(self, c: int):
        return _tensor({k: c * v for k, v in self.terms})


def _tensor(d: dict) -> QSymTensor:
    items = tuple(
        sorted(
            ((k, c) for k, c in d.items() if c),
            key=lambda t: (term_key(t[0][0]), term_key(t[0][1])),
        )
    )
    return QSymTensor(items)


def coproduct(F: QSymElement) -> QSymTensor:
    """Deconcatenation coproduct on the M basis."""
    if F.basis != "M":
        raise InputError("coproduct is defined on the M basis")
    acc = {}
    for a, c in F.terms:
        for i in range(len(a) + 1):
            k = (a[:i], a[i:])
            acc[k] = acc.get(k, 0) + c
    return _tensor(acc)


def tensor_product(F: QSymElement, G: QSymElement) -> QSymTensor:
    """Outer tensor F (x) G of two M-basis elements."""
    if F.basis != "M" or G.basis != "M":
        raise InputError("tensor_product requires M-basis operands")
    acc = {}
    for a, ca in F.terms:
        for b, cb in G.terms:
            k = (a, b)
            acc[k] = acc.get(k, 0) + ca * cb
    return _tensor(acc)


def to_fundamental(F: QSymElement) -> QSymElement:
    """Basis change M -> L via Moebius inversion over refinement."""
    if F.basis != "M":
        raise InputError("to_fundamental expects an M-basis element")
    acc = {}
    for alpha, c in F.terms:
        k = len(alpha)
        for beta in refinements(alpha):
            s = -1 if (len(beta) - k) % 2 else 1
            acc[beta] = acc.get(beta, 0) + c * s
    return _element("L", acc)


def from_fundamental(F: QSymElement) -> QSymElement:
    """Basis change L -> M: L_alpha is the sum of M_beta over refinements."""
    if F.basis != "L":
        raise InputError("from_fundamental expects an L-basis element")
    acc = {}
    for alpha, c in F.terms:
        for beta in refinements(alpha):
            acc[beta] = acc.get(beta, 0) + c
    return _element("M", acc)


def descent_composition(pi) -> Composition:
    """Lengths of the maximal increasing runs of a permutation word."""
    word = tuple(pi)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise InputError(f"not a permutation of 1..{len(word)}: {word}")
    if not word:
        return ()
    parts, run = [], 1
    for prev, cur in zip(word, word[1:]):
        if cur > prev:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return tuple(parts)


def descent_permutation(alpha) -> tuple:
    """A permutation whose descent composition is alpha.

    Runs are consecutive ascending values with descending run starts: run j
    takes the largest values not yet used, which forces a descent at every
    run boundary and nowhere else.
    """
    n = sum(alpha)
    word, hi = [], n
    for a in alpha:
        word.extend(range(hi - a + 1, hi + 1))
        hi -= a
    return tuple(word)


def antipode(F: QSymElement) -> QSymElement:
    """Hopf antipode; S(L_des(pi)) = (-1)^n L_des(opposite of pi).

    The opposite permutation is the word of pi read right to left; its
    descent composition depends only on des(pi) (the descent set gets
    complemented and reflected), so the choice of pi is immaterial.  This is
    the unique map satisfying the antipode axiom for the deconcatenation
    coproduct; the value-complement variant pi(i) -> n+1-pi(i) only
    complements the descent set and is not a Hopf antipode.  Returns the
    result in the caller's basis.
    """
    if F.basis == "M":
        return from_fundamental(antipode(to_fundamental(F)))
    acc = {}
    for alpha, c in F.terms:
        n = sum(alpha)
        pi = descent_permutation(alpha)
        pibar = tuple(reversed(pi))
        beta = descent_composition(pibar)
        s = -1 if n % 2 else 1
        acc[beta] = acc.get(beta, 0) + c * s
    return _element("L", acc)


def binomial(m: int, k: int) -> int:
    """Generalized binomial coefficient C(m, k) for any integer m, k >= 0."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= m - i
    return num // factorial(k)


def principal_specialization(F: QSymElement, m: int) -> int:
    """ps_m(F): substitute 1 for the first m variables, 0 for the rest."""
    if F.basis != "M":
        raise InputError("principal specialization expects the M basis")
    return sum(c * binomial(m, len(alpha)) for alpha, c in F.terms)


def vertex_count(F: QSymElement, n: int) -> int:
    """(-1)^n ps_{-1}(F) for F homogeneous of degree n; must be >= 0."""
    if any(sum(a) != n for a, _ in F.terms):
        raise InputError(f"element is not homogeneous of degree {n}")
    v = (-1) ** n * principal_specialization(F, -1)
    if v < 0:
        raise InputError(f"negative count {v}: not a nestohedron enumerator")
    return v


# ---------------------------------------------------------------------------
# text and JSON forms


def render(F: QSymElement) -> str:
    """Deterministic text form, e.g. '24*M[1,1,1,1] + 6*M[2,1,1]'."""
    if not F.terms:
        return "0"
    chunks = []
    for alpha, c in F.terms:
        body = f"{F.basis}[{','.join(map(str, alpha))}]"
        mag = body if abs(c) == 1 else f"{abs(c)}*{body}"
        if not chunks:
            chunks.append(mag if c > 0 else "-" + mag)
        else:
            chunks.append(("+ " if c > 0 else "- ") + mag)
    return " ".join(chunks)


def to_json(F: QSymElement) -> str:
    obj = {
        "basis": F.basis,
        "terms": [{"comp": list(a), "coeff": c} for a, c in F.terms],
    }
    return json.dumps(obj)


_TERM_RE = re.compile(r"([+-])?\s*(?:(\d+)\s*\*\s*)?([ML])\[([0-9,\s]*)\]")


def parse(text: str) -> QSymElement:
    """Parse either the text rendering or the JSON form of an element."""
    s = text.strip()
    if s.startswith("{"):
        return _from_json(s)
    if s == "0":
        return zero()
    acc, basis = {}, None
    pos, first = 0, True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos >= len(s):
            break
        m = _TERM_RE.match(s, pos)
        if not m:
            raise ParseError(f"expected a term like 3*M[1,2] in {s!r}", pos)
        sign, coeff, letter, inner = m.groups()
        if not first and sign is None:
            raise ParseError("missing + or - between terms", pos)
        if basis is None:
            basis = letter
        elif letter != basis:
            raise ParseError(f"mixed bases {basis} and {letter}", pos)
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        inner = inner.strip()
        alpha = composition(int(p) for p in inner.split(",")) if inner else ()
        acc[alpha] = acc.get(alpha, 0) + c
        pos = m.end()
        first = False
    if basis is None:
        raise ParseError(f"no terms found in {s!r}", 0)
    return _element(basis, acc)


def _from_json(s: str) -> QSymElement:
    try:
        obj = json.loads(s)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.pos) from e
    if not isinstance(obj, dict) or "basis" not in obj or "terms" not in obj:
        raise ParseError("JSON element needs 'basis' and 'terms' keys", 0)
    acc = {}
    for i, t in enumerate(obj["terms"]):
        if not isinstance(t, dict) or "comp" not in t or "coeff" not in t:
            raise ParseError(f"term {i} needs 'comp' and 'coeff'", i)
        alpha = composition(t["comp"])
        acc[alpha] = acc.get(alpha, 0) + int(t["coeff"])
    return _element(obj["basis"], acc)
