"""Free graded-commutative algebras, their tensor powers, and linear combinations.

A factor monomial is a product of generators in one tensor slot, kept in
canonical (lexicographic by name) order. A tensor word is a length-n tuple of
factor monomials, i.e. a basis element of the n-fold tensor power. An
:class:`Element` is a finite linear combination of tensor words with nonzero
coefficients in a fixed field.

Sign conventions follow the Koszul rule: moving a homogeneous ``u`` past a
homogeneous ``v`` costs ``(-1)^(|u||v|)``. Over a field of characteristic
other than 2, the square of an odd-degree generator is zero and is never
stored in an Element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ArityError, ContextError, FieldMismatchError
from .scalars import QQ, Field, Scalar

NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9]*\Z")

# sorts after every generator name; marks the end of a slot in sort keys
_END = ("\uffff",)


@dataclass(frozen=True, order=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self):
        if not isinstance(self.name, str) or not NAME_RE.match(self.name):
            raise ValueError(f"invalid generator name {self.name!r}")
        if not isinstance(self.degree, int) or self.degree < 0:
            raise ValueError(f"generator degree must be a nonnegative integer, got {self.degree!r}")

    @property
    def parity(self) -> int:
        return self.degree % 2

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class FactorMonomial:
    """Canonically ordered product of generators; ``factors == ()`` is the unit 1."""

    factors: tuple[tuple[Generator, int], ...] = ()

    def __post_init__(self):
        prev = None
        for g, e in self.factors:
            if not isinstance(g, Generator) or not isinstance(e, int) or e < 1:
                raise ValueError(f"bad monomial factor {(g, e)!r}")
            if prev is not None and not prev < g.name:
                raise ValueError("monomial factors must be in strictly increasing name order")
            prev = g.name
        object.__setattr__(self, "_hash", hash(self.factors))
        object.__setattr__(self, "_exps", {g.name: e for g, e in self.factors})

    def __hash__(self):
        return self._hash

    @classmethod
    def unit(cls) -> FactorMonomial:
        return _UNIT

    @property
    def degree(self) -> int:
        return sum(g.degree * e for g, e in self.factors)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def exponent(self, name: str) -> int:
        return self._exps.get(name, 0)

    def divides(self, other: FactorMonomial) -> bool:
        exps = other._exps
        return all(exps.get(name, 0) >= e for name, e in self._exps.items())

    def expand(self) -> list[Generator]:
        """The generators with multiplicity, in canonical order."""
        return [g for g, e in self.factors for _ in range(e)]

    def vanishes_in(self, field: Field) -> bool:
        """True if an odd-degree generator is repeated and char(field) != 2."""
        if field.characteristic == 2:
            return False
        return any(e >= 2 and g.degree % 2 for g, e in self.factors)

    def sort_key(self):
        # descending exponent vectors: a^2 < a b < a < b < 1
        return tuple((g.name, -e) for g, e in self.factors) + (_END,)

    def to_text(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(g.name if e == 1 else f"{g.name}^{e}" for g, e in self.factors)

    def __str__(self):
        return self.to_text()


_UNIT = FactorMonomial(())


def normalize_factor(gens: Sequence[Generator], field: Field = QQ) -> tuple[int, FactorMonomial | None]:
    """Sort a product of generators into canonical order.

    Returns ``(sign, monomial)`` where ``sign`` is the Koszul sign picked up
    by the adjacent transpositions of a stable insertion sort. ``monomial``
    is None when the product vanishes (an odd-degree generator repeated and
    char(field) != 2).
    """
    seq = list(gens)
    seen: dict[str, Generator] = {}
    for g in seq:
        if not isinstance(g, Generator):
            raise TypeError(f"expected Generator, got {g!r}")
        other = seen.setdefault(g.name, g)
        if other.degree != g.degree:
            raise ContextError(f"generator {g.name!r} declared with degrees {other.degree} and {g.degree}")
    exponent = 0
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1].name > seq[j].name:
            exponent += seq[j - 1].degree * seq[j].degree
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            j -= 1
    factors: list[tuple[Generator, int]] = []
    for g in seq:
        if factors and factors[-1][0].name == g.name:
            factors[-1] = (g, factors[-1][1] + 1)
        else:
            factors.append((g, 1))
    mono = FactorMonomial(tuple(factors))
    if mono.vanishes_in(field):
        return 1, None
    return (-1 if exponent % 2 else 1), mono


def multiply_monomials(u: FactorMonomial, v: FactorMonomial, field: Field = QQ) -> tuple[int, FactorMonomial | None]:
    return normalize_factor(u.expand() + v.expand(), field)


@dataclass(frozen=True)
class TensorWord:
    """A basis element ``m_1 (x) ... (x) m_n`` of the n-fold tensor power."""

    slots: tuple[FactorMonomial, ...]

    def __post_init__(self):
        if len(self.slots) < 1:
            raise ArityError("a tensor word needs at least one slot")
        for m in self.slots:
            if not isinstance(m, FactorMonomial):
                raise TypeError(f"tensor slots must be FactorMonomials, got {m!r}")
        object.__setattr__(self, "_hash", hash(self.slots))

    def __hash__(self):
        return self._hash

    @classmethod
    def unit(cls, n: int) -> TensorWord:
        return cls((_UNIT,) * n)

    @property
    def arity(self) -> int:
        return len(self.slots)

    @property
    def degree(self) -> int:
        return sum(m.degree for m in self.slots)

    def vanishes_in(self, field: Field) -> bool:
        return any(m.vanishes_in(field) for m in self.slots)

    def sort_key(self):
        return tuple(m.sort_key() for m in self.slots)

    def to_text(self, sep: str = "(x)") -> str:
        return sep.join(m.to_text() for m in self.slots)

    def __str__(self):
        return self.to_text()

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def word_from_generators(slots: Sequence[Sequence[Generator]], field: Field = QQ) -> tuple[int, TensorWord | None]:
    """Build a tensor word from per-slot generator lists, normalizing each slot.

    Reordering inside a single slot is a product in that slot, so it carries
    the usual Koszul sign. Returns ``(sign, None)`` if some slot vanishes.
    """
    sign = 1
    monos = []
    for gens in slots:
        s, m = normalize_factor(gens, field)
        if m is None:
            return 1, None
        sign *= s
        monos.append(m)
    return sign, TensorWord(tuple(monos))


class Element:
    """An immutable linear combination of tensor words of one arity over one field.

    Zero coefficients are dropped on construction, so two Elements are equal
    exactly when their term maps are equal.
    """

    __slots__ = ("arity", "field", "_terms", "_hash")

    def __init__(self, arity: int, field: Field = QQ, terms: Mapping[TensorWord, object] | Iterable = ()):
        if arity < 1:
            raise ArityError(f"arity must be at least 1, got {arity}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[TensorWord, Scalar] = {}
        for word, c in items:
            if not isinstance(word, TensorWord):
                raise TypeError(f"expected TensorWord, got {word!r}")
            if word.arity != arity:
                raise ArityError(f"word {word} has arity {word.arity}, expected {arity}")
            if word.vanishes_in(field):
                raise ValueError(f"word {word} is zero over {field}; it cannot be stored")
            c = field(c)
            acc[word] = acc[word] + c if word in acc else c
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_terms", {w: c for w, c in acc.items() if c})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @classmethod
    def _trusted(cls, arity: int, field: Field, terms: dict) -> Element:
        # terms already valid for (arity, field); zero coefficients still dropped
        self = object.__new__(cls)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_terms", {w: c for w, c in terms.items() if c})
        object.__setattr__(self, "_hash", None)
        return self

    def __reduce__(self):
        return (Element, (self.arity, self.field, dict(self._terms)))

    @classmethod
    def zero(cls, arity: int, field: Field = QQ) -> Element:
        return cls(arity, field)

    @classmethod
    def unit(cls, arity: int, field: Field = QQ) -> Element:
        return cls(arity, field, {TensorWord.unit(arity): 1})

    @classmethod
    def from_word(cls, word: TensorWord, field: Field = QQ, coeff=1) -> Element:
        return cls(word.arity, field, {word: coeff})

    @property
    def terms(self) -> Mapping[TensorWord, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[TensorWord, Scalar]]:
        """Terms in sorted word order."""
        for w in sorted(self._terms, key=TensorWord.sort_key):
            yield w, self._terms[w]

    def coefficient(self, word: TensorWord) -> Scalar:
        return self._terms.get(word, self.field.zero())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms, key=TensorWord.sort_key))

    def is_homogeneous(self) -> bool:
        return len({w.degree for w in self._terms}) <= 1

    def degree(self) -> int | None:
        """The common degree of all terms, or None if zero or inhomogeneous."""
        degs = {w.degree for w in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def _check(self, other: Element):
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {other!r}")
        if other.arity != self.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")
        if other.field != self.field:
            raise FieldMismatchError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return add(self, -other)

    def __neg__(self):
        return Element._trusted(self.arity, self.field, {w: -c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            from .products import mul
            return mul(self, other)
        if isinstance(other, (int, Scalar)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return scale(other, self)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.arity == other.arity and self.field == other.field and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.arity, self.field, frozenset(self._terms.items()))))
        return self._hash

    def __repr__(self):
        return f"Element({self.arity}, {self.field!r}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def add(x: Element, y: Element) -> Element:
    x._check(y)
    acc = dict(x._terms)
    for w, c in y._terms.items():
        acc[w] = acc[w] + c if w in acc else c
    return Element._trusted(x.arity, x.field, acc)


def scale(c, x: Element) -> Element:
    c = x.field(c)
    if not c:
        return Element.zero(x.arity, x.field)
    return Element._trusted(x.arity, x.field, {w: c * v for w, v in x._terms.items()})


def format_coefficient(c: Scalar) -> tuple[str, str]:
    """Split a coefficient into ``(sign, magnitude)``; magnitude is '' for 1."""
    v = c.symmetric()
    sign = "-" if v < 0 else "+"
    v = abs(v)
    return sign, ("" if v == 1 else str(v))


def format_element(x: Element, sep: str = "(x)") -> str:
    """Human-readable text, parseable back by :func:`gradedtensor.cli.parser.parse`.

    Prime-field coefficients are shown by their symmetric representative so
    that ``-1`` prints as a minus sign.
    """
    if not x:
        return "0"
    parts = []
    for i, (w, c) in enumerate(x.items()):
        sign, mag = format_coefficient(c)
        body = w.to_text(sep)
        if mag:
            body = f"{mag}*{body}"
        if i == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


class Algebra:
    """Named generators with degrees over a field: the context for parsing and building words."""

    def __init__(self, generators: Mapping[str, int] | Iterable[Generator] = (), field: Field = QQ):
        if isinstance(generators, Mapping):
            generators = [Generator(k, v) for k, v in generators.items()]
        self.field = field
        self._gens: dict[str, Generator] = {}
        for g in generators:
            if g.name in self._gens:
                raise ContextError(f"generator {g.name!r} declared twice")
            self._gens[g.name] = g

    @property
    def generators(self) -> tuple[Generator, ...]:
        return tuple(sorted(self._gens.values()))

    def __contains__(self, name: str) -> bool:
        return name in self._gens

    def gen(self, name: str) -> Generator:
        try:
            return self._gens[name]
        except KeyError:
            raise ContextError(f"undeclared generator {name!r}") from None

    def __getitem__(self, name: str) -> Generator:
        return self.gen(name)

    def monomial(self, *names: str) -> tuple[int, FactorMonomial | None]:
        return normalize_factor([self.gen(n) for n in names], self.field)

    def word(self, *slots: Sequence[str] | str) -> TensorWord:
        """Build a tensor word from slot specs such as ``"a"``, ``"1"``, ``["b", "a"]``.

        Raises if a slot is zero; use :meth:`word_element` to get signs and zeros.
        """
        sign, w = self._word(slots)
        if w is None:
            raise ValueError("word vanishes in this field")
        return w

    def word_element(self, *slots: Sequence[str] | str) -> Element:
        sign, w = self._word(slots)
        if w is None:
            return Element.zero(len(slots), self.field)
        return Element(len(slots), self.field, {w: sign})

    def _word(self, slots):
        lists = []
        for s in slots:
            if isinstance(s, str):
                s = [] if s == "1" else s.split()
            lists.append([self.gen(n) for n in s])
        return word_from_generators(lists, self.field)
