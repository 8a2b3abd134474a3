"""Ideals generated by monomial tensors, and reduction modulo them.

A basis word lies in the ideal generated by monomial tensors g^(1), ..., g^(r)
exactly when some g^(t) divides it slotwise. Multiplying a word by anything
only changes it by a sign, so left, right and two-sided ideals agree and
divisibility does not care which side the cofactor sits on.

Generators may be formal words that are zero in the working field (for
instance a^2 (x) 1 with |a| odd over Q). Such a generator adds nothing to
the ideal and never divides a stored word; it is kept so the generator list
reads the same in every characteristic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import Element, FactorMonomial, Generator, TensorWord
from .errors import ArityError, IdealError


def divides(g: TensorWord, w: TensorWord) -> bool:
    """True iff every slot of ``g`` divides the matching slot of ``w``."""
    if g.arity != w.arity:
        raise ArityError(f"arity mismatch: {g.arity} vs {w.arity}")
    return all(gs.divides(ws) for gs, ws in zip(g.slots, w.slots))


class MonomialIdeal:
    """Ideal of the n-fold tensor power generated by a nonempty list of tensor words.

    Generators may be given as :class:`TensorWord` or as one-term
    :class:`Element` (the coefficient is a unit and is dropped). Anything
    else raises :class:`IdealError`. The order of generators is kept; it
    decides which generator is reported when several divide a word.
    """

    def __init__(self, generators: Iterable[TensorWord | Element], arity: int | None = None):
        gens: list[TensorWord] = []
        for g in generators:
            if isinstance(g, Element):
                if len(g) != 1:
                    raise IdealError(
                        f"ideal generators must be single monomial tensors, got {len(g)}-term element {g}"
                    )
                (g,) = g.terms
            if not isinstance(g, TensorWord):
                raise IdealError(f"ideal generators must be tensor words, got {g!r}")
            gens.append(g)
        if not gens:
            raise IdealError("an ideal needs at least one generator")
        n = gens[0].arity if arity is None else arity
        for g in gens:
            if g.arity != n:
                raise ArityError(f"generator {g} has arity {g.arity}, expected {n}")
        self.arity = n
        self.generators: tuple[TensorWord, ...] = tuple(gens)
        # per generator: the (slot, name, exponent) demands a word must meet
        self._demands = [
            tuple((i, g.name, e) for i, m in enumerate(w.slots) for g, e in m.factors) for w in self.generators
        ]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "MonomialIdeal<" + ", ".join(g.to_text() for g in self.generators) + ">"

    def divisors_of(self, w: TensorWord) -> list[int]:
        """Indices of all generators dividing ``w``, in generator order."""
        return [i for i, g in enumerate(self.generators) if divides(g, w)]

    def contains_word(self, w: TensorWord) -> bool:
        if w.arity != self.arity:
            raise ArityError(f"arity mismatch: {w.arity} vs {self.arity}")
        return self._contains(w.slots)

    def _contains(self, slots) -> bool:
        for demands in self._demands:
            for i, name, e in demands:
                if slots[i]._exps.get(name, 0) < e:
                    break
            else:
                return True
        return False


def reduce(x: Element, ideal: MonomialIdeal) -> Element:
    """Drop every term of ``x`` whose word lies in ``ideal``."""
    if x.arity != ideal.arity:
        raise ArityError(f"arity mismatch: element {x.arity} vs ideal {ideal.arity}")
    contains = ideal._contains
    return Element._trusted(x.arity, x.field, {w: c for w, c in x.terms.items() if not contains(w.slots)})


def congruent(x: Element, y: Element, ideal: MonomialIdeal) -> bool:
    return not reduce(x - y, ideal)


def ideal_contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """True iff ``small`` is contained in ``big``."""
    if big.arity != small.arity:
        raise ArityError(f"arity mismatch: {big.arity} vs {small.arity}")
    return all(big.contains_word(g) for g in small.generators)


def power_word(g: Generator, e: int, slot: int, n: int) -> TensorWord:
    """The formal word with ``g^e`` in ``slot`` (1-based) and units elsewhere."""
    if not 1 <= slot <= n:
        raise ArityError(f"slot {slot} out of range for arity {n}")
    slots = [FactorMonomial.unit()] * n
    slots[slot - 1] = FactorMonomial(((g, e),))
    return TensorWord(tuple(slots))


def leading_word(g: Generator, count: int, n: int) -> TensorWord:
    """``g (x) ... (x) g (x) 1 (x) ... (x) 1`` with ``g`` in the first ``count`` slots."""
    if not 0 <= count <= n:
        raise ArityError(f"cannot place {count} copies in arity {n}")
    one = FactorMonomial(((g, 1),))
    return TensorWord((one,) * count + (FactorMonomial.unit(),) * (n - count))


def chain_ideal(g: Generator, k: int, n: int) -> MonomialIdeal:
    """``I_k = < g^2 (x) 1 (x) ... (x) 1,  g (x) ... (x) g (x) 1 (x) ... (x) 1 >`` with k-1 copies of g.

    ``chain_ideal(g, n, n)`` is the ideal of the original first-part claim,
    and the chain decreases: I_{k+1} is contained in I_k.
    """
    if not 2 <= k <= n:
        raise ArityError(f"chain ideal index must satisfy 2 <= k <= n, got k={k}, n={n}")
    return MonomialIdeal([power_word(g, 2, 1, n), leading_word(g, k - 1, n)], n)


def slot_word(n: int, contents: Sequence[tuple[int, FactorMonomial]]) -> TensorWord:
    slots = [FactorMonomial.unit()] * n
    for i, m in contents:
        slots[i - 1] = m
    return TensorWord(tuple(slots))
