"""Multiplication in the tensor power and the positional classes a_i.

The product of tensor words is slotwise,

    (u_1 (x) ... (x) u_n)(v_1 (x) ... (x) v_n) = (-1)^E (u_1 v_1 (x) ... (x) u_n v_n),

where E sums |u_i||v_j| over i > j: every v_j has to move left past the
u_i sitting in later slots.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .algebra import Element, FactorMonomial, Generator, TensorWord, multiply_monomials
from .errors import ArityError
from .scalars import QQ, Field


def embed(g: Generator, i: int, n: int, field: Field = QQ) -> Element:
    """The positional class g_i: ``g`` in slot ``i`` (1-based), units elsewhere."""
    if n < 1 or not 1 <= i <= n:
        raise ArityError(f"position {i} out of range for arity {n}")
    slots = [FactorMonomial.unit()] * n
    slots[i - 1] = FactorMonomial(((g, 1),))
    return Element(n, field, {TensorWord(tuple(slots)): 1})


def word_sign(u: TensorWord, v: TensorWord) -> int:
    """Koszul sign of the slotwise product of ``u`` and ``v``."""
    if u.arity != v.arity:
        raise ArityError(f"arity mismatch: {u.arity} vs {v.arity}")
    exponent = 0
    # degree of u accumulated over slots strictly to the right of j
    tail = 0
    for j in range(u.arity - 1, -1, -1):
        exponent += tail * v.slots[j].degree
        tail += u.slots[j].degree
    return -1 if exponent % 2 else 1


@lru_cache(maxsize=1 << 16)
def multiply_words(u: TensorWord, v: TensorWord, field: Field) -> tuple[int, Optional[TensorWord]]:
    """Product of two tensor words as ``(sign, word)``; word is None if it vanishes."""
    sign = word_sign(u, v)
    slots = []
    for a, b in zip(u.slots, v.slots):
        if a.is_unit:
            slots.append(b)
            continue
        if b.is_unit:
            slots.append(a)
            continue
        s, m = multiply_monomials(a, b, field)
        if m is None:
            return 1, None
        sign *= s
        slots.append(m)
    return sign, TensorWord(tuple(slots))


def mul(x: Element, y: Element) -> Element:
    x._check(y)
    acc = {}
    for u, cu in x._terms.items():
        for v, cv in y._terms.items():
            sign, w = multiply_words(u, v, x.field)
            if w is None:
                continue
            c = cu * cv if sign > 0 else -(cu * cv)
            acc[w] = acc[w] + c if w in acc else c
    return Element._trusted(x.arity, x.field, acc)


def zero_divisor(g: Generator, i: int, j: int, n: int, field: Field = QQ) -> Element:
    """``g_i - g_j``."""
    if i == j:
        raise ArityError(f"zero divisor needs distinct positions, got {i} twice")
    return embed(g, i, n, field) - embed(g, j, n, field)


def chain_product(g: Generator, n: int, field: Field = QQ, prefix: Generator | None = None) -> Element:
    """``(h_1 - h_2)(g_1 - g_2)(g_1 - g_3)...(g_1 - g_n)``, multiplied left to right.

    The leading ``(h_1 - h_2)`` factor is present only when ``prefix`` is given.
    """
    if n < 2:
        raise ArityError(f"chain product needs n >= 2, got {n}")
    result = zero_divisor(prefix, 1, 2, n, field) if prefix is not None else Element.unit(n, field)
    for k in range(2, n + 1):
        result = mul(result, zero_divisor(g, 1, k, n, field))
    return result
