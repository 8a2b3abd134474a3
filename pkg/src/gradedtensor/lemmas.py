"""Checks of the zero-divisor product congruences, with term-by-term certificates.

Three claims are handled, for classes a (and b) of a graded-commutative
algebra H and the positional classes a_i in H^(x)n:

``original-first-part``
    (a_1 - a_2)(a_1 - a_3)...(a_1 - a_n)
        == (-1)^n (a(x)1 - 1(x)a)(x)a(x)...(x)a   mod <a^2(x)1..., a(x)...(x)a(x)1>.
    True for n = 2, 3 and false from n = 4 on.

``corrected-first-part``
    the same congruence modulo <a^2(x)1..., a(x)a(x)1...>.

``second-part``
    (b_1 - b_2)(a_1 - a_2)...(a_1 - a_n)
        == (-1)^(n+1) (b(x)a + (-1)^(|a||b|) a(x)b)(x)a(x)...(x)a
    modulo <a^2(x)1..., ba(x)1..., 1(x)ba(x)1...>.

A certificate lists every term of the expanded product: one per choice of
index j in {1, 2} for the b factor (second part only) and i_k in {1, k+1}
for the k-th a factor. Each record carries its sign exponent, its word, and
either the first ideal generator dividing the word or a mark that it
survives.

Note (-1)^(|a|^2) = (-1)^|a|; reports always use the reduced parity.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence

from .algebra import Element, FactorMonomial, Generator, TensorWord
from .errors import ArityError, GradedTensorError
from .ideals import MonomialIdeal, leading_word, power_word, reduce, slot_word
from .products import chain_product
from .scalars import QQ, Field

ORIGINAL = "original-first-part"
CORRECTED = "corrected-first-part"
SECOND = "second-part"
CLAIMS = (ORIGINAL, CORRECTED, SECOND)

CLAIM_ALIASES = {
    "original-first": ORIGINAL,
    "original": ORIGINAL,
    "corrected-first": CORRECTED,
    "corrected": CORRECTED,
    "second": SECOND,
}


class UnknownClaimError(GradedTensorError, ValueError):
    pass


def claim_id(name: str) -> str:
    if name in CLAIMS:
        return name
    try:
        return CLAIM_ALIASES[name]
    except KeyError:
        raise UnknownClaimError(f"unknown claim {name!r}; expected one of {', '.join(CLAIMS)}") from None


@dataclass(frozen=True)
class TermRecord:
    """One term ``(-1)^epsilon * word`` of an expanded zero-divisor product.

    ``indices`` is ``(j, i_1, ..., i_{n-1})`` for the second part and
    ``(i_1, ..., i_{n-1})`` otherwise. ``word`` is the formal word before odd
    squares are cancelled; ``vanishes`` says it is zero in the field.
    """

    indices: tuple[int, ...]
    epsilon: int
    word: TensorWord
    vanishes: bool
    absorbed_by: Optional[TensorWord]
    also_divisible_by: tuple[TensorWord, ...] = ()

    @property
    def parity(self) -> int:
        return self.epsilon % 2

    @property
    def sign(self) -> int:
        return -1 if self.epsilon % 2 else 1

    @property
    def survives(self) -> bool:
        return self.absorbed_by is None and not self.vanishes

    @property
    def classification(self) -> str:
        if self.absorbed_by is not None:
            return "absorbed_by:" + self.absorbed_by.to_text()
        return "vanishes" if self.vanishes else "survives"

    def as_element(self, field: Field) -> Element:
        if self.vanishes:
            return Element.zero(self.word.arity, field)
        return Element(self.word.arity, field, {self.word: self.sign})


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    n: int
    degrees: dict
    field: Field
    holds: bool
    residual: Element
    certificate: tuple[TermRecord, ...]
    lhs: Element
    rhs: Element
    ideal: MonomialIdeal
    notes: tuple[str, ...] = dc_field(default=())

    @property
    def survivors(self) -> list[TermRecord]:
        return [r for r in self.certificate if r.survives]


def _single(g: Generator) -> FactorMonomial:
    return FactorMonomial(((g, 1),))


def _product_monomial(a: Generator, b: Generator) -> FactorMonomial:
    return FactorMonomial(tuple(sorted([(a, 1), (b, 1)], key=lambda t: t[0].name)))


def claim_ideal(claim: str, a: Generator, n: int, b: Generator | None = None) -> MonomialIdeal:
    claim = claim_id(claim)
    square = power_word(a, 2, 1, n)
    if claim == ORIGINAL:
        return MonomialIdeal([square, leading_word(a, n - 1, n)], n)
    if claim == CORRECTED:
        return MonomialIdeal([square, leading_word(a, min(2, n), n)], n)
    if b is None:
        raise ValueError("the second-part claim needs a second generator")
    ba = _product_monomial(a, b)
    return MonomialIdeal([square, slot_word(n, [(1, ba)]), slot_word(n, [(2, ba)])], n)


def claim_rhs(claim: str, a: Generator, n: int, field: Field = QQ, b: Generator | None = None) -> Element:
    """Right-hand side, built word by word from the literal tensor notation."""
    claim = claim_id(claim)
    tail = [(k, _single(a)) for k in range(3, n + 1)]
    if claim in (ORIGINAL, CORRECTED):
        s = -1 if n % 2 else 1
        return Element(n, field, {
            slot_word(n, [(1, _single(a))] + tail): s,
            slot_word(n, [(2, _single(a))] + tail): -s,
        })
    if b is None:
        raise ValueError("the second-part claim needs a second generator")
    s = 1 if n % 2 else -1
    swap = -1 if (a.degree * b.degree) % 2 else 1
    return Element(n, field, {
        slot_word(n, [(1, _single(b)), (2, _single(a))] + tail): s,
        slot_word(n, [(1, _single(a)), (2, _single(b))] + tail): s * swap,
    })


def claim_lhs(claim: str, a: Generator, n: int, field: Field = QQ, b: Generator | None = None) -> Element:
    claim = claim_id(claim)
    if claim == SECOND:
        if b is None:
            raise ValueError("the second-part claim needs a second generator")
        return chain_product(a, n, field, prefix=b)
    return chain_product(a, n, field)


def _expansion_choices(a: Generator, n: int, b: Generator | None):
    """Per factor: list of (index, generator, slot, minus) choices in index order."""
    factors = []
    if b is not None:
        factors.append([(1, b, 1, False), (2, b, 2, True)])
    for k in range(1, n):
        factors.append([(1, a, 1, False), (k + 1, a, k + 1, True)])
    return factors


def _term(picks, n: int) -> tuple[int, TensorWord]:
    """Sign exponent and formal word of one product of positional classes.

    Bringing the factors into slot order (stable, then by name inside a slot)
    costs |u||v| for each pair that is out of order.
    """
    items = [(slot, g) for _, g, slot, _ in picks]
    epsilon = sum(1 for *_, minus in picks if minus)
    for p, q in itertools.combinations(range(len(items)), 2):
        (sp, gp), (sq, gq) = items[p], items[q]
        if (sp, gp.name) > (sq, gq.name):
            epsilon += gp.degree * gq.degree
    per_slot: list[dict[str, list]] = [dict() for _ in range(n)]
    for slot, g in items:
        entry = per_slot[slot - 1].setdefault(g.name, [g, 0])
        entry[1] += 1
    slots = tuple(
        FactorMonomial(tuple((g, e) for _, (g, e) in sorted(d.items()))) for d in per_slot
    )
    return epsilon, TensorWord(slots)


def certificate(claim: str, a: Generator, n: int, field: Field = QQ, b: Generator | None = None) -> list[TermRecord]:
    """Enumerate and classify every term of the claim's left-hand side.

    Records come in lexicographic order of their index tuples.
    """
    claim = claim_id(claim)
    if n < 2:
        raise ArityError(f"claims need n >= 2, got {n}")
    if claim == SECOND:
        _check_pair(a, b)
    ideal = claim_ideal(claim, a, n, b)
    records = []
    for picks in itertools.product(*_expansion_choices(a, n, b if claim == SECOND else None)):
        epsilon, word = _term(picks, n)
        divs = [ideal.generators[i] for i in ideal.divisors_of(word)]
        records.append(TermRecord(
            indices=tuple(p[0] for p in picks),
            epsilon=epsilon,
            word=word,
            vanishes=word.vanishes_in(field),
            absorbed_by=divs[0] if divs else None,
            also_divisible_by=tuple(divs[1:]),
        ))
    return records


def certificate_sum(records: Iterable[TermRecord], n: int, field: Field, survivors_only: bool = False) -> Element:
    """Signed sum of the records' words (all records, or survivors only)."""
    acc: dict[TensorWord, int] = {}
    for r in records:
        if r.vanishes or (survivors_only and not r.survives):
            continue
        acc[r.word] = acc.get(r.word, 0) + r.sign
    return Element(n, field, acc)


def _check_pair(a: Generator, b: Generator | None):
    if b is None:
        raise ValueError("the second-part claim needs a second generator b")
    if a.name == b.name:
        raise ValueError("the second-part claim needs two distinct generators a and b")


def _verify(claim: str, a: Generator, n: int, field: Field, b: Generator | None) -> VerificationReport:
    if n < 2:
        raise ArityError(f"claims need n >= 2, got {n}")
    lhs = claim_lhs(claim, a, n, field, b)
    rhs = claim_rhs(claim, a, n, field, b)
    ideal = claim_ideal(claim, a, n, b)
    residual = reduce(lhs - rhs, ideal)
    records = certificate(claim, a, n, field, b)
    notes = []
    for r in records:
        if r.also_divisible_by:
            others = ", ".join(g.to_text() for g in r.also_divisible_by)
            notes.append(f"term {r.indices} is also divisible by {others}")
    degrees = {a.name: a.degree}
    if b is not None:
        degrees[b.name] = b.degree
    return VerificationReport(
        claim=claim, n=n, degrees=degrees, field=field,
        holds=not residual, residual=residual, certificate=tuple(records),
        lhs=lhs, rhs=rhs, ideal=ideal, notes=tuple(notes),
    )


def check_original_first_part(a: Generator, n: int, field: Field = QQ) -> VerificationReport:
    return _verify(ORIGINAL, a, n, field, None)


def verify_corrected_first_part(a: Generator, n: int, field: Field = QQ) -> VerificationReport:
    return _verify(CORRECTED, a, n, field, None)


def verify_second_part(a: Generator, b: Generator, n: int, field: Field = QQ) -> VerificationReport:
    _check_pair(a, b)
    return _verify(SECOND, a, n, field, b)


def verify(claim: str, n: int, degrees: dict[str, int], field: Field = QQ) -> VerificationReport:
    """Verify a claim for generators named ``a`` (and ``b``) with the given degrees."""
    claim = claim_id(claim)
    if "a" not in degrees:
        raise ValueError("a degree for generator 'a' is required")
    a = Generator("a", degrees["a"])
    if claim == SECOND:
        if "b" not in degrees:
            raise ValueError("the second-part claim needs a degree for generator 'b'")
        return verify_second_part(a, Generator("b", degrees["b"]), n, field)
    if claim == CORRECTED:
        return verify_corrected_first_part(a, n, field)
    return check_original_first_part(a, n, field)


def residual_profile(a: Generator, n: int, field: Field = QQ) -> list[tuple[TensorWord, object]]:
    """Nonzero terms of the original first-part residual, in sorted word order."""
    return list(check_original_first_part(a, n, field).residual.items())


@dataclass(frozen=True)
class SweepCell:
    claim: str
    n: int
    degrees: tuple[tuple[str, int], ...]
    field: Field
    holds: bool
    residual_terms: int
    certificate_ok: bool

    @property
    def key(self):
        return (CLAIMS.index(self.claim), self.n, self.degrees, self.field.characteristic)


def check_certificate(report: VerificationReport) -> bool:
    """Records reassemble the unreduced left side; survivors reassemble its reduction."""
    n, f = report.n, report.field
    return (certificate_sum(report.certificate, n, f) == report.lhs
            and certificate_sum(report.certificate, n, f, survivors_only=True) == reduce(report.lhs, report.ideal))


def _run_cell(args) -> SweepCell:
    claim, n, degrees, field = args
    report = verify(claim, n, dict(degrees), field)
    return SweepCell(claim, n, degrees, field, report.holds, len(report.residual), check_certificate(report))


def sweep_cells(claims: Sequence[str], ns: Iterable[int], degree_choices: Sequence[int] = (1, 2),
                fields: Sequence[Field] = (QQ,)) -> list[tuple]:
    cells = []
    for claim in map(claim_id, claims):
        names = ("a", "b") if claim == SECOND else ("a",)
        for n in ns:
            for combo in itertools.product(degree_choices, repeat=len(names)):
                for f in fields:
                    cells.append((claim, n, tuple(zip(names, combo)), f))
    return cells


def sweep(claims: Sequence[str], ns: Iterable[int], degree_choices: Sequence[int] = (1, 2),
          fields: Sequence[Field] = (QQ,), jobs: int = 1) -> list[SweepCell]:
    """Verify every (claim, n, degrees, field) cell; results sorted by parameter key."""
    cells = sweep_cells(claims, list(ns), degree_choices, fields)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, cells))
    else:
        results = [_run_cell(c) for c in cells]
    return sorted(results, key=lambda c: c.key)
