"""Text and JSON renderings of elements, reports and certificates."""

from __future__ import annotations

import json

from ..algebra import Element, TensorWord, format_element
from ..lemmas import TermRecord, VerificationReport

ASCII_SEP = "(x)"
UTF8_SEP = "⊗"


def to_text(x: Element, utf8: bool = False) -> str:
    return format_element(x, UTF8_SEP if utf8 else ASCII_SEP)


def word_slots(w: TensorWord) -> list:
    return [[[g.name, e] for g, e in m.factors] for m in w.slots]


def coeff_string(c) -> str:
    return str(c)


def element_structured(x: Element) -> dict:
    return {
        "arity": x.arity,
        "field": str(x.field),
        "terms": [{"coeff": coeff_string(c), "slots": word_slots(w)} for w, c in x.items()],
    }


def record_structured(r: TermRecord) -> dict:
    return {
        "indices": list(r.indices),
        "epsilon": r.epsilon,
        "parity": r.parity,
        "word": word_slots(r.word),
        "vanishes": r.vanishes,
        "class": r.classification,
        "also_divisible_by": [w.to_text() for w in r.also_divisible_by],
    }


def report_structured(rep: VerificationReport) -> dict:
    out = element_structured(rep.residual)
    out.update({
        "claim": rep.claim,
        "n": rep.n,
        "degrees": dict(sorted(rep.degrees.items())),
        "holds": rep.holds,
        "residual": element_structured(rep.residual),
        "ideal": [g.to_text() for g in rep.ideal.generators],
        "certificate": [record_structured(r) for r in rep.certificate],
        "notes": list(rep.notes),
    })
    return out


def to_structured(obj) -> dict:
    if isinstance(obj, VerificationReport):
        return report_structured(obj)
    if isinstance(obj, Element):
        return element_structured(obj)
    if isinstance(obj, TermRecord):
        return record_structured(obj)
    raise TypeError(f"no structured form for {type(obj).__name__}")


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def record_line(r: TermRecord, utf8: bool = False) -> str:
    sep = UTF8_SEP if utf8 else ASCII_SEP
    sign = "-" if r.parity else "+"
    idx = "(" + ",".join(map(str, r.indices)) + ")"
    status = r.classification
    if r.vanishes:
        status += " [zero in field]"
    return f"{idx:<24} eps={r.epsilon:<4} {sign} {r.word.to_text(sep):<32} {status}"
