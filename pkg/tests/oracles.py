"""Brute-force reference computations, independent of the engine's code paths.

Words here are plain tuples: one tuple of (name, exponent) pairs per slot,
names sorted. Coefficients are Python ints or Fractions reduced by hand.
"""

import itertools
from fractions import Fraction


def inversion_sign(seq):
    """Sign of sorting ``seq`` (a list of (name, degree)) stably by name.

    Computed from the inversion pairs of the sorting permutation: each pair
    of original positions whose relative order flips contributes deg*deg.
    """
    order = sorted(range(len(seq)), key=lambda i: (seq[i][0], i))
    final_pos = {orig: k for k, orig in enumerate(order)}
    exponent = 0
    for p in range(len(seq)):
        for q in range(p + 1, len(seq)):
            if final_pos[p] > final_pos[q]:
                exponent += seq[p][1] * seq[q][1]
    return -1 if exponent % 2 else 1


def plain_monomial(names):
    counts = {}
    for n in names:
        counts[n] = counts.get(n, 0) + 1
    return tuple(sorted(counts.items()))


def monomial_is_zero(mono, degrees, char):
    return char != 2 and any(e >= 2 and degrees[n] % 2 for n, e in mono)


def items_product(items, n, degrees, char):
    """Multiply the positional generators ``items`` = [(slot, name), ...] in order.

    Returns (sign, plain word) or (0, None) if the product vanishes.
    """
    order = sorted(range(len(items)), key=lambda i: (items[i][0], items[i][1], i))
    final_pos = {orig: k for k, orig in enumerate(order)}
    exponent = 0
    for p in range(len(items)):
        for q in range(p + 1, len(items)):
            if final_pos[p] > final_pos[q]:
                exponent += degrees[items[p][1]] * degrees[items[q][1]]
    word = tuple(plain_monomial([nm for s, nm in items if s == k]) for k in range(1, n + 1))
    if any(monomial_is_zero(m, degrees, char) for m in word):
        return 0, None
    return (-1 if exponent % 2 else 1), word


def word_items(word):
    return [(k + 1, name) for k, mono in enumerate(word) for name, e in mono for _ in range(e)]


def word_product(u, v, degrees, char):
    return items_product(word_items(u) + word_items(v), len(u), degrees, char)


def reduce_coeff(c, char):
    return c % char if char else Fraction(c)


def expand_chain(a, n, degrees, char, prefix=None):
    """Expand (b_1 - b_2)(a_1 - a_2)...(a_1 - a_n) term by term.

    Returns (dict word -> coefficient, number of index tuples visited).
    """
    factors = []
    if prefix is not None:
        factors.append([((1, prefix), 1), ((2, prefix), -1)])
    for k in range(2, n + 1):
        factors.append([((1, a), 1), ((k, a), -1)])
    out = {}
    visited = 0
    for picks in itertools.product(*factors):
        visited += 1
        coeff = 1
        for _, s in picks:
            coeff *= s
        sign, word = items_product([p for p, _ in picks], n, degrees, char)
        if word is None:
            continue
        out[word] = out.get(word, 0) + coeff * sign
    out = {w: reduce_coeff(c, char) for w, c in out.items()}
    return {w: c for w, c in out.items() if c}, visited


def plain_divides(g, w):
    for gs, ws in zip(g, w):
        wd = dict(ws)
        if any(wd.get(name, 0) < e for name, e in gs):
            return False
    return True


def element_to_plain(x):
    """Engine Element -> dict plain word -> int/Fraction."""
    out = {}
    for w, c in x.terms.items():
        word = tuple(tuple((g.name, e) for g, e in m.factors) for m in w.slots)
        out[word] = c.value
    return out


def word_to_plain(w):
    return tuple(tuple((g.name, e) for g, e in m.factors) for m in w.slots)


def monomials_up_to(degrees, max_deg, char):
    """All plain slot monomials of degree <= max_deg."""
    names = sorted(degrees)
    result = []

    def rec(i, current, deg):
        if i == len(names):
            mono = tuple(current)
            if not monomial_is_zero(mono, degrees, char):
                result.append((mono, deg))
            return
        name = names[i]
        e = 0
        while deg + e * degrees[name] <= max_deg:
            rec(i + 1, current + ([(name, e)] if e else []), deg + e * degrees[name])
            e += 1
            if degrees[name] == 0:
                break
    rec(0, [], 0)
    return result


def words_up_to(degrees, n, max_deg, char):
    """All nonzero plain words of arity n and total degree <= max_deg, with their degrees."""
    monos = monomials_up_to(degrees, max_deg, char)
    out = []
    for combo in itertools.product(monos, repeat=n):
        d = sum(m[1] for m in combo)
        if d <= max_deg:
            out.append((tuple(m[0] for m in combo), d))
    return out


def word_degree(w, degrees):
    return sum(degrees[name] * e for m in w for name, e in m)


class Span:
    """Row-echelon span of sparse vectors (dict key -> coefficient) over Q or F_p."""

    def __init__(self, char):
        self.char = char
        self.rows = {}  # pivot key -> row with coefficient 1 at pivot

    def _norm(self, c):
        return c % self.char if self.char else c

    def _inv(self, c):
        return pow(c, -1, self.char) if self.char else 1 / Fraction(c)

    def reduce(self, vec):
        vec = {k: self._norm(v) for k, v in vec.items() if self._norm(v)}
        changed = True
        while changed:
            changed = False
            for k in sorted(vec):
                if k in self.rows:
                    c = vec[k]
                    for rk, rv in self.rows[k].items():
                        nv = self._norm(vec.get(rk, 0) - c * rv)
                        if nv:
                            vec[rk] = nv
                        else:
                            vec.pop(rk, None)
                    changed = True
                    break
        return vec

    def add(self, vec):
        if len(vec) == 1:
            (k, c), = vec.items()
            if self._norm(c) and self.rows.get(k) == {k: 1}:
                return False
        vec = self.reduce(vec)
        if not vec:
            return False
        pivot = min(vec)
        inv = self._inv(vec[pivot])
        row = {k: self._norm(v * inv) for k, v in vec.items()}
        # keep rows fully reduced against the new pivot
        for pk, r in self.rows.items():
            if pivot in r:
                c = r[pivot]
                for rk, rv in row.items():
                    nv = self._norm(r.get(rk, 0) - c * rv)
                    if nv:
                        r[rk] = nv
                    else:
                        r.pop(rk, None)
        self.rows[pivot] = row
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def coordinate_keys(self):
        """Pivot set if every row is a unit vector (a coordinate subspace), else None."""
        if all(row == {k: 1} for k, row in self.rows.items()):
            return frozenset(self.rows)
        return None

    def copy(self):
        s = Span(self.char)
        s.rows = {k: dict(v) for k, v in self.rows.items()}
        return s


def ideal_products(g, degrees, n, max_deg, char, words=None):
    """All nonzero products u*g*v of total degree <= max_deg, as signed sparse vectors."""
    if words is None:
        words = words_up_to(degrees, n, max_deg, char)
    dg = word_degree(g, degrees)
    vecs = []
    for u, du in words:
        if du + dg > max_deg:
            continue
        su, ug = word_product(u, g, degrees, char)
        if ug is None:
            continue
        for v, dv in words:
            if du + dg + dv > max_deg:
                continue
            sv, ugv = word_product(ug, v, degrees, char)
            if ugv is None:
                continue
            vecs.append({ugv: su * sv})
    return vecs


def generator_span(g, degrees, n, max_deg, char, words=None):
    span = Span(char)
    g_zero = any(monomial_is_zero(m, degrees, char) for m in g)
    if not g_zero:
        for vec in ideal_products(g, degrees, n, max_deg, char, words):
            span.add(vec)
    return span


def span_member(word, gens, degrees, n, max_deg, char):
    """Is ``word`` in the linear span of all products u*g*v (g in gens) of degree <= max_deg?"""
    span = Span(char)
    words = words_up_to(degrees, n, max_deg, char)
    for g in gens:
        if any(monomial_is_zero(m, degrees, char) for m in g):
            continue
        for vec in ideal_products(g, degrees, n, max_deg, char, words):
            span.add(vec)
    return span.contains({word: 1})


def _slot(name, e=1):
    return ((name, e),)


def claim_setup(claim, n, degrees):
    """Plain ideal generators and right-hand side (dict word -> int) for a claim."""
    unit = ()
    tail = [_slot("a")] * (n - 2)
    square = (_slot("a", 2),) + (unit,) * (n - 1)
    if claim == "second-part":
        ab = tuple(sorted([("a", 1), ("b", 1)]))
        gens = [square, (ab,) + (unit,) * (n - 1), (unit, ab) + (unit,) * (n - 2)]
        s = (-1) ** (n + 1)
        rhs = {
            tuple([_slot("b"), _slot("a")] + tail): s,
            tuple([_slot("a"), _slot("b")] + tail): s * (-1) ** (degrees["a"] * degrees["b"]),
        }
        return gens, rhs
    count = n - 1 if claim == "original-first-part" else 2
    lead = tuple([_slot("a")] * count + [unit] * (n - count))
    s = (-1) ** n
    rhs = {tuple([_slot("a"), unit] + tail): s, tuple([unit, _slot("a")] + tail): -s}
    return [square, lead], rhs


def oracle_claim(claim, n, degrees, char):
    """Brute-force residual and term classification for a claim.

    Returns (residual dict, records) with records as
    (indices, sign, word or None, index of first dividing generator or None).
    """
    gens, rhs = claim_setup(claim, n, degrees)
    prefix = "b" if claim == "second-part" else None
    lhs, _ = expand_chain("a", n, degrees, char, prefix)
    diff = dict(lhs)
    for w, c in rhs.items():
        diff[w] = reduce_coeff(diff.get(w, 0) - c, char)
    residual = {w: c for w, c in diff.items() if c and not any(plain_divides(g, w) for g in gens)}

    factors = []
    if prefix:
        factors.append([(1, (1, "b"), 1), (2, (2, "b"), -1)])
    for k in range(2, n + 1):
        factors.append([(1, (1, "a"), 1), (k, (k, "a"), -1)])
    records = []
    for picks in itertools.product(*factors):
        sign = 1
        for *_, s in picks:
            sign *= s
        items = [p[1] for p in picks]
        # formal word: no odd-square cancellation (char 2 rules)
        ksign, word = items_product(items, n, degrees, 2)
        vanishes = any(monomial_is_zero(m, degrees, char) for m in word)
        divs = [i for i, g in enumerate(gens) if plain_divides(g, word)]
        records.append((tuple(p[0] for p in picks), sign * ksign, word, vanishes, divs[0] if divs else None))
    return residual, records
