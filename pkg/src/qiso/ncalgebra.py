"""Exact noncommutative *-polynomials on fundamental-unitary letters.

A letter is ``(row, col, star)`` with row/col indices into the symmetric
generating set.  Letters are canonical when the row is a positive
representative; the layout law

    entry(inv(p), q) = entry(p, inv(q))*

rewrites any non-canonical letter exactly once.  Monomials are tuples of
canonical letters, polynomials are finitely supported maps from
monomials to Gaussian rationals.  The star reverses and stars letters
and conjugates coefficients; the antipode reverses and maps a letter
(r,c) to (c,r)* (linear in coefficients, Kac convention).

``simplify`` reduces polynomials against a fact view: letter-level
substitutions (self-adjointness and row-involution identifications),
canonical sorting of adjacent commuting letters, deletion of monomials
containing a known-zero factor up to a bounded number of commuting
swaps, and oriented equality rewrites applied to a fixed point under a
step budget.
"""

from fractions import Fraction


class QQi:
    """Gaussian rational a + b i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, o):
        return QQi(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return QQi(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __mul__(self, o):
        return QQi(self.re * o.re - self.im * o.im,
                   self.re * o.im + self.im * o.re)

    def conj(self):
        return QQi(self.re, -self.im)

    def __eq__(self, o):
        return isinstance(o, QQi) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def is_positive_rational(self):
        return self.im == 0 and self.re > 0

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i)"


ONE = QQi(1)
MINUS_ONE = QQi(-1)


def qqi(x):
    if isinstance(x, QQi):
        return x
    return QQi(x)


class LetterAlgebra:
    """Canonicalization, star and antipode on letters; printing."""

    def __init__(self, size, inv, aliases=None):
        self.size = size
        self.inv = tuple(inv)
        self.positive = tuple(i <= self.inv[i] for i in range(size))
        self.aliases = dict(aliases or {})       # (row, col) -> name
        self._rev = {v: k for k, v in self.aliases.items()}

    def canon(self, letter):
        r, c, s = letter
        if self.positive[r]:
            return letter
        return (self.inv[r], self.inv[c], not s)

    def star(self, letter):
        r, c, s = letter
        return self.canon((r, c, not s))

    def antipode(self, letter):
        r, c, s = letter
        return self.canon((c, r, not s))

    def sort_key(self, letter):
        return letter[0], letter[1], letter[2]

    def letter_str(self, letter):
        r, c, s = letter
        name = self.aliases.get((r, c))
        if name is None:
            name = f"u[{r + 1},{c + 1}]"
        return name + ("*" if s else "")

    def mon_str(self, mon):
        if not mon:
            return "1"
        return " ".join(self.letter_str(l) for l in mon)

    def poly_str(self, poly):
        if not poly.terms:
            return "0"
        parts = []
        for mon in sorted(poly.terms, key=self.mon_sort_key):
            c = poly.terms[mon]
            cs = repr(c)
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(self.mon_str(mon))
            elif cs == "-1":
                parts.append("- " + self.mon_str(mon))
            else:
                parts.append(f"{cs} {self.mon_str(mon)}")
        return " + ".join(parts).replace("+ -", "- ")

    def mon_sort_key(self, mon):
        return (len(mon), tuple(self.sort_key(l) for l in mon))

    def parse_letter(self, tok):
        star = tok.endswith("*")
        if star:
            tok = tok[:-1]
        if tok in self._rev:
            r, c = self._rev[tok]
        elif tok.startswith("u["):
            r, c = (int(x) - 1 for x in tok[2:-1].split(","))
        else:
            raise ValueError(f"unknown letter {tok!r}")
        return self.canon((r, c, star))

    def parse_monomial(self, text):
        """Space-separated letters, each optionally ^k; '1' is empty."""
        out = []
        for tok in text.split():
            if tok == "1":
                continue
            k = 1
            if "^" in tok:
                tok, ks = tok.split("^")
                k = int(ks)
            out.extend([self.parse_letter(tok)] * k)
        return tuple(out)


class NCPoly:
    """Finitely supported map monomial -> QQi over a LetterAlgebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {}
        for mon, c in (terms or {}).items():
            c = qqi(c)
            if c:
                self.terms[tuple(mon)] = c

    @classmethod
    def zero(cls, alg):
        return cls(alg)

    @classmethod
    def one(cls, alg):
        return cls(alg, {(): ONE})

    @classmethod
    def letter(cls, alg, letter, coeff=ONE):
        return cls(alg, {(alg.canon(letter),): qqi(coeff)})

    @classmethod
    def monomial(cls, alg, mon, coeff=ONE):
        return cls(alg, {tuple(alg.canon(l) for l in mon): qqi(coeff)})

    def is_zero(self):
        return not self.terms

    def __add__(self, o):
        out = dict(self.terms)
        for m, c in o.terms.items():
            c2 = out.get(m, QQi()) + c
            if c2:
                out[m] = c2
            else:
                out.pop(m, None)
        return NCPoly(self.alg, out)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return NCPoly(self.alg, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = qqi(c)
        return NCPoly(self.alg, {m: x * c for m, x in self.terms.items()})

    def __mul__(self, o):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = m1 + m2
                c = out.get(m, QQi()) + c1 * c2
                if c:
                    out[m] = c
                else:
                    out.pop(m, None)
        return NCPoly(self.alg, out)

    def star(self):
        alg = self.alg
        out = {}
        for m, c in self.terms.items():
            m2 = tuple(alg.star(l) for l in reversed(m))
            out[m2] = out.get(m2, QQi()) + c.conj()
        return NCPoly(alg, {m: c for m, c in out.items() if c})

    def antipode(self):
        alg = self.alg
        out = {}
        for m, c in self.terms.items():
            m2 = tuple(alg.antipode(l) for l in reversed(m))
            out[m2] = out.get(m2, QQi()) + c
        return NCPoly(alg, {m: c for m, c in out.items() if c})

    def __eq__(self, o):
        return isinstance(o, NCPoly) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return self.alg.poly_str(self)


# ---------------------------------------------------------------------------
# simplification


class FactView:
    """What simplify needs to know; the derivation engine subclasses this."""

    def __init__(self, alg):
        self.alg = alg
        self.zero_monomials = set()       # canonical sorted monomials
        self.zero_maxlen = 0
        self.commuting = set()            # frozensets {l1, l2}
        self.letter_subst = {}            # letter -> letter (oriented)
        self.equalities = {}              # lhs monomial -> NCPoly rhs

    def commutes(self, a, b):
        return a == b or frozenset((a, b)) in self.commuting

    def subst_letter(self, letter):
        seen = set()
        while letter in self.letter_subst:
            if letter in seen:
                break
            seen.add(letter)
            letter = self.letter_subst[letter]
        return letter


def sort_commuting(alg, facts, mon):
    """Bubble adjacent known-commuting letters into canonical order."""
    w = list(mon)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if alg.sort_key(b) < alg.sort_key(a) and facts.commutes(a, b):
                w[i], w[i + 1] = b, a
                changed = True
    return tuple(w)


def _subword_in_zeros(alg, facts, w):
    if not facts.zero_monomials:
        return False
    n = len(w)
    for ln in range(1, min(n, facts.zero_maxlen) + 1):
        for i in range(n - ln + 1):
            sub = w[i:i + ln]
            if sub in facts.zero_monomials:
                return True
            if sort_commuting(alg, facts, sub) in facts.zero_monomials:
                return True
    return False


def monomial_is_zero(alg, facts, mon, swap_budget=None, cap=600):
    """Zero-subword detection up to 2*len adjacent commuting swaps."""
    if not facts.zero_monomials:
        return False
    if swap_budget is None:
        swap_budget = 2 * len(mon)
    if _subword_in_zeros(alg, facts, mon):
        return True
    seen = {mon}
    frontier = [mon]
    for _ in range(swap_budget):
        nxt = []
        for w in frontier:
            for i in range(len(w) - 1):
                a, b = w[i], w[i + 1]
                if a != b and facts.commutes(a, b):
                    w2 = w[:i] + (b, a) + w[i + 2:]
                    if w2 in seen:
                        continue
                    if _subword_in_zeros(alg, facts, w2):
                        return True
                    seen.add(w2)
                    nxt.append(w2)
                    if len(seen) > cap:
                        return False
        if not nxt:
            return False
        frontier = nxt
    return False


def _find_rewrite(facts, mon):
    """Leftmost position, longest lhs; returns (i, lhs) or None."""
    if not facts.equalities:
        return None
    n = len(mon)
    best = None
    for lhs in facts.equalities:
        k = len(lhs)
        if k > n:
            continue
        for i in range(n - k + 1):
            if mon[i:i + k] == lhs:
                if best is None or i < best[0] or (i == best[0] and k > len(best[1])):
                    best = (i, lhs)
                break
    return best


def simplify(poly, facts, max_steps=50_000):
    """Reduce a polynomial against the fact view.

    Returns (poly, complete_flag); the flag is False when the step
    budget ran out and the result is only partially simplified.
    """
    alg = poly.alg
    out = {}
    work = list(poly.terms.items())
    steps = 0
    ok = True
    while work:
        mon, coeff = work.pop()
        steps += 1
        if steps > max_steps:
            ok = False
            c = out.get(mon, QQi()) + coeff
            if c:
                out[mon] = c
            else:
                out.pop(mon, None)
            continue
        mon = tuple(facts.subst_letter(alg.canon(l)) for l in mon)
        mon = sort_commuting(alg, facts, mon)
        if monomial_is_zero(alg, facts, mon):
            continue
        hit = _find_rewrite(facts, mon)
        if hit is None:
            c = out.get(mon, QQi()) + coeff
            if c:
                out[mon] = c
            else:
                out.pop(mon, None)
            continue
        i, lhs = hit
        rhs = facts.equalities[lhs]
        for rmon, rc in rhs.terms.items():
            work.append((mon[:i] + rmon + mon[i + len(lhs):], coeff * rc))
    return NCPoly(alg, out), ok
