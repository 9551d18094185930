"""Group presentations, their DSL, and symmetric generating sets.

A presentation is given in a small text format::

    group BS { gens a:0, b:0; rels b^-1 a b = a^2; }
    group Cox { gens a:2, b:2, c:2; rels (a c)^2 = e; (a b)^3 = e; (b c)^5 = e; }
    group ZxZ { gens a:0, b:0; direct; }

Orders are integers >= 2, with 0 denoting infinite order.  Words are
whitespace-separated atoms ``sym``, ``sym^k`` (any integer k) or
``(word)^k``; ``e`` is the empty word.  A ``direct;`` flag adds all
pairwise commutators as relators.  Relators are stored as single freely
reduced words equal to the identity (``u = v`` becomes ``u v^-1``).

Free-group words are sequences of letters ``(gen_index, sign)`` with
sign +1 or -1.  The symmetric generating set lists one letter per
involution (order-2 generator) and a letter/inverse pair otherwise, in
declaration order with each generator before its inverse.
"""

import re
from dataclasses import dataclass, field


class PresentationError(ValueError):
    """Malformed presentation text or invalid presentation data."""


# ---------------------------------------------------------------------------
# free-group words: tuples of (gen_index, sign)


def free_reduce(word):
    """Cancel adjacent letter/inverse pairs; returns a tuple."""
    out = []
    for g, s in word:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def invert_word(word):
    return tuple((g, -s) for g, s in reversed(word))


@dataclass(frozen=True)
class GroupPresentation:
    name: str
    generators: tuple  # ((symbol, order), ...), order 0 = infinite
    relators: tuple = ()  # freely reduced words, each = identity

    def __post_init__(self):
        syms = [s for s, _ in self.generators]
        if len(set(syms)) != len(syms):
            raise PresentationError("duplicate generator symbol")
        for s, n in self.generators:
            if n != 0 and n < 2:
                raise PresentationError(f"generator {s} has order {n} < 2")
        for r in self.relators:
            if free_reduce(r) != tuple(r):
                raise PresentationError("relator is not freely reduced")
            for g, _ in r:
                if not 0 <= g < len(self.generators):
                    raise PresentationError("relator uses undeclared symbol")

    @property
    def symbols(self):
        return tuple(s for s, _ in self.generators)

    def order_of(self, i):
        return self.generators[i][1]

    def word_str(self, word):
        if not word:
            return "e"
        parts = []
        for g, s in word:
            parts.append(self.symbols[g] if s == 1 else self.symbols[g] + "^-1")
        return " ".join(parts)

    def to_dsl(self):
        gens = ", ".join(f"{s}:{n}" for s, n in self.generators)
        out = f"group {self.name} {{ gens {gens};"
        if self.relators:
            rels = "; ".join(f"{self.word_str(r)} = e" for r in self.relators)
            out += f" rels {rels};"
        return out + " }"


@dataclass(frozen=True)
class SymGenSet:
    """Symmetric generating set: letters indexed 0..m-1.

    ``letters[i]`` is a free-group letter (gen, sign); involutions occur
    once, other generators contribute the pair (g,+1), (g,-1) in order.
    ``inv`` maps a letter index to the index of its inverse and
    ``positive`` marks the chosen representative of each inverse pair.
    """

    presentation: GroupPresentation
    letters: tuple
    inv: tuple
    positive: tuple

    @property
    def size(self):
        return len(self.letters)

    def letter_str(self, i):
        return self.presentation.word_str((self.letters[i],))

    def index_of(self, gen, sign):
        if self.presentation.order_of(gen) == 2:
            sign = 1
        return self.letters.index((gen, sign))

    def word_to_indices(self, word):
        """Free-group word -> tuple of letter indices (orders folded)."""
        return tuple(self.index_of(g, s) for g, s in word)

    def indices_to_word(self, idxs):
        return tuple(self.letters[i] for i in idxs)


def symmetric_generating_set(p):
    letters, inv, positive = [], [], []
    for g, (_, order) in enumerate(p.generators):
        if order == 2:
            i = len(letters)
            letters.append((g, 1))
            inv.append(i)
            positive.append(True)
        else:
            i = len(letters)
            letters.extend([(g, 1), (g, -1)])
            inv.extend([i + 1, i])
            positive.extend([True, False])
    return SymGenSet(p, tuple(letters), tuple(inv), tuple(positive))


# ---------------------------------------------------------------------------
# DSL parser

_TOKEN = re.compile(
    r"\s*(?:(?P<lbrace>\{)|(?P<rbrace>\})|(?P<semi>;)|(?P<comma>,)|(?P<colon>:)"
    r"|(?P<eq>=)|(?P<lparen>\()|(?P<rparen>\))|(?P<pow>\^-?\d+)"
    r"|(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*))"
)


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise PresentationError(f"syntax error at offset {pos}: {text[pos:pos+12]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind), pos))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind, what=None):
        k, v, pos = self.toks[self.i]
        if k != kind:
            raise PresentationError(f"expected {what or kind} at offset {pos}, got {v!r}")
        self.i += 1
        return v

    def parse(self):
        if self.take("name") != "group":
            raise PresentationError("presentation must start with 'group'")
        name = self.take("name", "group name")
        self.take("lbrace")
        if self.take("name") != "gens":
            raise PresentationError("expected 'gens' section")
        gens = self._gens()
        rel_words, direct = [], False
        while self.peek()[0] == "name":
            kw = self.take("name")
            if kw == "rels":
                rel_words.extend(self._rels(gens))
            elif kw == "direct":
                self.take("semi")
                direct = True
            else:
                raise PresentationError(f"unknown section {kw!r}")
        self.take("rbrace")
        self.take("eof")
        if direct:
            for a in range(len(gens)):
                for b in range(a + 1, len(gens)):
                    rel_words.append(
                        free_reduce(((a, 1), (b, 1), (a, -1), (b, -1))))
        relators = tuple(r for r in (free_reduce(w) for w in rel_words) if r)
        return GroupPresentation(name, tuple(gens), relators)

    def _gens(self):
        gens = []
        while True:
            sym = self.take("name", "generator symbol")
            if sym == "e":
                raise PresentationError("'e' is reserved for the identity")
            self.take("colon")
            order = int(self.take("int", "generator order"))
            if order < 0:
                raise PresentationError("negative generator order")
            gens.append((sym, order))
            k = self.peek()[0]
            if k == "comma":
                self.take("comma")
                continue
            self.take("semi")
            return gens

    def _rels(self, gens):
        words = []
        while True:
            lhs = self._word(gens)
            self.take("eq")
            rhs = self._word(gens)
            words.append(free_reduce(lhs + invert_word(rhs)))
            self.take("semi")
            nk, nv, _ = self.peek()
            if nk == "lparen":
                continue
            if nk != "name" or nv in ("rels", "direct"):
                return words
            # bare word => another relation in the same section

    def _word(self, gens):
        symtab = {s: i for i, (s, _) in enumerate(gens)}
        out = []
        while True:
            k, v, pos = self.peek()
            if k == "name":
                if v == "e":
                    self.i += 1
                else:
                    if v not in symtab:
                        raise PresentationError(f"undeclared symbol {v!r} at offset {pos}")
                    self.i += 1
                    e = 1
                    if self.peek()[0] == "pow":
                        e = int(self.take("pow")[1:])
                    out.extend(self._power(((symtab[v], 1),), e))
            elif k == "lparen":
                self.i += 1
                inner = self._word(gens)
                self.take("rparen")
                e = 1
                if self.peek()[0] == "pow":
                    e = int(self.take("pow")[1:])
                out.extend(self._power(tuple(inner), e))
            else:
                return tuple(out)

    @staticmethod
    def _power(word, e):
        if e < 0:
            word, e = invert_word(word), -e
        return word * e


def parse_presentation(text):
    """Parse DSL text into a validated GroupPresentation."""
    return _Parser(text).parse()


def parse_word_raw(p, text):
    """Parse a standalone word over presentation p, without free reduction."""
    parser = _Parser(text)
    word = parser._word([(s, 0) for s in p.symbols])
    if parser.peek()[0] != "eof":
        k, v, pos = parser.peek()
        raise PresentationError(f"trailing input in word at offset {pos}: {v!r}")
    return tuple(word)


def parse_word(p, text):
    """Parse a standalone word over presentation p; returns a free word."""
    return free_reduce(parse_word_raw(p, text))
