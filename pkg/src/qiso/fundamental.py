"""The fundamental unitary and relation generation from the action.

The acted algebra has one basis letter per element of the symmetric
generating set; the action sends the letter x to the sum over letters y
of (basis y) tensor entry(x, y).  Entries are single canonical
NC-letters; the star-symmetry of the layout makes the row of an inverse
letter the starred, column-swapped copy of its partner's row.

Relations produced here (all asserted = 0):

* unitarity of U and its transpose, all four families;
* row identifications for involutive letters (x = x^-1 forces
  entry(x, q^-1) = entry(x, q)*);
* relator relations: the expansion of a relator, or of a pair x x^-1,
  equals the expansion of the empty word;
* coefficient comparisons of two expansions of the same element;
* length-preservation: keys of the wrong length have zero coefficient.
"""

from dataclasses import dataclass, field

from .ncalgebra import NCPoly, LetterAlgebra, QQi, ONE


class SoundnessError(RuntimeError):
    """A comparison was requested for words that are not known equal."""


@dataclass
class FundamentalUnitary:
    sgs: object                  # SymGenSet or None for seeded algebras
    alg: LetterAlgebra

    @property
    def size(self):
        return self.alg.size

    def entry(self, p, q):
        return self.alg.canon((p, q, False))

    def entry_poly(self, p, q):
        return NCPoly.letter(self.alg, self.entry(p, q))


@dataclass
class QisoPresentation:
    unitary: FundamentalUnitary
    seed_relations: list = field(default_factory=list)  # (NCPoly, provenance)

    @property
    def alg(self):
        return self.unitary.alg


def unitarity_relations(fu):
    """All four unitarity families for U and its transpose."""
    alg = fu.alg
    m = fu.size
    out = []
    fams = {
        "UU*": lambda p, q, r: (fu.entry(p, r), fu.entry(q, r), False, True),
        "U*U": lambda p, q, r: (fu.entry(r, p), fu.entry(r, q), True, False),
        "UtUt*": lambda p, q, r: (fu.entry(r, p), fu.entry(r, q), False, True),
        "Ut*Ut": lambda p, q, r: (fu.entry(p, r), fu.entry(q, r), True, False),
    }
    for fam, pick in fams.items():
        for p in range(m):
            for q in range(m):
                poly = NCPoly.zero(alg)
                for r in range(m):
                    l1, l2, s1, s2 = pick(p, q, r)
                    a = NCPoly.letter(alg, alg.star(l1) if s1 else l1)
                    b = NCPoly.letter(alg, alg.star(l2) if s2 else l2)
                    poly = poly + a * b
                if p == q:
                    poly = poly - NCPoly.one(alg)
                out.append((poly, f"unitarity({fam},{p + 1},{q + 1})"))
    return out


def involution_row_relations(fu):
    """entry(r, inv(q)) = entry(r, q)* for involutive rows r."""
    alg = fu.alg
    out = []
    for r in range(fu.size):
        if alg.inv[r] != r:
            continue
        for q in range(fu.size):
            qi = alg.inv[q]
            if qi < q:
                continue
            lhs = NCPoly.letter(alg, fu.entry(r, qi))
            rhs = NCPoly.letter(alg, alg.star(fu.entry(r, q)))
            poly = lhs - rhs
            if not poly.is_zero():
                out.append((poly, f"row-involution({r + 1},{q + 1})"))
    return out


def act_on_word(fu, model, seq):
    """Expand the action over a letter-index sequence.

    Returns {key: NCPoly}; keys are collected through the model, so
    group relations are applied silently.  The empty sequence gives the
    unit's expansion.
    """
    alg = fu.alg
    if hasattr(model, "unit_expansion"):
        cur = {k: NCPoly.one(alg).scale(QQi(c)) for k, c in model.unit_expansion()}
    else:
        cur = {model.identity(): NCPoly.one(alg)}
    for x in seq:
        new = {}
        for key, poly in cur.items():
            for y in range(fu.size):
                contrib = poly * fu.entry_poly(x, y)
                if contrib.is_zero():
                    continue
                for key2, c in model.mult(key, y):
                    term = contrib if c == 1 else contrib.scale(QQi(c))
                    if key2 in new:
                        new[key2] = new[key2] + term
                    else:
                        new[key2] = term
        cur = {k: v for k, v in new.items() if not v.is_zero()}
    return cur


def expand_sum(fu, model, words):
    """Sum of act_on_word over several words (or the unit for "UNIT")."""
    alg = fu.alg
    if words == "UNIT":
        if hasattr(model, "unit_expansion"):
            return {k: NCPoly.one(alg).scale(QQi(c))
                    for k, c in model.unit_expansion()}
        return {model.identity(): NCPoly.one(alg)}
    total = {}
    for w in words:
        for k, v in act_on_word(fu, model, w).items():
            total[k] = total.get(k, NCPoly.zero(alg)) + v
    return {k: v for k, v in total.items() if not v.is_zero()}


def _side_value(model, words):
    """Model value of a sum of words, as a key -> int multiplicity map."""
    if words == "UNIT":
        if hasattr(model, "unit_expansion"):
            return dict(model.unit_expansion())
        return {model.identity(): 1}
    val = {}
    for w in words:
        for k, c in model.reduce(tuple(w)):
            val[k] = val.get(k, 0) + c
    return {k: c for k, c in val.items() if c}


def compare_expansions(fu, model, lhs_words, rhs_words):
    """Per-key differences of two expansions of the same element.

    Refuses (SoundnessError) unless the model certifies the two sides
    are the same element of the acted algebra.
    """
    if _side_value(model, lhs_words) != _side_value(model, rhs_words):
        raise SoundnessError("compared words are not equal in the base")
    left = expand_sum(fu, model, lhs_words)
    right = expand_sum(fu, model, rhs_words)
    alg = fu.alg
    out = []
    for key in sorted(set(left) | set(right), key=model.sort_key):
        diff = left.get(key, NCPoly.zero(alg)) - right.get(key, NCPoly.zero(alg))
        if not diff.is_zero():
            out.append((key, diff))
    return out


def relator_relations_for(fu, model, seq):
    """act(seq) must equal the unit's expansion (seq = e in the base)."""
    return compare_expansions(fu, model, [tuple(seq)], "UNIT")


def zero_word_relations(fu, model, seq):
    """act(seq) must vanish identically (seq = 0 in the base algebra)."""
    if _side_value(model, [tuple(seq)]):
        raise SoundnessError("word is not zero in the base algebra")
    exp = act_on_word(fu, model, tuple(seq))
    return [(k, v) for k, v in sorted(exp.items(), key=lambda kv: model.sort_key(kv[0]))
            if not v.is_zero()]


def length_preserving_relations(fu, model, seq):
    """Keys of length != l(word) get coefficient zero."""
    (key0, _), = model.reduce(tuple(seq))
    r = model.length(key0)
    exp = act_on_word(fu, model, tuple(seq))
    out = []
    for key in sorted(exp, key=model.sort_key):
        if model.length(key) != r:
            out.append((key, exp[key]))
    return out
