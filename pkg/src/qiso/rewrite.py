"""Shortlex Knuth-Bendix rewriting for the word problem and word metric.

Words are tuples of letter indices into a symmetric generating set; the
order is shortlex with precedence = declaration order, each generator
before its inverse.  Rules are oriented pairs lhs -> rhs with
lhs > rhs, so rewriting never increases length and, for a confluent
system, the normal form of an element is its shortlex-least (hence
geodesic) representative.

Completion is budgeted; exhausting the budget yields an Incomplete
system that still supports witness-checked or bounded-search equality
but refuses normal forms and balls.
"""

import json
from dataclasses import dataclass, field


class RewriteUnsupported(RuntimeError):
    """Operation requires a confluent system."""


class WordProblemUndecided(RuntimeError):
    """Equality not decided within the search budget."""


DEFAULT_BUDGET = {"max_rules": 5000, "max_len": 32, "max_steps": 1_000_000}


def shortlex_key(w):
    return (len(w), w)


def _orient(a, b):
    return (a, b) if shortlex_key(a) > shortlex_key(b) else (b, a)


@dataclass
class RewritingSystem:
    size: int                 # alphabet size
    inv: tuple                # involution on letter indices
    rules: list               # list of (lhs, rhs), shortlex oriented
    complete: bool
    identities: list = field(default_factory=list)  # defining (l, r) pairs

    @property
    def status(self):
        return "Complete" if self.complete else "Incomplete"

    def reduce(self, word):
        """Rewrite to a normal form under the current rules (leftmost)."""
        word = tuple(word)
        changed = True
        while changed:
            changed = False
            for lhs, rhs in self.rules:
                n = len(lhs)
                i = 0
                while i + n <= len(word):
                    if word[i:i + n] == lhs:
                        word = word[:i] + rhs + word[i + n:]
                        changed = True
                        i = max(0, i - max(len(r) for r, _ in self.rules))
                    else:
                        i += 1
        return word

    def normal_form(self, word):
        if not self.complete:
            raise RewriteUnsupported("normal forms need a complete system")
        return self.reduce(word)

    def length(self, word):
        return len(self.normal_form(word))


def initial_identities(sgs):
    """Free cancellation plus order relators plus presentation relators."""
    idents = []
    for i in range(sgs.size):
        idents.append(((i, sgs.inv[i]), ()))
    p = sgs.presentation
    for g, (_, order) in enumerate(p.generators):
        if order not in (0, 2):
            idents.append((tuple([sgs.index_of(g, 1)] * order), ()))
    for r in p.relators:
        w = sgs.word_to_indices(r)
        if w:
            idents.append((w, ()))
    return idents


def complete(presentation, sgs, budget=None):
    """Knuth-Bendix completion under shortlex; never fails, may be Incomplete.

    Standard loop: keep rules interreduced, resolve critical pairs from
    overlaps (including containment), stop at confluence or budget.
    """
    budget = {**DEFAULT_BUDGET, **(budget or {})}
    max_rules, max_len, max_steps = (
        budget["max_rules"], budget["max_len"], budget["max_steps"])
    idents = initial_identities(sgs)
    rules = {}

    def reduce_word(w):
        changed = True
        while changed:
            changed = False
            for lhs in sorted(rules, key=shortlex_key):
                n = len(lhs)
                for i in range(len(w) - n + 1):
                    if w[i:i + n] == lhs:
                        w = w[:i] + rules[lhs] + w[i + n:]
                        changed = True
                        break
                if changed:
                    break
        return w

    def add_rule(a, b):
        a, b = reduce_word(a), reduce_word(b)
        if a == b:
            return
        lhs, rhs = _orient(a, b)
        if len(lhs) > max_len:
            raise _Budget
        # interreduce: existing rules touched by the new lhs get replayed
        stale = [l for l in rules if _contains(l, lhs)]
        pend = [(l, rules.pop(l)) for l in stale]
        rules[lhs] = rhs
        for l, r in pend:
            pending.append((l, r))
        if len(rules) > max_rules:
            raise _Budget

    class _Budget(Exception):
        pass

    pending = list(idents)
    steps = 0
    try:
        while pending:
            steps += 1
            if steps > max_steps:
                raise _Budget
            a, b = pending.pop()
            add_rule(a, b)
            # recompute critical pairs involving newest rules lazily: simple
            # strategy, re-scan all pairs whenever the queue drains.
            if not pending:
                crit = _critical_pairs(rules)
                for u, v in crit:
                    u2, v2 = reduce_word(u), reduce_word(v)
                    if u2 != v2:
                        pending.append((u2, v2))
                        steps += 1
                        if steps > max_steps:
                            raise _Budget
        done = True
    except _Budget:
        done = False
    rule_list = sorted(rules.items(), key=lambda kv: shortlex_key(kv[0]))
    return RewritingSystem(sgs.size, sgs.inv, rule_list, done,
                           identities=idents)


def _contains(w, sub):
    n = len(sub)
    return any(w[i:i + n] == sub for i in range(len(w) - n + 1))


def _critical_pairs(rules):
    """Overlap and containment ambiguities of the current rule set."""
    out = []
    items = sorted(rules.items(), key=lambda kv: shortlex_key(kv[0]))
    for l1, r1 in items:
        for l2, r2 in items:
            # proper overlap: suffix of l1 = prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    # word l1 + l2[k:]
                    u = r1 + l2[k:]
                    v = l1[:-k] + r2
                    out.append((u, v))
            # containment: l2 inside l1 (proper)
            if l1 != l2 and len(l2) < len(l1):
                n = len(l2)
                for i in range(len(l1) - n + 1):
                    if l1[i:i + n] == l2:
                        out.append((r1, l1[:i] + r2 + l1[i + n:]))
    return out


# ---------------------------------------------------------------------------
# equality


def equal_words(rs, w1, w2, witness=None, budget=2000):
    """Is w1 = w2 in the group?

    Complete systems compare normal forms.  Otherwise a witness (a chain
    of words, each one identity-application away from the next) is
    verified, or a bounded bidirectional search over identity
    applications is run; exhausting it raises WordProblemUndecided,
    which is distinct from returning False.
    """
    w1, w2 = tuple(w1), tuple(w2)
    if rs.complete:
        return rs.reduce(w1) == rs.reduce(w2)
    if witness is not None:
        chain = [tuple(w) for w in witness]
        if not chain or chain[0] != w1 or chain[-1] != w2:
            return False
        for u, v in zip(chain, chain[1:]):
            if not _one_step(rs, u, v):
                return False
        return True
    seen = {w1}
    frontier = [w1]
    steps = 0
    while frontier and steps < budget:
        nxt = []
        for u in frontier:
            for v in _neighbors(rs, u):
                steps += 1
                if v == w2:
                    return True
                if v not in seen and len(v) <= len(w1) + len(w2) + 4:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    if w2 in seen:
        return True
    raise WordProblemUndecided("bounded search exhausted")


def _identity_moves(rs):
    moves = []
    for l, r in rs.identities:
        moves.append((l, r))
        moves.append((r, l))
    return moves


def _one_step(rs, u, v):
    for l, r in _identity_moves(rs):
        n = len(l)
        for i in range(len(u) - n + 1):
            if u[i:i + n] == l and u[:i] + r + u[i + n:] == v:
                return True
    return False


def _neighbors(rs, u):
    for l, r in _identity_moves(rs):
        n = len(l)
        for i in range(len(u) - n + 1):
            if u[i:i + n] == l:
                yield u[:i] + r + u[i + n:]


# ---------------------------------------------------------------------------
# balls, growth, spectrum


@dataclass
class BallTable:
    radius: int
    spheres: list      # spheres[r] = sorted list of normal-form words
    partial: bool = False

    @property
    def sizes(self):
        return [len(s) for s in self.spheres]

    def cumulative(self):
        out, tot = [], 0
        for s in self.spheres:
            tot += len(s)
            out.append(tot)
        return out

    def to_json(self, sgs=None):
        def w2s(w):
            if sgs is None:
                return " ".join(map(str, w))
            return " ".join(sgs.letter_str(i) for i in w) if w else "e"
        return json.dumps({
            "radius": self.radius,
            "sizes": self.cumulative(),
            "spheres": [[w2s(w) for w in s] for s in self.spheres],
        })


def ball(rs, radius, max_size=200_000):
    """Exact enumeration of normal forms by word length (= metric length)."""
    if not rs.complete:
        raise RewriteUnsupported("ball enumeration needs a complete system")
    spheres = [[()]]
    seen = {()}
    partial = False
    for r in range(1, radius + 1):
        layer = set()
        for w in spheres[r - 1]:
            for x in range(rs.size):
                nf = rs.reduce(w + (x,))
                if nf not in seen:
                    seen.add(nf)
                    layer.add(nf)
                    if len(seen) > max_size:
                        partial = True
        spheres.append(sorted(layer, key=shortlex_key))
        if partial:
            break
    return BallTable(len(spheres) - 1, spheres, partial)


def growth_classify(table, delta=0.2):
    """Empirical growth class from ball sizes.

    Finite when the cumulative sizes stabilize; Exponential when the
    layer-count ratios over the top half of radii all stay >= 1+delta
    (cumulative ratios converge too slowly at desk radii to separate a
    quadratic lattice from a tree); else Polynomial, with degree the
    least-squares slope of log|B(r)| against log r over the top half.
    """
    import math
    sizes = table.cumulative()
    layers = table.sizes
    if len(sizes) < 7:
        raise ValueError("need radius >= 6 for classification")
    if sizes[-1] == sizes[-2] == sizes[-3]:
        return {"class": "Finite", "order": sizes[-1]}
    half = len(layers) // 2
    ratios = [layers[r + 1] / layers[r]
              for r in range(half, len(layers) - 1) if layers[r]]
    if ratios and all(q >= 1 + delta for q in ratios):
        return {"class": "Exponential", "ratios": ratios}
    top = range(len(sizes) // 2, len(sizes))
    xs = [math.log(r) for r in top]
    ys = [math.log(sizes[r]) for r in top]
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum(
        (x - mx) ** 2 for x in xs)
    return {"class": "Polynomial", "degree": slope,
            "fit": {"x": xs, "y": ys}}


def dirac_spectrum(table):
    """Eigenvalue r with multiplicity = sphere size |{g : l(g)=r}|."""
    return [(r, len(s)) for r, s in enumerate(table.spheres)]
