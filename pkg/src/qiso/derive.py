"""Sound derivation engine over a fundamental-unitary presentation.

The fact base stores zero monomials, commuting letter pairs, letter
substitutions, oriented equality rewrites and general relations, every
fact carrying a provenance record.  Tactics either generate relations
from the action (Relator / Compare / LengthZero / ZeroWord), transport
facts (Star / Antipode / MulLeft / MulRight / LinComb / Overlap), or
apply C*-valid inference rules (Positivity, NormalPair, DeriveNormal,
FugledeCommute, CommuteFromSandwich, NilpotentNormalZero,
UnitarityCollapse).  Scripts are data: an ordered tactic list plus a
goal; rerunning a script reproduces the identical fact log.

Soundness notes (valid in any C*-algebra satisfying the seeds):
  * Positivity: m m* = 0 forces m = 0; a vanishing positive-rational
    combination of terms m_i m_i* forces every m_i = 0.
  * NilpotentNormalZero: a normal x with x^k = 0 has spectral radius 0,
    hence norm 0.
  * DeriveNormal: x* x^2 = x and x (x*)^2 = x* give
    x x* = (x* x^2) x* = x* (x^2 x*) = x* x  (using the star of the
    second identity, x^2 x* = x).
  * FugledeCommute: x normal and x y = y x imply x* y = y x*
    (Fuglede's theorem, valid in any C*-algebra).
  * CommuteFromSandwich: x a normal partial isometry with
    x^2 y = x y x = y x^2 forces x y = y x (iterated use of
    x = x* x^2, Fuglede on x^2, and x x* x = x).
  * Overlap: two oriented rewrites applied to a common superposition
    word produce equal values; their difference is in the ideal.
  * The antipode is a *-algebra anti-automorphism under the Kac
    convention, so images of zero monomials and of commutation facts
    remain facts.
"""

import json
import time
from fractions import Fraction

from . import presentation as pres_mod
from .ncalgebra import (NCPoly, QQi, FactView, LetterAlgebra, simplify,
                        monomial_is_zero, sort_commuting, ONE)
from . import fundamental as fnd
from .rewrite import complete as kb_complete
from . import models as models_mod


class TacticError(RuntimeError):
    """A tactic precondition failed; scripts fail loudly."""


class FactBase(FactView):
    def __init__(self, alg):
        super().__init__(alg)
        self.normal_letters = set()       # unstarred canonical letters
        self.selfadjoint_letters = set()
        self.relations = []               # (label, NCPoly, provenance)
        self.named = {}                   # label -> NCPoly
        self.fact_log = []                # ordered (kind, payload) strings
        self.provenance = {}              # payload -> provenance string
        self._rel_seen = set()

    # -- recording -----------------------------------------------------

    def _log(self, kind, payload, prov):
        key = (kind, payload)
        if key in self.provenance:
            return False
        self.provenance[key] = prov
        self.fact_log.append(key)
        return True

    def add_zero(self, mon, prov):
        mon = sort_commuting(self.alg, self, tuple(self.subst_letter(self.alg.canon(l)) for l in mon))
        if not mon:
            raise TacticError("derived 1 = 0; seeds are inconsistent")
        if monomial_is_zero(self.alg, self, mon):
            return []
        out = []
        for m in (mon, tuple(self.alg.star(l) for l in reversed(mon))):
            m = sort_commuting(self.alg, self, m)
            if not monomial_is_zero(self.alg, self, m):
                self.zero_monomials.add(m)
                self.zero_maxlen = max(self.zero_maxlen, len(m))
                if self._log("zero", self.alg.mon_str(m), prov):
                    out.append(("zero", m))
        return out

    def add_pair(self, a, b, prov):
        a = self.subst_letter(self.alg.canon(a))
        b = self.subst_letter(self.alg.canon(b))
        if a == b:
            return []
        out = []
        for x, y in ((a, b), (self.alg.star(a), self.alg.star(b))):
            fs = frozenset((x, y))
            if len(fs) == 2 and fs not in self.commuting:
                self.commuting.add(fs)
                if self._log("pair", " ~ ".join(sorted(self.alg.letter_str(l) for l in fs)), prov):
                    out.append(("pair", fs))
        for x, y in ((a, b), (b, a)):
            if y == self.alg.star(x):
                root = x if not x[2] else self.alg.star(x)
                if root not in self.normal_letters:
                    self.normal_letters.add(root)
                    self._log("normal", self.alg.letter_str(root), prov)
                    out.append(("normal", root))
        return out

    def add_subst(self, src, dst, prov):
        src = self.alg.canon(src)
        dst = self.subst_letter(self.alg.canon(dst))
        if src == dst:
            return []
        if self.alg.sort_key(src) < self.alg.sort_key(dst):
            src, dst = dst, src
        if src in self.letter_subst:
            old = self.subst_letter(src)
            if old == dst:
                return []
            return self.ingest(NCPoly.letter(self.alg, old)
                               - NCPoly.letter(self.alg, dst),
                               prov + " [subst collision]")
        out = []
        self.letter_subst[src] = dst
        if dst == self.alg.star(src):
            root = src if not src[2] else dst
            self.selfadjoint_letters.add(root)
        self._log("subst", f"{self.alg.letter_str(src)} := {self.alg.letter_str(dst)}", prov)
        out.append(("subst", (src, dst)))
        ss, sd = self.alg.star(src), self.alg.star(dst)
        if self.alg.sort_key(ss) > self.alg.sort_key(sd) and ss not in self.letter_subst:
            self.letter_subst[ss] = sd
            self._log("subst", f"{self.alg.letter_str(ss)} := {self.alg.letter_str(sd)}", prov)
            out.append(("subst", (ss, sd)))
        return out

    def add_equality(self, lhs, rhs, prov):
        """Oriented rewrite lhs -> rhs (every rhs monomial < lhs)."""
        out = []
        existing = self.named_rule(lhs)
        if existing is not None:
            if existing == rhs:
                return []
            # same lhs, two right sides: their difference is derived
            out.extend(self.ingest(existing - rhs, prov + " [rule collision]"))
            if lhs in self.equalities and self._smaller_rhs(rhs, self.equalities[lhs]):
                self.equalities[lhs] = rhs
            return out
        self.equalities[lhs] = rhs
        self._log("rule", f"{self.alg.mon_str(lhs)} -> {self.alg.poly_str(rhs)}", prov)
        out.append(("rule", (lhs, rhs)))
        return out

    def named_rule(self, lhs):
        return self.equalities.get(lhs)

    def _smaller_rhs(self, a, b):
        ka = sorted(self.alg.mon_sort_key(m) for m in a.terms)
        kb = sorted(self.alg.mon_sort_key(m) for m in b.terms)
        return ka < kb

    # -- ingestion ------------------------------------------------------

    def ingest(self, poly, prov, label=None, raw=False, _star_done=False):
        """Classify a relation poly = 0 into facts; returns new facts."""
        if not raw:
            poly, ok = simplify(poly, self)
            if not ok:
                prov += " [partial simplify]"
        if label is not None:
            self.named[label] = poly
        if poly.is_zero():
            return []
        out = []
        terms = sorted(poly.terms.items(),
                       key=lambda kv: self.alg.mon_sort_key(kv[0]))
        lead_mon, lead_c = terms[-1]
        if not lead_mon:
            raise TacticError("derived a nonzero constant = 0; inconsistent")
        if len(terms) == 1:
            out.extend(self.add_zero(lead_mon, prov))
        else:
            rest = NCPoly(self.alg, dict(terms[:-1]))
            inv = QQi(Fraction(1))
            # divide by -lead_c exactly
            den = lead_c.re * lead_c.re + lead_c.im * lead_c.im
            inv = QQi(-lead_c.re / den, lead_c.im / den)
            rhs = rest.scale(inv)
            if len(terms) == 2:
                m2, c2 = terms[0]
                ratio = c2 * inv
                if (len(lead_mon) == 1 and len(m2) == 1 and ratio == ONE):
                    out.extend(self.add_subst(lead_mon[0], m2[0], prov))
                elif (len(lead_mon) == 2 and len(m2) == 2 and ratio == ONE
                      and lead_mon == (m2[1], m2[0])):
                    out.extend(self.add_pair(m2[0], m2[1], prov))
            if not any(k == "subst" for k, _ in out):
                out.extend(self.add_equality(lead_mon, rhs, prov))
            if len(terms) > 2:
                key = frozenset(poly.terms.items())
                if key not in self._rel_seen:
                    self._rel_seen.add(key)
                    self.relations.append((label, poly, prov))
                    self._log("relation", self.alg.poly_str(poly), prov)
                    out.append(("relation", poly))
        if not _star_done:
            out.extend(self.ingest(poly.star(), prov + " [*]",
                                   raw=False, _star_done=True))
        return out

    def is_zero_mon(self, mon):
        p, _ = simplify(NCPoly.monomial(self.alg, mon), self)
        return p.is_zero()

    def proves_zero(self, poly):
        p, _ = simplify(poly, self)
        return p.is_zero()

    def commute_holds(self, m1, m2):
        a = NCPoly.monomial(self.alg, tuple(m1) + tuple(m2))
        b = NCPoly.monomial(self.alg, tuple(m2) + tuple(m1))
        return self.proves_zero(a - b)

    def is_normal(self, letter):
        letter = self.subst_letter(self.alg.canon(letter))
        root = letter if not letter[2] else self.alg.star(letter)
        if root in self.normal_letters or root in self.selfadjoint_letters:
            return True
        st = self.alg.star(root)
        if root == st or frozenset((root, st)) in self.commuting:
            return True
        return self.commute_holds((root,), (st,))


# ---------------------------------------------------------------------------
# session and tactics


class Session:
    def __init__(self, preset_name, group, sgs, rs, model, fu, qpres, aliases):
        self.preset_name = preset_name
        self.group = group
        self.sgs = sgs
        self.rs = rs
        self.model = model
        self.fu = fu
        self.qpres = qpres
        self.alg = fu.alg
        self.fb = FactBase(fu.alg)
        self.steps = []
        self._auto = 0

    def seed(self):
        for poly, prov in self.qpres.seed_relations:
            if prov.startswith("unitarity") or prov.startswith("row-involution"):
                self.fb.ingest(poly, "seed " + prov, label=f"seed:{prov}")

    def word_seq(self, text):
        w = pres_mod.parse_word_raw(self.group, text)
        return self.sgs.word_to_indices(w)

    def letter(self, spec):
        return self.alg.parse_letter(spec)

    def mono(self, spec):
        return self.alg.parse_monomial(spec)

    def poly_of_mon(self, spec):
        return NCPoly.monomial(self.alg, self.mono(spec))

    def rel(self, label):
        if label not in self.fb.named:
            raise TacticError(f"missing relation {label!r}")
        return self.fb.named[label]

    def auto_label(self, t):
        self._auto += 1
        return t.get("label", f"t{self._auto}")


def _ingest_keyed(sess, relations, label, prov_prefix, raw=False):
    facts = []
    for key, poly in relations:
        kstr = sess.model.key_str(key)
        lab = f"{label}/{kstr}"
        facts += sess.fb.ingest(poly, f"{prov_prefix}@{kstr}", label=lab, raw=raw)
    return facts


def apply_tactic(sess, t):
    op = t["op"]
    fb, alg, model, fu = sess.fb, sess.alg, sess.model, sess.fu
    label = sess.auto_label(t)

    if op == "Relator":
        seq = sess.word_seq(t["word"])
        rels = fnd.relator_relations_for(fu, model, seq)
        return _ingest_keyed(sess, rels, label, f"relator {t['word']}")

    if op == "RelatorPair":
        g = t["gen"]
        facts = []
        sym = sess.group.symbols.index(g)
        fwd = sess.sgs.word_to_indices(((sym, 1), (sym, -1)))
        seqs = [fwd] if sess.sgs.inv[fwd[0]] == fwd[0] else [fwd, tuple(reversed(fwd))]
        for i, seq in enumerate(seqs):
            rels = fnd.relator_relations_for(fu, model, seq)
            facts += _ingest_keyed(sess, rels, f"{label}.{i}" if i else label,
                                   f"relator pair {g}")
        return facts

    if op == "Compare":
        s1, s2 = sess.word_seq(t["w1"]), sess.word_seq(t["w2"])
        rels = fnd.compare_expansions(fu, model, [s1], [s2])
        return _ingest_keyed(sess, rels, label,
                             f"compare({t['w1']}, {t['w2']})",
                             raw=t.get("raw", False))

    if op == "CompareLin":
        def side(side_spec):
            if side_spec == "UNIT":
                return "UNIT"
            return [sess.word_seq(w) for w in side_spec]
        rels = fnd.compare_expansions(fu, model, side(t["lhs"]), side(t["rhs"]))
        return _ingest_keyed(sess, rels, label, "compare-lin",
                             raw=t.get("raw", False))

    if op == "ZeroWord":
        seq = sess.word_seq(t["word"])
        rels = fnd.zero_word_relations(fu, model, seq)
        return _ingest_keyed(sess, rels, label, f"zero-word {t['word']}")

    if op == "LengthZero":
        seq = sess.word_seq(t["word"])
        rels = fnd.length_preserving_relations(fu, model, seq)
        return _ingest_keyed(sess, rels, label, f"length {t['word']}")

    if op == "Star":
        p = sess.rel(t["rel"])
        return fb.ingest(p.star(), f"star of {t['rel']}", label=label)

    if op == "Antipode":
        p = sess.rel(t["rel"])
        return fb.ingest(p.antipode(), f"antipode of {t['rel']}", label=label)

    if op == "MulLeft":
        p = sess.rel(t["rel"])
        m = sess.poly_of_mon(t["mon"])
        return fb.ingest(m * p, f"({t['mon']}) . {t['rel']}", label=label,
                         raw=t.get("raw", False))

    if op == "MulRight":
        p = sess.rel(t["rel"])
        m = sess.poly_of_mon(t["mon"])
        return fb.ingest(p * m, f"{t['rel']} . ({t['mon']})", label=label,
                         raw=t.get("raw", False))

    if op == "LinComb":
        total = NCPoly.zero(alg)
        for coeff, lab in t["terms"]:
            c = QQi(Fraction(str(coeff)))
            total = total + sess.rel(lab).scale(c)
        return fb.ingest(total, "lin-comb of " + ", ".join(l for _, l in t["terms"]),
                         label=label)

    if op == "Positivity":
        if "mon" in t:
            m = sess.mono(t["mon"])
            prod = NCPoly.monomial(alg, m) * NCPoly.monomial(alg, m).star()
            if not fb.proves_zero(prod):
                raise TacticError(f"positivity: ({t['mon']})({t['mon']})* not zero")
            return fb.add_zero(m, f"positivity {t['mon']}")
        p = sess.rel(t["rel"])
        facts = []
        for mon, c in p.terms.items():
            if not c.is_positive_rational():
                raise TacticError("positivity needs positive rational coefficients")
            if len(mon) % 2:
                raise TacticError("positivity term of odd length")
            k = len(mon) // 2
            half = mon[:k]
            if tuple(alg.star(l) for l in reversed(half)) != mon[k:]:
                raise TacticError("positivity term is not of the form m m*")
            facts += fb.add_zero(half, f"positivity {t['rel']}")
        return facts

    if op == "NormalPair":
        x, y = sess.letter(t["x"]), sess.letter(t["y"])
        for l in (x, y):
            if not fb.is_normal(l):
                raise TacticError(f"{alg.letter_str(l)} is not known normal")
        if not fb.is_zero_mon((x, y)):
            raise TacticError("product is not known zero")
        facts = []
        xs, ys = alg.star(x), alg.star(y)
        for m in ((xs, y), (y, xs), (ys, x), (x, ys), (y, x)):
            facts += fb.add_zero(m, f"normal pair {t['x']},{t['y']}")
        return facts

    if op == "DeriveNormal":
        x = sess.letter(t["letter"])
        xs = alg.star(x)
        e1 = NCPoly.monomial(alg, (xs, x, x)) - NCPoly.monomial(alg, (x,))
        e2 = NCPoly.monomial(alg, (x, xs, xs)) - NCPoly.monomial(alg, (xs,))
        if not (fb.proves_zero(e1) and fb.proves_zero(e2)):
            raise TacticError(f"missing x*x^2=x / x(x*)^2=x* for {t['letter']}")
        return fb.add_pair(x, xs, f"derive-normal {t['letter']}")

    if op == "NilpotentNormalZero":
        x = sess.letter(t["letter"])
        if not fb.is_normal(x):
            raise TacticError(f"{t['letter']} is not known normal")
        k = int(t["k"])
        if not fb.is_zero_mon((x,) * k):
            raise TacticError(f"{t['letter']}^{k} is not known zero")
        return fb.add_zero((x,), f"nilpotent normal {t['letter']}")

    if op == "FugledeCommute":
        x, y = sess.letter(t["x"]), sess.letter(t["y"])
        if not fb.is_normal(x):
            raise TacticError(f"{t['x']} is not known normal")
        if not fb.commute_holds((x,), (y,)):
            raise TacticError(f"{t['x']} and {t['y']} are not known to commute")
        return fb.add_pair(alg.star(x), y, f"fuglede {t['x']},{t['y']}")

    if op == "CommuteFromSandwich":
        x, y = sess.letter(t["x"]), sess.letter(t["y"])
        xs = alg.star(x)
        if not fb.is_normal(x):
            raise TacticError(f"{t['x']} is not known normal")
        if not fb.proves_zero(NCPoly.monomial(alg, (x, xs, x)) - NCPoly.monomial(alg, (x,))):
            raise TacticError(f"{t['x']} is not a known partial isometry")
        s1 = NCPoly.monomial(alg, (x, x, y)) - NCPoly.monomial(alg, (x, y, x))
        s2 = NCPoly.monomial(alg, (x, y, x)) - NCPoly.monomial(alg, (y, x, x))
        if not (fb.proves_zero(s1) and fb.proves_zero(s2)):
            raise TacticError(f"missing sandwich x^2y=xyx=yx^2 for {t['x']},{t['y']}")
        return fb.add_pair(x, y, f"sandwich {t['x']},{t['y']}")

    if op == "UnitarityCollapse":
        fam, p, q = t["family"], int(t["p"]) - 1, int(t.get("q", t["p"])) - 1
        for poly, prov in fnd.unitarity_relations(fu):
            if prov == f"unitarity({fam},{p + 1},{q + 1})":
                base = poly
                break
        else:
            raise TacticError("unknown unitarity family")
        m = sess.poly_of_mon(t["mon"])
        prod = m * base if t.get("side", "left") == "left" else base * m
        return fb.ingest(prod, f"collapse {fam}({p + 1},{q + 1}) by {t['mon']}",
                         label=label)

    if op == "Overlap":
        l1 = sess.mono(t["lhs1"])
        l2 = sess.mono(t["lhs2"])

        def rule_of(lhs):
            # a known-zero monomial acts as the rewrite lhs -> 0
            r = fb.named_rule(lhs)
            if r is None and fb.is_zero_mon(lhs):
                r = NCPoly.zero(alg)
            return r

        r1, r2 = rule_of(l1), rule_of(l2)
        if r1 is None or r2 is None:
            raise TacticError("overlap: rules not present")
        facts = []
        found = False
        for k in range(1, min(len(l1), len(l2))):
            if l1[len(l1) - k:] == l2[:k]:
                found = True
                u = r1 * NCPoly.monomial(alg, l2[k:])
                v = NCPoly.monomial(alg, l1[:len(l1) - k]) * r2
                facts += fb.ingest(u - v, f"overlap {t['lhs1']} | {t['lhs2']}",
                                   label=None)
        if len(l2) < len(l1):
            for i in range(len(l1) - len(l2) + 1):
                if l1[i:i + len(l2)] == l2:
                    found = True
                    v = (NCPoly.monomial(alg, l1[:i]) * r2
                         * NCPoly.monomial(alg, l1[i + len(l2):]))
                    facts += fb.ingest(r1 - v, f"overlap {t['lhs1']} | {t['lhs2']}")
        if not found:
            raise TacticError("overlap: no superposition found")
        return facts

    if op == "Derive":
        # re-orient an equality the rewrite order cannot reach by itself:
        # sound because the difference already simplifies to zero
        lhs = sess.poly_of_mon(t["lhs"])
        rhs = sess.poly_of_mon(t["rhs"])
        if not fb.proves_zero(lhs - rhs):
            raise TacticError(f"derive: {t['lhs']} = {t['rhs']} does not hold")
        return fb.ingest(lhs - rhs, f"derive {t['lhs']} = {t['rhs']}",
                         label=label, raw=True)

    if op == "Saturate":
        return saturate(sess, depth=t.get("depth", 4))

    if op == "Assert":
        return _assert_fact(sess, t)

    raise TacticError(f"unknown tactic {op!r}")


def _assert_fact(sess, t):
    fb, alg = sess.fb, sess.alg
    if "zero" in t:
        if not fb.is_zero_mon(sess.mono(t["zero"])):
            raise TacticError(f"assert failed: {t['zero']} = 0 not derived")
    elif "commute" in t:
        x, y = t["commute"]
        if not fb.commute_holds(sess.mono(x), sess.mono(y)):
            raise TacticError(f"assert failed: [{x}, {y}] = 0 not derived")
    elif "normal" in t:
        if not fb.is_normal(sess.letter(t["normal"])):
            raise TacticError(f"assert failed: {t['normal']} normal not derived")
    elif "equal" in t:
        u, v = t["equal"]
        diff = sess.poly_of_mon(u) - sess.poly_of_mon(v)
        if not fb.proves_zero(diff):
            raise TacticError(f"assert failed: {u} = {v} not derived")
    else:
        raise TacticError("empty assert")
    return []


def saturate(sess, depth=4):
    """Bounded closure: star/antipode images of zeros and pairs, Fuglede
    and normal-pair consequences, and re-simplification of stored rules
    and relations against the grown fact base."""
    fb, alg = sess.fb, sess.alg
    facts = []
    for _ in range(depth):
        before = len(fb.fact_log)
        for m in list(fb.zero_monomials):
            m2 = sort_commuting(alg, fb, tuple(fb.subst_letter(l) for l in m))
            if m2 != m:
                facts += fb.add_zero(m2, "saturate: zero re-sorted")
            km = tuple(alg.antipode(l) for l in reversed(m))
            facts += fb.add_zero(km, "saturate: antipode of zero")
        for fs in list(fb.commuting):
            a, b = tuple(fs)
            facts += fb.add_pair(alg.antipode(a), alg.antipode(b),
                                 "saturate: antipode of pair")
            for x, y in ((a, b), (b, a)):
                root = x if not x[2] else alg.star(x)
                if root in fb.normal_letters or root in fb.selfadjoint_letters:
                    facts += fb.add_pair(alg.star(x), y, "saturate: fuglede")
        for m in list(fb.zero_monomials):
            if len(m) == 2 and fb.is_normal(m[0]) and fb.is_normal(m[1]):
                x, y = m
                xs, ys = alg.star(x), alg.star(y)
                for mm in ((xs, y), (y, xs), (ys, x), (x, ys), (y, x)):
                    facts += fb.add_zero(mm, "saturate: normal pair")
        for lhs in list(fb.equalities):
            rhs = fb.equalities[lhs]
            if monomial_is_zero(alg, fb, lhs):
                facts += fb.ingest(rhs, "saturate: zero rewrite source")
                continue
            diff = NCPoly.monomial(alg, lhs) - rhs
            p, _ = simplify(diff, fb)
            if not p.is_zero():
                facts += fb.ingest(p, "saturate: rule re-simplified")
        for label, poly, prov in list(fb.relations):
            p, _ = simplify(poly, fb)
            if not p.is_zero() and p != poly:
                facts += fb.ingest(p, "saturate: relation re-simplified")
        if len(fb.fact_log) == before:
            break
    return facts


# ---------------------------------------------------------------------------
# goals


def check_goal(sess, goal):
    fb, alg, fu = sess.fb, sess.alg, sess.fu
    kind = goal["kind"]
    report = {"kind": kind}

    def entry_zero(p, q):
        return fb.is_zero_mon((fu.entry(p, q),))

    def canonical_letters():
        out = []
        for p in range(fu.size):
            if not alg.positive[p]:
                continue
            for q in range(fu.size):
                l = fb.subst_letter(fu.entry(p, q))
                if l not in out:
                    out.append(l)
                ls = fb.subst_letter(alg.star(fu.entry(p, q)))
                if ls not in out:
                    out.append(ls)
        return out

    if kind == "Diagonal":
        bad = [(p, q) for p in range(fu.size) for q in range(fu.size)
               if p != q and not entry_zero(p, q)]
        report["off_diagonal_nonzero"] = [
            alg.letter_str(fu.entry(p, q)) for p, q in bad]
        return (not bad), report

    if kind == "ZeroPattern":
        bad = [m for m in goal["entries"] if not fb.is_zero_mon(sess.mono(m))]
        report["not_zero"] = bad
        return (not bad), report

    if kind == "Commutative":
        letters = canonical_letters()
        bad = []
        for i, x in enumerate(letters):
            for y in letters[i + 1:]:
                if not fb.commute_holds((x,), (y,)):
                    bad.append((alg.letter_str(x), alg.letter_str(y)))
        report["non_commuting"] = bad
        return (not bad), report

    if kind == "BlockDiagonal":
        blocks = []
        for syms in goal["blocks"]:
            idxs = set()
            for s in syms:
                g = sess.group.symbols.index(s)
                i = sess.sgs.index_of(g, 1)
                idxs.add(i)
                idxs.add(sess.sgs.inv[i])
            blocks.append(sorted(idxs))
        block_of = {}
        for bi, idxs in enumerate(blocks):
            for i in idxs:
                block_of[i] = bi
        bad = [(p, q) for p in range(fu.size) for q in range(fu.size)
               if block_of[p] != block_of[q] and not entry_zero(p, q)]
        report["cross_block_nonzero"] = [
            alg.letter_str(fu.entry(p, q)) for p, q in bad]
        if bad:
            return False, report
        if goal.get("cross_commute"):
            letters_by_block = []
            for idxs in blocks:
                ls = []
                for p in idxs:
                    if not alg.positive[p]:
                        continue
                    for q in idxs:
                        for l in (fu.entry(p, q), alg.star(fu.entry(p, q))):
                            l = fb.subst_letter(l)
                            if l not in ls and not fb.is_zero_mon((l,)):
                                ls.append(l)
                letters_by_block.append(ls)
            ncomm = []
            for bi in range(len(blocks)):
                for bj in range(bi + 1, len(blocks)):
                    for x in letters_by_block[bi]:
                        for y in letters_by_block[bj]:
                            if not fb.commute_holds((x,), (y,)):
                                ncomm.append((alg.letter_str(x), alg.letter_str(y)))
            report["cross_block_non_commuting"] = ncomm
            if ncomm:
                return False, report
        return True, report

    if kind == "DoublingShape":
        sigma = _sigma_indices(sess, goal["sigma"])
        m = fu.size
        problems = []
        for i in range(m):
            for j in range(m):
                if j not in (i, sigma[i]) and not entry_zero(i, j):
                    problems.append(f"entry({i + 1},{j + 1}) != 0")
        moved = [i for i in range(m) if sigma[i] != i]
        for i in moved:
            for j in moved:
                a = fu.entry(i, i)
                b = fu.entry(j, sigma[j])
                for mon in ((a, b), (b, a)):
                    if not fb.is_zero_mon(mon):
                        problems.append(
                            f"{alg.mon_str(mon)} != 0 (diagonal x off-diagonal)")
        letters = canonical_letters()
        for i in range(m):
            for j in (i, sigma[i]):
                e = fu.entry(i, j)
                if fb.is_zero_mon((e,)):
                    continue
                mon = (e, alg.star(e))
                for x in letters:
                    if not fb.commute_holds(mon, (x,)):
                        problems.append(
                            f"{alg.mon_str(mon)} not central (vs {alg.letter_str(x)})")
        for u_text, v_text in goal.get("relator_images", []):
            for tag, col in (("diag", lambda i: i), ("anti", lambda i: sigma[i])):
                iu = _image_monomial(sess, u_text, col)
                iv = _image_monomial(sess, v_text, col)
                diff = NCPoly.monomial(alg, iu) - NCPoly.monomial(alg, iv)
                if not fb.proves_zero(diff):
                    problems.append(f"relator image ({tag}): {u_text} = {v_text}")
        report["problems"] = problems
        report["note"] = "doubling shape modulo non-degeneracy of the off-diagonal entries"
        return (not problems), report

    if kind == "FactsHold":
        problems = []
        for mspec in goal.get("zeros", []):
            if not fb.is_zero_mon(sess.mono(mspec)):
                problems.append(f"zero {mspec}")
        for x, y in goal.get("commutes", []):
            lx, ly = sess.letter(x), sess.letter(y)
            for a in (lx, alg.star(lx)):
                for b in (ly, alg.star(ly)):
                    if not fb.commute_holds((a,), (b,)):
                        problems.append(f"commute {alg.letter_str(a)},{alg.letter_str(b)}")
        for x in goal.get("normals", []):
            if not fb.is_normal(sess.letter(x)):
                problems.append(f"normal {x}")
        report["problems"] = problems
        return (not problems), report

    raise TacticError(f"unknown goal kind {kind!r}")


def _sigma_indices(sess, sigma_spec):
    sgs, group = sess.sgs, sess.group
    sigma = list(range(sgs.size))
    for sym, img in sigma_spec.items():
        g = group.symbols.index(sym)
        w = pres_mod.parse_word_raw(group, img)
        if len(w) != 1:
            raise TacticError("sigma image must be a single letter")
        src = sgs.index_of(g, 1)
        dst = sgs.index_of(*w[0])
        sigma[src] = dst
        sigma[sgs.inv[src]] = sgs.inv[dst]
    for i, j in enumerate(sigma):
        if sigma[j] != i:
            raise TacticError("sigma is not an involution")
    return sigma


def _image_monomial(sess, text, col_of):
    w = pres_mod.parse_word_raw(sess.group, text)
    out = []
    for g, s in w:
        i = sess.sgs.index_of(g, s)
        out.append(sess.fu.entry(i, col_of(i)))
    return tuple(out)


# ---------------------------------------------------------------------------
# scripts


def build_session(script, budget=None):
    group = pres_mod.parse_presentation(script["group"])
    sgs = pres_mod.symmetric_generating_set(group)
    model_spec = script.get("model", "kb")
    rs = None
    if model_spec == "kb":
        rs = kb_complete(group, sgs, budget)
        if not rs.complete:
            raise TacticError(f"completion did not finish for {group.name}")
        model = models_mod.NFModel(rs, sgs)
    elif model_spec == "bs12":
        model = models_mod.bs12_model(sgs)
    elif model_spec.startswith("coxeter:"):
        l, m, n = (int(x) for x in model_spec.split(":")[1].split(","))
        model = models_mod.coxeter_reflection_model(sgs, l, m, n)
    elif model_spec == "torus_pair":
        model = models_mod.TorusPairModel()
    else:
        raise TacticError(f"unknown model {model_spec!r}")

    aliases = {}
    for name, spec in script.get("aliases", {}).items():
        r, c = (int(x) - 1 for x in spec[2:-1].split(","))
        aliases[(r, c)] = name
    alg = LetterAlgebra(sgs.size, sgs.inv, aliases)
    fu = fnd.FundamentalUnitary(sgs, alg)
    seeds = fnd.unitarity_relations(fu) + fnd.involution_row_relations(fu)
    if model_spec != "torus_pair":
        for r in group.relators:
            if len(r) > 4:  # see MAX_SEED_RELATOR_LEN below
                continue
            seq = sgs.word_to_indices(r)
            for key, poly in fnd.relator_relations_for(fu, model, seq):
                seeds.append((poly, f"relator {group.word_str(r)}"))
    qpres = fnd.QisoPresentation(fu, seeds)
    sess = Session(script.get("preset", group.name), group, sgs, rs, model,
                   fu, qpres, aliases)
    return sess


# eager relator seeds are capped: longer relators expand combinatorially
# and scripts drive them through tactics in balanced form instead
MAX_SEED_RELATOR_LEN = 4


def run_script(script, budget=None):
    t0 = time.time()
    sess = build_session(script, budget)
    sess.seed()
    transcript = {"preset": sess.preset_name, "steps": [], "verdict": None,
                  "goal": script.get("goal"), "error": None}
    try:
        for t in script["tactics"]:
            s0 = time.time()
            facts = apply_tactic(sess, t)
            transcript["steps"].append({
                "tactic": t,
                "facts": [f"{k}" for k in _fact_strs(sess, facts)],
                "ms": round(1000 * (time.time() - s0), 2),
            })
    except TacticError as e:
        transcript["error"] = f"tactic failure: {e}"
        transcript["fact_log"] = ["%s: %s" % k for k in sess.fb.fact_log]
        transcript["ms"] = round(1000 * (time.time() - t0), 2)
        return sess, transcript
    if "goal" in script and script["goal"]:
        ok, report = check_goal(sess, script["goal"])
        transcript["verdict"] = {"ok": ok, "report": report}
    transcript["fact_log"] = ["%s: %s" % k for k in sess.fb.fact_log]
    transcript["ms"] = round(1000 * (time.time() - t0), 2)
    return sess, transcript


def _fact_strs(sess, facts):
    alg = sess.alg
    out = []
    for kind, payload in facts:
        if kind == "zero":
            out.append(f"zero {alg.mon_str(payload)}")
        elif kind == "pair":
            a, b = tuple(payload)
            out.append(f"commute {alg.letter_str(a)} ~ {alg.letter_str(b)}")
        elif kind == "rule":
            lhs, rhs = payload
            out.append(f"rule {alg.mon_str(lhs)} -> {alg.poly_str(rhs)}")
        elif kind == "relation":
            out.append(f"relation {alg.poly_str(payload)}")
        elif kind == "normal":
            out.append(f"normal {alg.letter_str(payload)}")
        elif kind == "subst":
            src, dst = payload
            out.append(f"subst {alg.letter_str(src)} := {alg.letter_str(dst)}")
    return out


# ---------------------------------------------------------------------------
# the group-like consistency model


def grouplike_check(sess, substitution=None):
    """Every derived fact must hold under the one-dimensional group-like
    solution: entry(p,q) = 0 off the diagonal and the base letter itself
    on it.  Presets over seeded algebras supply their own substitution
    (canonical letter -> base letter sequence or None)."""
    fb, alg, model = sess.fb, sess.alg, sess.model

    def base_value(letter):
        r, c, s = letter
        if substitution is not None:
            seq = substitution.get((r, c))
        else:
            seq = (r,) if r == c else None
        if seq is None:
            return None
        if s:
            seq = tuple(sess.sgs.inv[i] for i in reversed(seq))
        return seq

    def mon_value(mon):
        seq = []
        for l in mon:
            v = base_value(l)
            if v is None:
                return {}
            seq.extend(v)
        out = {}
        for k, c in model.reduce(tuple(seq)):
            out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    def poly_value(poly):
        tot = {}
        for mon, c in poly.terms.items():
            for k, mult in mon_value(mon).items():
                v = tot.get(k, QQi()) + c * QQi(mult)
                if v:
                    tot[k] = v
                else:
                    tot.pop(k, None)
        return tot

    failures = []
    for m in fb.zero_monomials:
        if mon_value(m):
            failures.append(("zero", alg.mon_str(m)))
    for fs in fb.commuting:
        a, b = tuple(fs)
        if poly_value(NCPoly.monomial(alg, (a, b)) - NCPoly.monomial(alg, (b, a))):
            failures.append(("pair", alg.mon_str((a, b))))
    for lhs, rhs in fb.equalities.items():
        if poly_value(NCPoly.monomial(alg, lhs) - rhs):
            failures.append(("rule", alg.mon_str(lhs)))
    for _, poly, _ in fb.relations:
        if poly_value(poly):
            failures.append(("relation", alg.poly_str(poly)))
    return failures


def transcript_json(transcript):
    return json.dumps(transcript, indent=1, default=str)
