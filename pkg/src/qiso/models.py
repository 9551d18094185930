"""Collection oracles: how expansion keys are identified and separated.

Expanding an action over a word needs a sound way to decide when two
products of generators are the same element.  Three oracles:

* NFModel — a confluent rewriting system; keys are normal forms.
* MatrixModel — an exact faithful linear representation (entries are
  Fractions or number-field elements); keys are matrices.  Used where
  shortlex completion need not terminate (Baumslag-Solitar via the
  affine representation, hyperbolic reflection groups via the geometric
  reflection representation, which is faithful).
* TorusPairModel — the 4-letter *-algebra C(T)+C(T) with two normal
  generators killing each other; keys are the basis elements z^n on
  either circle plus the two unit projections.

Keys must be hashable; ``reduce(seq)`` maps a tuple of letter indices
to a list of (key, int coeff) pairs (usually one, possibly empty for a
zero product).
"""

from fractions import Fraction

from .rewrite import shortlex_key


class NFModel:
    kind = "normal_form"

    def __init__(self, rs, sgs):
        if not rs.complete:
            raise ValueError("NFModel needs a complete rewriting system")
        self.rs = rs
        self.sgs = sgs

    def identity(self):
        return ()

    def reduce(self, seq):
        return [(self.rs.reduce(tuple(seq)), 1)]

    def mult(self, key, letter):
        return [(self.rs.reduce(key + (letter,)), 1)]

    def length(self, key):
        return len(key)

    def key_str(self, key):
        if not key:
            return "e"
        return " ".join(self.sgs.letter_str(i) for i in key)

    def sort_key(self, key):
        return (0, shortlex_key(key))


# ---------------------------------------------------------------------------
# exact matrices


class NumberField:
    """Q[x]/(minpoly), elements as coefficient tuples of Fractions."""

    def __init__(self, minpoly):
        # monic minimal polynomial, low-to-high coefficients, leading 1
        self.minpoly = tuple(Fraction(c) for c in minpoly)
        assert self.minpoly[-1] == 1
        self.deg = len(self.minpoly) - 1
        # x^deg = -(lower part)
        self.red = tuple(-c for c in self.minpoly[:-1])

    def el(self, *coeffs):
        cs = [Fraction(c) for c in coeffs] + [Fraction(0)] * self.deg
        return tuple(cs[: self.deg])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        prod = [Fraction(0)] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for k in range(len(prod) - 1, self.deg - 1, -1):
            c = prod[k]
            if c:
                prod[k] = Fraction(0)
                for j, r in enumerate(self.red):
                    prod[k - self.deg + j] += c * r
        return tuple(prod[: self.deg])

    def zero(self):
        return self.el(0)

    def one(self):
        return self.el(1)


class _FracField:
    deg = 1

    def el(self, c):
        return Fraction(c)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)


def _mat_mul(field, a, b, n):
    return tuple(
        tuple(
            _sum(field, (field.mul(a[i][k], b[k][j]) for k in range(n)))
            for j in range(n))
        for i in range(n))


def _sum(field, items):
    tot = field.zero()
    for x in items:
        tot = field.add(tot, x)
    return tot


def _mat_inv2(field, m):
    # only used for 2x2 integer/Fraction matrices with det != 0
    (a, b), (c, d) = m
    det = field.add(field.mul(a, d), field.neg(field.mul(b, c)))
    inv = 1 / det
    return ((d * inv, -b * inv), (-c * inv, a * inv))


class MatrixModel:
    """Keys are exact matrices of a faithful representation."""

    kind = "matrix"

    def __init__(self, sgs, field, gen_mats, name=""):
        self.sgs = sgs
        self.field = field
        self.n = len(gen_mats[0])
        self.name = name
        self.letter_mats = []
        for (g, s) in sgs.letters:
            m = gen_mats[g] if s == 1 else self._inverse(gen_mats[g])
            self.letter_mats.append(m)
        self._id = tuple(
            tuple(field.one() if i == j else field.zero() for j in range(self.n))
            for i in range(self.n))
        self._names = {self._id: ()}
        self._lengths = {self._id: 0}
        self._frontier = [self._id]

    def _inverse(self, m):
        if self.n == 2 and isinstance(m[0][0], Fraction):
            return _mat_inv2(self.field, m)
        # involutive or finite-order generators: search small powers
        acc = m
        for _ in range(64):
            nxt = _mat_mul(self.field, acc, m, self.n)
            if nxt == self._identity_raw():
                return acc
            acc = nxt
        raise ValueError("could not invert generator matrix")

    def _identity_raw(self):
        f = self.field
        return tuple(
            tuple(f.one() if i == j else f.zero() for j in range(self.n))
            for i in range(self.n))

    def identity(self):
        return self._id

    def reduce(self, seq):
        m = self._id
        for i in seq:
            m = _mat_mul(self.field, m, self.letter_mats[i], self.n)
        self._note(m, tuple(seq))
        return [(m, 1)]

    def mult(self, key, letter):
        m = _mat_mul(self.field, key, self.letter_mats[letter], self.n)
        w = self._names.get(key, None)
        if w is not None:
            self._note(m, w + (letter,))
        return [(m, 1)]

    def _note(self, key, word):
        old = self._names.get(key)
        if old is None or shortlex_key(word) < shortlex_key(old):
            self._names[key] = word

    def length(self, key):
        """Geodesic length via breadth-first expansion of the ball."""
        while key not in self._lengths:
            if not self._frontier:
                raise ValueError("element not reachable")
            nxt = []
            for m in self._frontier:
                w = self._names[m]
                for i in range(self.sgs.size):
                    m2 = _mat_mul(self.field, m, self.letter_mats[i], self.n)
                    if m2 not in self._lengths:
                        self._lengths[m2] = self._lengths[m] + 1
                        self._note(m2, w + (i,))
                        nxt.append(m2)
            self._frontier = nxt
        return self._lengths[key]

    def key_str(self, key):
        w = self._names.get(key)
        if w is None:
            return "<matrix>"
        if not w:
            return "e"
        return " ".join(self.sgs.letter_str(i) for i in w)

    def sort_key(self, key):
        w = self._names.get(key, None)
        return (1, shortlex_key(w) if w is not None else (99, key))


def bs12_model(sgs):
    """Affine representation of <a,b | b^-1 a b = a^2>: faithful over Q."""
    f = _FracField()
    a = ((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))
    b = ((Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1)))
    return MatrixModel(sgs, f, [a, b], name="bs12")


def coxeter_reflection_model(sgs, l, m, n):
    """Geometric reflection representation of the (l,m,n) triangle Coxeter
    group on 3 generators; faithful for every Coxeter group.

    Needs 2*cos(pi/k) exactly: 0 for k=2, 1 for k=3, the golden ratio for
    k=5 (t^2 = t+1) and for k=7 the cubic t^3 = t^2 + 2t - 1.
    """
    def kind_of(k):
        return {2: "rat0", 3: "rat1", 5: "phi", 7: "c7"}[k]

    kinds = {kind_of(k) for k in (l, m, n)} - {"rat0", "rat1"}
    if not kinds:
        field = _FracField()
    elif kinds == {"phi"}:
        field = NumberField([-1, -1, 1])  # t^2 - t - 1, t = 2cos(pi/5)
    elif kinds == {"c7"}:
        field = NumberField([1, -2, -1, 1])  # t^3 - t^2 - 2t + 1, t = 2cos(pi/7)
    else:
        raise ValueError("unsupported cosine mix")

    def two_cos(k):
        kind = kind_of(k)
        if kind == "rat0":
            return field.el(0)
        if kind == "rat1":
            return field.el(1)
        return field.el(0, 1)

    # Coxeter matrix: m(a,b)=m, m(a,c)=l, m(b,c)=n
    pairs = {(0, 1): m, (0, 2): l, (1, 2): n}
    c = {}
    for (i, j), k in pairs.items():
        c[(i, j)] = c[(j, i)] = two_cos(k)

    # reflection r_i sends basis vector alpha_i to -alpha_i and alpha_j
    # (j != i) to alpha_j + 2cos(pi/m_ij) alpha_i; columns are images.
    mats = []
    for i in range(3):
        rows = []
        for r in range(3):
            row = []
            for j in range(3):
                if j == i:
                    row.append(field.neg(field.one()) if r == i else field.zero())
                elif r == j:
                    row.append(field.one())
                elif r == i:
                    row.append(c[(i, j)])
                else:
                    row.append(field.zero())
            rows.append(tuple(row))
        mats.append(tuple(rows))
    return MatrixModel(sgs, field, mats, name=f"coxeter_{l}_{m}_{n}")


# ---------------------------------------------------------------------------
# the two-circle *-algebra


class TorusPairModel:
    """C(T) + C(T) presented by two normal generators g, h with
    g h = h g = 0 and g g* + h h* = 1.

    Letters: 0=g, 1=g*, 2=h, 3=h*.  Basis keys: ('p', n) is z^n on the
    first circle (n=0 the unit projection g g*), ('q', n) likewise for
    the second; the algebra unit is ('p',0) + ('q',0).
    """

    kind = "torus_pair"

    def identity(self):
        return None  # the unit is not a single key

    def unit_expansion(self):
        return [(("p", 0), 1), (("q", 0), 1)]

    def reduce(self, seq):
        if not seq:
            return self.unit_expansion()
        fam = None
        n = 0
        for i in seq:
            f = "p" if i in (0, 1) else "q"
            if fam is None:
                fam = f
            elif f != fam:
                return []
            n += 1 if i in (0, 2) else -1
        return [((fam, n), 1)]

    def mult(self, key, letter):
        fam, n = key
        f = "p" if letter in (0, 1) else "q"
        if f != fam:
            return []
        return [((fam, n + (1 if letter in (0, 2) else -1)), 1)]

    def length(self, key):
        raise ValueError("no length function on this algebra")

    def key_str(self, key):
        fam, n = key
        g = "g" if fam == "p" else "h"
        if n == 0:
            return f"{g} {g}*"
        if n > 0:
            return " ".join([g] * n)
        return " ".join([g + "*"] * (-n))

    def sort_key(self, key):
        fam, n = key
        return (0 if fam == "p" else 1, abs(n), 0 if n >= 0 else 1)
