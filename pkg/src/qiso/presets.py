"""The preset catalog: one derivation script per worked structural result.

Each preset is a script dict: the group DSL text, the collection model,
human aliases for the fundamental-unitary entries, an ordered tactic
list and a goal.  Scripts are data and replay deterministically; they
are also serializable to JSON for external editing (``--script``).

Naming inside a 2k-letter alphabet follows the row-by-row reading
A, B, C, D / E, F, G, H (first and second block rows), matching the
transcripts the derivations print.
"""


def _g4_aliases():
    return {"A": "u[1,1]", "B": "u[1,2]", "C": "u[1,3]", "D": "u[1,4]",
            "E": "u[3,1]", "F": "u[3,2]", "G": "u[3,3]", "H": "u[3,4]"}


def _sat(depth=4):
    return {"op": "Saturate", "depth": depth}


def z2():
    return {
        "preset": "z2",
        "group": "group z2 { gens a:2; }",
        "model": "kb",
        "aliases": {"A": "u[1,1]"},
        "tactics": [
            {"op": "Relator", "word": "a a", "label": "ra"},
            _sat(),
            {"op": "Assert", "equal": ["A A", "1"]},
            {"op": "Assert", "equal": ["A*", "A"]},
        ],
        "goal": {"kind": "Diagonal"},
    }


# ---------------------------------------------------------------------------
# free products


def z3_free_z5():
    return {
        "preset": "z3_free_z5",
        "group": "group z3_free_z5 { gens a:3, b:5; }",
        "model": "kb",
        "aliases": _g4_aliases(),
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            _sat(),
            {"op": "Compare", "w1": "a a", "w2": "a^-1", "label": "pa"},
            _sat(),
            {"op": "Assert", "zero": "C"},
            {"op": "Assert", "zero": "D"},
            {"op": "Assert", "zero": "E"},
            {"op": "Assert", "zero": "F"},
        ],
        "goal": {"kind": "BlockDiagonal", "blocks": [["a"], ["b"]]},
    }


def z2_free_z3():
    return {
        "preset": "z2_free_z3",
        "group": "group z2_free_z3 { gens a:2, b:3; }",
        "model": "kb",
        "aliases": {"P": "u[1,1]", "Q": "u[1,2]",
                    "R": "u[2,1]", "S": "u[2,2]", "T": "u[2,3]"},
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            _sat(),
            {"op": "Compare", "w1": "b b", "w2": "b^-1", "label": "pb"},
            _sat(),
            {"op": "Assert", "zero": "R"},
            {"op": "Assert", "zero": "Q"},
        ],
        "goal": {"kind": "BlockDiagonal", "blocks": [["a"], ["b"]]},
    }


def z4_free_z3():
    # the order-3 factor is the smaller one: comparing b^2 with b^-1
    # leaves no length-1 coefficient for the order-4 letters at all
    return {
        "preset": "z4_free_z3",
        "group": "group z4_free_z3 { gens a:4, b:3; }",
        "model": "kb",
        "aliases": _g4_aliases(),
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            _sat(),
            {"op": "Compare", "w1": "b b", "w2": "b^-1", "label": "qb"},
            _sat(),
            {"op": "Assert", "zero": "E"},
            {"op": "Assert", "zero": "F"},
            {"op": "Assert", "zero": "C"},
            {"op": "Assert", "zero": "D"},
        ],
        "goal": {"kind": "BlockDiagonal", "blocks": [["a"], ["b"]]},
    }


def z2_free_z4_free_z5():
    al = {}
    names = [["A11", "A12", "A13", "A14", "A15"],
             ["A21", "A22", "A23", "A24", "A25"],
             ["A31", "A32", "A33", "A34", "A35"]]
    rows = [1, 2, 4]  # letter rows of a, b, c
    for i, row in enumerate(rows):
        for j in range(5):
            al[names[i][j]] = f"u[{row},{j + 1}]"
    return {
        "preset": "z2_free_z4_free_z5",
        "group": "group z2_free_z4_free_z5 { gens a:2, b:4, c:5; }",
        "model": "kb",
        "aliases": al,
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            {"op": "RelatorPair", "gen": "c", "label": "rc"},
            _sat(),
            # the largest-order factor first: its power comparison has
            # empty length-1 coefficients, killing the whole c row
            {"op": "Compare", "w1": "c c c c", "w2": "c^-1", "label": "pc"},
            _sat(),
            {"op": "Assert", "zero": "A31"},
            {"op": "Assert", "zero": "A32"},
            {"op": "Assert", "zero": "A24"},
            {"op": "Assert", "zero": "A25"},
            {"op": "Compare", "w1": "b b b", "w2": "b^-1", "label": "pb"},
            # x^3 = -x* for the surviving order-2 column entry; its
            # square dies against the mixed-row zero products
            {"op": "MulRight", "rel": "seed:unitarity(UU*,2,3)",
             "mon": "A21*", "label": "y1"},
            {"op": "Overlap", "lhs1": "A21 A21 A21", "lhs2": "A21 A21 A21*"},
            _sat(),
            {"op": "Assert", "zero": "A21"},
            {"op": "Assert", "zero": "A12"},
            {"op": "Assert", "zero": "A14"},
        ],
        "goal": {"kind": "BlockDiagonal", "blocks": [["a"], ["b"], ["c"]]},
    }


# ---------------------------------------------------------------------------
# direct products


def _normality_muls(rules):
    """MulLeft x on the rule x^{n-1} = x* makes x normal via the rule
    collision x^n -> x* x vs x x*."""
    out = []
    for rel, mon in rules:
        out.append({"op": "MulLeft", "rel": rel, "mon": mon, "label": f"n.{mon}"})
    return out


def z3_x_z3():
    sandwiches = []
    for x, key in (("A", "a b"), ("A", "a b^-1"), ("B", "a^-1 b"),
                   ("B", "a^-1 b^-1")):
        sandwiches.append({"op": "MulLeft", "rel": f"ab/{key}", "mon": x})
        sandwiches.append({"op": "MulRight", "rel": f"ab/{key}", "mon": x})
    for x, key in (("E", "a b"), ("E", "a b^-1"), ("F", "a^-1 b"),
                   ("F", "a^-1 b^-1")):
        sandwiches.append({"op": "MulLeft", "rel": f"ab/{key}", "mon": x})
        sandwiches.append({"op": "MulRight", "rel": f"ab/{key}", "mon": x})
    commutes = [{"op": "CommuteFromSandwich", "x": x, "y": y}
                for x, y in (("A", "G"), ("A", "H"), ("B", "G"), ("B", "H"),
                             ("E", "C"), ("E", "D"), ("F", "C"), ("F", "D"))]
    return {
        "preset": "z3_x_z3",
        "group": "group z3_x_z3 { gens a:3, b:3; direct; }",
        "model": "kb",
        "aliases": _g4_aliases(),
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            {"op": "Compare", "w1": "a a", "w2": "a^-1", "label": "pa"},
            {"op": "Compare", "w1": "b b", "w2": "b^-1", "label": "pb"},
            _sat(),
            {"op": "Compare", "w1": "a b", "w2": "b a", "label": "ab"},
            {"op": "Compare", "w1": "a b^-1", "w2": "b^-1 a", "label": "ab2"},
            _sat(),
            *_normality_muls([("pa/a^-1", "A"), ("pa/a", "B"),
                              ("pa/b^-1", "C"), ("pa/b", "D"),
                              ("pb/a^-1", "E"), ("pb/a", "F"),
                              ("pb/b^-1", "G"), ("pb/b", "H")]),
            _sat(),
            *sandwiches,
            *commutes,
            _sat(),
        ],
        "goal": {"kind": "Commutative"},
    }


def z3_x_z5():
    return {
        "preset": "z3_x_z5",
        "group": "group z3_x_z5 { gens a:3, b:5; direct; }",
        "model": "kb",
        "aliases": _g4_aliases(),
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            _sat(),
            {"op": "Compare", "w1": "a a", "w2": "a^-1", "label": "pa"},
            _sat(),
            {"op": "Assert", "zero": "C"},
            {"op": "Assert", "zero": "E"},
            {"op": "Compare", "w1": "b b b b", "w2": "b^-1", "label": "pb"},
            *_normality_muls([("pa/a^-1", "A"), ("pa/a", "B"),
                              ("pb/b^-1", "G"), ("pb/b", "H")]),
            {"op": "Compare", "w1": "a b", "w2": "b a", "label": "ab"},
            {"op": "Compare", "w1": "a b^-1", "w2": "b^-1 a", "label": "ab2"},
            _sat(),
        ],
        "goal": {"kind": "BlockDiagonal", "blocks": [["a"], ["b"]],
                 "cross_commute": True},
    }


def z2_x_z3():
    return {
        "preset": "z2_x_z3",
        "group": "group z2_x_z3 { gens a:2, b:3; direct; }",
        "model": "kb",
        "aliases": {"P": "u[1,1]", "Q": "u[1,2]",
                    "R": "u[2,1]", "S": "u[2,2]", "T": "u[2,3]"},
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            _sat(),
            {"op": "Compare", "w1": "b b", "w2": "b^-1", "label": "pb"},
            _sat(),
            {"op": "Assert", "zero": "R"},
            {"op": "Assert", "zero": "Q"},
            *_normality_muls([("pb/b^-1", "S"), ("pb/b", "T")]),
            {"op": "Compare", "w1": "a b", "w2": "b a", "label": "ab"},
            {"op": "Compare", "w1": "a b^-1", "w2": "b^-1 a", "label": "ab2"},
            _sat(),
        ],
        "goal": {"kind": "BlockDiagonal", "blocks": [["a"], ["b"]],
                 "cross_commute": True},
    }


def z4_x_z3():
    return {
        "preset": "z4_x_z3",
        "group": "group z4_x_z3 { gens a:4, b:3; direct; }",
        "model": "kb",
        "aliases": _g4_aliases(),
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            _sat(),
            {"op": "Compare", "w1": "b b", "w2": "b^-1", "label": "pb"},
            _sat(),
            {"op": "Assert", "zero": "E"},
            {"op": "Assert", "zero": "F"},
            {"op": "Assert", "zero": "C"},
            {"op": "Assert", "zero": "D"},
        ],
        "goal": {"kind": "BlockDiagonal", "blocks": [["a"], ["b"]],
                 "cross_commute": False},
    }


# ---------------------------------------------------------------------------
# doublings over two-generator groups


def _dihedral(preset, n):
    k = n // 2
    if n % 2:
        w1, w2 = f"(s t)^{k} s", f"(t s)^{k} t"
        key = "s t " * k + "s"
        key = key.strip()
    else:
        w1, w2 = f"(s t)^{k}", f"(t s)^{k}"
        key = ("s t " * k).strip()
    tactics = [
        {"op": "RelatorPair", "gen": "s", "label": "rs"},
        {"op": "RelatorPair", "gen": "t", "label": "rt"},
        _sat(),
        {"op": "Compare", "w1": w1, "w2": w2, "label": "w"},
    ]
    if n % 2:
        tactics += [
            {"op": "Antipode", "rel": f"w/{key}", "label": "wk"},
            {"op": "LinComb", "terms": [["1/2", f"w/{key}"], ["1/2", "wk"]],
             "label": "l1"},
            {"op": "LinComb", "terms": [["1/2", f"w/{key}"], ["-1/2", "wk"]],
             "label": "l2"},
        ]
    else:
        # multiply the long relation by squared entries: dead cross
        # terms split it into its diagonal and anti-diagonal halves
        tactics += [
            {"op": "MulLeft", "rel": "rs/e", "mon": "A", "label": "a3"},
            {"op": "MulLeft", "rel": f"w/{key}", "mon": "D D", "label": "wd"},
            {"op": "MulRight", "rel": "rs/e",
             "mon": " ".join(["D A"] * k), "label": "wu"},
            {"op": "MulLeft", "rel": f"w/{key}", "mon": "C C", "label": "wc"},
        ]
    tactics += [
        {"op": "Derive", "lhs": "D D", "rhs": "A A", "label": "d2"},
        {"op": "Derive", "lhs": "C C", "rhs": "B B", "label": "c2"},
        {"op": "MulLeft", "rel": "d2", "mon": "D", "label": "m1"},
        {"op": "MulLeft", "rel": "c2", "mon": "C", "label": "m2"},
        _sat(),
    ]
    rel_images = [["s s", "t t"], [w1, w2]]
    return {
        "preset": preset,
        "group": f"group d{2 * n} {{ gens s:2, t:2; rels (s t)^{n} = e; }}",
        "model": "kb",
        "aliases": {"A": "u[1,1]", "B": "u[1,2]", "C": "u[2,1]", "D": "u[2,2]"},
        "tactics": tactics,
        "goal": {"kind": "DoublingShape", "sigma": {"s": "t", "t": "s"},
                 "relator_images": rel_images},
    }


def dihedral_5_2():
    return _dihedral("dihedral_5_2", 5)


def dihedral_5_2_even():
    return _dihedral("dihedral_5_2_even", 6)


def bs_1_2():
    uc = lambda fam, p, side, mon, label: {
        "op": "UnitarityCollapse", "family": fam, "p": p, "side": side,
        "mon": mon, "label": label}
    return {
        "preset": "bs_1_2",
        "group": "group bs_1_2 { gens a:0, b:0; rels b^-1 a b = a^2; }",
        "model": "bs12",
        "aliases": _g4_aliases(),
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            _sat(),
            {"op": "Compare", "w1": "a b", "w2": "b a a", "label": "c1"},
            {"op": "Compare", "w1": "a^-1 b", "w2": "b a^-1 a^-1", "label": "c2"},
            {"op": "Compare", "w1": "a^-1 b^-1 a", "w2": "a b^-1", "label": "c3"},
            {"op": "Compare", "w1": "b^-1 a b", "w2": "a a", "label": "c4"},
            _sat(),
            uc("UU*", 3, "left", "E", "kE"),
            uc("UU*", 4, "right", "F", "kF"),
            _sat(),
            uc("Ut*Ut", 1, "right", "H", "kH"),
            _sat(),
            {"op": "Assert", "zero": "C"}, {"op": "Assert", "zero": "D"},
            {"op": "Assert", "zero": "E"}, {"op": "Assert", "zero": "F"},
            {"op": "Assert", "zero": "H"},
            # partial-isometry rules for A and B, then the centrality
            # of A A*, A* A, B B*, B* B via superposition with the
            # conjugation rules G A^2 -> A G etc.
            uc("UU*", 1, "left", "A", "pA1"),
            uc("Ut*Ut", 1, "left", "A*", "pA2"),
            uc("Ut*Ut", 1, "right", "A", "pA3"),
            uc("UU*", 1, "left", "B", "pB1"),
            uc("Ut*Ut", 1, "left", "B*", "pB2"),
            uc("Ut*Ut", 1, "right", "B", "pB3"),
            _sat(),
            {"op": "Overlap", "lhs1": "A* A A", "lhs2": "A A A*"},
            {"op": "Overlap", "lhs1": "B* B B", "lhs2": "B B B*"},
            _sat(),
            {"op": "Overlap", "lhs1": "G A A", "lhs2": "A A A*"},
            {"op": "Overlap", "lhs1": "G A A", "lhs2": "A A* A*"},
            {"op": "Overlap", "lhs1": "G A* A*", "lhs2": "A* A* A"},
            {"op": "Overlap", "lhs1": "A* G A", "lhs2": "G A A"},
            {"op": "Overlap", "lhs1": "G B B", "lhs2": "B B B*"},
            {"op": "Overlap", "lhs1": "G B B", "lhs2": "B B* B*"},
            {"op": "Overlap", "lhs1": "G B* B*", "lhs2": "B* B* B"},
            {"op": "Overlap", "lhs1": "B* G B", "lhs2": "G B B"},
            _sat(),
        ],
        "goal": {"kind": "DoublingShape",
                 "sigma": {"a": "a^-1", "b": "b"},
                 "relator_images": [["b^-1 a b", "a a"]]},
    }


def _two_gen_doubling(preset, n):
    """<a,b | a^2, b^3, (ab)^n>, doubling along a -> a, b -> b^-1."""
    rep = " ".join(["b^-1 a"] * (n - 1))
    return {
        "preset": preset,
        "group": f"group {preset} {{ gens a:2, b:3; rels (a b)^{n} = e; }}",
        "model": "kb",
        "aliases": {"A": "u[1,1]", "B": "u[1,2]",
                    "D": "u[2,1]", "E": "u[2,2]", "F": "u[2,3]"},
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            {"op": "Compare", "w1": "b b", "w2": "b^-1", "label": "pb"},
            _sat(),
            {"op": "Assert", "zero": "D"},
            {"op": "Assert", "zero": "B"},
            *_normality_muls([("pb/b^-1", "E"), ("pb/b", "F")]),
            _sat(),
            {"op": "Compare", "w1": "a b", "w2": rep, "label": "w1"},
            {"op": "Compare", "w1": "b a",
             "w2": " ".join(["a b^-1"] * (n - 1)), "label": "w2"},
            # centrality of E E* and F F*: superpose the two long
            # conjugation rules on their shared inner part
            {"op": "Overlap", "lhs1": " ".join(["E* A"] * (n - 1)),
             "lhs2": " ".join(["A E*"] * (n - 1))},
            {"op": "Overlap", "lhs1": " ".join(["F* A"] * (n - 1)),
             "lhs2": " ".join(["A F*"] * (n - 1))},
            {"op": "NormalPair", "x": "E", "y": "F"},
            _sat(),
        ],
        "goal": {"kind": "DoublingShape",
                 "sigma": {"a": "a", "b": "b^-1"},
                 "relator_images": [["a a", "e"], ["b b", "b^-1"],
                                    ["a b", rep]]},
    }


def tetra():
    return _two_gen_doubling("tetra", 3)


def octa():
    return _two_gen_doubling("octa", 4)


def icosa():
    return _two_gen_doubling("icosa", 5)


# ---------------------------------------------------------------------------
# Coxeter groups


def _coxeter(preset, n, model):
    return {
        "preset": preset,
        "group": (f"group {preset} {{ gens a:2, b:2, c:2; "
                  f"rels (a c)^2 = e; (a b)^3 = e; (b c)^{n} = e; }}"),
        "model": model,
        "aliases": {"A": "u[1,1]", "B": "u[1,2]", "C": "u[1,3]",
                    "D": "u[2,1]", "E": "u[2,2]", "F": "u[2,3]",
                    "G": "u[3,1]", "H": "u[3,2]", "K": "u[3,3]"},
        "tactics": [
            {"op": "RelatorPair", "gen": "a", "label": "ra"},
            {"op": "RelatorPair", "gen": "b", "label": "rb"},
            {"op": "RelatorPair", "gen": "c", "label": "rc"},
            _sat(),
            {"op": "Compare", "w1": "a c", "w2": "c a", "label": "cc"},
            {"op": "LengthZero", "word": "a c", "label": "lz"},
            {"op": "MulLeft", "rel": "rc/e", "mon": "B", "label": "r1"},
            {"op": "MulLeft", "rel": "lz/e", "mon": "H", "label": "r2"},
            {"op": "LinComb", "terms": [["1", "r1"], ["-1", "r2"]],
             "label": "l1"},
            {"op": "MulRight", "rel": "lz/e", "mon": "H", "label": "r3"},
            _sat(),
            {"op": "Assert", "zero": "B"},
            {"op": "Assert", "zero": "D"},
            {"op": "MulLeft", "rel": "ra/e", "mon": "H", "label": "r4"},
            _sat(),
            {"op": "Assert", "zero": "H"},
            {"op": "Assert", "zero": "F"},
            {"op": "Compare", "w1": "b a b", "w2": "a b a", "label": "w3"},
            _sat(),
            {"op": "Overlap", "lhs1": "E E", "lhs2": "E C E", "label": "o1"},
            {"op": "Overlap", "lhs1": "C E", "lhs2": "E E", "label": "o2"},
            _sat(),
            {"op": "Assert", "zero": "C"},
            {"op": "Assert", "zero": "G"},
        ],
        "goal": {"kind": "Diagonal"},
    }


def coxeter_2_3_5():
    return _coxeter("coxeter_2_3_5", 5, "kb")


def coxeter_2_3_7():
    return _coxeter("coxeter_2_3_7", 7, "coxeter:2,3,7")


# ---------------------------------------------------------------------------
# the matrix-generator preset over C(T) + C(T)


def zxz2_matrix_f():
    zw = lambda w, label: {"op": "ZeroWord", "word": w, "label": label}
    return {
        "preset": "zxz2_matrix_f",
        "group": "group zxz2f { gens g:0, h:0; }",
        "model": "torus_pair",
        "aliases": {"A1": "u[1,1]", "A2": "u[1,2]", "B1": "u[1,3]", "B2": "u[1,4]",
                    "C1": "u[3,1]", "C2": "u[3,2]", "D1": "u[3,3]", "D2": "u[3,4]"},
        "tactics": [
            {"op": "CompareLin", "lhs": [["g", "g^-1"]], "rhs": [["g^-1", "g"]],
             "label": "s1"},
            {"op": "CompareLin", "lhs": [["h", "h^-1"]], "rhs": [["h^-1", "h"]],
             "label": "s2"},
            {"op": "Antipode", "rel": "s1/g g*", "label": "k1"},
            {"op": "LinComb", "terms": [["1/2", "s1/g g*"], ["-1/2", "k1"]],
             "label": "nA"},
            {"op": "Antipode", "rel": "s1/h h*", "label": "k2"},
            {"op": "LinComb", "terms": [["1/2", "s2/g g*"], ["-1/2", "k2"]],
             "label": "nC"},
            {"op": "Antipode", "rel": "s2/h h*", "label": "k3"},
            {"op": "LinComb", "terms": [["1/2", "s2/h h*"], ["-1/2", "k3"]],
             "label": "nD"},
            _sat(),
            {"op": "Assert", "normal": "A1"}, {"op": "Assert", "normal": "A2"},
            {"op": "Assert", "normal": "B1"}, {"op": "Assert", "normal": "B2"},
            {"op": "Assert", "normal": "C1"}, {"op": "Assert", "normal": "C2"},
            {"op": "Assert", "normal": "D1"}, {"op": "Assert", "normal": "D2"},
            zw("g h", "z1"), zw("h g", "z2"),
            zw("g h^-1", "z3"), zw("h^-1 g", "z4"),
            _sat(6),
            {"op": "CompareLin", "lhs": [["g", "g^-1"], ["h", "h^-1"]],
             "rhs": "UNIT", "label": "s3"},
            {"op": "MulRight", "rel": "s3/g g", "mon": "A2", "label": "m1"},
            {"op": "Positivity", "mon": "A1 A2*"},
            {"op": "MulRight", "rel": "s3/h h", "mon": "B2", "label": "m2"},
            {"op": "Positivity", "mon": "B1 B2*"},
            _sat(),
            {"op": "Assert", "zero": "A1 A2"}, {"op": "Assert", "zero": "C1 C2"},
            {"op": "Assert", "zero": "B1 B2"}, {"op": "Assert", "zero": "D1 D2"},
        ],
        "goal": {
            "kind": "FactsHold",
            "normals": ["A1", "A2", "B1", "B2", "C1", "C2", "D1", "D2"],
            "commutes": [["A1", "A2"], ["D1", "D2"], ["B1", "B2"], ["C1", "C2"]],
            "zeros": ["A1 C1", "A1 C2", "A2 C1", "A2 C2",
                      "A1 B1", "A1 B2", "A2 B1", "A2 B2",
                      "D1 C1", "D1 C2", "D2 C1", "D2 C2"],
        },
    }


PRESETS = {
    "z2": z2,
    "z3_free_z5": z3_free_z5,
    "z2_free_z3": z2_free_z3,
    "z4_free_z3": z4_free_z3,
    "z2_free_z4_free_z5": z2_free_z4_free_z5,
    "z3_x_z3": z3_x_z3,
    "z3_x_z5": z3_x_z5,
    "z2_x_z3": z2_x_z3,
    "z4_x_z3": z4_x_z3,
    "dihedral_5_2": dihedral_5_2,
    "dihedral_5_2_even": dihedral_5_2_even,
    "bs_1_2": bs_1_2,
    "tetra": tetra,
    "octa": octa,
    "icosa": icosa,
    "coxeter_2_3_5": coxeter_2_3_5,
    "coxeter_2_3_7": coxeter_2_3_7,
    "zxz2_matrix_f": zxz2_matrix_f,
}


def get(name):
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}")
    return PRESETS[name]()


# classical group-like substitutions for presets over seeded algebras:
# the coproduct solution sends the first-circle generator pair to
# (z, 0) and the second to (0, z); keys are the torus-pair letters.
GROUPLIKE_SUBSTITUTIONS = {
    "zxz2_matrix_f": {
        (0, 0): (0,),       # first diagonal block: g
        (0, 2): (2,),       # its off-diagonal partner: h
        (2, 0): (2,),
        (2, 2): (0,),
        (0, 1): None, (0, 3): None, (2, 1): None, (2, 3): None,
    },
}
