"""Workbench for quantum symmetry presentations of group duals.

Subpackages cover: group presentations and their symmetric generating
sets, shortlex Knuth-Bendix rewriting with ball/growth/spectrum queries,
exact noncommutative *-algebra on the entries of a fundamental unitary,
a sound derivation engine replaying structural proofs from tactic
scripts, and finite numeric checks (dual metric spaces, doublings).
"""

__version__ = "0.1.0"
