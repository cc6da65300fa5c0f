"""Instance generators for two hardness constructions.

* Independent set to convexity number: a thick spider with three legs whose
  remainder is the input graph, so that ``con(G) = alpha(H) + 3``.
* 3-SAT to percolation time: clause gadgets, literal-conflict triangles and a
  collector vertex ``x``, with perpetuation gadgets hung on the vertices that
  must enter the hull early. A satisfying assignment gives a hull set that
  needs exactly ``k`` interval steps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph, GraphError

# -- formulas ----------------------------------------------------------------


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise CnfError(f"clause {clause} does not have exactly 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"literal {lit} out of range for {self.num_vars} variables")

    @property
    def has_duplicate_literals(self) -> bool:
        return any(len(set(c)) < 3 for c in self.clauses)

    def opposite_pairs(self) -> list[tuple[int, int, int, int]]:
        """All ``(i, a, j, b)`` with ``(i, a) < (j, b)`` whose literals are complementary."""
        slots = [(i, a, lit) for i, c in enumerate(self.clauses) for a, lit in enumerate(c)]
        return [
            (i, a, j, b)
            for idx, (i, a, lit) in enumerate(slots)
            for j, b, other in slots[idx + 1:]
            if lit == -other
        ]

    def evaluate(self, assignment: Mapping[int, bool]) -> bool:
        return all(any(literal_value(lit, assignment) for lit in c) for c in self.clauses)


def literal_value(lit: int, assignment: Mapping[int, bool]) -> bool:
    value = bool(assignment[abs(lit)])
    return value if lit > 0 else not value


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF; every clause must have exactly three literals."""
    header = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise CnfError(f"line {lineno}: second problem line")
            m = re.fullmatch(r"p\s+cnf\s+(\d+)\s+(\d+)", line)
            if m is None:
                raise CnfError(f"line {lineno}: malformed header, expected 'p cnf <vars> <clauses>'")
            header = (int(m.group(1)), int(m.group(2)))
            continue
        if header is None:
            raise CnfError(f"line {lineno}: clause before 'p cnf' header")
        try:
            tokens.extend(int(t) for t in line.split())
        except ValueError:
            raise CnfError(f"line {lineno}: non-integer literal") from None
    if header is None:
        raise CnfError("missing 'p cnf' header")
    num_vars, num_clauses = header
    clauses = []
    current: list[int] = []
    for t in tokens:
        if t == 0:
            if len(current) != 3:
                raise CnfError(f"clause {len(clauses) + 1} has {len(current)} literals, expected 3")
            clauses.append(tuple(current))
            current = []
        else:
            if abs(t) > num_vars:
                raise CnfError(f"literal {t} out of range for {num_vars} variables")
            current.append(t)
    if current:
        raise CnfError("last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise CnfError(f"header declares {num_clauses} clauses but {len(clauses)} were read")
    return CnfFormula(num_vars, tuple(clauses))


def format_dimacs_cnf(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in phi.clauses)
    return "\n".join(lines) + "\n"


# -- instances ---------------------------------------------------------------


@dataclass(frozen=True)
class ReductionInstance:
    graph: Graph
    labels: tuple[str, ...]
    k: int | None = None
    formula: CnfFormula | None = None

    def vertex(self, label: str) -> int:
        return self.labels.index(label)

    def label_map(self) -> dict[int, str]:
        return dict(enumerate(self.labels))


class _Builder:
    def __init__(self):
        self.labels: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, label: str) -> int:
        self.labels.append(label)
        return len(self.labels) - 1

    def link(self, *pairs: tuple[int, int]) -> None:
        self.edges.extend(pairs)

    def triangle(self, a: int, b: int, c: int) -> None:
        self.link((a, b), (b, c), (a, c))

    def graph(self) -> Graph:
        return Graph(len(self.labels), self.edges)


def build_thick_spider_instance(H: Graph) -> ReductionInstance:
    """Thick spider with legs ``s0..s2``, body ``c0..c2`` and remainder ``H``.

    ``c_i`` sees every ``s_j`` with ``j != i`` and every remainder vertex.
    """
    b = _Builder()
    S = [b.add(f"s{i}") for i in range(3)]
    C = [b.add(f"c{i}") for i in range(3)]
    R = [b.add(f"h{v}") for v in range(H.n)]
    b.triangle(*C)
    for i in range(3):
        b.link(*((C[i], S[j]) for j in range(3) if j != i))
        b.link(*((C[i], r) for r in R))
    b.link(*((R[x], R[y]) for x, y in H.edges))
    return ReductionInstance(b.graph(), tuple(b.labels))


# perpetuation gadget: offsets 0..6 stand for p, p1..p6
PERPETUATION_EDGES = (
    (0, 1), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
    (1, 3), (3, 5), (2, 5), (2, 4), (4, 6),
)
GADGET_A = (1, 2, 3)
GADGET_B = (4, 5, 6)
GADGET_C = (2, 3, 4, 5)


def _hang_gadget(b: _Builder, anchor: int, name: str) -> list[int]:
    ids = [anchor] + [b.add(f"p{i}@{name}") for i in range(1, 7)]
    b.link(*((ids[x], ids[y]) for x, y in PERPETUATION_EDGES))
    return ids


def attach_perpetuation(G: Graph, anchor: int) -> Graph:
    """``G`` plus six fresh vertices forming a perpetuation gadget around ``anchor``."""
    if not 0 <= anchor < G.n:
        raise GraphError(f"anchor {anchor} out of range for {G.n} vertices")
    ids = [anchor] + list(range(G.n, G.n + 6))
    extra = [(ids[x], ids[y]) for x, y in PERPETUATION_EDGES]
    return Graph(G.n + 6, list(G.edges) + extra)


def perpetuation_gadget() -> Graph:
    return Graph(7, PERPETUATION_EDGES)


def _clause_core(b: _Builder, i: int) -> dict[str, int]:
    """Vertices and edges of one clause gadget, without its perpetuation gadgets."""
    tag = i + 1
    ids = {"z": b.add(f"z:{tag}")}
    for role in "uvwqr":
        for a in range(3):
            ids[f"{role}{a}"] = b.add(f"{role}:{tag}:{a + 1}")
    for a in range(3):
        u, v, w, q = (ids[f"{r}{a}"] for r in "uvwq")
        b.link((u, w), (w, v), (v, u), (u, q), (q, v), (u, ids["z"]))
    for a in range(3):
        nxt = (a + 1) % 3
        b.link(
            (ids[f"u{a}"], ids[f"u{nxt}"]),
            (ids[f"w{a}"], ids[f"r{a}"]),
            (ids[f"r{a}"], ids[f"w{nxt}"]),
            (ids[f"w{a}"], ids[f"w{nxt}"]),
        )
    return ids


CLAUSE_CORE_VERTICES = 16
CLAUSE_CORE_EDGES = 30


def build_percolation_instance(phi: CnfFormula, k: int = 9) -> ReductionInstance:
    """Graph with a hull set needing ``k`` steps iff ``phi`` is satisfiable."""
    if k < 9:
        raise ValueError("the construction needs k >= 9")
    pairs = phi.opposite_pairs()
    if not pairs:
        raise ValueError("formula has no pair of complementary literals; x would be isolated")
    b = _Builder()
    cores = []
    for i in range(len(phi.clauses)):
        ids = _clause_core(b, i)
        for role in ("q0", "q1", "q2", "r0", "r1", "r2", "z"):
            _hang_gadget(b, ids[role], b.labels[ids[role]])
        cores.append(ids)
    ys = []
    for i, a, j, bb in pairs:
        tag = f"{i + 1}:{a + 1}:{j + 1}:{bb + 1}"
        y = b.add(f"y:{tag}")
        y2 = b.add(f"y':{tag}")
        b.triangle(cores[i][f"w{a}"], cores[j][f"w{bb}"], y)
        _hang_gadget(b, y2, f"y':{tag}")
        ys.append((y, y2))
    x = b.add("x")
    for y, y2 in ys:
        b.triangle(y, y2, x)
    for step in range(1, k - 9 + 1):
        p = b.add(f"p@t:{step}")
        _hang_gadget(b, p, f"t:{step}")
        t = b.add(f"t:{step}")
        b.triangle(x, t, p)
        x = t
    return ReductionInstance(b.graph(), tuple(b.labels), k, phi)


def _normalize_assignment(phi: CnfFormula, assignment) -> dict[int, bool]:
    if isinstance(assignment, Mapping):
        values = {int(var): bool(val) for var, val in assignment.items()}
    else:
        values = {var: bool(val) for var, val in enumerate(assignment, 1)}
    missing = [v for v in range(1, phi.num_vars + 1) if v not in values]
    if missing:
        raise ValueError(f"assignment misses variables {missing}")
    return values


def assignment_to_witness(
    inst: ReductionInstance, assignment: Mapping[int, bool] | Sequence[bool]
) -> frozenset[int]:
    """Hull set of the percolation instance built from a satisfying assignment.

    Takes ``p1`` and ``p2`` of every perpetuation gadget and, in each clause, the
    ``u`` vertex of its first true literal. Picking a single literal per clause
    matters: two selected ``u`` vertices in one clause complete the clause core
    too early and let ``x`` in before step ``k``.
    """
    phi = inst.formula
    if phi is None or inst.k is None:
        raise ValueError("instance was not built from a formula")
    values = _normalize_assignment(phi, assignment)
    if not phi.evaluate(values):
        raise ValueError("assignment does not satisfy the formula")
    chosen = set()
    for i, clause in enumerate(phi.clauses):
        a = next(a for a, lit in enumerate(clause) if literal_value(lit, values))
        chosen.add(inst.vertex(f"u:{i + 1}:{a + 1}"))
    for v, label in enumerate(inst.labels):
        if label.startswith(("p1@", "p2@")):
            chosen.add(v)
    return frozenset(chosen)


def all_true_literal_set(
    inst: ReductionInstance, assignment: Mapping[int, bool] | Sequence[bool]
) -> frozenset[int]:
    """Variant taking the ``u`` vertex of every true literal; kept for comparison."""
    phi = inst.formula
    values = _normalize_assignment(phi, assignment)
    chosen = {
        inst.vertex(f"u:{i + 1}:{a + 1}")
        for i, clause in enumerate(phi.clauses)
        for a, lit in enumerate(clause)
        if literal_value(lit, values)
    }
    chosen.update(v for v, label in enumerate(inst.labels) if label.startswith(("p1@", "p2@")))
    return frozenset(chosen)
