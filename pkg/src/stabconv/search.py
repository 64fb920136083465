"""Bidirectional breadth-first search over stabilizer codes connected by
single CZ gates, with canonical-form deduplication.

Codes reached from both endpoint families are deduplicated by a canonical
key that is exact under qubit permutation: per-qubit letter-count profiles
over the full stabilizer group (and its logical cosets) seed a refinement,
remaining symmetric qubits are individualized recursively, and the key is
the minimal reduced tableau over the candidate orderings.  The key ignores
signs, so codes differing only by local phase conventions collide; a key
collision is always confirmed by an exact group comparison before use.

Local equivalence of endpoint families is explored through graph states:
a code maps to a state by entangling a reference qubit with its logical
operators, the state reduces to a graph under local H/S operations, and
the local-complementation orbit of that graph enumerates locally
equivalent codes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from .gf2 import LinearSpan, rref
from .pauli import PauliOperator
from .tableau import (
    GateOp,
    StabilizerCode,
    apply_gate,
    apply_ops,
    check_valid_tableau,
    groups_equal,
    permute_qubits,
)
from .verify import enumerate_errors, verify_correctable


# ---------------------------------------------------------------------------
# graphs and local complementation


@dataclass(frozen=True)
class Graph:
    """Undirected graph as bit-packed adjacency rows; no self-loops."""

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        mask = (1 << self.n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~mask:
                raise ValueError(f"row {v} exceeds {self.n} vertices")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in range(self.n):
                if (row >> u & 1) != (self.adjacency[u] >> v & 1):
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adjacency[u] >> v & 1
        ]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the edges among the neighbours of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    nbrs = g.adjacency[v]
    rows = list(g.adjacency)
    for u in range(g.n):
        if nbrs >> u & 1:
            rows[u] ^= nbrs & ~(1 << u)
    return Graph(g.n, tuple(rows))


def _graph_leaf_key(g: Graph, ordering: Sequence[int]) -> bytes:
    nbytes = (g.n + 7) // 8
    out = bytearray()
    for new in range(g.n):
        row = 0
        old_row = g.adjacency[ordering[new]]
        for new2 in range(g.n):
            row |= ((old_row >> ordering[new2]) & 1) << new2
        out += row.to_bytes(nbytes, "big")
    return bytes(out)


def graph_canonical_form(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    """Permutation-invariant key and a vertex ordering achieving it."""
    init = [g.degree(v) for v in range(g.n)]
    pair = {(u, v): (g.adjacency[u] >> v) & 1 for u in range(g.n) for v in range(g.n) if u != v}

    def twins(u: int, v: int) -> bool:
        # interchangeable vertices: identical neighbourhoods apart from each other
        return g.adjacency[u] == g.adjacency[v] or (
            g.adjacency[u] | (1 << u)
        ) == (g.adjacency[v] | (1 << v))

    return _canonical_order(
        g.n, init, pair.__getitem__, twins, lambda order: _graph_leaf_key(g, order)
    )


def graph_key(g: Graph) -> bytes:
    return graph_canonical_form(g)[0]


@dataclass(frozen=True)
class LcOrbit:
    """Closure of a graph under local complementation, deduplicated by
    canonical graph key; ``truncated`` flags an orbit cut off at the cap."""

    graphs: tuple[Graph, ...]
    truncated: bool


def lc_orbit(g: Graph, cap: int) -> LcOrbit:
    if cap < 1:
        raise ValueError("cap must be positive")
    seen: dict[bytes, Graph] = {graph_key(g): g}
    queue = [g]
    truncated = False
    while queue and not truncated:
        current = queue.pop()
        for v in range(g.n):
            candidate = local_complement(current, v)
            key = graph_key(candidate)
            if key in seen:
                continue
            if len(seen) >= cap:
                truncated = True
                break
            seen[key] = candidate
            queue.append(candidate)
    return LcOrbit(tuple(seen.values()), truncated)


# ---------------------------------------------------------------------------
# code <-> state <-> graph


def code_to_state(code: StabilizerCode) -> StabilizerCode:
    """Stabilizer state on n+1 qubits encoding the code and its logicals:
    the extra reference qubit carries X alongside logical X and Z alongside
    logical Z."""
    if code.is_state:
        raise ValueError("input already is a state")
    n = code.n + 1

    def extend(p: PauliOperator) -> PauliOperator:
        return PauliOperator(n, p.x_bits, p.z_bits, p.phase)

    gens = [extend(g) for g in code.generators]
    gens.append(extend(code.logical_x) * PauliOperator.single(n, code.n, "X"))
    gens.append(extend(code.logical_z) * PauliOperator.single(n, code.n, "Z"))
    return StabilizerCode(n, tuple(gens))


def graph_to_state(g: Graph) -> StabilizerCode:
    """Graph state: generator X_v prod_{u in N(v)} Z_u for each vertex."""
    gens = tuple(
        PauliOperator(g.n, 1 << v, g.adjacency[v], 0) for v in range(g.n)
    )
    return StabilizerCode(g.n, gens)


def state_to_graph(state: StabilizerCode) -> Graph:
    """Reduce a stabilizer state to a locally equivalent graph state and
    return its graph (signs are dropped; H and S layers are implicit)."""
    if not state.is_state:
        raise ValueError("expected a stabilizer state (no logicals)")
    n = state.n
    if len(state.generators) != n:
        raise ValueError("state must have one generator per qubit")
    base = [g.symplectic for g in state.generators]
    hadamard: set[int] = set()
    while True:
        rows = []
        for vec in base:
            for q in hadamard:
                xq = vec >> q & 1
                zq = vec >> (n + q) & 1
                if xq != zq:
                    vec ^= (1 << q) | (1 << (n + q))
            rows.append(vec)
        stuck = None
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if rows[r] >> col & 1:
                    pivot = r
                    break
            if pivot is None:
                stuck = col
                break
            rows[col], rows[pivot] = rows[pivot], rows[col]
            for r in range(n):
                if r != col and rows[r] >> col & 1:
                    rows[r] ^= rows[col]
        if stuck is None:
            break
        if stuck in hadamard:
            raise ValueError("state does not reduce to a graph form")
        hadamard.add(stuck)
    adjacency = []
    for q in range(n):
        z_row = (rows[q] >> n) & ~(1 << q)
        adjacency.append(z_row)
    return Graph(n, tuple(adjacency))


def _drop_qubit(p: PauliOperator, qubit: int) -> PauliOperator:
    low = (1 << qubit) - 1
    x = (p.x_bits & low) | ((p.x_bits >> 1) & ~low)
    z = (p.z_bits & low) | ((p.z_bits >> 1) & ~low)
    return PauliOperator(p.n - 1, x, z, p.phase)


def extract_code_from_state(state: StabilizerCode, ref: int) -> Optional[StabilizerCode]:
    """Invert the reference-qubit construction: generators acting trivially
    on ``ref`` become the code group; the elements acting as X and Z on
    ``ref`` become the logicals.  None if ``ref`` is not fully entangled."""
    if not state.is_state:
        raise ValueError("expected a stabilizer state")
    ops = list(state.generators)

    def pivot_for(bit_of: Callable[[PauliOperator], int]) -> Optional[PauliOperator]:
        idx = next((i for i, p in enumerate(ops) if bit_of(p)), None)
        if idx is None:
            return None
        pivot = ops.pop(idx)
        for i, p in enumerate(ops):
            if bit_of(p):
                ops[i] = p * pivot
        return pivot

    x_pivot = pivot_for(lambda p: p.x_bits >> ref & 1)
    z_pivot = pivot_for(lambda p: p.z_bits >> ref & 1)
    if x_pivot is None or z_pivot is None:
        return None
    if x_pivot.z_bits >> ref & 1:
        x_pivot = x_pivot * z_pivot
    gens = tuple(_drop_qubit(p, ref) for p in ops)
    code = StabilizerCode(
        state.n - 1, gens, _drop_qubit(x_pivot, ref), _drop_qubit(z_pivot, ref)
    )
    return code


@dataclass(frozen=True)
class CodeFamily:
    """Locally equivalent representatives of one endpoint code."""

    codes: tuple[StabilizerCode, ...]
    truncated: bool


def family_from_code(code: StabilizerCode, orbit_cap: int = 1) -> CodeFamily:
    """Seed a search family from a code.

    With ``orbit_cap`` == 1 the family is just the code itself.  Larger
    caps enumerate the local-complementation orbit of the code's state
    graph and pull each orbit member back to a code through the reference
    qubit.
    """
    if orbit_cap < 1:
        raise ValueError("orbit_cap must be positive")
    members: dict[bytes, StabilizerCode] = {canonicalize(code): code}
    truncated = False
    if orbit_cap > 1:
        state = code_to_state(code)
        graph = state_to_graph(state)
        orbit = lc_orbit(graph, orbit_cap)
        truncated = orbit.truncated
        for member in orbit.graphs:
            candidate = extract_code_from_state(graph_to_state(member), code.n)
            if candidate is None or not check_valid_tableau(candidate).valid:
                continue
            key = canonicalize(candidate)
            if key not in members and len(members) < orbit_cap:
                members[key] = candidate
    return CodeFamily(tuple(members.values()), truncated)


# ---------------------------------------------------------------------------
# canonical labeling


def _refine(
    n: int, colors: list[int], pair_key: Callable[[tuple[int, int]], object]
) -> list[int]:
    while True:
        signatures = []
        for q in range(n):
            around = sorted((colors[r], pair_key((q, r))) for r in range(n) if r != q)
            signatures.append((colors[q], tuple(around)))
        order = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [order[sig] for sig in signatures]
        if refined == colors:
            return refined
        colors = refined


def _canonical_order(
    n: int,
    init_colors: Sequence,
    pair_key: Callable[[tuple[int, int]], object],
    twin_check: Callable[[int, int], bool],
    leaf_key: Callable[[tuple[int, ...]], bytes],
) -> tuple[bytes, tuple[int, ...]]:
    """Minimal leaf key over orderings consistent with iterative refinement,
    individualizing one vertex of the first ambiguous class at a time.

    ``twin_check(u, v)`` must report a literal swap automorphism; twin
    branches produce identical leaf-key sets and are explored only once.
    Further automorphisms are harvested from pairs of leaves with equal
    keys and used to skip branches in the orbit of one already explored
    (only automorphisms fixing every vertex individualized so far apply).
    """
    ranking = {v: i for i, v in enumerate(sorted(set(init_colors)))}
    best: Optional[tuple[bytes, tuple[int, ...]]] = None
    first_ordering: dict[bytes, tuple[int, ...]] = {}
    automorphisms: set[tuple[int, ...]] = set()

    def descend(colors: list[int], path: tuple[int, ...]) -> None:
        nonlocal best
        colors = _refine(n, colors, pair_key)
        classes: dict[int, list[int]] = {}
        for q, c in enumerate(colors):
            classes.setdefault(c, []).append(q)
        ambiguous = [c for c in sorted(classes) if len(classes[c]) > 1]
        if not ambiguous:
            ordering = tuple(sorted(range(n), key=lambda q: colors[q]))
            key = leaf_key(ordering)
            prev = first_ordering.get(key)
            if prev is None:
                first_ordering[key] = ordering
            elif prev != ordering:
                inverse = [0] * n
                for i, v in enumerate(ordering):
                    inverse[v] = i
                automorphisms.add(tuple(prev[inverse[i]] for i in range(n)))
            if best is None or (key, ordering) < best:
                best = (key, ordering)
            return
        covered: list[int] = []
        for q in classes[ambiguous[0]]:
            skip = any(twin_check(q, r) for r in covered) or any(
                pi[q] in covered and all(pi[v] == v for v in path)
                for pi in automorphisms
            )
            covered.append(q)
            if skip:
                continue
            child = list(colors)
            child[q] = -1
            descend(child, path + (q,))

    descend([ranking[v] for v in init_colors], ())
    assert best is not None
    return best


def _gray_group_vectors(vectors: Sequence[int]) -> list[int]:
    out = [0]
    for i in range(1, 1 << len(vectors)):
        out.append(out[-1] ^ vectors[(i & -i).bit_length() - 1])
    return out


def _letter(vec: int, n: int, q: int) -> int:
    return (vec >> q & 1) | ((vec >> (n + q) & 1) << 1)


def _permute_vector(vec: int, n: int, ordering: Sequence[int]) -> int:
    out = 0
    for new, old in enumerate(ordering):
        out |= ((vec >> old) & 1) << new
        out |= ((vec >> (n + old)) & 1) << (n + new)
    return out


def _reduce_by_rref(rows: Sequence[int], vec: int) -> int:
    for row in rows:
        if vec & (row & -row):
            vec ^= row
    return vec


def canonical_form(code: StabilizerCode) -> tuple[bytes, tuple[int, ...]]:
    """Canonical key plus the qubit ordering that realises it.

    The key is identical for codes related by qubit permutation and drops
    all signs; distinct groups (or logical assignments) get distinct keys
    up to deliberate best-effort behaviour under local rotations.
    """
    n = code.n
    gen_vecs = [g.symplectic for g in code.generators]
    logical_vecs = [l.symplectic for l in code.logicals]
    group = _gray_group_vectors(gen_vecs)
    cosets = [group]
    for lvec in logical_vecs:
        cosets.append([v ^ lvec for v in group])
    if len(cosets) == 3:
        both = logical_vecs[0] ^ logical_vecs[1]
        cosets.append([v ^ both for v in group])

    profiles = []
    for q in range(n):
        profile = []
        for coset in cosets:
            counts = [0, 0, 0, 0]
            for vec in coset:
                counts[_letter(vec, n, q)] += 1
            profile.append(tuple(counts))
        profiles.append(tuple(profile))

    pair_counts: dict[tuple[int, int], tuple[int, ...]] = {}
    for q in range(n):
        for r in range(q + 1, n):
            counts = [0] * 16
            for vec in group:
                counts[_letter(vec, n, q) * 4 + _letter(vec, n, r)] += 1
            pair_counts[(q, r)] = tuple(counts)
            pair_counts[(r, q)] = tuple(
                counts[b * 4 + a] for a in range(4) for b in range(4)
            )
    pair_rank = {v: i for i, v in enumerate(sorted(set(pair_counts.values())))}
    pair_ranks = {qr: pair_rank[counts] for qr, counts in pair_counts.items()}

    # identical tableau columns (generators and logicals) make two qubits
    # literally interchangeable
    all_vecs = gen_vecs + logical_vecs
    column_sig = [
        tuple(((v >> q) & 1) | (((v >> (n + q)) & 1) << 1) for v in all_vecs)
        for q in range(n)
    ]

    nbytes = (2 * n + 7) // 8
    header = n.to_bytes(2, "big") + len(gen_vecs).to_bytes(2, "big")

    def leaf_key(ordering: tuple[int, ...]) -> bytes:
        rows = rref([_permute_vector(v, n, ordering) for v in gen_vecs])
        out = bytearray(header)
        for row in rows:
            out += row.to_bytes(nbytes, "big")
        for lvec in logical_vecs:
            reduced = _reduce_by_rref(rows, _permute_vector(lvec, n, ordering))
            out += reduced.to_bytes(nbytes, "big")
        return bytes(out)

    return _canonical_order(
        n,
        profiles,
        pair_ranks.__getitem__,
        lambda u, v: column_sig[u] == column_sig[v],
        leaf_key,
    )


def canonicalize(code: StabilizerCode) -> bytes:
    """Deterministic byte-string key, invariant under qubit permutation."""
    return canonical_form(code)[0]


def find_relabeling(a: StabilizerCode, b: StabilizerCode) -> Optional[tuple[int, ...]]:
    """Permutation p with permute_qubits(a, p) equal to b as groups-with-
    logicals (signs ignored), or None."""
    if a.n != b.n:
        return None
    key_a, order_a = canonical_form(a)
    key_b, order_b = canonical_form(b)
    if key_a != key_b:
        return None
    inverse_b = [0] * b.n
    for i, v in enumerate(order_b):
        inverse_b[v] = i
    perm = tuple(order_a[inverse_b[i]] for i in range(a.n))
    if groups_equal(permute_qubits(a, perm), b):
        return perm
    return None


# ---------------------------------------------------------------------------
# bidirectional search


class FrontierBudgetError(RuntimeError):
    """Search stopped on its node budget; state saved if a checkpoint path
    was provided."""

    def __init__(self, message: str, checkpoint_path: Optional[str] = None):
        super().__init__(message)
        self.checkpoint_path = checkpoint_path


@dataclass
class _NodeRec:
    code: StabilizerCode
    depth: int
    parent: Optional[bytes]
    gate: Optional[GateOp]


@dataclass
class _Side:
    visited: dict[bytes, _NodeRec] = field(default_factory=dict)
    frontier: list[bytes] = field(default_factory=list)
    depth: int = 0


@dataclass(frozen=True)
class PathResult:
    """A CZ path from a start-family code to a goal-family code (the goal is
    reached up to qubit relabeling)."""

    gates: tuple[GateOp, ...]
    start_code: StabilizerCode
    meeting_code: StabilizerCode
    end_code: StabilizerCode

    @property
    def cz_count(self) -> int:
        return sum(1 for g in self.gates if g.kind == "CZ")


@dataclass(frozen=True)
class SearchOutcome:
    path: Optional[PathResult]
    nodes_expanded: int
    frontier_peak: int

    @property
    def found(self) -> bool:
        return self.path is not None


def _edge_is_valid(code: StabilizerCode, i: int, j: int, workers: int = 1) -> bool:
    child = apply_gate(code, GateOp.cz(i, j))
    report = verify_correctable(child, enumerate_errors(code.n, (i, j)), workers=workers)
    return report.valid


def validate_path(
    code: StabilizerCode, gates: Iterable[GateOp], workers: int = 1
) -> StabilizerCode:
    """Replay ``gates`` from ``code``; every CZ must leave a code that
    corrects singles plus that gate's pair errors.  Returns the final code."""
    for gate in gates:
        code = apply_gate(code, gate)
        if gate.kind == "CZ":
            report = verify_correctable(
                code, enumerate_errors(code.n, (gate.qubits[0], gate.qubits[1])), workers=workers
            )
            if not report.valid:
                raise ValueError(f"gate {gate.to_text()!r} leaves an uncorrectable code")
    return code


@dataclass(frozen=True)
class ExpansionStats:
    """Single-level CZ expansion census from one code."""

    accepted: int
    rejected: int
    unique_keys: int


def depth_one_stats(code: StabilizerCode, workers: int = 1) -> ExpansionStats:
    accepted = 0
    rejected = 0
    keys: set[bytes] = set()
    for i in range(code.n):
        for j in range(i + 1, code.n):
            child = apply_gate(code, GateOp.cz(i, j))
            report = verify_correctable(
                child, enumerate_errors(code.n, (i, j)), workers=workers
            )
            if report.valid:
                accepted += 1
                keys.add(canonicalize(child))
            else:
                rejected += 1
    return ExpansionStats(accepted=accepted, rejected=rejected, unique_keys=len(keys))


def _reconstruct(side: _Side, key: bytes) -> tuple[StabilizerCode, list[GateOp]]:
    gates: list[GateOp] = []
    current = key
    while side.visited[current].parent is not None:
        record = side.visited[current]
        gates.append(record.gate)
        current = record.parent
    gates.reverse()
    return side.visited[current].code, gates


def _build_path(
    start_side: _Side, goal_side: _Side, start_key: bytes, goal_key: bytes
) -> PathResult:
    start_code, forward_gates = _reconstruct(start_side, start_key)
    goal_seed, backward_gates = _reconstruct(goal_side, goal_key)
    meeting_fwd = start_side.visited[start_key].code
    meeting_bwd = goal_side.visited[goal_key].code
    perm = find_relabeling(meeting_fwd, meeting_bwd)
    if perm is None:
        raise RuntimeError("canonical-key collision between non-equivalent codes")
    relabeled = [
        GateOp.cz(perm[g.qubits[0]], perm[g.qubits[1]]) for g in reversed(backward_gates)
    ]
    gates = tuple(forward_gates + relabeled)
    end_code = apply_ops(start_code, gates)
    return PathResult(
        gates=gates, start_code=start_code, meeting_code=meeting_fwd, end_code=end_code
    )


def _checkpoint_payload(sides: dict[str, _Side], max_depth: int, stats: dict) -> dict:
    def dump_side(side: _Side) -> dict:
        return {
            "depth": side.depth,
            "frontier": [k.hex() for k in side.frontier],
            "visited": [
                {
                    "key": k.hex(),
                    "code": rec.code.to_json_dict(),
                    "depth": rec.depth,
                    "parent": rec.parent.hex() if rec.parent else None,
                    "gate": rec.gate.to_text() if rec.gate else None,
                }
                for k, rec in side.visited.items()
            ],
        }

    return {
        "version": 1,
        "max_depth": max_depth,
        "nodes_expanded": stats["nodes_expanded"],
        "frontier_peak": stats["frontier_peak"],
        "sides": {name: dump_side(side) for name, side in sides.items()},
    }


def _load_side(data: dict) -> _Side:
    side = _Side(depth=data["depth"])
    for rec in data["visited"]:
        side.visited[bytes.fromhex(rec["key"])] = _NodeRec(
            code=StabilizerCode.from_json_dict(rec["code"]),
            depth=rec["depth"],
            parent=bytes.fromhex(rec["parent"]) if rec["parent"] else None,
            gate=GateOp.from_text(rec["gate"]) if rec["gate"] else None,
        )
    side.frontier = [bytes.fromhex(k) for k in data["frontier"]]
    return side


def load_checkpoint(path: str | Path) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    if data.get("version") != 1:
        raise ValueError(f"unsupported checkpoint version {data.get('version')!r}")
    return data


def bfs_bidirectional(
    start_family: Iterable[StabilizerCode],
    goal_family: Iterable[StabilizerCode],
    max_depth: int,
    node_budget: Optional[int] = None,
    checkpoint_path: Optional[str] = None,
    resume_from: Optional[str] = None,
    workers: int = 1,
) -> SearchOutcome:
    """Alternating breadth-first expansion from both families by all CZ
    gates whose post-gate code passes the correctability predicate.

    Returns the shortest combined path on the first canonical-key collision
    between the two sides, or no path within ``max_depth`` total gates.
    Exceeding ``node_budget`` stored nodes raises a resumable
    :class:`FrontierBudgetError` at a level boundary (state goes to
    ``checkpoint_path`` when given; pass it back as ``resume_from``).
    """
    stats = {"nodes_expanded": 0, "frontier_peak": 0}
    if resume_from is not None:
        payload = load_checkpoint(resume_from)
        max_depth = payload["max_depth"]
        stats["nodes_expanded"] = payload["nodes_expanded"]
        stats["frontier_peak"] = payload["frontier_peak"]
        sides = {name: _load_side(data) for name, data in payload["sides"].items()}
        start, goal = sides["start"], sides["goal"]
    else:
        start, goal = _Side(), _Side()
        widths = set()
        for side, family in ((start, start_family), (goal, goal_family)):
            for code in family:
                widths.add(code.n)
                key = canonicalize(code)
                if key not in side.visited:
                    side.visited[key] = _NodeRec(code, 0, None, None)
                    side.frontier.append(key)
            if not side.visited:
                raise ValueError("families must be non-empty")
        if len(widths) != 1:
            raise ValueError(f"families mix qubit counts: {sorted(widths)}")
        sides = {"start": start, "goal": goal}

    common = set(start.visited) & set(goal.visited)
    if common:
        key = min(common)
        return SearchOutcome(
            path=_build_path(start, goal, key, key),
            nodes_expanded=stats["nodes_expanded"],
            frontier_peak=stats["frontier_peak"],
        )

    stats["frontier_peak"] = max(
        stats["frontier_peak"], len(start.frontier), len(goal.frontier)
    )

    while (
        start.depth + goal.depth < max_depth and start.frontier and goal.frontier
    ):
        side, other = (start, goal) if start.depth <= goal.depth else (goal, start)
        new_frontier: list[bytes] = []
        collisions: list[tuple[int, bytes]] = []
        for key in side.frontier:
            code = side.visited[key].code
            for i in range(code.n):
                for j in range(i + 1, code.n):
                    child = apply_gate(code, GateOp.cz(i, j))
                    stats["nodes_expanded"] += 1
                    report = verify_correctable(
                        child, enumerate_errors(code.n, (i, j)), workers=workers
                    )
                    if not report.valid:
                        continue
                    child_key = canonicalize(child)
                    if child_key in side.visited:
                        continue
                    side.visited[child_key] = _NodeRec(
                        child, side.depth + 1, key, GateOp.cz(i, j)
                    )
                    new_frontier.append(child_key)
                    if child_key in other.visited:
                        collisions.append((other.visited[child_key].depth, child_key))
        side.frontier = new_frontier
        side.depth += 1
        stats["frontier_peak"] = max(stats["frontier_peak"], len(new_frontier))
        if collisions:
            _, meet = min(collisions)
            path = _build_path(start, goal, meet, meet)
            return SearchOutcome(
                path=path,
                nodes_expanded=stats["nodes_expanded"],
                frontier_peak=stats["frontier_peak"],
            )
        if node_budget is not None and len(start.visited) + len(goal.visited) > node_budget:
            if checkpoint_path is not None:
                with open(checkpoint_path, "w") as fh:
                    json.dump(_checkpoint_payload(sides, max_depth, stats), fh)
            raise FrontierBudgetError(
                f"node budget {node_budget} exceeded at depths "
                f"{start.depth}+{goal.depth}",
                checkpoint_path=checkpoint_path,
            )

    return SearchOutcome(
        path=None,
        nodes_expanded=stats["nodes_expanded"],
        frontier_peak=stats["frontier_peak"],
    )
