"""Traces, patterns, the odd number of a pattern, encoding and enumeration.

A trace is the projection of a path onto N[V4] plus variables standing for
selected vertices outside N[V4]. Symbols are vertex tokens or :class:`Var`
instances, so a vertex literally named ``x1`` never clashes with a variable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .graph import Graph, GraphError, components, edge_key, path_edges, vkey
from .structures import closed_neighborhood, high


@dataclass(frozen=True, order=True)
class Var:
    i: int

    def __repr__(self) -> str:
        return f"x{self.i}"


def is_var(s) -> bool:
    return isinstance(s, Var)


@dataclass(frozen=True)
class Pattern:
    """``traces`` is a tuple of symbol tuples; ``d[i - 1]`` is d(x_i)."""
    traces: tuple
    d: tuple = ()

    @property
    def ell(self) -> int:
        return len(self.d)

    def __len__(self) -> int:
        return len(self.traces)

    def degree_of(self, x: Var) -> int:
        return self.d[x.i - 1]

    def to_json(self) -> str:
        enc = [[{"var": s.i} if is_var(s) else s for s in t] for t in self.traces]
        return json.dumps({"traces": enc, "d": list(self.d)})

    @classmethod
    def from_json(cls, text: str) -> "Pattern":
        obj = json.loads(text)
        traces = tuple(tuple(Var(s["var"]) if isinstance(s, dict) else s for s in t)
                       for t in obj["traces"])
        return cls(traces, tuple(obj.get("d", ())))


# trace notation


def _is_edge_pair(a, b, v4) -> bool:
    return (not is_var(a) and a in v4) or (not is_var(b) and b in v4)


def trace_pairs(trace) -> list[tuple]:
    return list(zip(trace, trace[1:]))


def trace_edges(trace, v4) -> set[frozenset]:
    return {frozenset(p) for p in trace_pairs(trace) if _is_edge_pair(*p, v4)}


def trace_ends(trace, v4) -> set[frozenset]:
    return {frozenset(p) for p in trace_pairs(trace) if not _is_edge_pair(*p, v4)}


def deg_t(trace, s) -> int:
    if s not in trace:
        return 0
    return 1 if s in (trace[0], trace[-1]) else 2


def loads(p: Pattern) -> dict:
    """Sum of deg_T over all traces, for every symbol that occurs."""
    out: dict = {}
    for t in p.traces:
        for s in t:
            out[s] = out.get(s, 0) + deg_t(t, s)
    return out


def v4_edges(g: Graph, v4) -> set[frozenset]:
    return {e for e in g.edges() if e & v4}


def pattern_valid(g: Graph, v4, p: Pattern) -> bool:
    """All five pattern conditions plus the trace conditions."""
    v4 = frozenset(v4)
    closed = closed_neighborhood(g, v4)
    for t in p.traces:
        if len(set(t)) != len(t) or not t:
            return False
        for s in t:
            if is_var(s):
                if not 1 <= s.i <= p.ell:
                    return False
            elif s not in closed:
                return False
        for a, b in trace_pairs(t):
            if _is_edge_pair(a, b, v4) and (is_var(a) or is_var(b) or not g.has_edge(a, b)):
                return False
    if any(x not in (1, 2, 3) for x in p.d):
        return False
    seen_ends: set = set()
    seen_edges: set = set()
    for t in p.traces:
        ends, edges = trace_ends(t, v4), trace_edges(t, v4)
        if ends & seen_ends or edges & seen_edges:
            return False
        seen_ends |= ends
        seen_edges |= edges
    if seen_edges != v4_edges(g, v4):
        return False
    for s, k in loads(p).items():
        if is_var(s):
            if k > p.degree_of(s):
                return False
        elif s not in v4 and k > g.degree(s):
            return False
    return True


def odd_number(g: Graph, v4, p: Pattern) -> int:
    """Symbols gaining oddity minus symbols losing it."""
    total = 0
    for s, k in loads(p).items():
        if k % 2 == 0:
            continue
        base = p.degree_of(s) if is_var(s) else g.degree(s)
        total += 1 if base % 2 == 0 else -1
    return total


def objective(g: Graph, v4, p: Pattern, base_odd: int) -> int:
    val = base_odd + odd_number(g, v4, p)
    return val // 2 + len(p.traces)


# canonical form


def _sym_key(s):
    return (1, 0, 0, "") if is_var(s) else (0,) + vkey(s)


def _reading_key(t) -> tuple:
    return tuple(_sym_key(s) for s in t)


def _first_edge_key(t, v4):
    return min((edge_key(e) for e in trace_edges(t, v4)), default=((2, 0, ""),))


def canonical(p: Pattern, v4) -> Pattern:
    """Representative under variable renaming, trace reversal and trace order.

    Traces are oriented by their reading with every variable blurred to one
    placeholder, ordered by their smallest V4 edge, and variables are then
    renumbered by first appearance.
    """
    v4 = frozenset(v4)
    oriented = []
    for t in p.traces:
        t = tuple(t)
        r = t[::-1]
        oriented.append(r if _reading_key(r) < _reading_key(t) else t)
    oriented.sort(key=lambda t: (_first_edge_key(t, v4), _reading_key(t)))
    ren: dict = {}
    for t in oriented:
        for s in t:
            if is_var(s) and s not in ren:
                ren[s] = Var(len(ren) + 1)
    traces = tuple(tuple(ren.get(s, s) for s in t) for t in oriented)
    d = [0] * len(ren)
    for old, new in ren.items():
        d[new.i - 1] = p.degree_of(old)
    return Pattern(traces, tuple(d))


# encoding


def is_covering_family(g: Graph, v4, q) -> bool:
    used: set = set()
    for path in q:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        for e in path_edges(path):
            a, b = tuple(e)
            if not g.has_edge(a, b) or e in used:
                return False
            used.add(e)
    return v4_edges(g, frozenset(v4)) <= used


def terminal_collection(g: Graph, v4, q) -> frozenset:
    u0 = set(closed_neighborhood(g, v4))
    for path in q:
        u0.update((path[0], path[-1]))
    return closed_neighborhood(g, u0)


def encode_with_assignment(g: Graph, v4, q) -> tuple[Pattern, dict]:
    """Encode ``q``; also return the map from variables to vertices."""
    v4 = frozenset(v4)
    if not is_covering_family(g, v4, q):
        raise GraphError("not a covering family")
    closed = closed_neighborhood(g, v4)
    u = terminal_collection(g, v4, q)
    vx = u - closed
    paths = []
    for path in q:
        path = tuple(path)
        if vkey(path[-1]) < vkey(path[0]):
            path = path[::-1]
        paths.append(path)
    var_of: dict = {}
    traces = []
    for path in paths:
        t = []
        for v in path:
            if v in closed:
                t.append(v)
            elif v in vx:
                if v not in var_of:
                    var_of[v] = Var(len(var_of) + 1)
                t.append(var_of[v])
        traces.append(tuple(t))
    d = tuple(g.degree(v) for v in sorted(var_of, key=lambda v: var_of[v].i))
    return Pattern(tuple(traces), d), {x: v for v, x in var_of.items()}


def encode(g: Graph, v4, q) -> Pattern:
    return encode_with_assignment(g, v4, q)[0]


# enumeration


def effective_ell_cap(g: Graph, v4, lmax: int | None = None) -> int:
    outside = g.n - len(closed_neighborhood(g, v4))
    cap = min(16 * high(g), outside)
    return cap if lmax is None else min(cap, lmax)


class _Bound:
    """Mutable best value shared between the solver and the generator."""

    def __init__(self, value: float = float("inf")):
        self.value = value


def enumerate_patterns(g: Graph, v4, lmax: int | None = None):
    """Every valid pattern whose traces all meet V4, once per equivalence
    class, in order of ascending trace count and then ascending ell."""
    v4 = frozenset(v4)
    if not v4:
        raise GraphError("enumerate_patterns needs a nonempty V4")
    cap = effective_ell_cap(g, v4, lmax)
    n_edges = len(v4_edges(g, v4))
    for t in range(1, n_edges + 1):
        for ell in range(cap + 1):
            yield from generate(g, v4, t, ell)


def generate(g: Graph, v4, t: int, ell: int, *, solver: bool = False,
             bound: _Bound | None = None, base_odd: int = 0):
    """Patterns with exactly ``t`` traces and ``ell`` variables.

    With ``solver`` set, patterns that can never be feasible are skipped:
    variable degrees must be available outside N[V4] and every ends pair of
    real vertices must be joinable avoiding the rest of N[V4]. ``bound``
    enables objective pruning against the running best value.
    """
    return _Generator(g, frozenset(v4), t, ell, solver, bound, base_odd).run()


class _Generator:
    def __init__(self, g, v4, t, ell, solver, bound, base_odd):
        self.g, self.v4, self.t, self.ell = g, v4, t, ell
        self.solver, self.bound, self.base_odd = solver, bound, base_odd
        closed = closed_neighborhood(g, v4)
        self.nbr = sorted(closed - v4, key=vkey)
        self.nbr_set = frozenset(self.nbr)
        self.uncov = set(v4_edges(g, v4))
        self.vcount = {v: g.degree(v) for v in v4}
        self.load: dict = {}
        self.ends_used: set = set()
        self.traces: list = []
        self.nvar = 0
        self.fixed_v4 = sum(-1 for v in v4 if g.degree(v) % 2)
        outside = [v for v in g.vertices if v not in closed]
        self.avail = {k: sum(1 for v in outside if g.degree(v) == k) for k in (1, 2, 3)}
        # components of G - N[V4] touched by each N(V4) vertex
        rest = g.induced(outside)
        comp_of = {}
        for i, c in enumerate(components(rest)):
            for v in c.vertices:
                comp_of[v] = i
        self.touch = {a: {comp_of[w] for w in g.neighbors(a) if w in comp_of} for a in self.nbr}

    def run(self):
        yield from self._start()

    # helpers

    def _budget(self, s) -> int:
        if is_var(s):
            return 3
        return self.g.degree(s)

    def _routable(self, a, b) -> bool:
        if not self.solver:
            return True
        ra, rb = not is_var(a), not is_var(b)
        if ra and rb:
            return self.g.has_edge(a, b) or bool(self.touch[a] & self.touch[b])
        if ra:
            return bool(self.touch[a])
        if rb:
            return bool(self.touch[b])
        return True

    def _delta_lb(self) -> int:
        total = self.fixed_v4
        for s, k in self.load.items():
            if k % 2 == 0 or (not is_var(s) and s in self.v4):
                continue
            if is_var(s):
                total -= 1
            else:
                total += 1 if self.g.degree(s) % 2 == 0 else -1
        return total

    def _add(self, s):
        self.load[s] = self.load.get(s, 0) + 1

    def _sub(self, s):
        k = self.load[s] - 1
        if k:
            self.load[s] = k
        else:
            del self.load[s]

    def _cover(self, a, b):
        e = frozenset((a, b))
        self.uncov.discard(e)
        for v in (a, b):
            if v in self.vcount:
                self.vcount[v] -= 1
        return e

    def _uncover(self, e):
        self.uncov.add(e)
        for v in e:
            if v in self.vcount:
                self.vcount[v] += 1

    # search

    def _start(self):
        done = len(self.traces)
        if not self.uncov:
            if done == self.t and self.nvar == self.ell:
                yield from self._emit()
            return
        rem = self.t - done
        if rem <= 0:
            return
        if any((c + 1) // 2 > rem for c in self.vcount.values()):
            return
        if self.bound is not None:
            lb = max(self.t, self.t + (self.base_odd + self._delta_lb() - 2 * rem) // 2)
            if lb >= self.bound.value:
                return
        e = min(self.uncov, key=edge_key)
        a, b = sorted(e, key=vkey)
        if any(s not in self.v4 and self.load.get(s, 0) >= self.g.degree(s) for s in e):
            return
        for p, q in ((a, b), (b, a)):
            self._cover(p, q)
            self._add(p)
            self._add(q)
            yield from self._grow([p, q], [], [], True)
            self._sub(q)
            self._sub(p)
            self._uncover(e)

    def _options(self, last, in_trace, new_vars):
        g, v4 = self.g, self.v4
        if last not in v4 and self.load.get(last, 0) >= self._budget(last):
            return
        if not is_var(last):
            for u in sorted(g.neighbors(last), key=vkey):
                if (last in v4 or u in v4) and u not in in_trace \
                        and frozenset((last, u)) in self.uncov:
                    if u in v4 or self.load.get(u, 0) < g.degree(u):
                        yield "edge", u
            if last in v4:
                return
        for u in self.nbr:
            if u in in_trace or self.load.get(u, 0) >= g.degree(u):
                continue
            if frozenset((last, u)) in self.ends_used or not self._routable(last, u):
                continue
            yield "end", u
        for i in range(1, self.nvar + len(new_vars) + 1):
            x = Var(i)
            if x in in_trace or self.load.get(x, 0) >= 3:
                continue
            if frozenset((last, x)) in self.ends_used or not self._routable(last, x):
                continue
            yield "end", x
        if self.nvar + len(new_vars) < self.ell and self._routable(last, Var(0)):
            yield "new", Var(self.nvar + len(new_vars) + 1)

    def _grow(self, right, left, new_vars, on_right: bool):
        if on_right:
            yield from self._grow(right, left, new_vars, False)
            last = right[-1]
        else:
            yield from self._complete(right, left, new_vars)
            last = left[-1] if left else right[0]
        side = right if on_right else left
        in_trace = set(right) | set(left)
        for kind, u in list(self._options(last, in_trace, new_vars)):
            pair = frozenset((last, u))
            if kind == "edge":
                self._cover(last, u)
            else:
                self.ends_used.add(pair)
            if kind == "new":
                new_vars.append(u)
            self._add(last)
            self._add(u)
            side.append(u)
            yield from self._grow(right, left, new_vars, on_right)
            side.pop()
            self._sub(u)
            self._sub(last)
            if kind == "new":
                new_vars.pop()
            if kind == "edge":
                self._uncover(pair)
            else:
                self.ends_used.discard(pair)

    def _complete(self, right, left, new_vars):
        seq = tuple(left[::-1] + right)
        if _reading_key(seq[::-1]) < _reading_key(seq):
            return
        ren: dict = {}
        for s in seq:
            if s in new_vars and s not in ren:
                ren[s] = Var(self.nvar + len(ren) + 1)
        moved = {s: self.load.pop(s) for s in ren}
        for s, k in moved.items():
            self.load[ren[s]] = k
        old_pairs = trace_ends(seq, self.v4)
        seq2 = tuple(ren.get(s, s) for s in seq)
        new_pairs = trace_ends(seq2, self.v4)
        self.ends_used -= old_pairs
        self.ends_used |= new_pairs
        self.traces.append(seq2)
        self.nvar += len(ren)

        yield from self._start()

        self.nvar -= len(ren)
        self.traces.pop()
        self.ends_used -= new_pairs
        self.ends_used |= old_pairs
        for s, k in moved.items():
            del self.load[ren[s]]
        for s, k in moved.items():
            self.load[s] = k

    def _emit(self):
        xs = [Var(i) for i in range(1, self.ell + 1)]
        traces = tuple(self.traces)
        for d in product(*(range(self.load[x], 4) for x in xs)):
            if self.solver and any(d.count(k) > self.avail[k] for k in (1, 2, 3)):
                continue
            yield Pattern(traces, d)
