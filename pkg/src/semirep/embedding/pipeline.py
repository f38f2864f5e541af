"""Three-step verification: homomorphism and lift, template paths, lifted shortcut check."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from ..families import FamilySpec, build
from ..graph import Graph, Orientation, ShortcutWitness, find_shortcut, is_acyclic, iter_bits
from . import homomorphisms as hm
from .templates import OrientedTemplate

SEMI_TRANSITIVE = "semi-transitive"
NOT_SEMI_TRANSITIVE = "not semi-transitive"
NOT_COVERED = "not covered"


@dataclass
class StepResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail, "elapsed": round(self.elapsed, 4)}


@dataclass
class VerificationReport:
    spec: FamilySpec
    construction: str | None
    verdict: str
    steps: list[StepResult] = field(default_factory=list)
    vertex_count: int = 0
    edge_count: int = 0
    reason: str = ""
    orientation: Orientation | None = None
    witness: ShortcutWitness | None = None

    @property
    def ok(self) -> bool:
        return self.verdict == SEMI_TRANSITIVE

    def to_dict(self) -> dict:
        d = {
            "spec": self.spec.describe(),
            "construction": self.construction,
            "verdict": self.verdict,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "steps": [s.to_dict() for s in self.steps],
        }
        if self.reason:
            d["reason"] = self.reason
        if self.witness is not None and self.orientation is not None:
            d["witness"] = self.witness.labelled(self.orientation.base)
        return d


def lifted_shortcuts(f: hm.Homomorphism, D: Orientation, limit: int = 1) -> tuple[int, list[ShortcutWitness]]:
    """Check every lifted path lying over a shortcutting path of the template.

    Any shortcut of D maps onto a shortcutting path of the (acyclic) template,
    because fibers are independent; so this check is complete. Returns the
    number of lifted paths examined and up to ``limit`` shortcut witnesses.
    """
    G = D.base
    adj = G.adj_bits
    out = D.out_bits
    fiber = [0] * len(f.target.vertices)
    for v, t in enumerate(f.mapping):
        fiber[t] |= 1 << v
    idx = f.target.index
    examined = 0
    found: list[ShortcutWitness] = []
    for names, _ in f.target.shortcutting_paths():
        p = [idx[x] for x in names]
        k = len(p) - 1
        for v0 in iter_bits(fiber[p[0]]):
            ends = out[v0] & fiber[p[k]]
            if not ends:
                continue
            stack = [(v0,)]
            while stack:
                path = stack.pop()
                i = len(path)
                nxt = out[path[-1]] & (ends if i == k else fiber[p[i]])
                for v in iter_bits(nxt):
                    q = path + (v,)
                    if i < k:
                        stack.append(q)
                        continue
                    examined += 1
                    miss = _missing_pair(q, adj)
                    if miss is not None:
                        found.append(ShortcutWitness(q, miss))
                        if len(found) >= limit:
                            return examined, found
    return examined, found


def _missing_pair(path: tuple[int, ...], adj) -> tuple[int, int] | None:
    for i in range(len(path)):
        for j in range(i + 2, len(path)):
            if not (adj[path[i]] >> path[j]) & 1:
                return (path[i], path[j])
    return None


def longest_path_step(D: Orientation) -> StepResult:
    n = hm.longest_path_length(D)
    return StepResult("longest-path", n < 3, {"longest_directed_path": n})


def select_construction(spec: FamilySpec) -> tuple[str, Callable[[], hm.Homomorphism | Orientation]] | str:
    """The covering construction for ``spec``, or a reason why none applies."""
    f, n, k, m = spec.family, spec.n, spec.k, spec.m
    if f == "simplified_overlap":
        if n <= 2:
            return "trivial", lambda: _trivial(build(spec))
        return "hom_sp", lambda: hm.hom_sp(n)
    if f == "simplified" or (f == "simplified_m" and m == 0):
        if k == 1:
            return "trivial", lambda: _trivial(build(spec))
        if k == 2:
            return "triangle", lambda: hm.hom_triangle(n)
        return f"S({n},{k}) with k >= 3 is outside every embedding construction"
    if f == "simplified_m":
        if n == 2 and k <= 3 * m:
            return "lex", lambda: hm.lex_orientation(build(spec))
        if n == 3 and k <= 4 * m:
            return "hom_n3", lambda: hm.hom_n3(m, k)
        if n == 4 and k <= 5 * m:
            return "hom_n4", lambda: hm.hom_n4(m, k)
        if n >= 5 and n % 2 and k <= 2 * m * n:
            return "hom_odd", lambda: hm.hom_odd(n, m, k)
        if n >= 6 and n % 2 == 0 and k <= 2 * m * n:
            return "hom_even", lambda: hm.hom_even(n, m, k)
        bound = {2: 3 * m, 3: 4 * m, 4: 5 * m}.get(n, 2 * m * n)
        return f"S_{m}({n},{k}) has k > {bound}; the constructions stop there"
    return f"family {f!r} has no embedding construction"


def _trivial(G: Graph) -> Orientation:
    # at most two vertices: any orientation works
    return Orientation.by_key(G, list(range(G.vertex_count)))


def pipeline(spec: FamilySpec, full_scan: bool = True) -> VerificationReport:
    chosen = select_construction(spec)
    if isinstance(chosen, str):
        return VerificationReport(spec, None, NOT_COVERED, reason=chosen)
    name, make = chosen
    report = VerificationReport(spec, name, NOT_SEMI_TRANSITIVE)

    t0 = time.perf_counter()
    made = make()
    if isinstance(made, hm.Homomorphism):
        f: hm.Homomorphism | None = made
        D = hm.lift(made)
        target: OrientedTemplate | None = made.target
        detail = {"template": target.name, "fiber_sizes": {k: len(v) for k, v in made.fibers().items()}}
    else:
        f, D, target = None, made, None
        detail = {"orientation": "lexicographic" if name == "lex" else "index order"}
    G = D.base
    report.vertex_count, report.edge_count = G.vertex_count, len(G.edges)
    report.orientation = D
    acyclic = is_acyclic(D)
    detail["acyclic"] = acyclic
    report.steps.append(StepResult("homomorphism+lift", acyclic, detail, time.perf_counter() - t0))
    if not acyclic:
        return report

    t0 = time.perf_counter()
    if target is not None:
        paths = target.shortcutting_paths()
        report.steps.append(
            StepResult(
                "template-paths",
                True,
                {"paths": [{"path": list(p), "shortcut_in_template": s} for p, s in paths]},
                time.perf_counter() - t0,
            )
        )
        t0 = time.perf_counter()
        examined, found = lifted_shortcuts(f, D)
        step3 = StepResult("lifted-paths", not found, {"lifted_paths_examined": examined}, time.perf_counter() - t0)
        if found:
            report.witness = found[0]
            step3.detail["witness"] = found[0].labelled(G)
        report.steps.append(step3)
    else:
        report.steps.append(longest_path_step(D))
        report.steps[-1].elapsed = time.perf_counter() - t0

    if full_scan:
        t0 = time.perf_counter()
        w = find_shortcut(D)
        scan = StepResult("full-scan", w is None, {}, time.perf_counter() - t0)
        if w is not None:
            scan.detail["witness"] = w.labelled(G)
            report.witness = report.witness or w
        report.steps.append(scan)

    if all(s.ok for s in report.steps):
        report.verdict = SEMI_TRANSITIVE
    return report
