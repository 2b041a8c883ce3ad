"""Per-graph invariant reports checking ``tw <= sn <= gon``."""

from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass, field
from typing import Optional

from . import divisors, scrambles
from .formats import dump_graph
from .multigraph import Multigraph
from .treewidth import TreewidthResult, treewidth, width_of_order


def graph_id(g: Multigraph) -> str:
    return hashlib.sha256(dump_graph(g).encode()).hexdigest()[:12]


def _fmt_set(s) -> str:
    return " ".join(map(str, sorted(s)))


@dataclass
class InvariantReport:
    graph_id: str
    n: int
    edges: int
    tw: Optional[TreewidthResult] = None
    sn_lower: Optional[scrambles.SnSearchResult] = None
    sn_exact: Optional[scrambles.SnSearchResult] = None
    gonality: Optional[divisors.GonalityResult] = None
    timings: dict = field(default_factory=dict)

    @property
    def sandwich_ok(self) -> bool:
        tw = self.tw.width if self.tw else None
        lo = self.sn_lower.value if self.sn_lower else None
        ex = self.sn_exact.value if self.sn_exact else None
        gon = self.gonality.gonality if self.gonality else None
        for a, b in ((tw, lo), (lo, gon), (tw, ex), (ex, gon), (lo, ex), (tw, gon)):
            if a is not None and b is not None and a > b:
                return False
        return True

    def machine_lines(self) -> list[str]:
        out = [f"graph={self.graph_id}", f"n={self.n}", f"edges={self.edges}"]
        if self.tw:
            out += [f"tw={self.tw.width}", f"tw.order={_fmt_set_ordered(self.tw.elimination_order)}"]
        for key, res in (("sn_lower", self.sn_lower), ("sn_exact", self.sn_exact)):
            if res is None:
                continue
            out += [f"{key}={res.value}", f"{key}.strategy={res.strategy}"]
            out += [f"{key}.{line}" for line in certificate_lines(res.certificate)]
            out.append(f"{key}.eggs=" + ";".join(_fmt_set(e) for e in res.best_scramble.eggs))
        if self.gonality:
            out += [
                f"gon={self.gonality.gonality}",
                "gon.witness=" + " ".join(map(str, self.gonality.witness)),
            ]
        out.append(f"sandwich_ok={'true' if self.sandwich_ok else 'false'}")
        return [":: " + line for line in out]

    def summary(self) -> str:
        parts = [f"graph={self.graph_id}"]
        for key, val in (
            ("tw", self.tw.width if self.tw else None),
            ("sn_lower", self.sn_lower.value if self.sn_lower else None),
            ("sn_exact", self.sn_exact.value if self.sn_exact else None),
            ("gon", self.gonality.gonality if self.gonality else None),
        ):
            if val is not None:
                parts.append(f"{key}={val}")
        parts.append(f"sandwich_ok={'true' if self.sandwich_ok else 'false'}")
        return " ".join(parts)


def _fmt_set_ordered(seq) -> str:
    return " ".join(map(str, seq))


def certificate_lines(cert: scrambles.OrderCertificate) -> list[str]:
    lines = [
        f"order={cert.order}",
        f"hitting-set={_fmt_set(cert.hitting_set)}",
    ]
    if cert.cut_number == math.inf:
        lines.append("cut=inf")
    else:
        a, b = cert.cut_pair
        lines.append(f"cut-pair={_fmt_set(a)}|{_fmt_set(b)}")
        lines.append(f"cut-value={cert.cut_number}")
        lines.append(f"cut-side={_fmt_set(cert.cut_side)}")
    return lines


def certificate_text(cert: scrambles.OrderCertificate) -> list[str]:
    lines = [f"order: {cert.order}", f"hitting-set: {_fmt_set(cert.hitting_set)}"]
    if cert.cut_number == math.inf:
        lines.append("cut=inf")
    else:
        a, b = cert.cut_pair
        lines.append(f"cut-pair: {{{_fmt_set(a)}}} {{{_fmt_set(b)}}} value: {cert.cut_number}")
    return lines


def compute_invariants(
    g: Multigraph,
    tw: bool = True,
    gon: bool = True,
    sn_lower: bool = True,
    sn_exact: bool = False,
    sn_cap: int = 6,
    tw_cap: int = 20,
    seed: int = 0,
) -> InvariantReport:
    """Run the requested invariants; every certificate is re-verified before it is returned."""
    rep = InvariantReport(graph_id(g), g.n, g.num_edges)

    def timed(name, fn):
        t0 = time.perf_counter()
        out = fn()
        rep.timings[name] = time.perf_counter() - t0
        return out

    if tw:
        rep.tw = timed("tw", lambda: treewidth(g, tw_cap))
        assert width_of_order(g, rep.tw.elimination_order) == rep.tw.width
    if sn_lower:
        rep.sn_lower = timed("sn_lower", lambda: scrambles.sn_lower_bound(g, seed=seed))
        rep.sn_lower.certificate.verify(rep.sn_lower.best_scramble)
    if sn_exact:
        rep.sn_exact = timed("sn_exact", lambda: scrambles.sn_exact(g, sn_cap))
        rep.sn_exact.certificate.verify(rep.sn_exact.best_scramble)
    if gon:
        rep.gonality = timed("gon", lambda: divisors.gonality(g))
        assert divisors.has_positive_rank(g, rep.gonality.witness)
        assert sum(rep.gonality.witness) == rep.gonality.gonality
    return rep
