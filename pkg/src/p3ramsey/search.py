"""Minimum-edge search: smallest m such that some n-vertex, m-edge graph
arrows (two-edge path, n-cycle), with the census of witnessing classes.

Scan order is increasing m starting from a sound lower bound, with a full
scan of every level before advancing (minimality needs exhaustion).  The
candidate space at each level is the biconnected minimum-degree-3
isomorphism classes: a vertex of degree <= 2 admits a red edge whose
removal strands it, and a Hamiltonian cycle needs 2-connectivity, so
nothing outside that space can arrow.  Candidates come from the in-process
generator or from an ingested graph6 file (trusted to hold one labeled
representative per class, as produced by standard generation tools).

Levels are processed in fixed-size chunks so runs can checkpoint after
every chunk and resume mid-level; witnesses merge deterministically in
stream order.
"""

from __future__ import annotations

import logging
import math
import os
import time
from dataclasses import dataclass
from pathlib import Path

from .arrowing import decide_arrowing_cycle
from .canon import canonical_form
from .generate import GenSpec, generate
from .graph6 import parse_graph6, stream_graphs, write_graph6

log = logging.getLogger(__name__)

REPORT_HEADER = "p3ramsey-report v1"
CHECKPOINT_HEADER = "p3ramsey-checkpoint v1"

_MODES = ("complete", "paper_window")
_SOURCES = ("generator", "ingest")

MIN_N = 4
MAX_N = 13
DEFAULT_CHUNK_SIZE = 2000


class BudgetExhausted(RuntimeError):
    """Raised when a search hits its wall-clock budget; the checkpoint (if
    configured) holds all completed work."""

    def __init__(self, message: str, checkpoint_path=None):
        super().__init__(message)
        self.checkpoint_path = checkpoint_path


def lower_bound(n: int) -> int:
    """Sound scan floor: ceil(3n/2) from minimum degree 3; for even n >= 8
    the stronger 3n/2 + 2 applies."""
    if n < 4:
        raise ValueError(f"order must be at least 4, got {n}")
    bound = math.ceil(3 * n / 2)
    if n >= 8 and n % 2 == 0:
        bound = max(bound, 3 * n // 2 + 2)
    return bound


@dataclass(frozen=True)
class PerMStat:
    m: int
    candidates: int
    arrows: int
    seconds: float


@dataclass(frozen=True)
class SearchReport:
    n: int
    mode: str
    source: str
    r_star: int
    witness_count: int
    witnesses: tuple[str, ...]  # canonical graph6, stream order
    per_m: tuple[PerMStat, ...]


# ---------------------------------------------------------------------------
# candidate sources
# ---------------------------------------------------------------------------

def _generator_candidates(n: int, m: int):
    return generate(GenSpec(n, m, min_degree=3, require_biconnected=True))


def _ingest_level_file(n: int, m: int, directory: Path) -> Path:
    for suffix in (".g6", ".g6.gz"):
        candidate = directory / f"n{n}_m{m}{suffix}"
        if candidate.exists():
            return candidate
    raise FileNotFoundError(
        f"missing ingest file n{n}_m{m}.g6[.gz] under {directory}")


def _ingest_candidates(n: int, m: int, path):
    """Graphs with the right order and edge count, from a single graph6
    file (levels mixed, filtered by edge count) or a directory holding one
    file per level named n<order>_m<edges>.g6[.gz]."""
    path = Path(path)
    if path.is_dir():
        path = _ingest_level_file(n, m, path)
    count = 0
    for g in stream_graphs(path):
        if g.order != n:
            raise ValueError(
                f"ingest file {path} holds a graph of order {g.order}, "
                f"expected {n}")
        if g.edge_count == m:
            count += 1
            yield g
    if count == 0:
        raise ValueError(
            f"ingest file {path} holds no candidates at m={m}; "
            "the level scan would be vacuous")


def _candidate_stream(n, m, source, ingest_path):
    if source == "generator":
        return _generator_candidates(n, m)
    return _ingest_candidates(n, m, ingest_path)


# ---------------------------------------------------------------------------
# chunked level scan with optional checkpointing
# ---------------------------------------------------------------------------

@dataclass
class _ChunkResult:
    index: int
    candidates: int
    arrows: int
    witnesses: tuple[str, ...]
    seconds: float


def _decide_chunk(lines: list[str], n: int, mode: str) -> tuple[int, tuple[str, ...]]:
    arrows = 0
    witnesses = []
    for line in lines:
        g = parse_graph6(line)
        if decide_arrowing_cycle(g, n, mode=mode).arrows:
            arrows += 1
            witnesses.append(canonical_form(g))
    return arrows, tuple(witnesses)


def _chunked(iterable, size):
    batch = []
    for item in iterable:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


class _Checkpoint:
    """Append-only view of completed work, rewritten atomically after each
    chunk.  Keyed by (n, mode, source, chunk size): resuming with different
    settings starts fresh."""

    def __init__(self, path, n, mode, source, chunk_size):
        self.path = Path(path) if path is not None else None
        self.key = (n, mode, source, chunk_size)
        self.done_levels: dict[int, PerMStat] = {}
        self.done_chunks: dict[int, dict[int, _ChunkResult]] = {}
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self):
        lines = self.path.read_text().splitlines()
        if not lines or lines[0] != CHECKPOINT_HEADER:
            raise ValueError(f"{self.path} is not a recognized checkpoint")
        fields = dict(part.split("=", 1) for part in lines[1].split())
        key = (int(fields["n"]), fields["mode"], fields["source"],
               int(fields["chunk_size"]))
        if key != self.key:
            log.warning("checkpoint %s was written for %s, ignoring it",
                        self.path, key)
            return
        for line in lines[2:]:
            if not line.strip():
                continue
            kind, rest = line.split(" ", 1)
            fields = dict(part.split("=", 1) for part in rest.split())
            if kind == "level":
                stat = PerMStat(int(fields["m"]), int(fields["candidates"]),
                                int(fields["arrows"]), float(fields["seconds"]))
                self.done_levels[stat.m] = stat
            elif kind == "chunk":
                wit = tuple(fields.get("witnesses", "").split(",")) \
                    if fields.get("witnesses") else ()
                res = _ChunkResult(int(fields["index"]),
                                   int(fields["candidates"]),
                                   int(fields["arrows"]), wit,
                                   float(fields["seconds"]))
                self.done_chunks.setdefault(int(fields["m"]), {})[res.index] = res
            else:
                raise ValueError(f"unknown checkpoint record {kind!r}")

    def record_chunk(self, m: int, res: _ChunkResult):
        self.done_chunks.setdefault(m, {})[res.index] = res
        self._write()

    def record_level(self, stat: PerMStat):
        self.done_levels[stat.m] = stat
        self.done_chunks.pop(stat.m, None)
        self._write()

    def _write(self):
        if self.path is None:
            return
        n, mode, source, chunk_size = self.key
        lines = [CHECKPOINT_HEADER,
                 f"n={n} mode={mode} source={source} chunk_size={chunk_size}"]
        for m in sorted(self.done_levels):
            s = self.done_levels[m]
            lines.append(f"level m={s.m} candidates={s.candidates} "
                         f"arrows={s.arrows} seconds={s.seconds:.3f}")
        for m in sorted(self.done_chunks):
            for idx in sorted(self.done_chunks[m]):
                c = self.done_chunks[m][idx]
                wit = f" witnesses={','.join(c.witnesses)}" if c.witnesses else ""
                lines.append(f"chunk m={m} index={c.index} "
                             f"candidates={c.candidates} arrows={c.arrows} "
                             f"seconds={c.seconds:.3f}{wit}")
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text("\n".join(lines) + "\n")
        os.replace(tmp, self.path)


def _scan_level(n, m, mode, source, ingest_path, workers, chunk_size,
                checkpoint: _Checkpoint, deadline) -> tuple[PerMStat, list[str]]:
    """Full scan of one edge-count level; returns the stat and the witness
    forms in stream order."""
    if m in checkpoint.done_levels:
        stat = checkpoint.done_levels[m]
        log.info("level (n=%d, m=%d) already scanned: %d candidates, "
                 "%d arrows", n, m, stat.candidates, stat.arrows)
        if stat.arrows:
            # witnesses of completed witness-bearing levels live in the
            # final report; a checkpoint alone cannot restore them
            raise ValueError(
                "checkpoint marks the witness level complete; rerun "
                "verify_report on the written report instead")
        return stat, []
    done = checkpoint.done_chunks.get(m, {})
    t0 = time.perf_counter()
    prior_seconds = 0.0
    candidates = 0
    arrows = 0
    witnesses: list[str] = []
    pool = None
    try:
        if workers > 1:
            import multiprocessing

            pool = multiprocessing.Pool(workers)
        pending: list[tuple[int, int, object]] = []

        def drain(results):
            nonlocal arrows
            for idx, count, payload in results:
                got_arrows, got_witnesses = payload.get() if pool else payload
                arrows += got_arrows
                witnesses.extend(got_witnesses)
                res = _ChunkResult(idx, count, got_arrows, got_witnesses,
                                   time.perf_counter() - t0)
                checkpoint.record_chunk(m, res)

        for idx, batch in enumerate(
                _chunked(_candidate_stream(n, m, source, ingest_path),
                         chunk_size)):
            candidates += len(batch)
            if idx in done:
                prior = done[idx]
                if prior.candidates != len(batch):
                    raise ValueError(
                        f"checkpoint chunk (m={m}, index={idx}) covered "
                        f"{prior.candidates} candidates but the stream now "
                        f"yields {len(batch)}; refusing to mix runs")
                arrows += prior.arrows
                witnesses.extend(prior.witnesses)
                prior_seconds = max(prior_seconds, prior.seconds)
                continue
            lines = [write_graph6(g) for g in batch]
            if pool:
                pending.append((idx, len(batch),
                                pool.apply_async(_decide_chunk,
                                                 (lines, n, mode))))
                if len(pending) >= workers * 2:
                    drain(pending[: len(pending) - workers])
                    del pending[: len(pending) - workers]
            else:
                drain([(idx, len(batch), _decide_chunk(lines, n, mode))])
            if deadline is not None and time.perf_counter() > deadline:
                drain(pending)
                pending.clear()
                raise BudgetExhausted(
                    f"budget exhausted during level (n={n}, m={m}); "
                    f"checkpoint holds completed chunks",
                    checkpoint.path)
        drain(pending)
    finally:
        if pool:
            pool.terminate()
            pool.join()
    seconds = prior_seconds + time.perf_counter() - t0
    stat = PerMStat(m, candidates, arrows, seconds)
    if not arrows:
        checkpoint.record_level(stat)
    return stat, witnesses


def compute_r_star(n: int, mode: str = "complete", source: str = "generator",
                   ingest_path=None, workers: int = 1,
                   budget_seconds: float | None = None,
                   checkpoint_path=None,
                   chunk_size: int = DEFAULT_CHUNK_SIZE) -> SearchReport:
    """Scan edge counts upward from lower_bound(n); stop at the first level
    with a witness after scanning it fully.  Deterministic for a fixed
    candidate source; timing fields vary."""
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"order must be within {MIN_N}..{MAX_N}, got {n}")
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    if source not in _SOURCES:
        raise ValueError(f"source must be one of {_SOURCES}, got {source!r}")
    if source == "ingest":
        if ingest_path is None:
            raise ValueError("ingest source needs an ingest_path")
        if not Path(ingest_path).exists():
            raise FileNotFoundError(f"ingest file {ingest_path} not found")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if chunk_size < 1:
        raise ValueError("chunk_size must be >= 1")
    checkpoint = _Checkpoint(checkpoint_path, n, mode, source, chunk_size)
    deadline = (time.perf_counter() + budget_seconds
                if budget_seconds is not None else None)
    per_m: list[PerMStat] = []
    cap = n * (n - 1) // 2
    for m in range(lower_bound(n), cap + 1):
        log.info("scanning level n=%d m=%d (%s, %s)", n, m, mode, source)
        stat, witnesses = _scan_level(n, m, mode, source, ingest_path,
                                      workers, chunk_size, checkpoint,
                                      deadline)
        per_m.append(stat)
        if stat.arrows:
            deduped = list(dict.fromkeys(witnesses))
            if len(deduped) != len(witnesses):
                # cannot happen with an isomorph-free source; loud beats quiet
                log.warning("candidate stream repeated an isomorphism class "
                            "at (n=%d, m=%d)", n, m)
            return SearchReport(n=n, mode=mode, source=source, r_star=m,
                                witness_count=len(deduped),
                                witnesses=tuple(deduped),
                                per_m=tuple(per_m))
    raise RuntimeError(
        f"no witness up to the complete graph; the scan space for n={n} "
        "cannot be right")


# ---------------------------------------------------------------------------
# report serialization and verification
# ---------------------------------------------------------------------------

def serialize_report(report: SearchReport) -> str:
    lines = [REPORT_HEADER,
             f"n={report.n}",
             f"mode={report.mode}",
             f"source={report.source}",
             f"r_star={report.r_star}",
             f"witness_count={report.witness_count}"]
    for s in report.per_m:
        lines.append(f"m={s.m} candidates={s.candidates} arrows={s.arrows} "
                     f"seconds={s.seconds:.3f}")
    lines.append(f"witnesses {len(report.witnesses)}")
    lines.extend(report.witnesses)
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> SearchReport:
    lines = [ln.rstrip("\n") for ln in text.splitlines()]
    if not lines or lines[0] != REPORT_HEADER:
        raise ValueError("not a recognized report (missing header)")
    fields = {}
    i = 1
    while i < len(lines) and "=" in lines[i] and not lines[i].startswith("m="):
        key, val = lines[i].split("=", 1)
        fields[key] = val
        i += 1
    per_m = []
    while i < len(lines) and lines[i].startswith("m="):
        parts = dict(p.split("=", 1) for p in lines[i].split())
        per_m.append(PerMStat(int(parts["m"]), int(parts["candidates"]),
                               int(parts["arrows"]), float(parts["seconds"])))
        i += 1
    if i >= len(lines) or not lines[i].startswith("witnesses "):
        raise ValueError("report missing witness section")
    count = int(lines[i].split()[1])
    witnesses = tuple(lines[i + 1: i + 1 + count])
    if (len(witnesses) != count or i + 1 + count >= len(lines)
            or lines[i + 1 + count] != "end"):
        raise ValueError("report witness section truncated")
    return SearchReport(n=int(fields["n"]), mode=fields["mode"],
                        source=fields["source"],
                        r_star=int(fields["r_star"]),
                        witness_count=int(fields["witness_count"]),
                        witnesses=witnesses, per_m=tuple(per_m))


def write_report(report: SearchReport, path) -> None:
    Path(path).write_text(serialize_report(report))


def read_report(path) -> SearchReport:
    return parse_report(Path(path).read_text())


def report_discrepancies(report: SearchReport) -> list[str]:
    """Named problems found by independently re-checking the report:
    every witness re-decided in complete mode, re-canonicalized, deduped,
    counts compared.  Empty list means the report verifies."""
    problems = []
    if report.witness_count != len(report.witnesses):
        problems.append(
            f"witness_count={report.witness_count} but "
            f"{len(report.witnesses)} witnesses listed")
    seen = set()
    for text in report.witnesses:
        try:
            g = parse_graph6(text)
        except ValueError as exc:
            problems.append(f"unparsable witness {text!r}: {exc}")
            continue
        if g.order != report.n:
            problems.append(f"witness {text} has order {g.order}, "
                            f"expected {report.n}")
            continue
        if g.edge_count != report.r_star:
            problems.append(f"witness {text} has {g.edge_count} edges, "
                            f"expected {report.r_star}")
            continue
        form = canonical_form(g)
        if form != text:
            problems.append(f"witness {text} is not in canonical form "
                            f"(canonical: {form})")
        if form in seen:
            problems.append(f"duplicate class among witnesses: {form}")
        seen.add(form)
        if not decide_arrowing_cycle(g, report.n, mode="complete").arrows:
            problems.append(f"witness {text} does not arrow")
    stats = {s.m: s for s in report.per_m}
    final = stats.get(report.r_star)
    if final is None:
        problems.append(f"no per-level stat for m={report.r_star}")
    elif final.arrows != report.witness_count:
        problems.append(
            f"level m={report.r_star} records {final.arrows} arrows but "
            f"witness_count={report.witness_count}")
    for s in report.per_m:
        if s.m < report.r_star and s.arrows:
            problems.append(
                f"level m={s.m} below r_star records {s.arrows} arrows")
    return problems


def verify_report(report: SearchReport) -> bool:
    problems = report_discrepancies(report)
    for p in problems:
        log.error("report discrepancy: %s", p)
    return not problems
