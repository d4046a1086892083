"""Census of shift classes: exhaustive generation plus a Burnside check.

One representative per class is produced by generating row tuples in
lexicographic order and keeping exactly those no shift pair can lower.
A canonical representative's first row word is necessarily its smallest
(rotating a smaller row to the top would lower the tuple), so the
generator clamps every later row word to be at least the first instead
of filtering afterwards — that removes roughly a factor of the order
from the search.  Weavability is tested before minimality because it is
an O(n) word fold while the minimality scan is O(n^3) worst case.

The minimality scan doubles as a stabilizer count: the shift pairs
whose image equals the matrix itself form its stabilizer, and the orbit
size is n**2 divided by that count.  This avoids materializing image
sets for millions of candidates; the set-based :func:`~interweave.classify.orbit`
remains the reference behaviour and the test suite reconciles the two.

The independent cross-check for the all-classes count is Burnside's
lemma over the shift group: pair (k, l) acting on the n-by-n index
torus fixes ``2**c`` matrices, where ``c`` is the number of cycles of
the translation, so the class count is the mean of ``2**c`` over all
n**2 pairs.  Exact integer arithmetic throughout — the ``2**(n*n)``
terms outgrow 64 bits from order 8 on.

Enumeration scales as roughly ``2**(n*(n-1))`` candidates, so orders 6
and up are long-running jobs and must be requested explicitly via
``limit_override``.  Shards split the outermost loop by residue of the
first row word and merge by addition, so large runs parallelize with no
shared state.
"""

from __future__ import annotations

import itertools
import multiprocessing
import os
import time
from dataclasses import dataclass
from functools import reduce
from importlib.resources import files
from math import gcd, lcm
from typing import Callable, NamedTuple, Optional

from .bitmatrix import BitMatrix
from .classify import ClassRecord

INTERWEAVINGS = "interweavings"
ALL = "all"
MODES = (INTERWEAVINGS, ALL)

MAX_ENUM_ORDER = 8
# Orders below this run in seconds to minutes; from here on a full
# enumeration is a multi-hour job and must be asked for explicitly.
OVERRIDE_ORDER = 6

MAX_BURNSIDE_ORDER = 16

# verify_table() runs the all-classes enumeration only up to this order
# (seconds of work); beyond it the class count is covered by the exact
# Burnside value, keeping a full verify inside a few minutes.
ENUMERATED_B_BAR_MAX = 4

EXPECTED_DATA = "data/censuses.txt"


class Shard(NamedTuple):
    """Partition slot: this run handles first row words == index (mod total)."""

    index: int = 0
    total: int = 1


@dataclass(frozen=True)
class EnumConfig:
    """Enumeration parameters: order, mode, shard slot, size guard."""

    n: int
    mode: str = INTERWEAVINGS
    shard: Shard = Shard()
    limit_override: bool = False

    def __post_init__(self):
        if not 2 <= self.n <= MAX_ENUM_ORDER:
            raise ValueError(f"order must be in [2, {MAX_ENUM_ORDER}], got {self.n}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        shard = Shard(*self.shard)
        if shard.total < 1 or not 0 <= shard.index < shard.total:
            raise ValueError(f"invalid shard {shard.index}/{shard.total}")
        object.__setattr__(self, "shard", shard)
        if self.n >= OVERRIDE_ORDER and not self.limit_override:
            raise ValueError(
                f"order {self.n} enumeration is a long-running job; "
                "pass limit_override to run it anyway"
            )


@dataclass(frozen=True)
class CountReport:
    """Census of one run (or merged shards) for a single order.

    ``q_count`` counts weavable matrices (the sum of orbit sizes over
    interweaving classes); ``q_bar``/``m_bar``/``r_bar`` count
    interweaving, self-mirror and rotation-stable classes; ``b_bar``
    counts all shift classes and is present only for all-classes runs.
    """

    n: int
    mode: str
    q_count: int
    q_bar: int
    m_bar: int
    r_bar: int
    b_bar: Optional[int]
    candidates_examined: int
    elapsed: float
    shard_total: int = 1
    shard_indices: frozenset = frozenset({0})


def _rotation_tables(n: int) -> list[list[int]]:
    """rotl[l][w] = word w rotated right by l within n bits."""
    mask = (1 << n) - 1
    return [
        [(w >> l | w << (n - l)) & mask for w in range(1 << n)]
        for l in range(n)
    ]


def _mirror_table(n: int) -> list[int]:
    """brev[w] = word w with its n bits reversed."""
    out = []
    for w in range(1 << n):
        r = 0
        for _ in range(n):
            r = r << 1 | w & 1
            w >>= 1
        out.append(r)
    return out


def _rotate90_rows(rows: tuple, n: int) -> tuple:
    """Row words of the quarter-turn image: entry (i, j) <- (j, n-1-i)."""
    out = []
    for i in range(n):
        word = 0
        for j in range(n):
            if rows[j] >> i & 1:
                word |= 1 << (n - 1 - j)
        out.append(word)
    return tuple(out)


def _minimality_scan(rows, rotl, n):
    """0 if some shift image is lexicographically smaller, else the
    stabilizer size (count of shift pairs mapping the matrix to itself).

    Images are compared word by word with early exit; in the common
    case one comparison of the first row settles a pair.
    """
    r0 = rows[0]
    stab = 1
    for l in range(n):
        rl = rotl[l]
        for k in range(n):
            if k == 0 and l == 0:
                continue
            v = rl[rows[k]]
            if v > r0:
                continue
            if v < r0:
                return 0
            for i in range(1, n):
                j = k + i
                if j >= n:
                    j -= n
                w = rl[rows[j]]
                ri = rows[i]
                if w != ri:
                    if w < ri:
                        return 0
                    break
            else:
                stab += 1
    return stab


def _symmetry_hits(rows, mrows, rrows, rotl, n):
    """Whether the orbit of ``rows`` contains its mirror image and/or
    its quarter-turn image.  Single pass over the n**2 shift images,
    filtering on the first row word of each target."""
    m0 = mrows[0]
    r0 = rrows[0]
    mhit = rhit = False
    rng = range(n)
    for rl in rotl:
        shifted = [rl[w] for w in rows]
        for k in rng:
            v = shifted[k]
            if not mhit and v == m0:
                for i in range(1, n):
                    j = k + i
                    if j >= n:
                        j -= n
                    if shifted[j] != mrows[i]:
                        break
                else:
                    mhit = True
            if not rhit and v == r0:
                for i in range(1, n):
                    j = k + i
                    if j >= n:
                        j -= n
                    if shifted[j] != rrows[i]:
                        break
                else:
                    rhit = True
        if mhit and rhit:
            break
    return mhit, rhit


def enumerate_classes(
    cfg: EnumConfig,
    sink: Optional[Callable[[ClassRecord], None]] = None,
    progress: Optional[Callable[[int], None]] = None,
) -> CountReport:
    """Produce one ClassRecord per shift class of this shard's slice.

    Records reach ``sink`` in lexicographic order of their canonical
    row tuples and are never accumulated here, so memory stays O(1) in
    the class count.  In ``interweavings`` mode only weavable classes
    are generated; in ``all`` mode every class is, and the weaving
    flags are filled per record.  ``progress`` (if given) receives the
    running candidate count after each outermost batch.
    """
    n = cfg.n
    top = (1 << n) - 1
    mask = top
    if cfg.mode == INTERWEAVINGS:
        lo, hi = 1, top - 1
    else:
        lo, hi = 0, top
    weavable_mode = cfg.mode == INTERWEAVINGS
    index, total = cfg.shard

    rotl = _rotation_tables(n)
    brev = _mirror_table(n)
    rng = range(n)
    nn = n * n

    candidates = 0
    b_bar = q_bar = m_bar = r_bar = q_count = 0
    started = time.perf_counter()

    for first in range(lo, hi + 1):
        if first % total != index:
            continue
        for rest in itertools.product(range(first, hi + 1), repeat=n - 1):
            candidates += 1
            rows = (first,) + rest
            if weavable_mode:
                ored = anded = first
                for w in rest:
                    ored |= w
                    anded &= w
                if ored != mask or anded != 0:
                    continue
            stab = _minimality_scan(rows, rotl, n)
            if stab == 0:
                continue
            orbit_size = nn // stab
            if weavable_mode:
                weavable = True
            else:
                b_bar += 1
                ored = anded = first
                bad = first == 0 or first == top
                for w in rest:
                    ored |= w
                    anded &= w
                    if w == 0 or w == top:
                        bad = True
                weavable = not bad and ored == mask and anded == 0
            if weavable:
                q_bar += 1
                q_count += orbit_size
                mrows = tuple(brev[w] for w in rows)
                rrows = _rotate90_rows(rows, n)
                mhit, rhit = _symmetry_hits(rows, mrows, rrows, rotl, n)
                if mhit:
                    m_bar += 1
                if rhit:
                    r_bar += 1
            else:
                mhit = rhit = False
            if sink is not None:
                sink(
                    ClassRecord(
                        canonical=BitMatrix(rows),
                        orbit_size=orbit_size,
                        is_interweaving=weavable,
                        self_mirror=mhit,
                        rotation_stable=rhit,
                    )
                )
        if progress is not None:
            progress(candidates)

    return CountReport(
        n=n,
        mode=cfg.mode,
        q_count=q_count,
        q_bar=q_bar,
        m_bar=m_bar,
        r_bar=r_bar,
        b_bar=b_bar if cfg.mode == ALL else None,
        candidates_examined=candidates,
        elapsed=time.perf_counter() - started,
        shard_total=total,
        shard_indices=frozenset({index}),
    )


def burnside_b_bar(n: int) -> int:
    """Number of shift classes of all n-by-n binary matrices, counted
    without enumerating anything.

    A shift pair (k, l) permutes matrix cells as a translation of the
    n-by-n index torus; it fixes ``2**c`` matrices where ``c`` is its
    cycle count, n**2 divided by the pair's order lcm(n/gcd(n,k),
    n/gcd(n,l)).  Averaging over the group gives the class count.
    """
    if not 2 <= n <= MAX_BURNSIDE_ORDER:
        raise ValueError(f"order must be in [2, {MAX_BURNSIDE_ORDER}], got {n}")
    cells = n * n
    total = 0
    for k in range(n):
        order_k = n // gcd(n, k)
        for l in range(n):
            order = lcm(order_k, n // gcd(n, l))
            total += 1 << (cells // order)
    count, remainder = divmod(total, cells)
    assert remainder == 0, "Burnside sum must be divisible by the group order"
    return count


def merge_reports(a: CountReport, b: CountReport) -> CountReport:
    """Combine reports of two disjoint shards of the same run.

    Counts add field-wise, elapsed takes the maximum (shards run in
    parallel), shard index sets union.  Commutative and associative.
    """
    if a.n != b.n:
        raise ValueError(f"cannot merge reports for orders {a.n} and {b.n}")
    if a.mode != b.mode:
        raise ValueError(f"cannot merge {a.mode!r} and {b.mode!r} reports")
    if a.shard_total != b.shard_total:
        raise ValueError(
            f"cannot merge shards of different partitions "
            f"({a.shard_total} vs {b.shard_total})"
        )
    if a.shard_indices & b.shard_indices:
        raise ValueError("cannot merge overlapping shards")
    return CountReport(
        n=a.n,
        mode=a.mode,
        q_count=a.q_count + b.q_count,
        q_bar=a.q_bar + b.q_bar,
        m_bar=a.m_bar + b.m_bar,
        r_bar=a.r_bar + b.r_bar,
        b_bar=None if a.b_bar is None else a.b_bar + b.b_bar,
        candidates_examined=a.candidates_examined + b.candidates_examined,
        elapsed=max(a.elapsed, b.elapsed),
        shard_total=a.shard_total,
        shard_indices=a.shard_indices | b.shard_indices,
    )


def _collect_sink(records: list, collect: str):
    """Sink appending canonical row tuples that match a list filter."""

    def sink(rec: ClassRecord):
        if not rec.is_interweaving:
            return
        if collect == "mirror" and not rec.self_mirror:
            return
        if collect == "rotation" and not rec.rotation_stable:
            return
        records.append(rec.canonical.rows)

    return sink


def _shard_worker(args):
    n, mode, index, total, limit_override, collect = args
    cfg = EnumConfig(n, mode, Shard(index, total), limit_override)
    if collect is None:
        return enumerate_classes(cfg), None
    rows: list = []
    report = enumerate_classes(cfg, _collect_sink(rows, collect))
    return report, rows


def enumerate_sharded(
    n: int,
    mode: str = INTERWEAVINGS,
    shards: int = 1,
    jobs: Optional[int] = None,
    limit_override: bool = False,
    collect: Optional[str] = None,
    progress: Optional[Callable[[int], None]] = None,
):
    """Run a full census split into ``shards`` slices and merge.

    With one shard everything runs in-process; with more, a process
    pool of ``jobs`` workers (default: one per shard, capped at the
    machine's CPU count) computes the slices independently.  Returns
    ``(report, rows)`` where ``rows`` is the merged, lexicographically
    sorted list of canonical row tuples matching ``collect`` ("all",
    "mirror" or "rotation"), or None when ``collect`` is None.
    """
    if shards < 1:
        raise ValueError(f"shard count must be positive, got {shards}")
    if shards == 1:
        report, rows = _shard_worker((n, mode, 0, 1, limit_override, collect))
        return report, rows
    tasks = [(n, mode, s, shards, limit_override, collect) for s in range(shards)]
    if jobs is None:
        jobs = min(shards, os.cpu_count() or 1)
    with multiprocessing.Pool(processes=max(1, jobs)) as pool:
        results = pool.map(_shard_worker, tasks)
    report = reduce(merge_reports, (rep for rep, _ in results))
    if progress is not None:
        progress(report.candidates_examined)
    if collect is None:
        return report, None
    merged: list = []
    for _, rows in results:
        merged.extend(rows)
    merged.sort()
    return report, merged


# -- reference constants and verification -----------------------------------

EXPECTED_KEYS = ("q_count", "b_bar", "q_bar", "m_bar", "r_bar")


def load_expected(path: Optional[str] = None) -> dict:
    """Reference census constants as {(order, key): value}.

    Reads the packaged fixture by default, or any file in the same
    format: one ``order key value`` triple per line, blank lines and
    ``#`` comments ignored.
    """
    if path is None:
        text = files("interweave").joinpath(EXPECTED_DATA).read_text()
        source = EXPECTED_DATA
    else:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
        source = path
    expected = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(
                f"{source}:{lineno}: expected 'order key value', got {line!r}"
            )
        n_text, key, value_text = parts
        if key not in EXPECTED_KEYS:
            raise ValueError(f"{source}:{lineno}: unknown count key {key!r}")
        try:
            n, value = int(n_text), int(value_text)
        except ValueError:
            raise ValueError(
                f"{source}:{lineno}: order and value must be integers"
            ) from None
        expected[n, key] = value
    return expected


@dataclass(frozen=True)
class VerifyCell:
    """One compared census cell: expected vs computed, with the method."""

    n: int
    key: str
    method: str  # "enumerated" or "burnside"
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def verify_table(
    n_max: int,
    expected: Optional[dict] = None,
    shards: int = 1,
    jobs: Optional[int] = None,
) -> list[VerifyCell]:
    """Recompute the census for orders 2..n_max and diff every cell
    against the reference constants.

    Interweaving counts are always enumerated.  The all-classes count
    is enumerated up to order ``ENUMERATED_B_BAR_MAX`` and checked by
    the Burnside formula at every order, so the two independent methods
    confirm each other where both run.  Mismatches are reported in the
    returned cells, never raised.
    """
    if not 2 <= n_max <= 5:
        raise ValueError(f"n_max must be in [2, 5], got {n_max}")
    if expected is None:
        expected = load_expected()
    cells = []

    def compare(n, key, method, actual):
        if (n, key) not in expected:
            raise ValueError(f"no expected constant for order {n} key {key!r}")
        cells.append(
            VerifyCell(
                n=n, key=key, method=method, expected=expected[n, key], actual=actual
            )
        )

    for n in range(2, n_max + 1):
        report, _ = enumerate_sharded(n, INTERWEAVINGS, shards=shards, jobs=jobs)
        compare(n, "q_count", "enumerated", report.q_count)
        compare(n, "q_bar", "enumerated", report.q_bar)
        compare(n, "m_bar", "enumerated", report.m_bar)
        compare(n, "r_bar", "enumerated", report.r_bar)
        if n <= ENUMERATED_B_BAR_MAX:
            all_report, _ = enumerate_sharded(n, ALL, shards=shards, jobs=jobs)
            compare(n, "b_bar", "enumerated", all_report.b_bar)
        compare(n, "b_bar", "burnside", burnside_b_bar(n))
    return cells
