"""Prime sweep of the quartic bound experiment: for f = x^4 + ax^2 + bx over
every prime field F_p up to a cap, one record with N_f, the normalized
deviation, the exact bound verdict and the census genericity verdict.

Records are computed per prime (optionally across worker processes) and
always emitted in ascending prime order, so CSV output is byte-identical
regardless of the parallelism level.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import quartic_verdict
from .errors import TooLargeError
from .spectrum import CycleCensus, genericity_test, quartic_prime_scan

MAX_PMAX = 10**6

CSV_HEADER = "p,q,a,b,N_f,d_f,bound_ok,generic,special"

_VERDICT_SHORT = {
    "generic-consistent": "yes",
    "non-generic": "no",
    "inconclusive": "inconclusive",
}


@dataclass(frozen=True)
class SweepRecord:
    p: int
    q: int
    a: int
    b: int
    n_f: int
    mu_q: Fraction  # 5q/8, the expected image size
    d_f: float
    bound_ok: bool
    generic: str  # yes | no | inconclusive
    special: int

    def csv_row(self) -> str:
        return (
            f"{self.p},{self.q},{self.a},{self.b},{self.n_f},"
            f"{self.d_f:.6f},{1 if self.bound_ok else 0},{self.generic},{self.special}"
        )


def primes_up_to(n: int) -> list[int]:
    """Eratosthenes sieve, ascending."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


def record_for_prime(p: int, a_seed: int, b_seed: int) -> SweepRecord | None:
    """One sweep record, or None when p is skipped (p < 5 or b = 0 mod p)."""
    if p < 5:
        return None
    a, b = a_seed % p, b_seed % p
    if b == 0:
        return None  # family degenerates to a quadratic in x^2
    scan = quartic_prime_scan(p, a, b)
    census = CycleCensus(d=4, q=p, counts=scan.shape_counts, special=scan.special)
    verdict = genericity_test(census, p)
    bound = quartic_verdict(p, scan.n_f)
    d_f = float(Fraction(8 * scan.n_f - 5 * p, 8)) / math.sqrt(p)
    return SweepRecord(
        p=p,
        q=p,
        a=a,
        b=b,
        n_f=scan.n_f,
        mu_q=Fraction(5 * p, 8),
        d_f=d_f,
        bound_ok=bound.passed,
        generic=_VERDICT_SHORT[verdict.verdict],
        special=scan.special,
    )


def _worker(args) -> list[SweepRecord]:
    a_seed, b_seed, primes = args
    out = []
    for p in primes:
        rec = record_for_prime(p, a_seed, b_seed)
        if rec is not None:
            out.append(rec)
    return out


def run_sweep(
    a_seed: int, b_seed: int, pmax: int, jobs: int | None = None
) -> list[SweepRecord]:
    """Sweep all primes 5 <= p <= pmax; records returned in ascending order
    regardless of how the work was partitioned."""
    if pmax > MAX_PMAX:
        raise TooLargeError(f"pmax limited to {MAX_PMAX}")
    primes = [p for p in primes_up_to(pmax) if p >= 5]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(primes) < 32:
        records = _worker((a_seed, b_seed, primes))
    else:
        chunks = [
            (a_seed, b_seed, primes[i::jobs]) for i in range(jobs)
        ]
        records = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_worker, chunks):
                records.extend(part)
    records.sort(key=lambda r: r.p)
    return records


def write_csv(records, path) -> None:
    """Fixed schema, UTF-8, LF line endings; byte-identical across runs."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        for rec in records:
            fh.write(rec.csv_row() + "\n")


def csv_bytes(records) -> bytes:
    out = [CSV_HEADER]
    out.extend(rec.csv_row() for rec in records)
    return ("\n".join(out) + "\n").encode("utf-8")


HIST_BINS = 40
HIST_RANGE = (-1.5, 1.5)


def summarize(records) -> str:
    """Footer text: extremal deviation, bound failures among generic rows,
    and a fixed-bin histogram of the normalized deviations."""
    if not records:
        return "no records"
    worst = max(records, key=lambda r: abs(r.d_f))
    failures = sum(1 for r in records if r.generic == "yes" and not r.bound_ok)
    lines = [
        f"records: {len(records)}",
        f"max |d_f| = {abs(worst.d_f):.6f} at p = {worst.p}",
        f"bound failures among generic rows: {failures}",
        f"histogram of d_f over [{HIST_RANGE[0]}, {HIST_RANGE[1]}], {HIST_BINS} bins:",
    ]
    values = np.clip(
        [r.d_f for r in records], HIST_RANGE[0], np.nextafter(HIST_RANGE[1], -np.inf)
    )
    counts, edges = np.histogram(values, bins=HIST_BINS, range=HIST_RANGE)
    peak = max(int(c) for c in counts) or 1
    for i in range(HIST_BINS):
        bar = "#" * (60 * int(counts[i]) // peak)
        lines.append(f"[{edges[i]:+.3f},{edges[i+1]:+.3f}) {int(counts[i]):6d} {bar}")
    return "\n".join(lines)
