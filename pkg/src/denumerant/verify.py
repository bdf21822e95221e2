"""Three-way cross-check of denumerant values and seeded test corpora."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .partitions import Components, denumerant_bruteforce, denumerant_series
from .waves import QuasiPolynomial, quasipolynomial

# component sets that must always appear in a corpus
ANCHOR_SETS = ((1, 2, 3, 4, 5), (2, 4, 6), (6, 10, 15), (2, 2), (3, 3, 6), (4, 6, 9, 10))


def random_component_sets(seed: int, count: int, max_len: int = 4, max_part: int = 10) -> list[tuple[int, ...]]:
    """``count`` component sets: anchors that fit the bounds, then seeded random draws.

    Every third random draw reuses one part so repeated components are covered.
    """
    rng = random.Random(seed)
    out = [s for s in ANCHOR_SETS if len(s) <= max_len and max(s) <= max_part][:count]
    i = 0
    while len(out) < count:
        n = rng.randint(1, max_len)
        parts = [rng.randint(1, max_part) for _ in range(n)]
        if i % 3 == 2 and n >= 2:
            parts[-1] = parts[0]
        out.append(tuple(parts))
        i += 1
    return out


@dataclass(frozen=True)
class Mismatch:
    l: int
    bruteforce: int
    series: int
    quasipolynomial: object


@dataclass(frozen=True)
class VerifyResult:
    components: tuple[int, ...]
    L: int
    mismatch: Mismatch | None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def describe(self) -> str:
        if self.ok:
            return "OK"
        m = self.mismatch
        return (f"MISMATCH at l={m.l}: bruteforce={m.bruteforce} series={m.series} "
                f"quasipolynomial={m.quasipolynomial}")


def _evaluate_chunk(qp_json: str, lo: int, hi: int) -> list:
    qp = QuasiPolynomial.from_json(qp_json)
    return [qp.evaluate(l) for l in range(lo, hi)]


def _chunks(L: int, workers: int) -> list[tuple[int, int]]:
    n = L + 1
    size = -(-n // workers)
    return [(lo, min(lo + size, n)) for lo in range(0, n, size)]


def quasipolynomial_values(qp: QuasiPolynomial, L: int, workers: int = 1) -> list:
    """qp evaluated on 0..L, optionally sharded across processes; order is preserved."""
    if workers <= 1:
        return [qp.evaluate(l) for l in range(L + 1)]
    text = qp.to_json()
    chunks = _chunks(L, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_evaluate_chunk, [text] * len(chunks), [a for a, _ in chunks], [b for _, b in chunks]))
    return [v for part in parts for v in part]


def verify_components(c: Sequence[int], L: int, workers: int = 1) -> VerifyResult:
    comps = Components(c)
    bf = denumerant_bruteforce(L, comps).values
    se = denumerant_series(L, comps).values
    qv = quasipolynomial_values(quasipolynomial(comps), L, workers)
    for l in range(L + 1):
        if not (bf[l] == se[l] == qv[l]):
            return VerifyResult(comps.d, L, Mismatch(l, bf[l], se[l], qv[l]))
    return VerifyResult(comps.d, L, None)
