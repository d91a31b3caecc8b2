"""
Deterministic search over additive maps.

Blocks of maps are checked with the vectorized predicates. With several threads the blocks are
handed out in groups and merged back in index order, so the result never depends on the schedule.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Callable, Union

import numpy as np

from njordan.models.additive import map_batches, map_count
from njordan.models.predicates import jordan_failures, ring_failures
from njordan.models.ring import AdditiveMap, FiniteRing
from njordan.schema.reports import ImplicationReport

logger = logging.getLogger(__name__)

Predicate = Union[str, Callable[[AdditiveMap], bool]]

PREDICATES = ("jordan_not_ring", "njordan_not_jordan", "njordan", "nring")


def predicate_mask(predicate: Predicate, domain: FiniteRing, codomain: FiniteRing, matrices: np.ndarray, n: int) -> np.ndarray:
    if callable(predicate):
        return np.array(
            [bool(predicate(AdditiveMap(domain, codomain, mat))) for mat in matrices], dtype=bool
        )

    jordan = jordan_failures(domain, codomain, matrices, n) < 0
    if predicate == "njordan":
        return jordan

    elif predicate == "nring":
        return ring_failures(domain, codomain, matrices, n) < 0

    elif predicate == "jordan_not_ring":
        mask = np.zeros_like(jordan)
        if jordan.any():
            mask[jordan] = ring_failures(domain, codomain, matrices[jordan], n) >= 0
        return mask

    elif predicate == "njordan_not_jordan":
        mask = np.zeros_like(jordan)
        if jordan.any():
            mask[jordan] = jordan_failures(domain, codomain, matrices[jordan], 2) >= 0
        return mask

    else:
        raise ValueError(f"Unsupported predicate {predicate!r}, expected one of {', '.join(PREDICATES)}")


def _hits(block, predicate, domain, codomain, n, offset):
    indices, matrices = block
    mask = predicate_mask(predicate, domain, codomain, matrices, n)
    found = []
    for row in np.nonzero(mask)[0]:
        if indices is None:
            found.append(AdditiveMap(domain, codomain, matrices[row], name=f"sample#{offset + int(row)}"))
        else:
            found.append(AdditiveMap(domain, codomain, matrices[row], index=int(indices[row])))
    return found


def search(
    domain: FiniteRing,
    codomain: FiniteRing,
    n: int,
    predicate: Predicate,
    limit: int | None = None,
    threads: int = 1,
    sample: int | None = None,
    seed_value: int = 0,
    unsafe_override: bool = False,
    batch: int = 4096,
) -> list[AdditiveMap]:
    blocks = map_batches(domain, codomain, batch=batch, sample=sample, seed_value=seed_value, unsafe_override=unsafe_override)
    results: list[AdditiveMap] = []
    offset = 0
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        while True:
            group = list(islice(blocks, max(1, threads)))
            if not group:
                break
            offsets = []
            for block in group:
                offsets.append(offset)
                offset += block[1].shape[0]
            futures = [
                pool.submit(_hits, block, predicate, domain, codomain, n, start)
                for block, start in zip(group, offsets)
            ]
            for future in futures:
                results.extend(future.result())
            if limit is not None and len(results) >= limit:
                return results[:limit]
    logger.info("search %s -> %s, n=%d: %d hits", domain.name, codomain.name, n, len(results))
    return results


def implication_check(domain: FiniteRing, codomain: FiniteRing, n: int, unsafe_override: bool = False) -> ImplicationReport:
    """Exhaustive count of n-Jordan maps, n-ring maps and n-Jordan maps that are not n-ring."""
    jordan_total = ring_total = counterexamples = ring_not_jordan = 0
    first = None
    for indices, matrices in map_batches(domain, codomain, unsafe_override=unsafe_override):
        jordan = jordan_failures(domain, codomain, matrices, n) < 0
        ring = ring_failures(domain, codomain, matrices, n) < 0
        jordan_total += int(jordan.sum())
        ring_total += int(ring.sum())
        bad = jordan & ~ring
        counterexamples += int(bad.sum())
        ring_not_jordan += int((ring & ~jordan).sum())
        if first is None and bad.any():
            first = [int(v) for v in matrices[int(np.argmax(bad))].reshape(-1)]
    return ImplicationReport(
        domain=domain.name,
        codomain=codomain.name,
        n=n,
        maps=map_count(domain, codomain),
        jordan_maps=jordan_total,
        ring_maps=ring_total,
        counterexamples=counterexamples,
        ring_not_jordan=ring_not_jordan,
        first_counterexample=first,
    )
