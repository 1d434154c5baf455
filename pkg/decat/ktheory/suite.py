"""The sl2 K-theory verification suite behind ``decat ktheory verify``."""

import logging
from typing import List, Optional, Sequence

from decat.fieldmath import Backend, backend_manager
from decat.ktheory.checks import CHECKS, affine_check, all_ks, checks_at, cross_model_check
from decat.ktheory.conventions import calibrated_conventions
from decat.ktheory.kernels import KTheoryModel
from decat.util.parallel import ordered_map
from decat.util.reports import CheckResult, all_passed

logger = logging.getLogger(__name__)


def verify_ktheory(
    N: int,
    k: Optional[int] = None,
    checks: Sequence[str] = CHECKS,
    jobs: Optional[int] = None,
    backend: Optional[Backend] = None,
) -> dict:
    """Run the selected checks on T*G(k, N), for one k or for all 0 <= k <= N.

    Returns a report with the calibrated conventions, the backend (and its evaluation
    points) and the check results in a fixed order: per-k checks by k, then ``affine``,
    then ``cross-model``."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}.")
    if k is not None and not 0 <= k <= N:
        raise ValueError(f"k must be between 0 and N={N}, got {k}.")
    backend = backend if backend is not None else backend_manager.active_backend
    conventions = calibrated_conventions(backend)
    model = KTheoryModel(N, conventions.tangent, backend)
    ks = all_ks(N) if k is None else [k]

    results: List[CheckResult] = []
    for batch in ordered_map(lambda j: checks_at(model, j, conventions, checks), ks, jobs=jobs):
        results.extend(batch)
    if "affine" in checks:
        results.append(affine_check(model, conventions.rule, ks, conventions.affine_correction))
    if "cross-model" in checks:
        results.append(cross_model_check(model, ks))
    logger.info(
        "K-theory checks for N=%d: %d of %d passed.",
        N,
        sum(r.passed for r in results),
        len(results),
    )
    return {
        "N": N,
        "k": k,
        "checks": [r.to_json() for r in results],
        "conventions": conventions.to_json(),
        "backend": backend.describe(N),
        "passed": all_passed(results),
    }
