"""One test per acceptance criterion, each at its stated tolerance and time budget.

The claim procedures compare brute-force results exactly; nothing here is
relaxed.  A criterion whose published value disagrees with the brute force
fails and prints its evidence.
"""
import json

import pytest

from dpcount.claims import ACCEPTANCE_ORDER, REGISTRY, verify_claim

from conftest import ACCEPTANCE_RESULTS

# wall-time budgets in seconds; the two slow criteria allow 30 min and several hours
BUDGETS = {
    "cubic_f2_unique": 1, "cubic_f2_classification": 1800, "dp1_f2_min3": 1,
    "dp1_f3_phase1": 1, "dp1_f3_min2": 60, "dp1_f4_phase1": 1, "dp1_f4_min2": 4 * 3600,
    "dp1_f5_phase1_empty": 1, "dp2_f2_unique_256": 1, "dp2_f2_conic_bound": 1,
    "dp2_f3_no_unique": 300, "dp2_f4_no_unique": 60, "dp2_f5_sampled": 300,
    "exc_counts": 1, "weil_candidates": 1, "urabe_f_props": 1, "hasse_fibers": 60,
    "engine_properties": 300,
}


def test_registry_covers_criteria():
    assert len(ACCEPTANCE_ORDER) == 18 and len(set(ACCEPTANCE_ORDER)) == 18
    assert set(ACCEPTANCE_ORDER) <= set(REGISTRY)
    assert set(BUDGETS) == set(ACCEPTANCE_ORDER)


def _param(claim_id):
    if REGISTRY[claim_id].runtime == "instant":
        return claim_id
    return pytest.param(claim_id, marks=pytest.mark.slow)


@pytest.mark.parametrize("claim_id", [_param(c) for c in ACCEPTANCE_ORDER])
def test_criterion(claim_id):
    res = verify_claim(claim_id)
    budget = BUDGETS[claim_id]
    ACCEPTANCE_RESULTS[claim_id] = (res, budget)
    print(res.line())
    assert res.passed, json.dumps(res.to_json(), indent=1, default=str)[:4000]
    assert res.wall_time <= budget, f"{res.wall_time:.1f}s exceeds {budget}s"
