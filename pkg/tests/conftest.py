import pytest

from stabconv.convert import builtin_plan
from stabconv.tableau import add_ancilla_plus


@pytest.fixture(scope="session")
def plan():
    return builtin_plan()


@pytest.fixture(scope="session")
def padded_initial(plan):
    return add_ancilla_plus(plan.initial_code, plan.width - plan.initial_code.n)


@pytest.fixture(scope="session")
def step_codes_10q(plan, padded_initial):
    """All fifteen step codes on the ten-qubit working width."""
    return [padded_initial] + [s.expected_code for s in plan.steps[1:]]
