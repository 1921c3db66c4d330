import pytest

from invpat.core import generate_fpf, generate_involutions


@pytest.fixture(scope="session")
def involutions_by_size():
    """All involutions of size 0..8, keyed by size."""
    return {n: tuple(generate_involutions(n)) for n in range(9)}


@pytest.fixture(scope="session")
def matchings_by_size():
    """All matchings of size 0..8, keyed by (even) size."""
    return {n: tuple(generate_fpf(n)) for n in range(0, 9, 2)}


def involution_count_oracle(n: int) -> int:
    """Independent recurrence a(n) = a(n-1) + (n-1) a(n-2)."""
    vals = [1, 1]
    for k in range(2, n + 1):
        vals.append(vals[k - 1] + (k - 1) * vals[k - 2])
    return vals[n]
