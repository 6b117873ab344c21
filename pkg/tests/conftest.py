import random

import pytest

from conjlab import SetPartition, iter_set_partitions, random_partition


def all_partitions(n: int) -> list[SetPartition]:
    return list(iter_set_partitions(n))


@pytest.fixture(scope="session")
def sparse_samples() -> list[SetPartition]:
    """Seeded partitions over scattered supports (not of the form 1..n)."""
    rng = random.Random(1729)
    out = []
    for _ in range(80):
        size = rng.randint(1, 14)
        support = rng.sample(range(1, 80), size)
        out.append(random_partition(support, rng))
    return out
