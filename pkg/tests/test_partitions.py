import pytest

from hodgekit.core.exact import binomial
from hodgekit.core.partitions import Partition, complement, partitions_in_box


def test_small_box():
    assert [p.parts for p in partitions_in_box(1, 2)] == [(), (1,), (2,)]


@pytest.mark.parametrize("rows, cols, count", [(2, 2, 6), (3, 4, 35), (0, 3, 1), (3, 0, 1)])
def test_box_counts(rows, cols, count):
    found = partitions_in_box(rows, cols)
    assert len(found) == count == binomial(rows + cols, rows)
    assert len(set(found)) == count
    assert all(p.fits(rows, cols) for p in found)


def test_sorted_by_size():
    sizes = [p.size for p in partitions_in_box(3, 3)]
    assert sizes == sorted(sizes)


def test_zeros_stripped_and_validation():
    assert Partition((2, 1, 0, 0)).parts == (2, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 1), box=(2, 2))


def test_box_does_not_affect_identity():
    assert Partition((2, 1), box=(2, 3)) == Partition((2, 1))
    assert hash(Partition((2, 1), box=(2, 3))) == hash(Partition((2, 1)))


def test_complement():
    assert complement(Partition((2, 1)), 2, 3).parts == (2, 1)
    assert complement(Partition(()), 2, 2).parts == (2, 2)
    assert complement(Partition((2, 2)), 2, 2).parts == ()
    for lam in partitions_in_box(3, 2):
        assert complement(complement(lam, 3, 2), 3, 2) == lam
        assert complement(lam, 3, 2).size == 6 - lam.size
