from math import comb

import pytest

from mergedjohnson.subsets import (all_masks, elements_of, ksubset_rank,
                                   ksubset_unrank, mask_image, mask_of,
                                   popcount)


def test_mask_roundtrip():
    assert elements_of(mask_of([0, 2, 5])) == [0, 2, 5]
    assert mask_of([]) == 0
    assert popcount(mask_of(range(7))) == 7


@pytest.mark.parametrize("n,k", [(5, 2), (8, 3), (10, 5), (6, 1)])
def test_colex_rank_unrank(n, k):
    masks = all_masks(n, k)
    assert len(masks) == comb(n, k)
    for rank, mask in enumerate(masks):
        assert ksubset_rank(mask) == rank
        assert ksubset_unrank(k, rank) == mask


def test_colex_order_is_increasing_as_integers():
    # colex order on k-subsets coincides with numeric order on bitmasks
    masks = all_masks(7, 3)
    assert masks == sorted(masks)


def test_mask_image():
    # cycle 0 -> 1 -> 2 -> 0
    images = [1, 2, 0, 3]
    assert elements_of(mask_image(mask_of([0, 1]), images)) == [1, 2]
    assert elements_of(mask_image(mask_of([2, 3]), images)) == [0, 3]
