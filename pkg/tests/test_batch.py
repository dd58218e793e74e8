from itertools import islice

import numpy as np
import pytest

from tagbench.batch import (
    boundary_words32,
    boundary_words64,
    covers_block,
    nan_roundtrip_mismatches,
    nun_roundtrip_mismatches,
    splitmix64_block,
    st32_roundtrip_mismatches,
    st32_transform_block,
    st32_untransform_block,
    st_roundtrip_mismatches,
    st_transform_block,
    st_untransform_block,
    )
from tagbench.prng import splitmix64
from tagbench.schemes import PRESETS, SELF_TAG_PRESETS, covers, st_transform
from tagbench.st32 import OneTag, TwoTag, st32_covers, st32_transform


def test_splitmix_block_matches_scalar_stream():
    seed = 42
    want = list(islice(splitmix64(seed), 1000))
    got = splitmix64_block(seed, 0, 1000)
    assert got.dtype == np.uint64
    assert [int(x) for x in got] == want
    # a block starting mid-stream continues the same sequence
    tail = splitmix64_block(seed, 600, 400)
    assert [int(x) for x in tail] == want[600:]


@pytest.mark.parametrize("name", SELF_TAG_PRESETS)
def test_transform_block_matches_scalar(name):
    cfg = PRESETS[name]
    words = splitmix64_block(5, 0, 4096)
    tr = st_transform_block(words, cfg)
    for i in (0, 1, 17, 4095):
        assert int(tr[i]) == st_transform(int(words[i]), cfg)
    back = st_untransform_block(tr, cfg)
    assert np.array_equal(back, words)


@pytest.mark.parametrize("name", SELF_TAG_PRESETS)
def test_covers_block_matches_scalar(name):
    cfg = PRESETS[name]
    words = splitmix64_block(11, 0, 4096)
    cov = covers_block(words, cfg)
    assert cov.dtype == np.bool_
    for i in (0, 3, 100, 4095):
        assert bool(cov[i]) == covers(cfg, int(words[i]))


def test_boundary_word_lists():
    b64 = boundary_words64()
    assert len(b64) == 384
    assert len(set(int(x) for x in b64)) == len(b64)
    b32 = boundary_words32()
    assert len(b32) == 192


@pytest.mark.parametrize("name", SELF_TAG_PRESETS)
def test_st_roundtrip_fuzz_small(name):
    assert st_roundtrip_mismatches(PRESETS[name], 100000, seed=9) == 0


def test_nan_nun_roundtrip_fuzz_small():
    assert nan_roundtrip_mismatches(100000, seed=9) == 0
    assert nun_roundtrip_mismatches(100000, seed=9) == 0


def test_st32_blocks_match_scalar():
    for v in (OneTag(0), OneTag(2), TwoTag(0), TwoTag(3)):
        words = splitmix64_block(3, 0, 4096).astype(np.uint64) & np.uint64(0xFFFFFFFF)
        words = words.astype(np.uint32)
        tr = st32_transform_block(words, v)
        for i in (0, 9, 4095):
            assert int(tr[i]) == st32_transform(int(words[i]), v)
        assert np.array_equal(st32_untransform_block(tr, v), words)


def test_st32_roundtrip_fuzz_small():
    assert st32_roundtrip_mismatches(OneTag(0), 100000, seed=9) == 0
    assert st32_roundtrip_mismatches(TwoTag(0), 100000, seed=9) == 0


def test_covers_block_mantissa_rule():
    cfg = PRESETS["mantissa"]
    words = np.arange(64, dtype=np.uint64)
    cov = covers_block(words, cfg)
    assert np.array_equal(cov, (words & np.uint64(3)) == 0)
