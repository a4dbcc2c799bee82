import numpy as np
import pytest

from rmtlab.rng import RngStream


def test_same_key_replays_identical_bits():
    a = RngStream(123, 7).generator().standard_normal(100)
    b = RngStream(123, 7).generator().standard_normal(100)
    assert np.array_equal(a, b)


def test_repeated_generator_calls_restart_stream():
    s = RngStream(5, 1)
    first = s.generator().standard_normal(10)
    second = s.generator().standard_normal(10)
    assert np.array_equal(first, second)


def test_distinct_stream_ids_differ():
    a = RngStream(123, 0).generator().standard_normal(100)
    b = RngStream(123, 1).generator().standard_normal(100)
    assert not np.array_equal(a, b)


def test_distinct_master_seeds_differ():
    a = RngStream(1, 0).generator().standard_normal(100)
    b = RngStream(2, 0).generator().standard_normal(100)
    assert not np.array_equal(a, b)


def test_substream_offsets_id():
    s = RngStream(9, 10)
    assert s.substream(5).stream_id == 15
    assert s.substream(5).master_seed == 9
    wrapped = RngStream(9, 2**64 - 1).substream(1)
    assert wrapped.stream_id == 0


@pytest.mark.parametrize("bad", [-1, 2**64, 1.5, "x"])
def test_invalid_key_rejected(bad):
    with pytest.raises(ValueError):
        RngStream(bad, 0)
    with pytest.raises(ValueError):
        RngStream(0, bad)
