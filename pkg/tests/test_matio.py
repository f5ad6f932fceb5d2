import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from framekit import matio
from framekit.errors import ParseError

finite = st.floats(allow_nan=False, allow_infinity=False)


@settings(max_examples=50, deadline=None)
@given(re=arrays(np.float64, st.tuples(st.integers(1, 5), st.integers(1, 5)), elements=finite),
       data=st.data())
def test_json_round_trip_is_bit_exact(re, data):
    im = data.draw(arrays(np.float64, re.shape, elements=finite))
    A = re + 1j * im
    back = matio.loads(matio.dumps(A))
    assert back.shape == A.shape
    assert back.real.tobytes() == A.real.tobytes()
    assert back.imag.tobytes() == A.imag.tobytes()


def test_json_layout_is_row_major():
    obj = json.loads(matio.dumps(np.array([[1, 2j], [3, 4]])))
    assert obj == {'rows': 2, 'cols': 2, 'data': [[1, 0], [0, 2], [3, 0], [4, 0]]}


def test_file_round_trip(tmp_path):
    A = np.array([[1 / 3, -2e-300j], [np.pi, 1 + 1j]])
    matio.save(tmp_path / 'a.json', A)
    np.testing.assert_array_equal(matio.load(tmp_path / 'a.json'), A)


@pytest.mark.parametrize('token,value', [('1.5', 1.5), ('-2i', -2j), ('0.5+1e-3i', 0.5 + 1e-3j),
                                         ('3-4j', 3 - 4j), ('i', 1j), ('-j', -1j), ('2+i', 2 + 1j),
                                         ('.5', 0.5), ('1e2', 100)])
def test_parse_complex(token, value):
    assert matio.parse_complex(token) == value


def test_parse_csv():
    A = matio.parse_csv('# header\n1, 2i\n\n3-1i, 4\n')
    np.testing.assert_array_equal(A, [[1, 2j], [3 - 1j, 4]])


def test_csv_errors_carry_position():
    with pytest.raises(ParseError) as info:
        matio.parse_csv('1,2\n3,abc\n')
    assert (info.value.line, info.value.column) == (2, 3)
    with pytest.raises(ParseError) as info:
        matio.parse_csv('1,2\n3\n')
    assert info.value.line == 2
    with pytest.raises(ParseError):
        matio.parse_csv('\n# nothing\n')


def test_json_errors():
    with pytest.raises(ParseError) as info:
        matio.loads('{"rows": 1,\n "cols": }')
    assert info.value.line == 2
    with pytest.raises(ParseError):
        matio.loads('{"rows": 1, "cols": 2, "data": [[1, 0]]}')
    with pytest.raises(ParseError):
        matio.loads('{"rows": 1, "cols": 1, "data": [[1, "x"]]}')
    with pytest.raises(ParseError):
        matio.loads('[1, 2]')
    with pytest.raises(ParseError):
        matio.loads('{"rows": 1, "data": []}')


def test_finite():
    assert matio.finite(np.inf) == 'inf' and matio.finite(2) == 2.0
