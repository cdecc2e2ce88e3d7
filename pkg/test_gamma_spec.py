import json

import hypothesis.strategies as st
import pytest
from hypothesis import given

from euler_errors import GammaSpecError, InvalidGroupTable, UnsupportedGroup
from gamma_spec import (format_gamma, load_table_file, parse_alphas, parse_gamma, parse_group,
                        parse_int_list)
from groups import CIRCLE, CYCLIC, DIHEDRAL, FINITE_TABLE, FULL_O2, TRIVIAL, USER_SUPPLIED, GammaGroup


@st.composite
def presentation_texts(draw):
    names = 'abc'[:draw(st.integers(min_value=1, max_value=3))]
    letters = names + names.upper()
    words = draw(st.lists(st.text(alphabet=letters, min_size=1, max_size=8), max_size=4))
    return f"fp:{','.join(names)}|{','.join(words)}"


@given(presentation_texts())
def test_presentation_round_trip(text):
    assert format_gamma(parse_gamma(text)) == text


@given(st.integers(min_value=1, max_value=9), st.sampled_from(['Z^', 'F']))
def test_standard_round_trip(ell, prefix):
    gamma = parse_gamma(f"{prefix}{ell}")
    assert parse_gamma(format_gamma(gamma)) == gamma


def test_standard_forms():
    assert parse_gamma('Z') == GammaGroup.z_pow(1)
    assert parse_gamma('Z^3') == GammaGroup.z_pow(3)
    assert parse_gamma(' F2 ') == GammaGroup.free(2)


def test_presentation_encoding():
    gamma = parse_gamma('fp:a,b|aa,bb,abAB')
    assert gamma.presentation.relators == ((1, 1), (2, 2), (1, 2, -1, -2))
    assert gamma.presentation.generator_names == ('a', 'b')


def test_unnamed_presentation_uses_default_letters():
    gamma = GammaGroup.z_pow(2).to_presentation()
    assert format_gamma(GammaGroup.presented(gamma)) == "fp:a,b|abAB"


@pytest.mark.parametrize('text', [
    'Z^0', 'F0', 'F', 'Q', 'fp:a', 'fp:|aa', 'fp:A|a', 'fp:a,a|aa', 'fp:ab|a', 'fp:a|ab', 'fp:a|a,,a',
])
def test_bad_gamma_specs(text):
    with pytest.raises(GammaSpecError):
        parse_gamma(text)


def test_int_lists():
    assert parse_int_list('') == ()
    assert parse_int_list(' 2, -3 ,0') == (2, -3, 0)
    with pytest.raises(GammaSpecError):
        parse_int_list('2,x')
    with pytest.raises(GammaSpecError):
        parse_int_list('2,,3')


def test_alphas_must_be_positive():
    assert parse_alphas('2,3') == (2, 3)
    with pytest.raises(GammaSpecError):
        parse_alphas('2,0')


@pytest.mark.parametrize('text, kind', [
    ('trivial', TRIVIAL), ('S1', CIRCLE), ('so2', CIRCLE), ('O2', FULL_O2),
    ('cyclic:4', CYCLIC), ('dihedral:3', DIHEDRAL), ('cyclic:0', CIRCLE),
])
def test_group_names(text, kind):
    assert parse_group(text).kind == kind


def test_unknown_group_needs_user_value():
    z = GammaGroup.z_pow(1)
    with pytest.raises(UnsupportedGroup):
        parse_group('SU2', z)
    su2 = parse_group('SU2', z, 1)
    assert su2.kind == USER_SUPPLIED
    assert su2.lookup(z) == 1


def test_dihedral_zero_is_rejected():
    with pytest.raises(GammaSpecError):
        parse_group('dihedral:0')


def test_table_group(s3_table_file):
    group = parse_group(f"table:{s3_table_file}")
    assert group.kind == FINITE_TABLE
    assert group.label == "S3"


def test_bad_table_files(tmp_path):
    with pytest.raises(GammaSpecError):
        load_table_file(str(tmp_path / 'missing.json'))
    shapeless = tmp_path / 'shapeless.json'
    shapeless.write_text(json.dumps([[0]]))
    with pytest.raises(GammaSpecError):
        load_table_file(str(shapeless))
    broken = tmp_path / 'broken.json'
    broken.write_text(json.dumps({'name': 'broken', 'table': [[0, 1], [1, 1]]}))
    with pytest.raises(InvalidGroupTable):
        load_table_file(str(broken))
