from fractions import Fraction

import pytest

from nmfrigid import formats
from nmfrigid.cpr import SymmetricFactor, certify_cp
from nmfrigid.exactlin import RationalMatrix
from nmfrigid.fixtures import RIGID_5X5, lift_demo_pair, unique_7_zero_pattern_r3
from nmfrigid.rigidity import certify


def test_parse_rational_values():
    assert formats.parse_rational("-3/7") == Fraction(-3, 7)
    assert formats.parse_rational("12") == 12
    assert formats.parse_rational("+4/6") == Fraction(2, 3)


@pytest.mark.parametrize("token", ["1.5", "3/-7", "1/0x2", "a", "", "2/"])
def test_parse_rational_rejects_bad_tokens(token):
    with pytest.raises(formats.ParseError):
        formats.parse_rational(token)


def test_parse_rational_rejects_zero_denominator():
    with pytest.raises(formats.ParseError, match="denominator"):
        formats.parse_rational("1/0")


def test_matrix_round_trip():
    m = RationalMatrix.from_rows([[Fraction(1, 2), 3], [Fraction(-5, 7), 0]])
    assert formats.load_matrix(formats.dump_matrix(m)) == m


def test_matrix_header_errors():
    with pytest.raises(formats.ParseError, match="header"):
        formats.load_matrix("2\n1 2\n3 4\n")
    with pytest.raises(formats.ParseError, match="rows"):
        formats.load_matrix("3 2\n1 2\n3 4\n")
    with pytest.raises(formats.ParseError, match="entries"):
        formats.load_matrix("2 2\n1 2 3\n4 5\n")


def test_factorization_round_trip():
    pair = RIGID_5X5[0].pair()
    again = formats.load_factorization(formats.dump_factorization(pair))
    assert again.a == pair.a and again.b == pair.b


def test_factorization_requires_two_blocks():
    with pytest.raises(formats.ParseError, match="two blocks"):
        formats.load_factorization("2 2\n1 2\n3 4\n")


def test_symmetric_round_trip():
    factor = SymmetricFactor(RationalMatrix.identity(3))
    again = formats.load_symmetric_factor(formats.dump_symmetric_factor(factor))
    assert again.a == factor.a


def test_pattern_round_trip():
    pattern = unique_7_zero_pattern_r3()
    text = formats.dump_pattern(pattern)
    assert formats.load_pattern(text) == pattern
    header, first_row = text.splitlines()[:2]
    assert header == "4 3 3"
    assert first_row == "0.."


def test_pattern_bad_rows():
    with pytest.raises(formats.ParseError, match="'.0'"):
        formats.load_pattern("2 2 2\n0x\n.0\n\n0.\n.0\n")


def test_certificate_document_round_trip_and_verify():
    pair = RIGID_5X5[0].pair()
    cert = certify(pair)
    doc = formats.certificate_to_document(
        cert, {"symmetric": False, "m": pair.m, "r": pair.r, "n": pair.n},
        flags={"kruskal_budget": 10**6},
    )
    text = formats.dump_json(doc)
    import json

    reread = json.loads(text)
    rebuilt = formats.document_to_certificate(reread)
    assert rebuilt == cert
    assert formats.verify_certificate_document(reread, pair)


def test_certificate_document_with_v_basis_round_trip():
    from nmfrigid.realize import lift_partially_rigid

    lifted = lift_partially_rigid(lift_demo_pair())
    cert = certify(lifted, kruskal_budget=0)
    doc = formats.certificate_to_document(
        cert, {"symmetric": False, "m": lifted.m, "r": lifted.r, "n": lifted.n}
    )
    import json

    rebuilt = formats.document_to_certificate(json.loads(formats.dump_json(doc)))
    assert rebuilt == cert
    assert formats.verify_certificate_document(json.loads(formats.dump_json(doc)), lifted)


def test_certificate_verify_symmetric():
    factor = SymmetricFactor(RationalMatrix.identity(4))
    cert = certify_cp(factor)
    doc = formats.certificate_to_document(cert, {"symmetric": True, "n": 4, "r": 4})
    assert formats.verify_certificate_document(doc, factor)


def test_certificate_verify_detects_tampering():
    pair = RIGID_5X5[0].pair()
    cert = certify(pair)
    doc = formats.certificate_to_document(
        cert, {"symmetric": False, "m": pair.m, "r": pair.r, "n": pair.n}
    )
    doc["certificate"]["span_rank"] = 11
    with pytest.raises(ValueError, match="span rank"):
        formats.verify_certificate_document(doc, pair)

    doc["certificate"]["span_rank"] = 12
    doc["certificate"]["relint_witness"][0] = "1/2"
    with pytest.raises(ValueError, match="witness"):
        formats.verify_certificate_document(doc, pair)
