import pytest

from qmatroids import corpus as cp
from qmatroids import qdelta as qd
from qmatroids import qmatroid as qm
from qmatroids.errors import NotAQMatroid, ParseError
from qmatroids.fileio import (
    parse_code,
    parse_family,
    parse_gram,
    parse_qmatroid,
    render_code,
    render_family,
    render_gram,
)
from qmatroids.rmcodes import code_qmatroid


def test_family_round_trip(lat):
    sp = qd.spread(2)
    text = render_family(2, 4, sp.subspaces(), "spread\nsecond line")
    assert text.startswith("# spread\n# second line\n2 4\n")
    lat2, fam = parse_family(text)
    assert lat2 is lat or lat2.same_as(lat)
    assert {lat.id_of(s) for s in fam} == sp.feasible


def test_family_literals_and_canonicalization(lat):
    _, fam = parse_family("2 4  # header\n0\nE\n1100 0100\n")
    assert [lat.id_of(s) for s in fam] == [lat.zero, lat.top, lat.unit_id(1, 2)]


@pytest.mark.parametrize("text", [
    "",
    "2\n0\n",
    "6 4\n0\n",
    "2 4\n100\n",
    "2 4\n1200\n",
    "2 4\n1100\n0110 1010\n1100\n",
])
def test_family_errors(text):
    with pytest.raises(ParseError):
        parse_family(text)


def test_rank_table_round_trip():
    for M in cp.qmatroid_corpus().values():
        assert parse_qmatroid(qm.dump_ranks(M)) == M


def test_rank_table_rejects_bad_tables():
    M = qm.uniform(2, 4)
    lines = qm.dump_ranks(M).splitlines()
    with pytest.raises(ParseError):
        parse_qmatroid("\n".join(lines[:-1]))
    body = [l for l in lines if not l.startswith("#")]
    i, d, r, basis = body[1].split(None, 3)
    broken = [l for l in lines if l != body[1]] + [f"{i} {d} 0 {basis}"]
    with pytest.raises(NotAQMatroid):
        parse_qmatroid("\n".join(broken))


def test_basis_family_as_qmatroid(lat):
    M1, _ = cp.sandwich_pair()
    text = render_family(2, 4, [lat[b] for b in sorted(M1.families.bases)])
    assert parse_qmatroid(text) == M1
    with pytest.raises(NotAQMatroid):
        parse_qmatroid("2 4\n1000\n0100 0010\n")


def test_gram_round_trip():
    form = cp.alt_form()
    again = parse_gram(render_gram(form))
    assert again.gram.entries == form.gram.entries
    with pytest.raises(ParseError):
        parse_gram("2 2\n11\n11\n")
    with pytest.raises(ParseError):
        parse_gram("2 2\n10\n")


def test_code_round_trip():
    for C in cp.codes().values():
        D = parse_code(render_code(C))
        assert D.G.entries == C.G.entries
        assert code_qmatroid(D) == code_qmatroid(C)
    with pytest.raises(ParseError):
        parse_code("2 2 2 1\n10 01\n10 01\n")
    with pytest.raises(ParseError):
        parse_code("2 2 2 1\n10 1\n")
    with pytest.raises(ParseError):
        parse_code("2 2 2 2\n10 01\n10 01\n")
