import json

import pytest

from detlab import corpus
from detlab.errors import InvalidRepresentation
from detlab.groups import FiniteMonoidTable
from detlab.laws import MatrixRep


@pytest.mark.parametrize("name", corpus.GROUPS)
def test_bundled_groups_match_builders(name):
    G, H = corpus.load_group(name), corpus.build_group(name)
    assert G.size == H.size and G.is_group
    assert all(G(x, y) == H(x, y) for x in range(G.size) for y in range(G.size))


@pytest.mark.parametrize("name", corpus.REPS)
def test_bundled_reps_are_homomorphisms(name):
    rep = corpus.load_rep(name)
    assert rep.images == corpus.build_rep(name).images
    # constructing validates rho(xy) = rho(x) rho(y)
    MatrixRep(rep.table, rep.images, rep.ring)


def test_group_orders():
    sizes = {n: corpus.load_group(n).size for n in corpus.GROUPS}
    assert sizes == {"trivial": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z2xZ2": 4, "S3": 6, "D4": 8, "Q8": 8}


def test_write_corpus_round_trip(tmp_path):
    corpus.write_corpus(tmp_path)
    data = json.loads((tmp_path / "reps" / "S3_std.json").read_text())
    rep = MatrixRep.from_json(data)
    assert rep.d == 2
    g = json.loads((tmp_path / "groups" / "Q8.json").read_text())
    assert FiniteMonoidTable.from_json(g).size == 8


def test_rep_from_generators_json():
    data = {"ring": "Q", "group": corpus.build_group("S3").to_json(),
            "generators": {"1": [["0", "1"], ["1", "0"]]}}
    with pytest.raises(InvalidRepresentation):
        # a single transposition does not generate S3
        MatrixRep.from_json(data)
