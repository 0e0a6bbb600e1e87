"""Bundled groups and representations.

The builders below are the source of truth; ``python -m detlab.corpus``
rewrites the JSON files shipped in ``detlab/corpus/``, and ``load_group`` /
``load_rep`` read them back.
"""
from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

from .groups import FiniteMonoidTable, cyclic_group, direct_product, monoid_from_permutations
from .laws import MatrixRep
from .matrices import Matrix
from .rings import PrimeField, Rationals

GROUPS = ("trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8")


def _quaternion_group() -> FiniteMonoidTable:
    units = ["1", "i", "j", "k"]
    # unit products as (sign, unit)
    rule = {
        ("1", u): (1, u) for u in units
    }
    rule.update({(u, "1"): (1, u) for u in units})
    rule.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elems = [(s, u) for u in units for s in (1, -1)]
    elems.sort(key=lambda e: (units.index(e[1]), -e[0]))
    index = {e: n for n, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = rule[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        table.append(row)
    labels = [("" if s > 0 else "-") + u for s, u in elems]
    return FiniteMonoidTable(8, index[(1, "1")], table, labels=labels)


def build_group(name: str) -> FiniteMonoidTable:
    if name == "trivial":
        return FiniteMonoidTable(1, 0, [[0]], labels=["e"])
    if name == "Z2":
        return cyclic_group(2)
    if name == "Z3":
        return cyclic_group(3)
    if name == "Z4":
        return cyclic_group(4)
    if name == "Z2xZ2":
        return direct_product(cyclic_group(2), cyclic_group(2))
    if name == "S3":
        return monoid_from_permutations([[1, 0, 2], [1, 2, 0]])
    if name == "D4":
        return monoid_from_permutations([[1, 2, 3, 0], [0, 3, 2, 1]])
    if name == "Q8":
        return _quaternion_group()
    raise KeyError(f"unknown group {name!r}")


def _perm_index(G, perm):
    return G.perms.index(tuple(perm))


def _rep_table():
    """name -> (group name, ring, generator images as {element: rows})."""
    Q, F5, F7 = Rationals(), PrimeField(5), PrimeField(7)
    S3 = build_group("S3")
    D4 = build_group("D4")
    Q8 = build_group("Q8")
    a, b = _perm_index(S3, [1, 0, 2]), _perm_index(S3, [1, 2, 0])
    r, s = _perm_index(D4, [1, 2, 3, 0]), _perm_index(D4, [0, 3, 2, 1])
    qi, qj = Q8.labels.index("i"), Q8.labels.index("j")
    std = {a: [[0, 1], [1, 0]], b: [[0, -1], [1, -1]]}
    perm3 = {a: [[0, 1, 0], [1, 0, 0], [0, 0, 1]], b: [[0, 0, 1], [1, 0, 0], [0, 1, 0]]}
    return {
        "trivial_d1": ("trivial", Q, {}),
        "Z2_sign": ("Z2", Q, {1: [[-1]]}),
        "Z2_regular": ("Z2", Q, {1: [[0, 1], [1, 0]]}),
        "Z3_rotation": ("Z3", Q, {1: [[0, -1], [1, -1]]}),
        "Z3_chi1_F7": ("Z3", F7, {1: [[2]]}),
        "Z3_chi2_F7": ("Z3", F7, {1: [[4]]}),
        "Z3_chi1_plus_chi2_F7": ("Z3", F7, {1: [[2, 0], [0, 4]]}),
        "Z4_rotation": ("Z4", Q, {1: [[0, -1], [1, 0]]}),
        "Z2xZ2_diag": ("Z2xZ2", Q, {1: [[1, 0], [0, -1]], 2: [[-1, 0], [0, 1]]}),
        "S3_sign": ("S3", Q, {a: [[-1]], b: [[1]]}),
        "S3_std": ("S3", Q, std),
        "S3_std_F7": ("S3", F7, std),
        "S3_perm3": ("S3", Q, perm3),
        "D4_std": ("D4", Q, {r: [[0, -1], [1, 0]], s: [[1, 0], [0, -1]]}),
        "Q8_std_F5": ("Q8", F5, {qi: [[2, 0], [0, 3]], qj: [[0, 1], [-1, 0]]}),
    }


REPS = tuple(_rep_table().keys())


def build_rep(name: str) -> MatrixRep:
    gname, ring, gens = _rep_table()[name]
    G = build_group(gname)
    if not gens:
        return MatrixRep(G, [Matrix.identity(1, ring)] * G.size, ring)
    return MatrixRep.from_generators(G, {g: Matrix(ring, rows) for g, rows in gens.items()}, ring)


def trivial_rep(G: FiniteMonoidTable, d: int, ring) -> MatrixRep:
    return MatrixRep(G, [Matrix.identity(d, ring)] * G.size, ring)


def _data_dir():
    return resources.files("detlab") / "corpus"


def load_group(name: str) -> FiniteMonoidTable:
    data = json.loads((_data_dir() / "groups" / f"{name}.json").read_text())
    return FiniteMonoidTable.from_json(data)


def load_rep(name: str) -> MatrixRep:
    data = json.loads((_data_dir() / "reps" / f"{name}.json").read_text())
    return MatrixRep.from_json(data)


def group_of_rep(name: str) -> str:
    return _rep_table()[name][0]


def write_corpus(root: Path) -> None:
    (root / "groups").mkdir(parents=True, exist_ok=True)
    (root / "reps").mkdir(parents=True, exist_ok=True)
    for g in GROUPS:
        (root / "groups" / f"{g}.json").write_text(json.dumps(build_group(g).to_json(), indent=1) + "\n")
    for r in REPS:
        (root / "reps" / f"{r}.json").write_text(json.dumps(build_rep(r).to_json(), indent=1) + "\n")


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "corpus"
    write_corpus(target)
    print(f"wrote {len(GROUPS)} groups and {len(REPS)} representations to {target}")
