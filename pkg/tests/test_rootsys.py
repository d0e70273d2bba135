from fractions import Fraction

import pytest

from vogelqdim.rootsys import (
    RepSpec,
    WeightError,
    adjoint_weight,
    apply_automorphism,
    build_root_system,
    casimir,
    diagram_automorphisms,
    numbering_table,
    qdim_of_spec,
    weyl_dim,
    weyl_qdim,
    x2_weights,
)
from vogelqdim.universal import adjoint_dim
from vogelqdim.vogel import vogel_point

ALL = ["A1", "A2", "A6", "B2", "B3", "B7", "C3", "C6", "D4", "D5", "D8", "G2", "F4", "E6", "E7", "E8"]


@pytest.mark.parametrize("alg", ALL)
def test_counts_and_adjoint(alg):
    rs = build_root_system(alg)
    d = adjoint_dim(vogel_point(alg))
    assert len(rs.positive_roots) == (d - rs.rank) / 2
    assert weyl_dim(rs, adjoint_weight(alg)) == d
    assert casimir(rs, adjoint_weight(alg)) == 2 * vogel_point(alg).t


@pytest.mark.parametrize("alg", [a for a in ALL if a != "A1"])
def test_x2(alg):
    rs = build_root_system(alg)
    d = adjoint_dim(vogel_point(alg))
    assert sum(weyl_dim(rs, w) for w in x2_weights(alg)) == d * (d - 3) / 2
    for w in x2_weights(alg):
        assert casimir(rs, w) == 4 * vogel_point(alg).t


@pytest.mark.parametrize(
    "alg,labels,dim",
    [("E8", (1, 0, 0, 0, 0, 0, 0, 0), 3875), ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 147250),
     ("E7", (0, 0, 0, 0, 0, 1, 0), 56), ("E6", (1, 0, 0, 0, 0, 0), 27), ("F4", (0, 0, 0, 1), 26),
     ("G2", (1, 0), 7), ("B3", (0, 0, 1), 8), ("D5", (0, 0, 0, 0, 1), 16)],
)
def test_known_dimensions(alg, labels, dim):
    assert weyl_dim(build_root_system(alg), labels) == dim


def test_e8_x2_labels():
    assert x2_weights("E8") == [(0, 0, 0, 0, 0, 1, 0, 0)]


@pytest.mark.parametrize("alg", ["A4", "A5", "D5", "D6", "D4", "E6"])
def test_automorphisms_preserve_qdim(alg):
    rs = build_root_system(alg)
    autos = diagram_automorphisms(alg)
    assert autos
    for labels in [(1,) + (0,) * (rs.rank - 1), tuple(range(rs.rank)), (2, 0, 1) + (0,) * (rs.rank - 3)]:
        for g in autos:
            assert weyl_qdim(rs, apply_automorphism(labels, g)) == weyl_qdim(rs, labels)


def test_d4_triality_group():
    assert len(diagram_automorphisms("D4")) == 5


def test_weight_validation():
    rs = build_root_system("B3")
    with pytest.raises(WeightError):
        weyl_qdim(rs, (1, 0))
    with pytest.raises(WeightError):
        weyl_qdim(rs, (-1, 0, 0))


def test_repspec_json_and_sum():
    spec = RepSpec(((1, (1, 0)), (-1, (0, 1))), Fraction(2))
    assert RepSpec.from_json(spec.to_json()) == spec
    assert qdim_of_spec(build_root_system("G2"), spec).dimension() == 7 - 14 + 2


def test_numbering_file():
    t = numbering_table()
    assert {"E6", "E7", "E8", "F4", "G2"} <= set(t["labels"])
