import os

import pytest

import _bframe as bf


def test_group_basics():
    g = bf.Group.from_spec("cyclic:9")
    assert g.order == 9
    assert g.abelian
    assert g.op(4, 7) == 2
    assert g.inv(3) == 6

    z32 = bf.Group.zpq(3, 2)
    assert z32.order == 9


def test_sdo_orbits():
    g = bf.Group.cyclic(9)
    orbits = bf.sdo_orbits(g)
    assert orbits == [[0], [1, 2, 4, 5, 7, 8], [3, 6]]


def test_enumeration_and_eta_checks():
    z6 = bf.Group.cyclic(6)
    etas = bf.enumerate_valid_etas(z6)
    assert etas == [[0], [0, 2, 4]]

    z7 = bf.Group.cyclic(7)
    chk = bf.check_eta(z7, [0, 1, 2, 4])
    assert chk["conv_idempotent"] and not chk["symmetric"] and not chk["valid"]


def test_gram_rank_weight():
    z9 = bf.Group.cyclic(9)
    gram = bf.gram_from_mask(z9, 0b101)  # [e] and {3, 6}
    assert bf.rank(gram) == 3
    report = bf.code_weight(gram)
    assert report["weight"] == 3
    assert report["erasure_max"] == 2
    assert report["bitflip_max"] == 1


def test_classification():
    z32 = bf.Group.zpq(3, 2)
    classes = bf.classify(z32, with_weights=True)
    assert len(classes) == 5
    assert sorted(c["rank"] for c in classes) == [1, 3, 5, 7, 9]

    z27 = bf.Group.cyclic(27)
    assert len(bf.classify(z27)) == 8

    counts = bf.classify_counts(bf.Group.zpq(3, 3))
    assert counts["total"] == 30


def test_capacity_signal():
    with pytest.raises(bf.CapacityError):
        bf.enumerate_valid_etas(bf.Group.zpq(5, 3))


def test_phi_bridge():
    assert bf.phi(3, 2, [1, 0]) == 1
    assert bf.phi(3, 2, [0, 1]) == 3
    assert bf.phi_inv(3, 3, 9) == [0, 0, 1]
    assert bf.doubling_coset_test(9, 18, 3, 3)
    assert not bf.doubling_coset_test(3, 9, 3, 3)


def test_frame_reconstruction():
    z9 = bf.Group.cyclic(9)
    gram = bf.gram_from_mask(z9, 0b101)
    theta = bf.frame_from_gram(gram)
    assert bf.is_parseval_analysis(theta)
    assert len(theta) == 9 and len(theta[0]) == 3


def test_package_shim():
    import bframe

    assert bframe.Group.cyclic(9).order == 9


def test_fixture_roundtrip():
    fixdir = os.environ.get("BFRAME_FIXTURES")
    if not fixdir:
        pytest.skip("fixture directory not provided")
    with open(os.path.join(fixdir, "z3sq_frame.mat")) as f:
        theta = [[int(ch) for ch in line.strip()] for line in f if line.strip()]
    assert bf.is_parseval_analysis(theta)
