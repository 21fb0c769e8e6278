import pytest

from biinterp.errors import NotNormal, TrivialH, TrivialIndex
from biinterp.extension import extension_data, verify_extension_identities
from biinterp.groups import cyclic, dihedral, make_subgroup, quaternion8


def s3_a3():
    G = dihedral(3)
    return extension_data(G, make_subgroup(G, [0, 1, 2]))


def test_s3_over_a3_values():
    ext = s3_a3()
    assert ext.m == 2
    assert list(ext.transversal) == [0, 3]
    assert ext.sigma_apply(1, 1) == 2        # s r s^-1 = r^2
    assert ext.c_(2, 2) == 0                 # s*s = e
    assert ext.k_(2, 2) == 1


def test_q8_over_center():
    G = quaternion8()
    ext = extension_data(G, make_subgroup(G, [0, 1]))
    assert ext.m == 4
    for i in range(4):
        assert [ext.sigma_apply(i, h) for h in (0, 1)] == [0, 1]
    for i in range(2, 5):
        assert ext.c_(i, i) == 1            # t_i^2 = -1


def test_unit_rows(inst):
    ext = inst.ext
    for j in range(1, ext.m + 1):
        assert ext.c_(1, j) == 0 and ext.k_(1, j) == j
        assert ext.c_(j, 1) == 0 and ext.k_(j, 1) == j


def test_identities_pass_on_corpus(inst):
    rep = verify_extension_identities(inst.ext)
    assert [s.name for s in rep.steps] == [
        "defining", "unit", "normality", "associativity", "sigma_composition"]
    assert rep.passed


def test_corrupted_cocycle_reported_at_2_2():
    ext = s3_a3().with_cocycle(1, 1, 1)
    rep = verify_extension_identities(ext)
    assert not rep.passed
    assert rep.step("defining").counterexample == (2, 2)


def test_central_kernel_gives_classical_cocycle():
    G = quaternion8()
    ext = extension_data(G, make_subgroup(G, [0, 1]))
    tab, c, k = G.table, ext.c, ext.k
    r = range(ext.m)
    for i in r:
        for j in r:
            for l in r:
                assert tab[c[i][j]][c[k[i][j]][l]] == tab[c[j][l]][c[i][k[j][l]]]


def test_reconstruction_law(inst):
    ext = inst.ext
    G, H = ext.G, ext.H
    tab = G.table
    pairs = {ext.compose(h, i) for h in H.members for i in range(ext.m)}
    assert pairs == set(G.elements)
    for h in H.members:
        for i in range(ext.m):
            for kk in H.members:
                for j in range(ext.m):
                    got = tab[ext.compose(h, i)][ext.compose(kk, j)]
                    want = ext.compose(tab[tab[h][ext.sigma_apply(i, kk)]][ext.c[i][j]], ext.k[i][j])
                    assert got == want


def test_decompose_inverts_compose(inst):
    ext = inst.ext
    for g in ext.G.elements:
        h, i = ext.decompose(g)
        assert h in ext.H and ext.compose(h, i) == g


def test_rejections():
    S3 = dihedral(3)
    with pytest.raises(NotNormal):
        extension_data(S3, make_subgroup(S3, [0, 3]))
    with pytest.raises(TrivialH):
        extension_data(S3, make_subgroup(S3, [0]))
    C4 = cyclic(4)
    with pytest.raises(TrivialIndex):
        extension_data(C4, make_subgroup(C4, range(4)))


def test_json_shape():
    d = s3_a3().to_json()
    assert set(d) >= {"m", "transversal", "c", "k", "sigma"}
    assert d["m"] == 2 and d["transversal"] == [0, 3]


def test_deterministic(inst):
    again = extension_data(inst.G, inst.H)
    assert again.to_json() == inst.ext.to_json()
