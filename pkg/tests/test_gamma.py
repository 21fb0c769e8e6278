import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biinterp.errors import EncodingCollision, NotInGamma, TrivialH
from biinterp.extension import extension_data
from biinterp.gamma import (
    STANDARD,
    STAR,
    build_codec,
    choose_xi,
    classify,
    decode,
    encode,
    gamma_op,
    gamma_op_generic,
)
from biinterp.corpus import CORPUS
from biinterp.groups import cyclic, dihedral, make_subgroup, quaternion8
from conftest import load_instance
from oracles import ref_encode


def q8():
    G = quaternion8()           # 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k
    return build_codec(extension_data(G, make_subgroup(G, [0, 1])))


def s3():
    G = dihedral(3)
    return build_codec(extension_data(G, make_subgroup(G, [0, 1, 2])))


def test_choose_xi():
    C4 = cyclic(4)
    assert choose_xi(make_subgroup(C4, [0, 2])) == 2
    S3 = dihedral(3)
    assert choose_xi(make_subgroup(S3, [0, 1, 2])) == 1
    with pytest.raises(TrivialH):
        choose_xi(make_subgroup(S3, [0]))


def test_q8_codec_shape():
    c = q8()
    assert c.mode == STANDARD and c.width == 4 and len(c.gamma_domain) == 8


def test_q8_encodings():
    c = q8()
    assert encode(c, 2) == (1, 0, 1, 1)        # i = 1*t_2 -> (xi, 1, xi, xi)
    assert encode(c, 3) == (0, 1, 0, 0)        # -i = (-1)*t_2
    assert decode(c, (1, 0, 1, 1)) == 2
    assert decode(c, (0, 1, 0, 0)) == 3


def test_s3_star_encodings():
    c = s3()
    assert c.mode == STAR and c.width == 3 and len(c.gamma_domain) == 6
    assert encode(c, 0) == (0, 1, 1)           # (1, xi, xi)
    assert encode(c, 3) == (1, 0, 1)           # (xi, 1, xi)
    assert decode(c, (0, 1, 1)) == 0 and decode(c, (1, 0, 1)) == 3


def test_q8_products():
    c = q8()
    assert gamma_op(c, encode(c, 2), encode(c, 2)) == encode(c, 1) == (1, 0, 0, 0)
    assert gamma_op(c, encode(c, 2), encode(c, 1)) == encode(c, 3) == (0, 1, 0, 0)


def test_not_in_gamma():
    c = q8()
    with pytest.raises(NotInGamma):
        decode(c, (0, 0, 0, 0))
    with pytest.raises(NotInGamma):
        classify(c, (1, 1))
    with pytest.raises(NotInGamma):
        gamma_op(c, (0, 0, 0, 0), encode(c, 0))


def test_standard_collision_for_index_two():
    C4 = cyclic(4)
    ext = extension_data(C4, make_subgroup(C4, [0, 2]))
    with pytest.raises(EncodingCollision):
        build_codec(ext, mode="standard")
    c = build_codec(ext, mode="standard", strict=False)
    xi, t2 = c.xi, ext.transversal[1]
    assert encode(c, xi) == encode(c, t2) == (xi, 0)
    assert any({g1, g2} == {xi, t2} for g1, g2, _ in c.collisions)


def test_star_requires_index_two():
    with pytest.raises(ValueError):
        build_codec(q8().ext, mode="star")


def test_encode_matches_case_definition(inst):
    c = build_codec(inst.ext)
    ext = inst.ext
    for g in inst.G.elements:
        want = ref_encode(inst.G, ext.H.members, ext.transversal, c.xi, g, star=c.mode == STAR)
        assert encode(c, g) == want


def test_isomorphism_on_corpus(inst):
    c = build_codec(inst.ext)
    G = inst.G
    assert len(set(c.codes)) == G.order
    for g in G.elements:
        assert decode(c, encode(c, g)) == g
    for a in G.elements:
        for b in G.elements:
            want = encode(c, G.table[a][b])
            assert gamma_op(c, encode(c, a), encode(c, b)) == want
            assert gamma_op_generic(c, encode(c, a), encode(c, b)) == want


def test_identity_law(inst):
    c = build_codec(inst.ext)
    e = encode(c, 0)
    for x in c.gamma_domain:
        assert gamma_op(c, x, e) == x == gamma_op(c, e, x)


INDEX_TWO = [s for s in CORPUS if load_instance(s).ext.m == 2]


@pytest.mark.parametrize("spec", INDEX_TWO, ids=[s.name for s in INDEX_TWO])
def test_standard_mode_collides_on_every_index_two_instance(spec):
    inst = load_instance(spec)
    std = build_codec(inst.ext, mode="standard", strict=False)
    assert not std.injective
    t2 = inst.ext.transversal[1]
    assert encode(std, std.xi) == encode(std, t2)
    assert build_codec(inst.ext, mode="star").injective


@given(st.sampled_from(CORPUS), st.data())
@settings(max_examples=25, deadline=None)
def test_any_nonidentity_xi_gives_an_isomorphism(spec, data):
    inst = load_instance(spec)
    xi = data.draw(st.sampled_from(inst.H.members[1:]))
    c = build_codec(inst.ext, xi=xi)
    G = inst.G
    assert len(set(c.codes)) == G.order
    for a in G.elements:
        for b in G.elements:
            assert gamma_op(c, encode(c, a), encode(c, b)) == encode(c, G.table[a][b])


@pytest.mark.parametrize("xi", [1, 2])
def test_alternative_xi_in_star_mode(xi):
    G = dihedral(3)
    ext = extension_data(G, make_subgroup(G, [0, 1, 2]))
    c = build_codec(ext, xi=xi)
    for a in G.elements:
        for b in G.elements:
            assert gamma_op(c, encode(c, a), encode(c, b)) == encode(c, G.table[a][b])


def test_json_dump():
    d = s3().to_json()
    assert d["mode"] == "star" and d["xi"] == 1 and d["width"] == 3
    assert d["gamma"][0] == [0, 1, 1]
