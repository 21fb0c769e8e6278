import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biinterp.errors import GroupTooLarge, NoIdentityAtZero, NotAPermutation, NotAssociative, NotLatinSquare
from biinterp.groups import (
    canonical_transversal,
    close_permutations,
    coset_decomposition,
    cyclic,
    dihedral,
    direct_product,
    group_from_json,
    is_normal,
    load_group,
    make_subgroup,
    quaternion8,
    subgroup_closure,
    symmetric,
    validate_group,
)
from oracles import orbit_closure, perm_group_table

BUILT = {
    "C1": cyclic(1),
    "C5": cyclic(5),
    "D3": dihedral(3),
    "D4": dihedral(4),
    "D5": dihedral(5),
    "S3": symmetric(3),
    "S4": symmetric(4),
    "Q8": quaternion8(),
    "C2xC3": direct_product(cyclic(2), cyclic(3)),
    "C2^3": direct_product(cyclic(2), cyclic(2), cyclic(2)),
}


def test_validate_c2():
    G = validate_group([[0, 1], [1, 0]])
    assert G.order == 2 and G.inverse == (0, 1)


def test_repeated_column_is_not_latin():
    with pytest.raises(NotLatinSquare):
        validate_group([[0, 1], [0, 1]])


def test_identity_must_sit_at_zero():
    with pytest.raises(NoIdentityAtZero):
        validate_group([[1, 0], [0, 1]])


def test_non_associative_loop_rejected():
    # normalized Latin square of order 5 in which every element is its own inverse
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative):
        validate_group(loop)


def test_out_of_range_entry():
    with pytest.raises(NotLatinSquare):
        validate_group([[0, 2], [2, 0]])


def test_s3_by_closure_matches_composition_oracle():
    G = close_permutations(3, [(1, 0, 2), (1, 2, 0)])
    perms = [tuple(int(c) for c in G.name(g)) for g in G.elements]
    assert set(perms) == orbit_closure([(1, 0, 2), (1, 2, 0)], 3)
    assert [list(r) for r in G.table] == perm_group_table(perms)
    assert perms[0] == (0, 1, 2)


@pytest.mark.parametrize("degree,gens,order", [
    (3, [(1, 0, 2), (1, 2, 0)], 6),
    (4, [(1, 2, 3, 0)], 4),
    (2, [], 1),
])
def test_close_permutations_orders(degree, gens, order):
    assert close_permutations(degree, gens).order == order


def test_close_permutations_rejects_non_bijection():
    with pytest.raises(NotAPermutation):
        close_permutations(3, [(0, 0, 1)])


def test_close_permutations_cap():
    with pytest.raises(GroupTooLarge):
        close_permutations(5, [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], cap=100)


def test_close_permutations_deterministic():
    a = close_permutations(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
    b = close_permutations(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
    assert a.table == b.table and a.names == b.names


def test_symmetric_lexicographic():
    G = symmetric(3)
    assert G.names == tuple("".join(map(str, p)) for p in itertools.permutations(range(3)))


def test_symmetric_too_large():
    with pytest.raises(GroupTooLarge):
        symmetric(8)


def test_subgroup_closure_examples():
    assert subgroup_closure(cyclic(4), {2}).members == (0, 2)
    assert subgroup_closure(dihedral(3), set()).members == (0,)
    assert subgroup_closure(dihedral(3), {1}).members == (0, 1, 2)


@given(st.sampled_from(sorted(BUILT)), st.data())
@settings(max_examples=60, deadline=None)
def test_subgroup_closure_idempotent_and_monotone(name, data):
    G = BUILT[name]
    small = data.draw(st.sets(st.integers(0, G.order - 1), max_size=3))
    extra = data.draw(st.sets(st.integers(0, G.order - 1), max_size=2))
    S = subgroup_closure(G, small)
    assert subgroup_closure(G, S.members).members == S.members
    assert set(S.members) <= set(subgroup_closure(G, small | extra).members)
    for a in S.members:
        for b in S.members:
            assert G.table[a][b] in S


def test_is_normal_examples():
    S3 = dihedral(3)
    assert is_normal(S3, make_subgroup(S3, [0, 1, 2]))
    assert not is_normal(S3, make_subgroup(S3, [0, 3]))
    for G in BUILT.values():
        assert is_normal(G, make_subgroup(G, [0]))


def test_make_subgroup_checks_closure():
    with pytest.raises(ValueError):
        make_subgroup(cyclic(4), [0, 1])


def test_coset_index_examples():
    C4 = cyclic(4)
    assert coset_decomposition(C4, make_subgroup(C4, [0, 2])).index == 2
    Q8 = quaternion8()
    assert coset_decomposition(Q8, make_subgroup(Q8, [0, 1])).index == 4
    assert coset_decomposition(Q8, make_subgroup(Q8, range(8))).index == 1


def test_canonical_transversal_examples():
    C4 = cyclic(4)
    assert canonical_transversal(coset_decomposition(C4, make_subgroup(C4, [0, 2]))) == [0, 1]
    S3 = dihedral(3)
    assert canonical_transversal(coset_decomposition(S3, make_subgroup(S3, [0, 1, 2]))) == [0, 3]
    assert canonical_transversal(coset_decomposition(S3, make_subgroup(S3, range(6)))) == [0]


@pytest.mark.parametrize("name", sorted(BUILT))
def test_coset_partition_and_transversal(name):
    G = BUILT[name]
    for gens in [(), (1 % G.order,), tuple(range(G.order))]:
        S = subgroup_closure(G, gens)
        dec = coset_decomposition(G, S)
        flat = sorted(x for c in dec.cosets for x in c)
        assert flat == list(G.elements)
        assert dec.cosets[0] == S.members
        assert dec.index * S.order == G.order
        t = canonical_transversal(dec)
        assert t[0] == 0
        for i, ti in enumerate(t):
            assert ti in dec.cosets[i]
            # right coset H*t_i
            assert sorted(G.table[h][ti] for h in S.members) == list(dec.cosets[i])


def test_builder_censuses():
    assert cyclic(1).order == 1
    Q8 = quaternion8()
    assert Q8.order == 8 and [Q8.element_order(g) for g in Q8.elements].count(2) == 1
    V = direct_product(cyclic(2), cyclic(2))
    assert [V.element_order(g) for g in V.elements] == [1, 2, 2, 2]


def test_dihedral_layout():
    D = dihedral(4)
    # rotations first: 1 has order 4, reflections have order 2
    assert D.element_order(1) == 4
    assert all(D.element_order(g) == 2 for g in range(4, 8))


def test_product_lexicographic_pairs():
    P = direct_product(cyclic(2), cyclic(3))
    for a, b in itertools.product(range(2), range(3)):
        for c, d in itertools.product(range(2), range(3)):
            assert P.table[a * 3 + b][c * 3 + d] == ((a + c) % 2) * 3 + (b + d) % 3


@given(st.sampled_from(sorted(BUILT)), st.data())
@settings(max_examples=200, deadline=None)
def test_group_axioms_property(name, data):
    G = BUILT[name]
    el = st.integers(0, G.order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    t = G.table
    assert t[t[a][b]][c] == t[a][t[b][c]]
    assert t[a][G.inverse[a]] == 0 == t[G.inverse[a]][a]


def test_group_files(tmp_path):
    G = dihedral(3)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(G.to_json()))
    H = load_group(path)
    assert H.table == G.table
    P = group_from_json({"format": "perm", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})
    assert P.order == 6
    with pytest.raises(ValueError):
        group_from_json({"format": "matrix"})
