import itertools

import pytest

from biinterp.errors import ArityMismatch, GroupTooLarge, NotGenerating
from biinterp.folog import evaluate, parse_formula
from biinterp.folog.axioms import axiomatize_with_tuple, check_axiomatization, shortest_words
from biinterp.groups import cyclic, dihedral, direct_product, quaternion8, subgroup_closure, symmetric
from oracles import is_iso_with_tuple


def test_c2_sentence_is_equivalent_to_the_textbook_one():
    C2 = cyclic(2)
    cert = axiomatize_with_tuple(C2, (1,))
    book = parse_formula("!(y1 = 1) & y1*y1 = 1 & (forall x. x = 1 | x = y1)")
    for G in [cyclic(1), cyclic(2), cyclic(3), cyclic(4), direct_product(C2, C2), dihedral(3)]:
        for g in G.elements:
            asg = {"y1": g}
            assert evaluate(G, cert.sentence, assignment=asg) == evaluate(G, book, assignment=asg)


def test_c3_sentence_fails_in_c2():
    cert = axiomatize_with_tuple(cyclic(3), (1,))
    C2 = cyclic(2)
    assert not any(evaluate(C2, cert.sentence, assignment={"y1": g}) for g in C2.elements)


def test_trivial_group_empty_tuple():
    cert = axiomatize_with_tuple(cyclic(1), ())
    assert cert.sentence == parse_formula("forall x. x = 1")


def test_self_check_gives_identity():
    cert = axiomatize_with_tuple(cyclic(2), (1,))
    assert check_axiomatization(cert, cyclic(2), (1,)) == (True, [0, 1])
    assert check_axiomatization(cert, cyclic(3), (1,)) == (False, None)


def test_s3_nontrivial_automorphism_witness():
    S3 = dihedral(3)          # 0=e, 1=r, 2=r^2, 3=s, 4=sr, 5=sr^2
    cert = axiomatize_with_tuple(S3, (1, 3))
    holds, iso = check_axiomatization(cert, S3, (2, 4))
    assert holds and iso != list(range(6))
    assert iso[1] == 2 and iso[3] == 4
    for a in range(6):
        for b in range(6):
            assert iso[S3.table[a][b]] == S3.table[iso[a]][iso[b]]


def test_word_order_breadth_first():
    words = shortest_words(cyclic(4), (1,))
    assert words == [(), (0,), (0, 0), (0, 0, 0)]
    words = shortest_words(dihedral(3), (1, 3))
    assert max(len(w) for w in words) == 2
    assert words[3] == (1,) and words[4] == (1, 0)


def test_errors():
    with pytest.raises(NotGenerating):
        axiomatize_with_tuple(cyclic(4), (2,))
    with pytest.raises(GroupTooLarge):
        axiomatize_with_tuple(cyclic(10), (1,), cap=5)
    cert = axiomatize_with_tuple(cyclic(2), (1,))
    with pytest.raises(ArityMismatch):
        check_axiomatization(cert, cyclic(2), (1, 1))


def test_certificate_variables():
    cert = axiomatize_with_tuple(dihedral(3), (1, 3))
    assert cert.variables == ["y1", "y2"] and cert.arity == 2


SMALL = {
    "C4": cyclic(4), "C2xC2": direct_product(cyclic(2), cyclic(2)),
    "S3": dihedral(3), "C6": cyclic(6), "Sym3": symmetric(3),
    "Q8": quaternion8(), "D4": dihedral(4),
}


@pytest.mark.parametrize("name", sorted(SMALL))
def test_agrees_with_isomorphism_search(name):
    H = SMALL[name]
    gens = [t for t in itertools.product(H.elements, repeat=2)
            if subgroup_closure(H, t).order == H.order][:6]
    for t in gens:
        cert = axiomatize_with_tuple(H, t)
        for other in SMALL.values():
            if other.order != H.order:
                continue
            for t2 in itertools.product(other.elements, repeat=2):
                holds, iso = check_axiomatization(cert, other, t2)
                assert holds == is_iso_with_tuple(H, t, other, t2), (name, t, t2)
