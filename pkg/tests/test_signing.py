from collections import Counter

import pytest

from partialgraphs import oracles
from partialgraphs.conjugate import restricted_line_graph
from partialgraphs.graph import DirectedEdge, GraphError
from partialgraphs.minimal import closed_minimal, open_minimal
from partialgraphs.signing import (
    Signing,
    all_signings,
    check_proper_on_conjugate,
    derive_signing,
    free_edge_resolutions,
    proper_labelings,
)
from partialgraphs.variants import distance_one_pairs, enumerate_open_variants


def pairs(table):
    """'qm=12; tq=21' -> {'qm': (1, 2), 'tq': (2, 1)}"""
    out = {}
    for item in table.split(";"):
        k, v = item.strip().split("=")
        out[k] = (int(v[0]), int(v[1]))
    return out


@pytest.fixture(scope="module")
def entries():
    return all_signings()


@pytest.fixture(scope="module")
def cg():
    return restricted_line_graph(open_minimal(), {"q", "m"})


# --- labelings -------------------------------------------------------------

def test_open_labelings():
    labs = proper_labelings(open_minimal(), {"q": 1, "m": 2})
    assert len(labs) == 4
    assert all(lab["n"] == 3 for lab in labs)
    assert {(lab["t"], lab["p"]) for lab in labs} == {(2, 3), (3, 2)}
    assert {(lab["c"], lab["d"]) for lab in labs} == {(1, 3), (3, 1)}
    assert labs == oracles.labelings(open_minimal(), {"q": 1, "m": 2})


def test_triangle_two_pins(triangle):
    assert proper_labelings(triangle, {"x": 1, "y": 2}) == [{"x": 1, "y": 2, "z": 3}]


def test_closed_two_midpoints():
    (lab,) = proper_labelings(closed_minimal(), {"b": 1, "d": 2})
    assert lab["f"] == 3
    # each corner takes the label of the opposite midpoint
    assert (lab["a"], lab["c"], lab["e"]) == (lab["d"], lab["f"], lab["b"])
    assert [lab] == oracles.labelings(closed_minimal(), {"b": 1, "d": 2})


@pytest.mark.parametrize("pins", [{"q": 1, "m": 1}, {"q": 4}, {"z": 1}])
def test_bad_pins(pins):
    with pytest.raises(GraphError):
        proper_labelings(open_minimal(), pins)


def test_unpinned_count_matches_oracle():
    g = open_minimal()
    assert len(proper_labelings(g)) == len(oracles.labelings(g, {}))


# --- derivations -----------------------------------------------------------

def test_variant_two(entries):
    e = next(x for x in entries if x.label == "2")
    assert e.signing.as_dict() == pairs("qm=12; qp=13; tq=21; nq=31; mn=23; cm=32; md=21")
    assert e.signing.labels() == {"q": 1, "m": 2, "n": 3, "t": 2, "p": 3, "c": 3, "d": 1}
    assert (e.signing.gamma, e.signing.beta, e.signing.kappa) == ((1, 2), (2, 3), (3, 1))


def test_variant_one(entries):
    e = next(x for x in entries if x.label == "1")
    assert e.signing.as_dict() == pairs("qm=12; qp=13; tq=21; nq=31; mn=23; mc=21; dm=32")


# Derivation tables whose listed pairs agree with their own labels.
CONSISTENT_TABLES = {
    "3.2": "qm=12; qp=13; tq=21; nq=31; nm=32; mc=23; md=21",
    "4": "qm=12; pq=21; qt=13; nq=31; mn=23; mc=21; dm=32",
    "5": "qm=12; pq=21; qt=13; nq=31; mn=23; cm=32; md=21",
    "6.1": "qm=12; pq=21; qt=13; nq=31; nm=32; mc=21; md=23",
    "6.2": "qm=12; pq=21; qt=13; nq=31; nm=32; mc=23; md=21",
    "7.1": "qm=12; pq=31; tq=21; qn=13; mn=23; mc=21; dm=32",
    "7.2": "qm=12; pq=21; tq=31; qn=13; mn=23; mc=21; dm=32",
    "8.1": "qm=12; pq=31; tq=21; qn=13; mn=23; cm=32; md=21",
    "8.2": "qm=12; pq=21; tq=31; qn=13; mn=23; cm=32; md=21",
    "9.1": "qm=12; pq=31; tq=21; qn=13; nm=32; mc=21; md=23",
    "9.2": "qm=12; pq=31; tq=21; qn=13; nm=32; mc=23; md=21",
}


@pytest.mark.parametrize("label, table", sorted(CONSISTENT_TABLES.items()))
def test_listed_tables(entries, label, table):
    e = next(x for x in entries if x.label == label)
    assert e.signing.as_dict() == pairs(table)


def test_variant_3_1_follows_its_constraint(entries):
    # tq = mc = 21 forces c = 1, d = 3
    e = next(x for x in entries if x.label == "3.1")
    d = e.signing.as_dict()
    assert d["tq"] == d["mc"] == (2, 1)
    assert d["md"] == (2, 3)


def test_variant_9_1_labels(entries):
    e = next(x for x in entries if x.label == "9.1")
    lab = e.signing.labels()
    assert (lab["t"], lab["c"], lab["p"], lab["d"]) == (2, 1, 3, 3)


def test_sixteen(entries):
    assert len(entries) == 16
    mult = Counter(e.variant.index for e in entries)
    assert [mult[k] for k in range(1, 10)] == [1, 1, 2, 1, 1, 2, 2, 2, 4]
    assert [e.label for e in entries] == [
        "1", "2", "3.1", "3.2", "4", "5", "6.1", "6.2",
        "7.1", "7.2", "8.1", "8.2", "9.1", "9.2", "9.3", "9.4"]
    assert all(e.signing.gamma == (1, 2) for e in entries)
    assert len({e.signing for e in entries}) == 16


def test_unique_solution_against_filter(entries):
    candidates = proper_labelings(open_minimal(), {"q": 1, "m": 2})
    for e in entries:
        x, y = e.pair.in_at_tail.tail, e.pair.out_at_head.head
        survivors = [lab for lab in candidates if lab[x] == lab["m"] and lab[y] == lab["q"]]
        assert survivors == [e.signing.labels()]


def test_equal_pair_holds(entries):
    for e in entries:
        d = e.signing.as_dict()
        assert d[e.pair.in_at_tail.name] == d[e.pair.out_at_head.name]


def test_middle_face_has_three_distinct_pairs(entries):
    for e in entries:
        s = e.signing
        mid = {s.pair("q", "m"), s.pair("m", "n"), s.pair("n", "q")}
        assert len(mid) == 3
        assert {s.labels()[v] for v in "qmn"} == {1, 2, 3}


def test_pair_must_belong_to_variant():
    vs = enumerate_open_variants(open_minimal())
    foreign = distance_one_pairs(vs[8])[3]  # pq=md, not available in variant 1
    with pytest.raises(GraphError):
        derive_signing(vs[0], foreign)


def test_mirrored_main_edge():
    back = enumerate_open_variants(open_minimal(), ("m", "q"))
    for v in back:
        for p in distance_one_pairs(v):
            s = derive_signing(v, p)
            assert s.gamma == (2, 1)
            d = s.as_dict()
            assert d[p.in_at_tail.name] == d[p.out_at_head.name]


# --- properness on the conjugate graph --------------------------------------

def test_all_signings_proper(entries, cg):
    assert all(check_proper_on_conjugate(e.signing, cg) for e in entries)


def test_variant_two_equal_but_not_adjacent(entries, cg):
    s = next(x for x in entries if x.label == "2").signing
    assert s.pair("t", "q") == s.pair("m", "d")
    assert not cg.adjacent("qt", "md")
    assert check_proper_on_conjugate(s, cg)


def test_adversarial_signing(cg):
    arcs = tuple(DirectedEdge(i, n[0], n[1]) for i, n in
                 enumerate(["qm", "mn", "nq", "qt", "qp", "mc", "md"]))
    prs = ((1, 2), (1, 2), (3, 1), (1, 3), (1, 2), (2, 3), (2, 1))
    assert not check_proper_on_conjugate(Signing(arcs, prs), cg)


def test_missing_node(cg):
    s = Signing((DirectedEdge(0, "q", "m"),), ((1, 2),))
    with pytest.raises(GraphError, match="does not cover"):
        check_proper_on_conjugate(s, cg)


# --- free edges ------------------------------------------------------------

def test_free_edges_variant_two(entries):
    s = next(x for x in entries if x.label == "2").signing
    res = free_edge_resolutions(s).as_dict()
    assert res == {"tp": {"tp": (2, 3), "pt": (3, 2)}, "cd": {"cd": (3, 1), "dc": (1, 3)}}


def test_free_edges_variant_one(entries):
    s = next(x for x in entries if x.label == "1").signing
    assert set(free_edge_resolutions(s).as_dict()["cd"].values()) == {(1, 3), (3, 1)}


def test_free_edges_distinct_coordinates(entries):
    for e in entries:
        for both in free_edge_resolutions(e.signing).as_dict().values():
            assert all(a != b for a, b in both.values())


def test_free_edges_reject_foreign_labeling(entries):
    s = next(x for x in entries if x.label == "2").signing
    wrong = dict(s.labels(), d=3, c=1)
    with pytest.raises(GraphError):
        free_edge_resolutions(s, wrong)
