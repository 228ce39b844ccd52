import oracles
from hypothesis import given, settings
from hypothesis import strategies as st

from fixgraph.automorphisms import automorphism_generators, canonical_form, is_automorphism, refine
from fixgraph.fixing import fixing_number, is_fixing_set
from fixgraph.formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from fixgraph.graph import from_edges, relabel
from fixgraph.perm import Permutation, compose


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def perms(draw, n):
    return Permutation(draw(st.permutations(range(n))))


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_compose_associative(abc):
    a, b, c = abc
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, a.inverse()).is_identity


@settings(max_examples=40, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(g, rnd):
    base = canonical_form(g)
    for _ in range(50):
        p = list(range(g.n))
        rnd.shuffle(p)
        assert canonical_form(relabel(g, p)) == base


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_refined_cells_are_unions_of_orbits(g):
    cells = refine(g.rows, [list(range(g.n))])
    where = {v: i for i, c in enumerate(cells) for v in c}
    for p in automorphism_generators(g).generators:
        assert is_automorphism(g, p)
        assert all(where[p(v)] == where[v] for v in range(g.n))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_fixing_number_matches_brute_force(g):
    res = fixing_number(g)
    assert res.fix_number == oracles.fixing_number(g)[0]
    assert is_fixing_set(g, res.witness)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_codecs_round_trip(g):
    text = emit_graph6(g)
    assert parse_graph6(text) == g and emit_graph6(parse_graph6(text + b"\n")) == text
    assert parse_edge_list(emit_edge_list(g)) == g


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), st.data())
def test_stabilizer_generators_fix_the_seed(g, data):
    fixed = data.draw(st.sets(st.integers(0, g.n - 1), max_size=2))
    res = automorphism_generators(g, fixed)
    assert all(p(v) == v for p in res.generators for v in fixed)
    assert res.group_order == oracles.stabilizer_order(g, sorted(fixed))
