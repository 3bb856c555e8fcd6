import pytest

from critgraph import corpus
from critgraph.canon import canonical_form
from critgraph.coloring import count_colorings_up_to_permutation, is_k_critical, is_k_vertex_critical
from critgraph.corpus import FixtureError, IntegrityError, load_fixtures, parse_adjacency_list
from critgraph.detect import PATH, contains_induced
from critgraph.graph import Graph


def test_fixture_examples(fx):
    assert len(fx) == 24
    assert fx["F1"] == Graph.complete(4)
    assert fx["F18"].n == 11
    assert fx["F24"].n == 16
    assert {i: g.n for i, g in fx.items()} == corpus.FIXTURE_ORDERS


def test_f1_repair_is_reported(fx):
    assert fx.notes[1]
    assert all(not fx.notes[i] for i in range(2, 25))


def test_fixture_orders_match_table(fx):
    counts = {}
    for _, g in fx:
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == corpus.CRITICAL_P6_COUNTS


def test_parse_errors():
    with pytest.raises(FixtureError):
        parse_adjacency_list("0 1; 1 : 0")
    with pytest.raises(FixtureError):
        parse_adjacency_list("0 : x")
    with pytest.raises(IntegrityError):
        parse_adjacency_list("0 : 1; 1 : 2; 2 : 1")
    with pytest.raises(IntegrityError):
        parse_adjacency_list("0 : 1; 0 : 2; 1 : 0; 2 : 0")


def test_loader_line_numbers(tmp_path, monkeypatch):
    path = tmp_path / "fx.txt"
    path.write_text("# comment\nGraph F1: {0 : 1; 1 : 0}\nnonsense\n")
    with pytest.raises(FixtureError) as err:
        load_fixtures(str(path))
    assert err.value.line == 3
    path.write_text("Graph F2: {0 : 1 2; 1 : 0; 2 : 0; 3 : 0}\n")
    monkeypatch.setenv(corpus.FIXTURE_ENV, str(path))
    with pytest.raises(IntegrityError):
        load_fixtures()


def test_env_override(tmp_path, monkeypatch):
    path = tmp_path / "fx.txt"
    path.write_text("Graph F7: {0 : 1 2; 1 : 0 2; 2 : 0 1}\n")
    monkeypatch.setenv(corpus.FIXTURE_ENV, str(path))
    fs = load_fixtures()
    assert len(fs) == 1 and fs[7] == Graph.complete(3)


def test_pokrovskiy_small():
    assert corpus.pokrovskiy(1) == Graph.complete(4)
    with pytest.raises(ValueError):
        corpus.pokrovskiy(0)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_pokrovskiy_properties(r):
    g = corpus.pokrovskiy(r)
    assert g.n == 3 * r + 1
    assert not contains_induced(g, PATH(7))
    assert is_k_vertex_critical(g, 4)
    assert count_colorings_up_to_permutation(g.delete_vertex(0), 3) == 1


def test_oracle_examples(fx):
    crit = corpus.oracle_enumerate(
        7, lambda g: not corpus.brute_contains_path(g, 6) and corpus.brute_is_critical(g, 4))
    assert {canonical_form(g) for g in crit} == {canonical_form(fx[i]) for i in (1, 2, 3, 4)}
    three = corpus.oracle_enumerate(7, lambda g: corpus.brute_is_critical(g, 3))
    want = {canonical_form(g) for g in (Graph.complete(3), Graph.cycle(5), Graph.cycle(7))}
    assert {canonical_form(g) for g in three} == want


def test_oracle_census():
    assert len(corpus.oracle_enumerate(5)) == 1 + 2 + 4 + 11 + 34


def test_brute_predicates_agree_on_fixtures(fx):
    for i in (1, 2, 3, 4, 5, 8):
        g = fx[i]
        assert not corpus.brute_colorable(g, 3)
        assert corpus.brute_is_vertex_critical(g, 4)
        assert corpus.brute_is_critical(g, 4) == is_k_critical(g, 4)
