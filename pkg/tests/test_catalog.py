"""Catalog assembly, counting, determinism, export formats, JSON schema."""

import json
from pathlib import Path

import jsonschema
import pytest

from skewpairs.catalog import (
    CSV_COLUMNS,
    classify,
    count_orbits,
    export_catalog_document,
    export_entries,
    graph_hash,
)
from skewpairs.skewgraph import (
    canonical_form,
    classify_component,
    enumerate_admissible,
    graph_key,
)

SCHEMA = json.loads((Path(__file__).resolve().parent.parent / "catalog.schema.json").read_text())


def test_counts_match_examples():
    assert count_orbits("A", 4, "principal") == 7
    assert count_orbits("B", 9, "principal") == 3
    assert count_orbits("C", 4, "principal") == 2
    assert count_orbits("A", 3, "distinguished") == 4


def test_fast_and_full_counts_agree():
    for series, dimv, kind in [
        ("A", 4, "principal"),
        ("A", 3, "distinguished"),
        ("B", 5, "distinguished"),
        ("C", 4, "distinguished"),
        ("D", 6, "principal"),
        ("D", 6, "distinguished"),
    ]:
        assert count_orbits(series, dimv, kind) == count_orbits(series, dimv, kind, mode="full")


def test_d6_principal_catalog_contents():
    entries = classify("D", 6, "principal")
    assert len(entries) == 7
    near = [
        e
        for e in entries
        if len(e.graph.components) == 1
        and classify_component(e.graph.components[0]).near_rectangular_shape
    ]
    assert len(near) == 4  # two graphs, two sign representatives each
    assert {e.orbit_label[-1] for e in near} == {"+", "-"}
    for e in near:
        assert e.report.dimension == 3
        assert not e.report.flags.rectangular
    disconnected = [e for e in entries if len(e.graph.components) == 2]
    assert len(disconnected) == 3  # 5-chain+point (x2 orientations) and 3+3 chains
    for e in disconnected:
        assert e.orbit_sign is None
        assert e.report.flags.rectangular


def test_connected_d_entries_come_in_sign_pairs():
    entries = classify("D", 4, "distinguished")
    by_graph = {}
    for e in entries:
        by_graph.setdefault(graph_key(e.graph), []).append(e)
    for key, group in by_graph.items():
        if len(group[0].graph.components) == 1:
            assert sorted(e.orbit_label[-1] for e in group) == ["+", "-"]
            assert len({e.orbit_label for e in group}) == 2
        else:
            assert len(group) == 1


def test_principal_entries_are_distinguished_subset():
    dist = {graph_key(e.graph) for e in classify("C", 6, "distinguished")}
    prin = {graph_key(e.graph) for e in classify("C", 6, "principal")}
    assert prin <= dist
    # with sign labels matched for series D
    dist_d = {e.orbit_label for e in classify("D", 6, "distinguished")}
    prin_d = {e.orbit_label for e in classify("D", 6, "principal")}
    assert prin_d <= dist_d


def test_classify_deterministic():
    a = export_entries(classify("D", 6, "principal"), "json")
    b = export_entries(classify("D", 6, "principal"), "json")
    assert a == b


def test_graph_hash_stable_across_translation():
    from skewpairs.skewgraph import SkewGraph, component_from_nodes

    g = enumerate_admissible("A", 4, "principal")[0]
    shifted = SkewGraph(
        (component_from_nodes(nd.shifted(2, -1) for nd in g.components[0].nodes),)
    )
    assert graph_hash(shifted) == graph_hash(g)


def test_export_empty_document():
    doc = json.loads(export_entries((), "json"))
    assert doc["entry_count"] == 0
    assert doc["entries"] == []
    jsonschema.validate(doc, SCHEMA)
    csv_text = export_entries((), "csv")
    assert csv_text.splitlines()[0] == ",".join(CSV_COLUMNS)
    assert len(csv_text.splitlines()) == 1


def test_export_a4_principal_csv():
    entries = classify("A", 4, "principal")
    lines = export_entries(entries, "csv").splitlines()
    assert len(lines) == 8
    for line in lines[1:]:
        fields = line.split(",", 7)
        assert fields[6] == "3"  # centralizer dimension = rank sl4


def test_export_json_schema_and_matrices():
    entries = classify("D", 6, "principal")
    doc = json.loads(export_entries(entries, "json"))
    jsonschema.validate(doc, SCHEMA)
    assert doc["entry_count"] == 7
    doc_full = json.loads(export_entries(entries, "json", include_matrices=True))
    jsonschema.validate(doc_full, SCHEMA)
    assert all("matrices" in e for e in doc_full["entries"])
    near_rows = [
        e for e in doc_full["entries"] if not e["report"]["flags"]["rectangular"]
    ]
    assert near_rows and all(e["orbit_sign"] in ("plus", "minus") for e in near_rows)


def test_export_table_contains_diagrams():
    entries = classify("B", 5, "principal")
    table = export_entries(entries, "text-table")
    assert "| #" in table or "| a" in table


def test_export_catalog_document_round_trip():
    entries = classify("C", 4, "principal")
    doc = json.loads(export_entries(entries, "json"))
    assert export_catalog_document(doc, "csv") == export_entries(entries, "csv")
    assert export_catalog_document(doc, "table") == export_entries(entries, "text-table")


def test_every_entry_flag_consistency():
    for series, dimv, kind in [("B", 5, "distinguished"), ("D", 6, "principal")]:
        for e in classify(series, dimv, kind):
            assert e.report.flags.distinguished
            if kind == "principal":
                assert e.report.flags.principal
                assert e.closed_form_match is True
                assert len(e.report.biexponents) == e.spec.rank
