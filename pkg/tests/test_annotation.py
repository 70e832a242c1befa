"""
Tests for coding files, the agreement subset and contingency tables.
"""
import random

import pytest

from src.annotation import (
    AgreedExample,
    Awareness,
    CodingRecord,
    CodingSet,
    FormClass,
    Intentionality,
    agreement_subset,
    build_contingency,
    describe_schema,
    feature_labels,
    format_contingency,
    load_codings,
    save_agreed_subset,
    save_codings,
)
from src.annotation.validators import validate_coding_row, validate_header
from src.utils.errors import (
    CodingDataError,
    CodingValidationError,
    CorpusDecodeError,
    CorpusPathError,
    InvalidArgumentError,
)

HEADER = "example_id,coder,form,intentionality,awareness\n"


def _write(tmp_path, body, name="codings.csv"):
    path = tmp_path / name
    path.write_text(HEADER + body, encoding="utf-8")
    return path


def _record(example_id, coder, form="DONT", intentionality="CON", awareness="UNAW"):
    return CodingRecord(
        example_id=example_id, coder=coder, form=form,
        intentionality=intentionality, awareness=awareness,
    )


class TestLoadCodings:
    def test_well_formed_file(self, tmp_path):
        path = _write(tmp_path, "e1,c1,DONT,CON,UNAW\ne1,c2,DONT,CON,UNAW\ne2,c1,NEG_TC,UNC,AW\ne2,c2,NEG_TC,UNC,AW\n")
        codings = load_codings(path)
        assert codings.roster == ("c1", "c2")
        assert codings.example_ids == ("e1", "e2")
        assert len(codings) == 4

    def test_unknown_token_names_row_and_column(self, tmp_path):
        path = _write(tmp_path, "e1,c1,DONT,CON,UNAW\ne1,c2,DONT,MAYBE,UNAW\n")
        with pytest.raises(CodingValidationError) as excinfo:
            load_codings(path)
        assert excinfo.value.row == 2
        assert excinfo.value.column == "intentionality"
        assert "MAYBE" in str(excinfo.value)

    def test_duplicate_pair(self, tmp_path):
        path = _write(tmp_path, "e1,c1,DONT,CON,UNAW\ne1,c1,DONT,CON,AW\n")
        with pytest.raises(CodingValidationError) as excinfo:
            load_codings(path)
        assert excinfo.value.row == 2

    def test_inconsistent_roster(self, tmp_path):
        path = _write(tmp_path, "e1,c1,DONT,CON,UNAW\ne2,c1,DONT,CON,UNAW\ne2,c2,DONT,CON,UNAW\n")
        with pytest.raises(CodingValidationError) as excinfo:
            load_codings(path)
        assert "e1" in str(excinfo.value)

    def test_bad_header(self, tmp_path):
        path = tmp_path / "codings.csv"
        path.write_text("id,coder,form\ne1,c1,DONT\n", encoding="utf-8")
        with pytest.raises(CodingValidationError):
            load_codings(path)

    def test_comments_are_skipped(self, tmp_path):
        path = tmp_path / "codings.csv"
        path.write_text("# pilot round\n" + HEADER + "e1,c1,DONT,CON,UNAW\n# second coder\ne1,c2,DONT,CON,UNAW\n",
                        encoding="utf-8")
        assert len(load_codings(path)) == 2

    def test_hash_inside_a_field_is_data(self, tmp_path):
        path = _write(tmp_path, "ex#1,c1,DONT,CON,AW\nex#1,c2,DONT,CON,AW\n")
        codings = load_codings(path)
        assert codings.example_ids == ("ex#1",)
        assert codings.roster == ("c1", "c2")

    def test_empty_file(self, tmp_path):
        path = tmp_path / "codings.csv"
        path.write_bytes(b"")
        with pytest.raises(CodingValidationError, match="no header row"):
            load_codings(path)

    def test_comment_only_file(self, tmp_path):
        path = tmp_path / "codings.csv"
        path.write_text("# nothing coded yet\n", encoding="utf-8")
        with pytest.raises(CodingValidationError, match="no header row"):
            load_codings(path)

    def test_latin1_file_reports_byte_offset(self, tmp_path):
        path = tmp_path / "codings.csv"
        path.write_bytes((HEADER + "e1,Jörg,DONT,CON,AW\n").encode("latin-1"))
        with pytest.raises(CorpusDecodeError) as excinfo:
            load_codings(path)
        assert excinfo.value.byte_offset == len(HEADER) + len("e1,J")

    def test_missing_file(self, tmp_path):
        with pytest.raises(CorpusPathError):
            load_codings(tmp_path / "absent.csv")

    def test_round_trip(self, tmp_path, codings239):
        path = tmp_path / "copy.csv"
        save_codings(codings239, path)
        assert load_codings(path) == codings239


def test_validators_return_tuples():
    assert validate_header(HEADER.strip().split(",")) == (True, None, None)
    ok, column, message = validate_coding_row(
        {"example_id": "e1", "coder": "", "form": "DONT", "intentionality": "CON", "awareness": "AW"}
    )
    assert not ok and column == "coder" and message


def test_coding_set_rejects_duplicates():
    with pytest.raises(ValueError):
        CodingSet(records=(_record("e1", "c1"), _record("e1", "c1")))


class TestAgreementSubset:
    def test_unanimous_example_is_kept(self):
        codings = CodingSet(records=(_record("e1", "c1"), _record("e1", "c2")))
        assert agreement_subset(codings) == [
            AgreedExample(example_id="e1", intentionality=Intentionality.CON,
                          awareness=Awareness.UNAW, form=FormClass.DONT)
        ]

    def test_intentionality_conflict_is_dropped(self):
        codings = CodingSet(records=(
            _record("e1", "c1", intentionality="CON", awareness="AW"),
            _record("e1", "c2", intentionality="UNC", awareness="AW"),
        ))
        assert agreement_subset(codings) == []

    def test_form_disagreement_is_a_data_error(self):
        codings = CodingSet(records=(_record("e1", "c1", form="DONT"), _record("e1", "c2", form="NEG_TC")))
        with pytest.raises(CodingDataError):
            agreement_subset(codings)

    def test_single_coder_is_rejected(self):
        with pytest.raises(InvalidArgumentError):
            agreement_subset(CodingSet(records=(_record("e1", "c1"),)))

    def test_fixture_has_165_survivors(self, codings239, agreed165):
        assert len(codings239.example_ids) == 239
        assert len(agreed165) == 165
        assert [e.example_id for e in agreed165] == sorted(e.example_id for e in agreed165)

    def test_permutation_invariant(self, codings239, agreed165):
        records = list(codings239.records)
        random.Random(7).shuffle(records)
        assert agreement_subset(CodingSet(records=tuple(records))) == agreed165

    def test_brute_force_count(self, codings239, agreed165):
        survivors = [
            eid for eid, recs in codings239.by_example().items()
            if len({(r.intentionality, r.awareness) for r in recs}) == 1
        ]
        assert len(survivors) == len(agreed165)

    def test_saved_subset_reloads_unanimously(self, tmp_path, codings239, agreed165):
        path = tmp_path / "agreed.csv"
        save_agreed_subset(agreed165, path, codings239.roster)
        assert agreement_subset(load_codings(path)) == agreed165

    def test_bundled_agreed_file_matches(self, fixtures_dir, agreed165):
        assert agreement_subset(load_codings(fixtures_dir / "agreed165.csv")) == agreed165


class TestContingency:
    def test_intentionality_table(self, agreed165):
        table = build_contingency(agreed165, "intentionality")
        assert table.cells() == (61, 45, 0, 59)
        assert table.n == 165
        assert table.column_labels == ("CON", "UNC")

    def test_awareness_table(self, agreed165):
        table = build_contingency(agreed165, "awareness")
        assert table.cells() == (3, 103, 32, 27)
        assert table.column_labels == ("AW", "UNAW")

    def test_tables_share_row_totals(self, agreed165):
        first = build_contingency(agreed165, "intentionality")
        second = build_contingency(agreed165, "awareness")
        assert first.n == second.n
        assert first.row_totals == second.row_totals

    def test_single_example(self):
        example = AgreedExample(example_id="e1", intentionality="CON", awareness="AW", form="DONT")
        table = build_contingency([example], "intentionality")
        assert table.cells() == (1, 0, 0, 0)
        assert table.n == 1

    def test_empty_subset(self):
        with pytest.raises(InvalidArgumentError):
            build_contingency([], "awareness")

    def test_form_is_not_a_contingency_feature(self, agreed165):
        with pytest.raises(InvalidArgumentError):
            build_contingency(agreed165, "form")

    def test_formatted_totals(self, agreed165):
        text = format_contingency(build_contingency(agreed165, "intentionality"))
        lines = text.splitlines()
        assert lines[0].split() == ["CON", "UNC", "Total"]
        assert lines[1].split() == ["DONT", "61", "45", "106"]
        assert lines[3].split() == ["Total", "61", "104", "165"]


def test_feature_labels_align_by_example(codings239):
    labels = feature_labels(codings239, "awareness")
    assert set(labels) == {"c1", "c2"}
    assert len(labels["c1"]) == len(labels["c2"]) == 239
    assert labels["c1"][0] == labels["c2"][0] == "AW"


def test_schema_manual_covers_every_value():
    rows = describe_schema()
    assert {(feature, value) for feature, value, _ in rows} == {
        ("form", "DONT"), ("form", "NEG_TC"),
        ("intentionality", "CON"), ("intentionality", "UNC"),
        ("awareness", "AW"), ("awareness", "UNAW"),
    }
    assert all(description for _, _, description in rows)
