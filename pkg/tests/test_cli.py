"""
End-to-end tests for the preventkit command line.
"""
import pytest

from src.cli import build_parser, run_subcommand


@pytest.fixture
def run(capsys):
    """Run one subcommand and return (status, stdout, stderr)."""
    def _run(*argv):
        status = run_subcommand([str(a) for a in argv])
        captured = capsys.readouterr()
        return status, captured.out, captured.err
    return _run


@pytest.fixture
def pipeline_dir(run, corpus_dir, tmp_path):
    out = tmp_path / "run"
    status, _, _ = run("pipeline", "--corpus", corpus_dir, "--output-dir", out)
    assert status == 0
    return out


class TestUsage:
    def test_every_subcommand_is_registered(self):
        choices = build_parser()._subparsers._group_actions[0].choices
        assert set(choices) == {
            "probe", "sample", "filter", "agree", "assoc", "induce",
            "predict", "generate", "report", "schema", "pipeline",
        }

    def test_unknown_subcommand(self, run):
        status, out, err = run("summarize")
        assert status == 2
        assert out == ""
        assert "invalid choice" in err

    def test_unknown_flag(self, run, fixtures_dir):
        status, _, _ = run("agree", "--codings", fixtures_dir / "codings.csv", "--kappa")
        assert status == 2

    def test_missing_subcommand(self, run):
        assert run()[0] == 2

    def test_version(self, run):
        status, out, _ = run("--version")
        assert status == 0
        assert out.startswith("preventkit ")

    def test_generate_needs_a_form_or_tree(self, run):
        status, _, err = run("generate", "--action", "enter")
        assert status == 2
        assert "--form" in err


class TestAgree:
    def test_hand_computed_fixture(self, run, fixtures_dir):
        status, out, _ = run("agree", "--codings", fixtures_dir / "codings.csv", "--feature", "awareness")
        assert status == 0
        assert out == "awareness P(A)=0.800 P(E)=0.500 K=0.600 band=MODERATE\n"

    def test_default_skips_degenerate_features(self, run, fixtures_dir):
        status, out, _ = run("agree", "--codings", fixtures_dir / "codings.csv")
        assert status == 0
        assert out.splitlines() == ["awareness P(A)=0.800 P(E)=0.500 K=0.600 band=MODERATE"]

    def test_explicit_degenerate_feature_fails(self, run, fixtures_dir):
        status, out, err = run("agree", "--codings", fixtures_dir / "codings.csv", "--feature", "form")
        assert status == 1
        assert out == ""
        assert err.startswith("preventkit agree: error:")

    def test_fixture_bands(self, run, fixtures_dir):
        status, out, _ = run("agree", "--codings", fixtures_dir / "codings239.csv", "--format", "csv")
        assert status == 0
        rows = [line.split(",") for line in out.splitlines()[1:]]
        assert [(r[0], r[-1]) for r in rows] == [
            ("form", "ALMOST_PERFECT"),
            ("intentionality", "MODERATE"),
            ("awareness", "SUBSTANTIAL"),
        ]

    def test_precision_setting(self, run, fixtures_dir, monkeypatch):
        monkeypatch.setenv("PREVENTKIT_REPORT_PRECISION", "1")
        _, out, _ = run("agree", "--codings", fixtures_dir / "codings.csv", "--feature", "awareness")
        assert out == "awareness P(A)=0.8 P(E)=0.5 K=0.6 band=MODERATE\n"

    def test_output_is_reproducible(self, run, fixtures_dir):
        argv = ("agree", "--codings", fixtures_dir / "codings239.csv")
        assert run(*argv)[1] == run(*argv)[1]

    def test_stamp_prefixes_a_comment_line(self, run, fixtures_dir):
        _, out, _ = run("agree", "--codings", fixtures_dir / "codings.csv", "--feature", "awareness", "--stamp")
        first, second = out.splitlines()
        assert first.startswith("# generated ")
        assert second.startswith("awareness P(A)=0.800")

    def test_empty_coding_file(self, run, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_bytes(b"")
        status, out, err = run("agree", "--codings", path)
        assert status == 1
        assert out == ""
        assert err.startswith("preventkit agree: error:")
        assert "no header row" in err
        assert len(err.splitlines()) == 1

    def test_latin1_coding_file(self, run, tmp_path):
        path = tmp_path / "latin1.csv"
        path.write_bytes("example_id,coder,form,intentionality,awareness\ne1,Jörg,DONT,CON,AW\n".encode("latin-1"))
        status, out, err = run("agree", "--codings", path)
        assert status == 1
        assert out == ""
        assert "undecodable byte at offset 51" in err
        assert len(err.splitlines()) == 1

    def test_bad_coding_file(self, run, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("example_id,coder,form,intentionality,awareness\ne1,c1,DONT,MAYBE,AW\n", encoding="utf-8")
        status, out, err = run("agree", "--codings", path)
        assert status == 1
        assert out == ""
        assert "row 1" in err and "intentionality" in err


class TestAssoc:
    def test_agreed_subset_statistics(self, run, fixtures_dir):
        status, out, _ = run("assoc", "--codings", fixtures_dir / "agreed165.csv", "--feature", "intentionality")
        assert status == 0
        assert "intentionality chi2=51.4 sig=0.001" in out.splitlines()
        assert out.splitlines()[1].split() == ["DONT", "61", "45", "106"]

    def test_both_features_from_the_full_coding_file(self, run, fixtures_dir, tmp_path):
        subset = tmp_path / "agreed.csv"
        status, out, _ = run("assoc", "--codings", fixtures_dir / "codings239.csv",
                             "--format", "csv", "--save-subset", subset)
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "feature,n,chi2,sig,n_warning"
        assert lines[1].startswith("intentionality,165,51.42")
        assert lines[2].startswith("awareness,165,56.89")
        assert len(subset.read_text(encoding="utf-8").splitlines()) == 1 + 165 * 2


class TestExtraction:
    def test_missing_corpus_directory(self, run, tmp_path):
        missing = tmp_path / "no-such-corpus"
        status, out, err = run("probe", "--corpus", missing)
        assert status == 1
        assert out == ""
        assert str(missing) in err

    def test_probe_to_stdout(self, run, corpus_dir):
        status, out, _ = run("probe", "--corpus", corpus_dir)
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "id,source,start,end,patterns,text"
        assert len(lines) == 10

    def test_pipeline_artifacts(self, pipeline_dir):
        assert sorted(p.name for p in pipeline_dir.iterdir()) == [
            "matches.csv", "report.txt", "sample.csv", "verdicts.csv",
        ]
        report = (pipeline_dir / "report.txt").read_text(encoding="utf-8")
        assert "probed segments: 9 of 13 (69.2%)" in report

    def test_pipeline_matches_stepwise_commands(self, run, corpus_dir, tmp_path):
        status, pipeline_out, _ = run("pipeline", "--corpus", corpus_dir,
                                      "--output-dir", tmp_path / "a", "--format", "csv")
        assert status == 0
        matches, sample_csv, verdicts = tmp_path / "m.csv", tmp_path / "s.csv", tmp_path / "v.csv"
        assert run("probe", "--corpus", corpus_dir, "--output", matches)[0] == 0
        assert run("sample", "--matches", matches, "--output", sample_csv)[0] == 0
        assert run("filter", "--sample", sample_csv, "--output", verdicts)[0] == 0
        status, report_out, _ = run("report", "--matches", matches, "--sample", sample_csv,
                                    "--verdicts", verdicts, "--corpus", corpus_dir, "--format", "csv")
        assert status == 0
        assert report_out == pipeline_out
        assert report_out.splitlines()[3] == "Final Coding,2,1,1,0,0,3,0,0,3,4,7"

    def test_pipeline_applies_overrides(self, run, corpus_dir, fixtures_dir, tmp_path):
        status, out, _ = run("pipeline", "--corpus", corpus_dir, "--output-dir", tmp_path / "o",
                             "--overrides", fixtures_dir / "overrides.csv", "--format", "csv")
        assert status == 0
        assert out.splitlines()[3].endswith(",4,4,8")

    def test_env_seed_overrides_flag(self, run, pipeline_dir, monkeypatch):
        matches = pipeline_dir / "matches.csv"
        argv = ("sample", "--matches", matches, "--pooled", "--cap", "3")
        monkeypatch.setenv("PREVENTKIT_SEED", "7")
        _, with_env, _ = run(*argv, "--seed", "1")
        monkeypatch.delenv("PREVENTKIT_SEED")
        _, with_flag, _ = run(*argv, "--seed", "7")
        assert with_env == with_flag
        assert len(with_env.splitlines()) == 4

    def test_matches_row_with_missing_fields(self, run, tmp_path):
        matches = tmp_path / "matches.csv"
        matches.write_text("id,source,start,end,patterns,text\na.txt:0,a.txt,0,5\n", encoding="utf-8")
        status, out, err = run("sample", "--matches", matches)
        assert status == 1
        assert out == ""
        assert "row 1, column 'patterns'" in err

    def test_zero_cap_is_rejected(self, run, pipeline_dir):
        status, _, err = run("sample", "--matches", pipeline_dir / "matches.csv", "--cap", "0")
        assert status == 1
        assert "cap" in err

    def test_interactive_filter_records_answers(self, run, pipeline_dir, monkeypatch, tmp_path):
        answers = iter(["n", "", "q"])
        monkeypatch.setattr("builtins.input", lambda prompt="": next(answers))
        overrides = tmp_path / "answers.csv"
        status, out, _ = run("filter", "--sample", pipeline_dir / "sample.csv",
                             "--overrides", overrides, "--prompt")
        assert status == 0
        assert overrides.read_text(encoding="utf-8") == "id,keep\nasbestos.txt:1,false\n"
        assert "asbestos.txt:1,false,MANUAL,true," in out.splitlines()
        assert "charger.txt:0,true,,false,DONT" in out.splitlines()


class TestModelling:
    def test_induce_predict_generate(self, run, fixtures_dir, tmp_path):
        tree = tmp_path / "tree.txt"
        status, out, _ = run("induce", "--codings", fixtures_dir / "corpus_codings.csv", "--output", tree)
        assert status == 0
        assert out == (
            "awareness = AW -> NEG_TC (0 DONT / 3 NEG_TC)\n"
            "awareness = UNAW -> DONT (3 DONT / 0 NEG_TC)\n"
            "training accuracy: 1.000 on 6 examples\n"
        )
        assert tree.read_text(encoding="utf-8") == (
            "node 0 split awareness 1 2\nnode 1 leaf NEG_TC 0 3\nnode 2 leaf DONT 3 0\n"
        )

        status, out, _ = run("predict", "--tree", tree, "--intentionality", "UNC", "--awareness", "AW")
        assert (status, out) == (0, "NEG_TC confidence=1.000\n")

        status, out, _ = run("generate", "--tree", tree, "--intentionality", "UNC",
                             "--awareness", "AW", "--action", "burn the garlic")
        assert (status, out) == (0, "Be careful not to burn the garlic.\n")

    def test_induce_decision_table(self, run, fixtures_dir):
        status, out, _ = run("induce", "--codings", fixtures_dir / "codings239.csv", "--format", "csv")
        assert status == 0
        assert out.splitlines() == [
            "intentionality,awareness,form,confidence",
            "CON,AW,DONT,1.0",
            "CON,UNAW,DONT,1.0",
            "UNC,AW,NEG_TC,1.0",
            "UNC,UNAW,DONT,0.625",
        ]

    def test_predict_with_malformed_tree(self, run, tmp_path):
        tree = tmp_path / "tree.txt"
        tree.write_text("node 0 split awareness 1 2\nnode 1 leaf DONT 1 0\n", encoding="utf-8")
        status, out, err = run("predict", "--tree", tree, "--intentionality", "CON", "--awareness", "UNAW")
        assert status == 1
        assert out == ""
        assert "root/awareness=UNAW" in err

    def test_generate_from_form(self, run):
        status, out, _ = run("generate", "--form", "DONT", "--variant", "CONTRACTED",
                             "--action", "sand it or tear it up",
                             "--trailing", "because this will put dangerous asbestos fibers into the air")
        assert status == 0
        assert out == "Don't sand it or tear it up because this will put dangerous asbestos fibers into the air.\n"

    def test_generate_incompatible_variant(self, run):
        status, _, err = run("generate", "--form", "DONT", "--variant", "TAKE_CARE", "--action", "enter")
        assert status == 1
        assert "cannot realize" in err


def test_schema_lists_the_coding_manual(run):
    status, out, _ = run("schema")
    assert status == 0
    prefixes = [line.split(":")[0] for line in out.splitlines()]
    assert prefixes == [
        "form DONT", "form NEG_TC", "intentionality CON", "intentionality UNC",
        "awareness AW", "awareness UNAW",
    ]
