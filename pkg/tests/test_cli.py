from invpat.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_count_formula_column(capsys):
    status, out, _ = run(capsys, "count", "--patterns", "321", "--mode", "I",
                         "--to", "8", "--formula")
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["n", "exhaustive", "formula", "match"]
    assert lines[-1].split() == ["8", "70", "70", "yes"]
    assert all(line.endswith("yes") for line in lines[1:])


def test_count_empty_patterns(capsys):
    status, out, _ = run(capsys, "count", "--patterns", "", "--mode", "I",
                         "--to", "6")
    assert status == 0
    got = [int(line.split()[-1]) for line in out.strip().splitlines()[1:]]
    assert got == [1, 2, 4, 10, 26, 76]


def test_count_formula_matchings(capsys):
    status, out, _ = run(capsys, "count", "--patterns", "2143", "--mode", "F",
                         "--to", "10", "--formula")
    assert status == 0
    assert out.strip().splitlines()[-1].split() == ["10", "120", "120", "yes"]
    status, _, err = run(capsys, "count", "--patterns", "3412", "--mode", "F",
                         "--to", "6", "--formula")
    assert status == 2 and "no closed form" in err
    status, _, err = run(capsys, "count", "--patterns", "321", "--mode", "F",
                         "--to", "6", "--formula")
    assert status == 2 and "fixed point" in err


def test_count_matchings_rows(capsys):
    status, out, _ = run(capsys, "count", "--patterns", "2143", "--mode", "F",
                         "--to", "12", "--format", "rows")
    assert status == 0
    rows = out.strip().splitlines()
    assert rows[0] == "n\tcount"
    assert [r.split("\t") for r in rows[1:]] == \
        [["2", "1"], ["4", "2"], ["6", "6"], ["8", "24"],
         ["10", "120"], ["12", "720"]]


def test_count_refined(capsys):
    status, out, _ = run(capsys, "count", "--patterns", "", "--mode", "I",
                         "--to", "4", "--refine-fixed-points", "--format", "rows")
    assert status == 0
    assert "4\t0\t3" in out and "4\t4\t1" in out


def test_basis_table_rows(capsys):
    status, out, _ = run(capsys, "basis", "--patterns", "123", "--ambient", "F")
    assert status == 0
    for word in ("214365", "341265", "215634", "351624", "456123"):
        assert word in out
    status, out, _ = run(capsys, "basis", "--patterns", "213", "--ambient", "I")
    assert status == 0
    assert {"213", "42513", "546213"} <= set(out.split())


def test_basis_pattern_file(tmp_path, capsys):
    f = tmp_path / "pats.txt"
    f.write_text("# one pattern per line\n321\n")
    status, out, _ = run(capsys, "basis", "--patterns-file", str(f),
                         "--ambient", "I")
    assert status == 0 and "321" in out


def test_basis_errors(capsys):
    status, _, err = run(capsys, "basis", "--patterns", "", "--ambient", "I")
    assert status == 2 and "at least one pattern" in err
    status, _, err = run(capsys, "basis", "--patterns", "321",
                         "--ambient", "classical")
    assert status == 2
    status, _, err = run(capsys, "count", "--patterns", "231", "--mode", "I",
                         "--to", "4")
    assert status == 2 and "involution" in err


def test_verify_mcgovern(capsys):
    status, out, _ = run(capsys, "verify-mcgovern", "--part", "2", "--to", "10",
                         "--workers", "2")
    assert status == 0
    assert "equal at all sizes <= 10" in out


def test_bijection_round_trip(capsys):
    status, out, _ = run(capsys, "bijection", "--omega", "21")
    assert status == 0 and "UD (1)" in out
    status, out, _ = run(capsys, "bijection", "--omega-inv", "UD",
                         "--labels", "1")
    assert status == 0 and "-> 21" in out
    status, out, _ = run(capsys, "bijection", "--omega", "645231")
    assert status == 0
    word = out.split("->")[1].split("(")[0].strip()
    labels = out.split("(")[1].rstrip(")\n")
    status2, out2, _ = run(capsys, "bijection", "--omega-inv", word,
                           "--labels", labels)
    assert status2 == 0 and "645231" in out2


def test_bijection_errors(capsys):
    status, _, err = run(capsys, "bijection", "--omega", "132")
    assert status == 2 and "132" in err
    # UDL is fine (the level step sits at height zero); ULD is not
    status, out, _ = run(capsys, "bijection", "--omega-inv", "UDL",
                         "--labels", "1")
    assert status == 0 and "-> 213" in out
    status, _, err = run(capsys, "bijection", "--omega-inv", "ULD",
                         "--labels", "1")
    assert status == 2


def test_identities(capsys):
    status, out, _ = run(capsys, "identities", "--stanley", "--m", "2",
                         "--to", "10")
    assert status == 0 and "equal" in out
    status, out, _ = run(capsys, "identities", "--recurrence", "--dseries",
                         "--to", "12")
    assert status == 0 and "holds" in out and "yes" in out
    status, out, _ = run(capsys, "identities", "--egf", "2143", "--to", "8")
    assert status == 0
    status, out, _ = run(capsys, "identities", "--fixed-points", "2143",
                         "--to", "8")
    assert status == 0 and "holds" in out
    status, _, err = run(capsys, "identities")
    assert status == 2


def test_invalid_input_is_a_clean_error(capsys):
    status, _, err = run(capsys, "count", "--patterns", "zzz", "--mode", "I",
                         "--to", "3")
    assert status == 2 and "error" in err
