import json

from biinterp.cli import main

SQUARES = "exists y. y*y = x"


def test_verify_s3(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["verify", "--group", "dihedral:3", "--kappa", SQUARES, "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["verdict"] == "bi-interpretable" and len(rep["steps"]) == 6


def test_verify_with_parameters():
    code = main(["verify", "--group", "dihedral:4", "--kappa", "x*@r = @r*x", "--param", "r=1"])
    assert code == 0


def test_verify_c4_standard_override(tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify", "--group", "cyclic:4", "--kappa", SQUARES, "--mode", "standard",
                 "--out", str(out)])
    assert code == 1
    rep = json.loads(out.read_text())
    step = next(s for s in rep["steps"] if s["name"] == "gamma_isomorphism")
    assert step["pass"] is False and step["counterexample"]["collision"] == [1, 2]


def test_verify_malformed_kappa_writes_report(tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify", "--group", "dihedral:3", "--kappa", "exists y. y*", "--out", str(out)])
    assert code == 2
    assert json.loads(out.read_text())["steps"][0]["name"] == "input"


def test_input_errors():
    assert main(["verify", "--group", "nosuchgroup:3", "--kappa", SQUARES]) == 2
    assert main(["verify", "--group", "dihedral:3", "--kappa", SQUARES, "--param", "oops"]) == 2
    assert main(["verify", "--group", "dihedral:3", "--kappa", "x*@r = @r*x", "--param", "r=99"]) == 2
    assert main(["frobnicate"]) == 2
    assert main([]) == 2


def test_verification_failure_exit_code():
    # kappa defines a non-normal subgroup of S3
    assert main(["verify", "--group", "dihedral:3", "--kappa", "x = 1 | x = #3"]) == 1


def test_translate_commutativity(capsys):
    code = main(["translate", "--group", "dihedral:3", "--kappa", SQUARES,
                 "forall x. forall y. x*y=y*x"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("psi: (forall x_1.")
    assert "source: false, target: false" in out
    assert "equivalence verified" in out


def test_translate_trivial(capsys):
    assert main(["translate", "--group", "quaternion8", "--kappa", "forall y. x*y = y*x", "1=1"]) == 0
    assert "source: true, target: true" in capsys.readouterr().out


def test_translate_with_free_variable(capsys):
    assert main(["translate", "--group", "dihedral:3", "--kappa", SQUARES, "x*x = 1"]) == 0
    assert "on 6 instantiation" in capsys.readouterr().out


def test_translate_rank_three_on_s4_v4_hits_cap(capsys):
    code = main(["translate", "--group", "symmetric:4", "--kappa",
                 "x*x = 1 & (exists y. y*y = x)", "forall a. forall b. forall c. a*(b*c) = (a*b)*c"])
    assert code == 2
    assert "ComplexityCap" in capsys.readouterr().err


def test_axiomatize_and_check(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    assert main(["axiomatize", "--group", "dihedral:3", "--tuple", "1,3", "--out", str(cert)]) == 0
    data = json.loads(cert.read_text())
    assert data["tuple_arity"] == 2 and data["sentence"].startswith("(")
    capsys.readouterr()
    # symmetric:3 lists permutations lexicographically; 3 = '120' is a 3-cycle, 1 = '021' a transposition
    assert main(["check-axiom", str(cert), "--group", "symmetric:3", "--tuple", "3,1"]) == 0
    assert json.loads(capsys.readouterr().out)["holds"] is True
    assert main(["check-axiom", str(cert), "--group", "cyclic:6", "--tuple", "1,2"]) == 1
    assert main(["check-axiom", str(cert), "--group", "dihedral:3", "--tuple", "1"]) == 2


def test_certificate_without_tuple_field(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    main(["axiomatize", "--group", "cyclic:3", "--tuple", "1", "--out", str(cert)])
    data = json.loads(cert.read_text())
    cert.write_text(json.dumps({"sentence": data["sentence"], "tuple_arity": 1}))
    assert main(["check-axiom", str(cert), "--group", "cyclic:3", "--tuple", "2"]) == 0


def test_axiomatize_rejects_non_generating(capsys):
    assert main(["axiomatize", "--group", "cyclic:4", "--tuple", "2"]) == 2


def test_group_file(tmp_path):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"format": "perm", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}))
    assert main(["verify", "--group", str(g), "--kappa", SQUARES]) == 0


def test_corpus_runs_and_is_byte_stable(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["corpus", "--suite-size", "5", "--seed", "7", "--out", str(a)]) == 0
    out = capsys.readouterr().out
    assert "8/8 instances pass" in out
    assert main(["corpus", "--suite-size", "5", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    names = [r["instance"] for r in json.loads(a.read_text())["instances"]]
    assert names == sorted(names)


def test_corpus_parallel_matches_sequential(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["corpus", "--suite-size", "2", "--out", str(a)])
    main(["corpus", "--suite-size", "2", "--jobs", "3", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_corpus_fault_injection(capsys):
    assert main(["corpus", "--suite-size", "0", "--fault", "S3/A3"]) == 1
    line = next(l for l in capsys.readouterr().out.splitlines() if l.startswith("S3/A3"))
    assert "extension_identities" in line


def test_corpus_empty(capsys):
    assert main(["corpus", "--empty"]) == 0
    assert "0/0 instances pass" in capsys.readouterr().out


def test_corpus_unknown_fault_name():
    assert main(["corpus", "--fault", "nope"]) == 2
