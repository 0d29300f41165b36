"""End-to-end command line runs through main(argv)."""

import pytest

from structctrl.cli import main
from structctrl.demo import two_community_network
from structctrl.matching import has_perfect_matching
from structctrl.structmat import (
    ProblemInstance,
    StructMatrix,
    identity_pattern,
    parse_instance,
    serialize_instance,
    serialize_struct_matrix,
    transpose,
)


@pytest.fixture
def demo_file(tmp_path):
    path = tmp_path / "demo.instance"
    path.write_text(serialize_instance(two_community_network()))
    return str(path)


@pytest.fixture
def stranded_file(tmp_path):
    # second state unreachable and unactuated: infeasible however solved
    inst = ProblemInstance(identity_pattern(2), StructMatrix(2, 1, frozenset({(0, 0)})))
    path = tmp_path / "stranded.instance"
    path.write_text(serialize_instance(inst))
    return str(path)


@pytest.fixture
def unmatchable_file(tmp_path):
    # single star (1, 0): controllable from input 0 but no perfect matching
    inst = ProblemInstance(StructMatrix(2, 2, frozenset({(1, 0)})), identity_pattern(2))
    path = tmp_path / "unmatchable.instance"
    path.write_text(serialize_instance(inst))
    return str(path)


class TestCheck:
    def test_two_community_network(self, demo_file, capsys):
        assert main(["check", demo_file]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert "SCC 4: x1 x2 NON-TOP" in lines
        assert "SCC 7: x3 x4 NON-TOP" in lines
        assert lines[-1] == "CONTROLLABLE, non-top-linked SCCs: 2, Assumption 1: YES"

    def test_negative_verdict(self, stranded_file, capsys):
        assert main(["check", stranded_file]) == 1
        out = capsys.readouterr().out
        assert out.splitlines()[-1] == (
            "NOT CONTROLLABLE, non-top-linked SCCs: 2, Assumption 1: YES"
        )

    def test_verdict_without_matching(self, unmatchable_file, capsys):
        assert main(["check", unmatchable_file]) == 0
        assert capsys.readouterr().out.splitlines()[-1].endswith("Assumption 1: NO")

    def test_missing_file(self, tmp_path, capsys):
        assert main(["check", str(tmp_path / "nope")]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.instance"
        path.write_text("2 2\n5 5\n---\n2 1\n")
        assert main(["check", str(path)]) == 2
        assert "out of range line 2" in capsys.readouterr().err


class TestSolve:
    def test_exact(self, demo_file, capsys):
        assert main(["solve", demo_file]) == 0
        assert capsys.readouterr().out == "FEASIBLE 1: 2 [exact]\n"

    def test_greedy(self, demo_file, capsys):
        assert main(["solve", demo_file, "--mode", "greedy"]) == 0
        assert capsys.readouterr().out == "FEASIBLE 1: 2 [greedy]\n"

    def test_brute(self, demo_file, capsys):
        assert main(["solve", demo_file, "--mode", "brute"]) == 0
        assert capsys.readouterr().out == "FEASIBLE 1: 2 [brute-force]\n"

    def test_infeasible(self, stranded_file, capsys):
        assert main(["solve", stranded_file]) == 1
        assert capsys.readouterr().out == "INFEASIBLE\n"

    def test_exact_needs_matching(self, unmatchable_file, capsys):
        assert main(["solve", unmatchable_file]) == 3
        err = capsys.readouterr().err
        assert "no perfect matching" in err
        assert "--mode brute" in err

    def test_brute_needs_no_matching(self, unmatchable_file, capsys):
        assert main(["solve", unmatchable_file, "--mode", "brute"]) == 0
        assert capsys.readouterr().out == "FEASIBLE 1: 1 [brute-force]\n"

    def test_brute_cap(self, demo_file, capsys):
        assert main(["solve", demo_file, "--mode", "brute", "--brute-cap", "3"]) == 2
        assert "enumeration cap" in capsys.readouterr().err

    def test_dual_matches_manual_transpose(self, tmp_path, capsys):
        a = StructMatrix(2, 2, frozenset({(0, 0), (1, 1), (1, 0)}))
        c = StructMatrix(1, 2, frozenset({(0, 1)}))
        measured = tmp_path / "measured.instance"
        measured.write_text(
            serialize_struct_matrix(a) + "---\n" + serialize_struct_matrix(c)
        )
        flipped = tmp_path / "flipped.instance"
        flipped.write_text(
            serialize_instance(ProblemInstance(transpose(a), transpose(c)))
        )
        assert main(["solve", str(measured), "--dual"]) == 0
        via_flag = capsys.readouterr().out
        assert main(["solve", str(flipped)]) == 0
        assert via_flag == capsys.readouterr().out


class TestReduce:
    def test_two_community_network(self, demo_file, capsys):
        assert main(["reduce", demo_file]) == 0
        assert capsys.readouterr().out == "2 4\n0\n0 1\n1\n\n"

    def test_round_trips_through_gen(self, demo_file, tmp_path, capsys):
        main(["reduce", demo_file])
        cover_path = tmp_path / "cover.setcover"
        cover_path.write_text(capsys.readouterr().out)
        assert main(["gen", "--from-setcover", str(cover_path)]) == 0
        lifted = parse_instance(capsys.readouterr().out)
        assert lifted.a == identity_pattern(2)
        assert lifted.p == 4

    def test_needs_matching(self, unmatchable_file, capsys):
        assert main(["reduce", unmatchable_file]) == 3
        assert "reduction precondition" in capsys.readouterr().err

    def test_infeasible(self, stranded_file, capsys):
        assert main(["reduce", stranded_file]) == 1
        assert "actuated by no input" in capsys.readouterr().err


class TestGen:
    def test_from_setcover(self, tmp_path, capsys):
        path = tmp_path / "family.setcover"
        path.write_text("2 4\n0\n0 1\n1\n\n")
        assert main(["gen", "--from-setcover", str(path)]) == 0
        assert capsys.readouterr().out == "2 2\n0 0\n1 1\n---\n2 4\n0 0\n0 1\n1 1\n1 2\n"

    def test_random_is_reproducible(self, capsys):
        argv = ["gen", "--random", "4", "2", "0.5", "11"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first
        inst = parse_instance(first)
        assert (inst.n, inst.p) == (4, 2)

    def test_assumption1_forces_matching(self, capsys):
        assert main(["gen", "--random", "6", "2", "0.2", "3", "--assumption1"]) == 0
        inst = parse_instance(capsys.readouterr().out)
        assert has_perfect_matching(inst.a)

    def test_bad_density(self, capsys):
        assert main(["gen", "--random", "4", "2", "1.5", "0"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_non_numeric_random_arguments(self, capsys):
        assert main(["gen", "--random", "4", "2", "dense", "0"]) == 2
        assert "N P DENSITY SEED" in capsys.readouterr().err

    def test_assumption1_rejected_for_setcover(self, tmp_path, capsys):
        path = tmp_path / "family.setcover"
        path.write_text("1 1\n0\n")
        assert main(["gen", "--from-setcover", str(path), "--assumption1"]) == 2
        assert "--assumption1" in capsys.readouterr().err


class TestProbe:
    def test_agreement_positive(self, demo_file, capsys):
        assert main(["probe", demo_file]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "structural: CONTROLLABLE"
        assert lines[1] == "numeric: FULL RANK (3 trials, tol 1e-08)"
        assert lines[2] == "AGREE (both true)"

    def test_agreement_negative(self, stranded_file, capsys):
        assert main(["probe", stranded_file]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "structural: NOT CONTROLLABLE"
        assert lines[1] == "numeric: RANK DEFICIENT (3 trials, tol 1e-08)"
        assert lines[2] == "AGREE (both false)"

    def test_options_flow_through(self, demo_file, capsys):
        assert main(["probe", demo_file, "--trials", "1", "--seed", "5", "--tol", "1e-6"]) == 0
        assert "(1 trials, tol 1e-06)" in capsys.readouterr().out


class TestBench:
    def test_smoke(self, capsys):
        assert main(["bench", "--target", "condense", "--sizes", "30,60"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("n=30 time=")
        assert lines[1].startswith("n=60 time=")
        assert lines[2].startswith("log-log slope:")

    def test_needs_two_sizes(self, capsys):
        assert main(["bench", "--sizes", "30"]) == 2
        assert "two sizes" in capsys.readouterr().err

    def test_rejects_garbage_sizes(self, capsys):
        assert main(["bench", "--sizes", "a,b"]) == 2
        assert "comma-separated" in capsys.readouterr().err


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2

    def test_gen_requires_a_source(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gen"])
        assert exc.value.code == 2
