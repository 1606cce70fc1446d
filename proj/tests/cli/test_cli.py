# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib
import subprocess

import pytest

BIN = os.environ.get("CFLAT_BIN", "cflat")
FIXTURES = pathlib.Path(
    os.environ.get("CFLAT_FIXTURES", pathlib.Path(__file__).parents[1] / "fixtures")
)


def run(*args, cwd=None):
    proc = subprocess.run(
        [BIN, *map(str, args)], capture_output=True, text=True, cwd=cwd, check=False
    )
    return proc.returncode, proc.stdout, proc.stderr


def fx(name):
    return FIXTURES / name


def ok(*args, cwd=None):
    code, out, err = run(*args, cwd=cwd)
    assert code == 0, err
    return out


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return path


# ---- file formats ----


MATROIDS = [
    "u01.json", "u11.json", "u12.json", "u12_cd.json", "u24.json", "mk4.json", "w3.json",
    "fano.json", "p2.json", "p3.json", "nested_ififif.json", "gimenez2_id.json",
    "gimenez2_swap.json", "random0.json", "width2_seed3.json",
]


@pytest.mark.parametrize("name", MATROIDS)
def test_matroid_fixtures_round_trip(name):
    # cyclic-flats recomputes from the rank oracle and emits canonically.
    assert ok("cyclic-flats", fx(name)) == fx(name).read_text()


@pytest.mark.parametrize("name", MATROIDS)
def test_matroid_fixtures_are_valid(name):
    out = ok("validate", fx(name))
    assert out.startswith("valid, rank ")


def test_validate_u24():
    code, out, _ = run("validate", fx("u24.json"))
    assert (code, out) == (0, "valid, rank 2\n")


def test_validate_violation_exits_1():
    code, out, _ = run("validate", fx("bad_z3.json"))
    assert code == 1
    assert out.startswith("invalid: Z2")


def test_validate_all_lists_every_violation():
    code, out, _ = run("validate", "--all", fx("bad_z3.json"))
    assert code == 1
    lines = out.splitlines()
    assert lines and all(line.startswith("invalid: ") for line in lines)


@pytest.mark.parametrize(
    "name, code_name",
    [
        ("duplicate_set.json", "DuplicateSet"),
        ("unknown_label.json", "UnknownLabel"),
        ("malformed.json", "ParseError"),
    ],
)
def test_input_errors_exit_2(name, code_name):
    code, out, err = run("validate", fx(name))
    assert code == 2
    assert out == ""
    assert err.startswith(f"error: {code_name}: ")


def test_parse_error_reports_position():
    _, _, err = run("validate", fx("malformed.json"))
    assert "line 5, column 3" in err


def test_unknown_field_rejected(tmp_path):
    doc = json.loads(fx("u12.json").read_text())
    doc["extra"] = 1
    path = write(tmp_path, "extra.json", json.dumps(doc))
    code, _, err = run("validate", path)
    assert code == 2
    assert "ParseError" in err


def test_missing_file_exits_2():
    code, _, _ = run("validate", fx("does_not_exist.json"))
    assert code == 2


def test_reordered_input_is_emitted_canonically(tmp_path):
    doc = json.loads(fx("mk4.json").read_text())
    doc["cyclic_flats"].reverse()
    doc["ground"].reverse()
    path = write(tmp_path, "reordered.json", json.dumps(doc))
    code, out, _ = run("cyclic-flats", path)
    assert code == 0
    recomputed = {(frozenset(f["set"]), f["rank"]) for f in json.loads(out)["cyclic_flats"]}
    original = {(frozenset(f["set"]), f["rank"]) for f in doc["cyclic_flats"]}
    assert recomputed == original
    # The emitted document is itself canonical.
    canonical = write(tmp_path, "canonical.json", out)
    assert ok("cyclic-flats", canonical) == out


# ---- queries ----


def test_rank_and_independence():
    assert ok("rank", fx("u24.json"), "--set", "a,b,c") == "2\n"
    assert ok("rank", fx("u24.json"), "--set", "") == "0\n"
    assert ok("independent", fx("u24.json"), "--set", "a,b") == "independent\n"
    code, out, _ = run("independent", fx("u24.json"), "--set", "a,b,c")
    assert (code, out) == (1, "dependent\n")


def test_rank_unknown_label_exits_2():
    code, _, err = run("rank", fx("u24.json"), "--set", "a,q")
    assert code == 2
    assert "UnknownLabel" in err


def test_circuits_u24():
    lines = ok("circuits", fx("u24.json")).splitlines()
    assert [json.loads(line) for line in lines] == [
        ["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]
    ]


def test_circuits_fano_are_lines_and_their_complements():
    circuits = [json.loads(line) for line in ok("circuits", fx("fano.json")).splitlines()]
    sizes = sorted(len(c) for c in circuits)
    assert sizes.count(3) == 7
    assert sizes.count(4) == 7


def test_stats_mk4():
    assert ok("stats", fx("mk4.json")) == (
        "elements 6\nrank 3\nnullity 3\nloops []\nisthmuses []\ncyclic_flats 6\ncyclic_width 4\n"
    )


def test_stats_loops_and_isthmuses():
    out = ok("stats", fx("u01.json"))
    assert 'loops ["b"]' in out
    out = ok("stats", fx("u11.json"))
    assert "isthmuses [" in out and "isthmuses []" not in out


def test_width():
    assert ok("width", fx("mk4.json")) == "4\n"
    assert ok("width", fx("u24.json")) == "1\n"
    assert ok("width", fx("p2.json")) == "2\n"
    assert ok("width", fx("width2_seed3.json")) == "2\n"


def test_nested():
    assert ok("nested", fx("nested_ififif.json")) == "nested ififif\n"
    code, out, _ = run("nested", fx("mk4.json"))
    assert (code, out) == (1, "not nested: cyclic width 4\n")


def test_nested_round_trip_through_gen():
    out = ok("nested", fx("u24.json"))
    seq = out.split()[1]
    regenerated = ok("gen", "nested", "--seq", seq)
    proc = subprocess.run(
        [BIN, "iso", str(fx("u24.json")), "/dev/stdin"],
        input=regenerated, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("isomorphic\n")


# ---- operations ----


def test_dual_is_an_involution(tmp_path):
    dual = write(tmp_path, "dual.json", ok("dual", fx("w3.json")))
    assert ok("dual", dual) == fx("w3.json").read_text()
    assert ok("dual", fx("u24.json")) == fx("u24.json").read_text()


def test_minor_u24():
    out = ok("minor", fx("u24.json"), "--contract", "a", "--delete", "b")
    doc = json.loads(out)
    assert doc["ground"] == ["c", "d"]
    assert doc["cyclic_flats"] == [{"set": [], "rank": 0}, {"set": ["c", "d"], "rank": 1}]


def test_minor_overlap_is_an_input_error():
    code, _, err = run("minor", fx("u24.json"), "--contract", "a", "--delete", "a")
    assert code == 2
    assert err.startswith("error: ")


def test_relax_w3_gives_a_width_3_matroid(tmp_path):
    # Relaxing one rim line of the whirl: the three remaining lines stay.
    doc = json.loads(fx("w3.json").read_text())
    line = next(f["set"] for f in doc["cyclic_flats"] if len(f["set"]) == 3)
    relaxed = write(tmp_path, "relaxed.json", ok("relax", fx("w3.json"), "--flat", ",".join(line)))
    assert ok("validate", relaxed) == "valid, rank 3\n"
    assert len(json.loads(relaxed.read_text())["cyclic_flats"]) == len(doc["cyclic_flats"]) - 1


def test_relax_non_isolated_flat_fails():
    code, _, err = run("relax", fx("u24.json"), "--flat", "a,b,c,d")
    assert code == 2
    assert err.startswith("error: ")


def test_directsum_requires_disjoint_grounds(tmp_path):
    code, _, err = run("directsum", fx("u12.json"), fx("u24.json"))
    assert code == 2
    assert "error:" in err
    out = ok("directsum", fx("u12.json"), fx("u12_cd.json"))
    assert json.loads(out)["ground"] == ["a", "b", "c", "d"]
    path = write(tmp_path, "sum.json", out)
    assert ok("width", path) == "2\n"


def test_truncate_and_lift():
    doc = json.loads(ok("truncate", fx("u24.json")))
    assert doc["cyclic_flats"][-1] == {"set": ["a", "b", "c", "d"], "rank": 1}
    doc = json.loads(ok("lift", fx("u24.json")))
    assert doc["cyclic_flats"][-1] == {"set": ["a", "b", "c", "d"], "rank": 3}


# ---- Tutte polynomials ----


def test_tutte_u24():
    doc = json.loads(ok("tutte", fx("u24.json")))
    assert doc["terms"] == [
        {"x": 0, "y": 1, "c": 2},
        {"x": 0, "y": 2, "c": 1},
        {"x": 1, "y": 0, "c": 2},
        {"x": 2, "y": 0, "c": 1},
    ]


def test_tutte_free_product_of_u11_and_u01():
    doc = json.loads(ok("tutte", fx("u11.json"), fx("u01.json"), "--method", "convolution", "--whitney"))
    assert doc["terms"] == [
        {"x": 0, "y": 0, "c": 2},
        {"x": 0, "y": 1, "c": 1},
        {"x": 1, "y": 0, "c": 1},
    ]


@pytest.mark.parametrize(
    "m, n",
    [
        ("u12.json", "u12_cd.json"),
        ("u11.json", "u01.json"),
        ("mk4.json", "u01.json"),
        ("p2.json", "u11.json"),
        ("w3.json", "u01.json"),
    ],
)
def test_tutte_convolution_matches_brute_on_product(tmp_path, m, n):
    # Relabel N so the grounds are disjoint.
    doc = json.loads(fx(n).read_text())
    rename = {label: f"n_{label}" for label in doc["ground"]}
    doc["ground"] = [rename[x] for x in doc["ground"]]
    for flat in doc["cyclic_flats"]:
        flat["set"] = [rename[x] for x in flat["set"]]
    n_path = write(tmp_path, "n.json", json.dumps(doc))
    product = write(tmp_path, "product.json", ok("freeprod", fx(m), n_path))
    assert ok("validate", product).startswith("valid")
    for extra in ([], ["--whitney"]):
        conv = ok("tutte", fx(m), n_path, "--method", "convolution", *extra)
        brute = ok("tutte", product, "--method", "brute", *extra)
        assert conv == brute


def test_tutte_method_arity_errors():
    assert run("tutte", fx("u24.json"), "--method", "convolution")[0] == 2
    assert run("tutte", fx("u24.json"), fx("u11.json"), "--method", "brute")[0] == 2
    assert run("tutte", fx("u24.json"), "--method", "other")[0] == 2


def test_tutte_is_invariant_under_duality(tmp_path):
    dual = write(tmp_path, "dual.json", ok("dual", fx("mk4.json")))
    t = json.loads(ok("tutte", fx("mk4.json")))["terms"]
    td = json.loads(ok("tutte", dual))["terms"]
    swapped = sorted(({"x": t["y"], "y": t["x"], "c": t["c"]} for t in t),
                     key=lambda t: (t["x"], t["y"]))
    assert td == swapped


# ---- minors and isomorphism ----


def test_minor_test():
    code, out, _ = run("minor-test", fx("mk4.json"), fx("u24.json"))
    assert (code, out) == (1, "no minor\n")
    code, out, _ = run("minor-test", fx("w3.json"), fx("u24.json"))
    assert code == 0
    assert out.startswith("minor: contract [")


def test_minor_test_certificate_is_checkable(tmp_path):
    out = ok("minor-test", fx("nested_ififif.json"), fx("u24.json"))
    contract = json.loads(out.split("contract ", 1)[1].split(" delete ")[0])
    delete = json.loads(out.split(" delete ", 1)[1])
    minor = write(tmp_path, "minor.json", ok(
        "minor", fx("nested_ififif.json"), "--contract", ",".join(contract),
        "--delete", ",".join(delete)))
    assert ok("iso", minor, fx("u24.json")).startswith("isomorphic\n")


def test_iso():
    out = ok("iso", fx("u12.json"), fx("u12_cd.json"))
    assert out == "isomorphic\na -> c\nb -> d\n"
    code, out, _ = run("iso", fx("mk4.json"), fx("w3.json"))
    assert (code, out) == (1, "not isomorphic\n")


def test_iso_gimenez_members_differ():
    code, out, _ = run("iso", fx("gimenez2_id.json"), fx("gimenez2_swap.json"), "--max-ground", "16")
    assert (code, out) == (1, "not isomorphic\n")


def test_iso_over_the_cap_is_an_input_error(tmp_path):
    code, _, err = run("iso", fx("gimenez2_id.json"), fx("gimenez2_swap.json"), "--max-ground", "4")
    assert code == 2
    assert "TooLarge" in err


# ---- lattices ----


def test_realize_b2():
    path = fx("b2.json")
    out = ok("realize", path)
    doc = json.loads(out)
    assert len(doc["cyclic_flats"]) == 4
    assert doc["ground"] == ["0", "a", "b", "s:0", "s:a", "s:b", "s:1"]


@pytest.mark.parametrize("lattice, members", [("b2.json", 4), ("m3.json", 5)])
@pytest.mark.parametrize("flags", [[], ["--sublattice"]])
def test_realize_is_valid(tmp_path, lattice, members, flags):
    m = write(tmp_path, "m.json", ok("realize", fx(lattice), *flags))
    assert ok("validate", m).startswith("valid")
    assert len(json.loads(m.read_text())["cyclic_flats"]) == members
    assert ok("cyclic-flats", m) == m.read_text()


def test_realize_m3_width_3(tmp_path):
    m = write(tmp_path, "m.json", ok("realize", fx("m3.json")))
    assert ok("width", m) == "3\n"


def test_realize_rejects_non_lattice():
    code, _, err = run("realize", fx("not_lattice.json"))
    assert code == 2
    assert err.startswith("error: NotALattice: ")


# ---- generators ----


def test_gen_uniform_matches_fixture():
    assert ok("gen", "uniform", "--r", 2, "--n", 4) == fx("u24.json").read_text()


@pytest.mark.parametrize("r, n", [(-1, 3), (4, 3)])
def test_gen_uniform_bad_parameters(r, n):
    code, _, err = run("gen", "uniform", "--r", r, "--n", n)
    assert code == 2
    assert "InvalidParameters" in err


def test_gen_pn_and_catalog_match_fixtures():
    assert ok("gen", "pn", "--n", 2) == fx("p2.json").read_text()
    assert ok("gen", "pn", "--n", 3) == fx("p3.json").read_text()
    for name in ("mk4", "w3", "fano"):
        assert ok("gen", "catalog", "--name", name) == fx(f"{name}.json").read_text()


def test_gen_catalog_unknown_name():
    assert run("gen", "catalog", "--name", "vamos")[0] == 2


def test_gen_gimenez_and_nested_match_fixtures():
    assert ok("gen", "gimenez", "--n", 2) == fx("gimenez2_id.json").read_text()
    assert ok("gen", "gimenez", "--n", 2, "--sigma", "2,1") == fx("gimenez2_swap.json").read_text()
    assert ok("gen", "nested", "--seq", "ififif") == fx("nested_ififif.json").read_text()
    assert run("gen", "nested", "--seq", "ifx")[0] == 2
    assert run("gen", "gimenez", "--n", 2, "--sigma", "1,1")[0] == 2


def test_gen_random_is_seeded():
    assert ok("gen", "random") == fx("random0.json").read_text()
    assert ok("gen", "random", "--seed", 0) == fx("random0.json").read_text()
    assert ok("gen", "random", "--seed", 3, "--width2") == fx("width2_seed3.json").read_text()
    outs = {ok("gen", "random", "--seed", s) for s in range(8)}
    assert len(outs) > 1


def test_gen_random_respects_ground_bound(tmp_path):
    for seed in range(10):
        doc = json.loads(ok("gen", "random", "--seed", seed, "--n", 5))
        assert len(doc["ground"]) <= 5


# ---- transversal classes ----


def test_ingleton_mk4_fails_on_triangles():
    code, out, _ = run("ingleton", fx("mk4.json"))
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == 'fail: ["12", "13", "23"] ["12", "14", "24"] ["13", "14", "34"] ["23", "24", "34"]'
    assert lines[1] == "lhs 0 rhs -1"


def test_ingleton_passes_on_nested_and_width2():
    assert ok("ingleton", fx("u24.json")) == "pass: 0 antichains checked\n"
    assert ok("ingleton", fx("width2_seed3.json")).startswith("pass: ")


def test_ingleton_cap():
    code, _, err = run("ingleton", fx("mk4.json"), "--cap", 3)
    assert code == 2
    assert "TooManyCyclicFlats" in err


def test_bitransversal():
    out = ok("bitransversal", fx("width2_seed3.json"))
    assert out == "transversal pass\ncotransversal pass\n"
    code, out, _ = run("bitransversal", fx("mk4.json"))
    assert code == 1
    assert "transversal fail" in out


def test_chain_minor(tmp_path):
    out = ok("chain-minor", fx("nested_ififif.json"), "--k", 1)
    lines = out.splitlines()
    assert lines[0].startswith("proof: contract ")
    assert lines[1].startswith("uniform: contract ")
    minor = write(tmp_path, "minor.json", "\n".join(lines[2:]) + "\n")
    u13 = write(tmp_path, "u13.json", ok("gen", "uniform", "--r", 1, "--n", 3))
    assert ok("iso", minor, u13).startswith("isomorphic\n")


def test_chain_minor_too_short():
    code, _, err = run("chain-minor", fx("nested_ififif.json"), "--k", 3)
    assert code == 2
    assert "ChainTooShort" in err
    code, _, err = run("chain-minor", fx("mk4.json"), "--k", 1)
    assert code == 2
    assert "NotNested" in err


# ---- determinism ----


@pytest.mark.parametrize(
    "args",
    [
        ["stats", "mk4.json"],
        ["circuits", "fano.json"],
        ["dual", "gimenez2_swap.json"],
        ["freeprod", "mk4.json", "u12_cd.json"],
        ["tutte", "fano.json"],
        ["ingleton", "width2_seed3.json"],
        ["realize", "m3.json", "--sublattice"],
    ],
)
def test_output_is_byte_identical_across_runs(args):
    args = [fx(a) if a.endswith(".json") else a for a in args]
    first = run(*args)
    assert first == run(*args)
    assert first[0] in (0, 1)


def test_no_subcommand_is_an_input_error():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
