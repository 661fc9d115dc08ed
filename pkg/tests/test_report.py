from gcob.report import BOTH, BRUTE, build_report, convention_audit, report_for


def test_convention_audit_default():
    audit = convention_audit()
    assert audit["passed"] and audit["default"] == "kgKG/swapped"
    assert audit["passing"] == ["kgKG/swapped"]


def test_family_report_both_agree():
    rep = report_for("cyclic:12")
    assert rep.r1 == 6 and rep.methods["r1"] == BOTH
    assert rep.methods["subgroups"] == BOTH and rep.ok


def test_catalog_report_matches(catalog):
    rep = report_for("Sigma_4", catalog)
    assert rep.r1 == 21 and rep.methods["r1"] == BRUTE
    assert rep.matches == {"subgroups": True, "abelian_subgroups": True, "r1": True}


def test_mismatch_flagged(catalog):
    e = catalog.entry("D_8")
    rep = build_report(catalog.by_name("D_8"), e, None)
    assert rep.ok
    rep.expected["r1"] = 8
    rep.matches["r1"] = False
    assert not rep.ok and rep.to_dict()["mismatch"]


def test_diagnostics(catalog):
    rep = report_for("Dic_5", catalog, diagnostics=True)
    assert "matches the annotation" in rep.diagnostics["r1_annotation"]
    assert "unresolved" in report_for("D_8", catalog, diagnostics=True).diagnostics["subgroups_annotation"]
    assert rep.ok


def test_annotation_never_in_matches(catalog):
    rep = report_for("Z_3^2_sd_Z_2", catalog, diagnostics=True, genus_max=2)
    assert rep.r[2] == 20 and rep.ok
    assert "no number" in rep.diagnostics["r1_annotation"]


def test_budget_error_recorded():
    rep = report_for("dihedral:4", genus_max=2, budget=100)
    assert rep.r1 == 9 and 2 not in rep.r
    assert rep.errors and "exceeds budget" in rep.errors[0]


def test_to_dict_fields():
    d = report_for("dicyclic:5", genus_max=2).to_dict(timing=False)
    assert d["r1"] == 9 and d["higher_genus"] == {"2": 2}
    assert d["methods"]["r2"] == "brute-force"
    assert "timings" not in d
