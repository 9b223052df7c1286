"""Catalog contents, the exact runner and the report schema."""
from __future__ import annotations

import json

import pytest

from hermseries import catalog
from hermseries.errors import ContractViolation, RegistryConfigError, UnknownIdentityError
from hermseries.mpoly import X
from hermseries.rational import Q
from hermseries.registry import IdentityRecord, Registry, validate_report_dict
from hermseries.sequences import fubini, harmonic
from hermseries.series import TSeries
from hermseries.transforms import hermite_transformed_series, hermite_weighted_series

REQUIRED = {
    "series": """EQ1 EQ12 EQ19 EQ20 EQ22 EQ31 EQ34 EQ35 EQ39 EQ40-MEHLER EQ41 EQ45 EQ46 EQ50
                 EQ54 EQ58 EQ62 EQ69 EQ73 EQ74 EQ78 EQ85 EQ86 EQ88 EQ89+ EQ90""",
    "gf": """EQ14 EQ15 EQ18 EQ24 EQ25 EQ28 EQ29-LANDEN EQ30 EQ33 EQ43 EQ44 EQ63 EQ64 EQ65
             EQ70 EQ71 EQ75 EQ76 EQ79 EQ80 EQ81""",
    "finite-sum": """EQ13 EQ17 EQ21 EQ23 EQ27 EQ36 EQ37 EQ42 EQ47 EQ49 EQ52 EQ55 EQ56 EQ57
                     EQ59 EQ60 EQ61 EQ66 EQ67 EQ68 EQ72 EQ77 EQ82 EQ83 EQ84 EQ93 EQ99""",
    "operator": "EQ-dd EQ95 EQ96 EQ102 EQ105",
}

SYMMETRIC_PAIRS = [("EQ19", "EQ20"), ("EQ34", "EQ35"), ("EQ69", "EQ74"), ("EQ85", "EQ86")]


def test_catalog_size_and_contents(registry):
    assert len(registry) >= 55
    for kind, ids in REQUIRED.items():
        for ident in ids.split():
            assert registry.lookup(ident).kind == kind, ident


def test_every_citation_is_in_the_bibliography(registry):
    for rec in registry.records():
        assert rec.paper_eq in registry.bibliography


def test_symbols(registry):
    assert registry.lookup("EQ40-MEHLER").symbols == frozenset("xz")
    assert registry.lookup("EQ45").symbols == frozenset("xp")


def test_duplicate_and_uncited_records_rejected():
    rec = IdentityRecord("A", "(1)", "gf", lambda o: TSeries.zero(o), lambda o: TSeries.zero(o))
    reg = Registry([rec], bibliography={"(1)": "x"})
    with pytest.raises(RegistryConfigError):
        reg.add(rec)
    with pytest.raises(RegistryConfigError):
        reg.add(IdentityRecord("B", "(999)", "gf", rec.lhs, rec.rhs))
    with pytest.raises(RegistryConfigError):
        IdentityRecord("C", "(1)", "bogus", rec.lhs, rec.rhs)


def test_lookup_errors(registry):
    with pytest.raises(UnknownIdentityError):
        registry.lookup("EQ0")
    with pytest.raises(UnknownIdentityError):
        registry.resolve("EQ1,EQ0")
    with pytest.raises(ContractViolation):
        registry.verify("EQ1", registry.max_order + 1)


def test_verify_examples(registry):
    assert registry.verify("EQ1", 12).passed
    report = registry.verify("EQ73", 12)
    assert report.passed
    assert report.transform.lhs.coefficient(3) == (X ** 3 * 8 - X * 12).scale(Q(1, 3))


@pytest.mark.parametrize("order", [0, 4, 8, 12, 16])
def test_full_suite_passes(registry, order):
    suite = registry.verify_all(order)
    failures = [r.to_dict() for r in suite.reports if not r.passed]
    assert failures == []
    assert suite.passed + suite.failed == suite.total == len(registry)


def test_order_zero_compares_constant_terms(registry):
    for rep in registry.verify_all(0).reports:
        assert rep.transform.compared_order <= 0


def test_fault_injected_builder_reports_power_5():
    order = 12

    def lhs(o):
        return hermite_weighted_series(lambda k: harmonic(k) + (1 if k == 5 else 0), o)

    def rhs(o):
        return hermite_transformed_series(lambda n: Q((-1) ** (n - 1), n) if n else 0, o)

    reg = Registry([IdentityRecord("FAULT", "(20)", "series", lhs, rhs)])
    report = reg.verify("FAULT", order)
    assert not report.passed
    assert report.to_dict()["first_mismatch"]["power"] == 5


def test_symmetric_pairs_are_built_independently(registry):
    for a, b in SYMMETRIC_PAIRS:
        ra, rb = registry.lookup(a), registry.lookup(b)
        assert ra.lhs is not rb.lhs and ra.rhs is not rb.rhs
        fa, fb = ra.hermite_form, rb.hermite_form
        assert fa.a is not fb.c and fa.c is not fb.a
        assert registry.verify(a, 12).passed and registry.verify(b, 12).passed


@pytest.mark.parametrize("p", catalog.EQ46_P_VALUES)
def test_eq46_right_side_is_finite(registry, p):
    assert len(catalog.eq46_rhs_terms(p)) == p + 1
    c = registry.lookup("EQ46").hermite_form.c
    nonzero = [n for n in range(12) if c(n).coefficient(p=p)]
    assert nonzero == list(range(p + 1))


def test_eq41_reduces_to_mehler_at_y_zero():
    order = 10
    free = catalog.free_parameter_bilinear(order).subs("y", 0)
    assert free == catalog.bilinear_series(order)
    assert free.agrees_with(catalog.mehler_closed_form(order))


def test_report_schema_and_json(registry):
    suite = registry.verify_all(6, timing=False)
    data = json.loads(suite.to_json())
    assert data["summary"] == {"total": suite.total, "pass": suite.total, "fail": 0}
    for d in data["reports"]:
        validate_report_dict(d)
    failing = Registry([IdentityRecord("BAD", "(1)", "gf", lambda o: TSeries.one(o),
                                       lambda o: TSeries.zero(o))]).verify("BAD", 3).to_dict()
    validate_report_dict(failing)
    assert failing["first_mismatch"] == {"power": 0, "lhs": "1", "rhs": "0"}
    with pytest.raises(ValueError):
        validate_report_dict({**failing, "status": "pass"})


def test_text_and_json_agree(registry):
    suite = registry.verify_all(5, timing=False)
    text_ids = {line.split()[1] for line in suite.to_text().splitlines()[:-1] if line.startswith("PASS")}
    json_ids = {d["identity"] for d in suite.to_dict()["reports"] if d["status"] == "pass"}
    assert text_ids == json_ids


# Three identities need a correction before they hold; the catalog carries the
# corrected versions.  These tests pin down the uncorrected defects.


def test_uncorrected_h_over_n_plus_1_series_fails():
    order = 8
    lhs = hermite_weighted_series(lambda n: harmonic(n) / (n + 1), order)
    uncorrected = hermite_transformed_series(lambda n: Q((-1) ** n, n + 1), order)
    report = Registry([IdentityRecord("P", "(22)", "series", lambda o: lhs, lambda o: uncorrected)]).verify("P", order)
    assert report.transform.first_mismatch.power == 0


def test_uncorrected_geometric_series_is_off_by_one():
    order = 8
    lhs = hermite_weighted_series(lambda n: 2 * fubini(n), order)
    rhs = hermite_transformed_series(fubini, order)
    diff = lhs - rhs
    assert diff == TSeries.one(order)
