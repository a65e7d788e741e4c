"""
Reproduction of the published incidence table, point counts, congruences
and exact fit, compared item by item against the embedded expectations.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

from ..alphabet import (
    build_fixture,
    model_by_name,
    verify_involutions,
    verify_sigma,
    verify_symmetries,
)
from ..count import count_range, restrict_primes
from ..models import Convention, IdentityReport, PointCountRecord, VerdictKind
from ..modular import BUILTIN_FORMS, congruence_match, esnault_guess, exact_cy3_fit
from ..sing import (
    curve_by_label,
    curve_catalog,
    incidence_table,
    ledger_chart_check,
    mult_along_curve,
    node_check,
    split_identities,
)
from ..utils import UniratError, get_logger
from .engine import WorkflowEngine, WorkflowStatus, WorkflowStep
from .expectations import ExpectationTable, load_expectations

logger = get_logger(__name__)

SECTIONS = ("alphabet", "sing", "count", "modular", "k3")

# The expected counts cover the odd primes below this bound.
COUNT_BOUND = 100

PASS = VerdictKind.CONGRUENCE_PASS.value
INCONCLUSIVE = VerdictKind.INCONCLUSIVE.value


class WorkflowError(UniratError):
    pass


@dataclass
class SectionResult:
    """Matched items of one reproduction section and a diff line per mismatch."""

    name: str
    matched: int = 0
    total: int = 0
    mismatches: List[str] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.matched == self.total

    def expect(self, item: str, actual: Any, expected: Any) -> bool:
        self.total += 1
        if actual == expected:
            self.matched += 1
            return True
        self.mismatches.append(f"{item}: expected {expected}, got {actual}")
        return False

    def check(self, item: str, holds: bool, detail: str = "") -> bool:
        self.total += 1
        if holds:
            self.matched += 1
            return True
        self.mismatches.append(f"{item}: failed" + (f" ({detail})" if detail else ""))
        return False

    def add_report(self, report: IdentityReport) -> None:
        for check in report.checks:
            self.check(f"{report.title}: {check.name}", check.holds, check.detail)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "ok": self.ok,
            "matched": self.matched,
            "total": self.total,
            "mismatches": list(self.mismatches),
            "data": self.data,
        }


@dataclass
class PaperReport:
    sections: List[SectionResult]

    @property
    def ok(self) -> bool:
        return all(section.ok for section in self.sections)

    def section(self, name: str) -> SectionResult:
        for section in self.sections:
            if section.name == name:
                return section
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {"ok": self.ok, "sections": [section.to_dict() for section in self.sections]}


class PaperWorkflow:
    """
    Runs the selected reproduction sections through the workflow engine.

    Point counts are computed once per model and shared between sections;
    ``counts`` may pre-seed them.
    """

    def __init__(
        self,
        expectations: Optional[ExpectationTable] = None,
        jobs: Optional[int] = None,
        seed: Optional[int] = None,
        counts: Optional[Mapping[str, Sequence[PointCountRecord]]] = None,
    ):
        self.expectations = expectations if expectations is not None else load_expectations()
        self.jobs = jobs
        self.seed = seed
        self.engine = WorkflowEngine()
        self._counts: Dict[str, List[PointCountRecord]] = {
            name: list(records) for name, records in (counts or {}).items()
        }

    def records(self, name: str) -> List[PointCountRecord]:
        if name not in self._counts:
            self._counts[name] = count_range(model_by_name(name), COUNT_BOUND, jobs=self.jobs)
        return self._counts[name]

    def run(self, sections: Optional[Iterable[str]] = None) -> PaperReport:
        selected = set(sections) if sections else set(SECTIONS)
        unknown = selected - set(SECTIONS)
        if unknown:
            expected = ", ".join(SECTIONS)
            raise WorkflowError(f"unknown sections {sorted(unknown)}; expected {expected}")
        names = [name for name in SECTIONS if name in selected]

        steps = [WorkflowStep(name, getattr(self, f"_{name}_section")) for name in names]
        execution = self.engine.execute_workflow("verify_paper", "Paper reproduction", steps)
        if execution.status is WorkflowStatus.FAILED:
            raise execution.failure
        report = PaperReport([execution.results[name] for name in names])
        logger.info(f"Reproduction {'matched' if report.ok else 'did not match'} expectations")
        return report

    def _alphabet_section(self) -> SectionResult:
        fx = build_fixture()
        result = SectionResult("alphabet")
        reports = [verify_symmetries(fx), verify_involutions(fx), verify_sigma(fx)]
        for report in reports:
            result.add_report(report)
        result.data["reports"] = [report.to_dict() for report in reports]
        return result

    def _sing_section(self) -> SectionResult:
        result = SectionResult("sing")
        result.expect("curve count", len(curve_catalog()), self.expectations.curve_count)
        result.add_report(split_identities())
        result.add_report(node_check())

        rows = {row.point: row for row in incidence_table()}
        for expected in self.expectations.table1:
            actual = rows.get(expected.point)
            result.expect(
                f"incidence row {expected.label}",
                actual.to_dict() if actual else None,
                expected.to_dict(),
            )

        surfaces = build_fixture().components
        entries = []
        for center, total in self.expectations.ledger_totals.items():
            orders = mult_along_curve(surfaces, curve_by_label(center), seed=self.seed)
            entry = orders.to_ledger_entry()
            result.expect(f"ledger total along {center}", entry.total, total)
            entries.append(entry)
        result.add_report(ledger_chart_check(entries))

        result.data["table1"] = [row.to_dict() for row in rows.values()]
        result.data["ledger"] = [entry.to_dict() for entry in entries]
        return result

    def _count_section(self) -> SectionResult:
        result = SectionResult("count")
        by_prime = {record.p: record for record in self.records("X")}
        for p, count in sorted(self.expectations.counts.items()):
            record = by_prime.get(p)
            result.expect(f"#X_{p}", record.count if record else None, count)
        for p, residue in sorted(self.expectations.residues.items()):
            record = by_prime.get(p)
            actual = record.residue(Convention.WEIGHT4) if record else None
            result.expect(f"1 - #X_{p} mod {p}", actual, residue)
        result.data["records"] = [record.to_dict() for record in self.records("X")]
        return result

    def _modular_section(self) -> SectionResult:
        result = SectionResult("modular")
        records = self.records("X")
        form = BUILTIN_FORMS[self.expectations.cy3_form]

        self._check_prefix(result, form.name)

        guess = esnault_guess(records)
        result.expect("unirationality guess", guess.kind.value, "not_unirational_guess")
        result.check("at least the threshold of primes in sigma0", guess.threshold_met)
        congruence = congruence_match(records, form, Convention.WEIGHT4)
        result.expect(f"congruence with {form.name}", congruence.kind.value, PASS)

        fit = exact_cy3_fit(records, form)
        result.expect("exact fit (c1, c2)", (fit.c1, fit.c2), tuple(self.expectations.cy3_fit))
        result.check(
            "exact fit holds at every good prime", fit.ok, f"breaks at p={fit.inconsistent_prime}"
        )
        with_three = exact_cy3_fit(records, form, bad_primes=frozenset())
        result.expect("exact fit including p=3 breaks at", with_three.inconsistent_prime, 3)

        result.data.update(
            guess=guess.to_dict(),
            congruence=congruence.to_dict(),
            fit=fit.to_dict(),
            fit_with_3=with_three.to_dict(),
        )
        return result

    def _check_prefix(self, result: SectionResult, form_name: str) -> None:
        prefix = self.expectations.form_prefixes.get(form_name)
        if not prefix:
            return
        series = BUILTIN_FORMS[form_name].validated_series(len(prefix))
        generated = series.coefficients[1 : len(prefix) + 1]
        item = f"q-expansion of {form_name} to q^{len(prefix)}"
        wrong = [k for k, (a, b) in enumerate(zip(generated, prefix), start=1) if a != b]
        if wrong:
            k = wrong[0]
            result.expect(f"{item}, b_{k}", generated[k - 1], prefix[k - 1])
        else:
            result.expect(item, generated, prefix)

    def _k3_section(self) -> SectionResult:
        result = SectionResult("k3")
        for name, form_name in sorted(self.expectations.k3_forms.items()):
            form = BUILTIN_FORMS[form_name]
            self._check_prefix(result, form_name)
            verdict = congruence_match(self.records(name), form, Convention.WEIGHT3)
            result.expect(f"{name} congruence with {form_name}", verdict.kind.value, PASS)
            result.data[name] = verdict.to_dict()

        s_subset = restrict_primes(self.records("S"), 8, (5, 7))
        result.expect("S guess on p = 5, 7 mod 8", esnault_guess(s_subset).kind.value, INCONCLUSIVE)
        fermat = restrict_primes(self.records("fermat"), 4, (3,))
        result.expect("fermat guess on p = 3 mod 4", esnault_guess(fermat).kind.value, INCONCLUSIVE)
        return result
