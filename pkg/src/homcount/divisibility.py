"""When does the ring-hom count divide the surjective-hom count?

For cyclic Z_m -> Z_n with n | m the two counts are 2**omega(n) and phi(n).
Divisibility fails exactly for the exceptional moduli n = 2*alpha where
every prime factor of alpha is 3 mod 4 (n = 2 included).

For products S = Z_{n_1} x ... x Z_{n_k} the comparison is between
2**(sum omega(n_i)) and the number of maximal-order elements of S.  The
failure condition attached to that claim is treated as a flag to be
checked against the data, not as a characterization.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .arith import _check_positive, factorize, omega, totient
from .cyclic import (
    count_ring_homs_closed_form,
    count_surjective_group_homs,
    enumerate_ring_homs,
    surjective_homs_oracle,
)
from .products import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    ProductGroup,
    _as_group,
    count_maximal_order_elements,
    count_product_idempotents,
    group_exponent,
    idempotents_by_scan,
    order_distribution_by_scan,
)

CYCLIC_FIELDS = ("n", "omega", "phi", "ring_homs", "surj_homs", "divides", "exceptional", "agrees")
PRODUCT_FIELDS = ("moduli", "ring_homs", "max_order", "divides", "flagged", "classification", "verified")

HELD = "held"
FLAGGED_AND_FAILED = "flagged_and_failed"
FLAGGED_AND_HELD = "flagged_and_held"
UNFLAGGED_AND_FAILED = "unflagged_and_failed"
CLASSIFICATIONS = (HELD, FLAGGED_AND_FAILED, FLAGGED_AND_HELD, UNFLAGGED_AND_FAILED)

MAX_PRODUCT_K = 3
MAX_PRODUCT_MODULUS = 12
# closed forms are cross-checked against enumeration up to this n in sweeps
CYCLIC_ORACLE_LIMIT = 2000


class VerificationError(AssertionError):
    """A closed form disagreed with its brute-force oracle."""


def _odd_part_all_3_mod_4(n: int) -> bool:
    return all(p % 4 == 3 for p in factorize(n).primes if p != 2)


def is_exceptional(n: int) -> bool:
    """True iff n = 2*alpha, alpha odd, every prime of alpha is 3 mod 4."""
    _check_positive(n)
    return n % 4 == 2 and _odd_part_all_3_mod_4(n)


@dataclass(frozen=True)
class ClassificationRecord:
    n: int
    omega: int
    phi: int
    ring_hom_count: int
    surj_hom_count: int
    divides: bool
    exceptional_flag: bool
    agrees: bool

    def as_row(self) -> dict:
        return {
            "n": self.n,
            "omega": self.omega,
            "phi": self.phi,
            "ring_homs": self.ring_hom_count,
            "surj_homs": self.surj_hom_count,
            "divides": self.divides,
            "exceptional": self.exceptional_flag,
            "agrees": self.agrees,
        }


def check_main_theorem(n: int) -> ClassificationRecord:
    """Classify Z_n as a target (source Z_n, so n | m holds)."""
    _check_positive(n)
    w = omega(n)
    phi = totient(n)
    ring = count_ring_homs_closed_form(n, n)
    surj = count_surjective_group_homs(n, n)
    divides = surj % ring == 0
    exceptional = is_exceptional(n)
    return ClassificationRecord(n, w, phi, ring, surj, divides, exceptional, divides == (not exceptional))


def _cyclic_oracle_agrees(rec: ClassificationRecord) -> bool:
    n = rec.n
    return (
        len(enumerate_ring_homs(n, n)) == rec.ring_hom_count
        and len(surjective_homs_oracle(n, n)) == rec.surj_hom_count
    )


@dataclass(frozen=True)
class ProductDivisibilityRecord:
    moduli: ProductGroup
    ring_hom_count: int
    max_order_count: int
    divides: bool
    paper_flag: bool
    classification: str
    verified: bool

    def as_row(self) -> dict:
        return {
            "moduli": "x".join(map(str, self.moduli.moduli)),
            "ring_homs": self.ring_hom_count,
            "max_order": self.max_order_count,
            "divides": self.divides,
            "flagged": self.paper_flag,
            "classification": self.classification,
            "verified": self.verified,
        }


def failure_flag(S) -> bool:
    """Some n_i == 2 and another n_j odd with every prime of n_j 3 mod 4."""
    moduli = _as_group(S).moduli
    for i, ni in enumerate(moduli):
        if ni != 2:
            continue
        for j, nj in enumerate(moduli):
            if j != i and nj % 2 == 1 and _odd_part_all_3_mod_4(nj):
                return True
    return False


def classify(divides: bool, flagged: bool) -> str:
    if flagged:
        return FLAGGED_AND_HELD if divides else FLAGGED_AND_FAILED
    return HELD if divides else UNFLAGGED_AND_FAILED


def check_product_theorem(S, budget: int = DEFAULT_BUDGET) -> ProductDivisibilityRecord:
    """Compare 2**(sum omega(n_i)) with the maximal-order element count of S.

    Both counts are re-derived by scanning S when |S| fits the budget; a
    mismatch raises VerificationError.  Over budget, the record carries
    ``verified=False``.
    """
    S = _as_group(S)
    ring = count_product_idempotents(S)
    max_order = count_maximal_order_elements(S)
    verified = False
    if S.order <= budget:
        try:
            scanned = order_distribution_by_scan(S, budget).get(group_exponent(S), 0)
            idem = len(idempotents_by_scan(S, budget))
        except BudgetExceeded:
            pass
        else:
            if scanned != max_order or idem != ring:
                raise VerificationError(
                    f"{S}: formula gives ({ring}, {max_order}), scan gives ({idem}, {scanned})"
                )
            verified = True
    divides = max_order % ring == 0
    flagged = failure_flag(S)
    return ProductDivisibilityRecord(S, ring, max_order, divides, flagged, classify(divides, flagged), verified)


@dataclass
class SweepReport:
    """Records of one sweep plus a summary.  ``fields`` fixes output order."""

    scope: str
    fields: tuple[str, ...]
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    disagreements: list = field(default_factory=list)

    def rows(self) -> list[dict]:
        return [r.as_row() for r in self.records]

    def to_jsonl(self) -> str:
        lines = [json.dumps(row, separators=(", ", ": ")) for row in self.rows()]
        return "".join(line + "\n" for line in lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.fields)
        for row in self.rows():
            writer.writerow(_csv_cell(row[f]) for f in self.fields)
        return buf.getvalue()


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def sweep_cyclic(max_n: int, oracle_limit: int = CYCLIC_ORACLE_LIMIT) -> SweepReport:
    """Classify every 2 <= n <= max_n.

    Raises VerificationError if any record disagrees with the exception set
    or, for n <= oracle_limit, with brute-force enumeration.
    """
    _check_positive(max_n, "max_n")
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    report = SweepReport("cyclic", CYCLIC_FIELDS)
    for n in range(2, max_n + 1):
        rec = check_main_theorem(n)
        report.records.append(rec)
        if not rec.agrees or (n <= oracle_limit and not _cyclic_oracle_agrees(rec)):
            report.disagreements.append(n)
    exceptional = sum(r.exceptional_flag for r in report.records)
    report.summary = {
        "records": len(report.records),
        "exceptional": exceptional,
        "regular": len(report.records) - exceptional,
        "oracle_checked": min(max_n, oracle_limit) - 1,
        "disagreements": len(report.disagreements),
    }
    if report.disagreements:
        raise VerificationError(f"disagreement at n = {report.disagreements[:10]}")
    return report


def product_family(max_k: int, max_modulus: int) -> list[ProductGroup]:
    """Nondecreasing modulus tuples over 2..max_modulus, by length then lexicographic."""
    return [
        ProductGroup(c)
        for k in range(1, max_k + 1)
        for c in combinations_with_replacement(range(2, max_modulus + 1), k)
    ]


def sweep_products(max_k: int, max_modulus: int, budget: int = DEFAULT_BUDGET) -> SweepReport:
    _check_positive(max_k, "max_k")
    _check_positive(max_modulus, "max_modulus")
    if max_k > MAX_PRODUCT_K or max_modulus > MAX_PRODUCT_MODULUS:
        raise ValueError(
            f"product sweep capped at k <= {MAX_PRODUCT_K}, moduli <= {MAX_PRODUCT_MODULUS}"
        )
    report = SweepReport("products", PRODUCT_FIELDS)
    report.records = [check_product_theorem(S, budget) for S in product_family(max_k, max_modulus)]
    summary = {tag: 0 for tag in CLASSIFICATIONS}
    for r in report.records:
        summary[r.classification] += 1
    summary["records"] = len(report.records)
    summary["unverified"] = sum(not r.verified for r in report.records)
    report.summary = summary
    return report
