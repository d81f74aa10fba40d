from .certificates import (
    EquivalenceChecks,
    QPMReport,
    certificate_from_matching,
    classical_certificate,
    classical_pm_alpha_check,
    dump_certificate,
    load_certificate,
    parse_certificate,
    qpm_equiv_checks,
    verify_qpm_certificate,
)
from .family import ProjectorFamily, packing_value, verify_packing
from .search import SearchOutcome, rank_patterns, search_qpm, seesaw_search

__all__ = [
    "EquivalenceChecks",
    "ProjectorFamily",
    "QPMReport",
    "SearchOutcome",
    "certificate_from_matching",
    "classical_certificate",
    "classical_pm_alpha_check",
    "dump_certificate",
    "load_certificate",
    "packing_value",
    "parse_certificate",
    "qpm_equiv_checks",
    "rank_patterns",
    "search_qpm",
    "seesaw_search",
    "verify_packing",
    "verify_qpm_certificate",
]
