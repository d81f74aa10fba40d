from __future__ import annotations

import logging

from matchgames.cmd import EXIT_ABSENT, EXIT_OK, fail
from matchgames.errors import MatchGamesError
from matchgames.ncalg.sos import (
    k32_probability_lhs,
    k32_sos_lhs,
    k32_sos_terms,
    k32_two_pair_terms,
    kn2_value_table,
    sos_residual,
    synchronous_sos,
    verify_sos,
)
from matchgames.utils import short_rational

logger = logging.getLogger("matchgames.cmd.sos_command")


def command_sos_verify_k32(show_residual: bool = False) -> int:
    lhs = k32_sos_lhs()
    same_lhs = lhs == k32_probability_lhs()
    ok = verify_sos(lhs, k32_sos_terms())
    residual = sos_residual(lhs, k32_two_pair_terms())

    print(f"left side equals 18 * (5/6 - value): {'yes' if same_lhs else 'no'}")
    print(f"symmetric certificate: {'verified' if ok else 'FAILED'}")
    print(f"two-pair certificate: {'verified' if residual.is_zero() else 'fails'} "
          f"({len(residual.terms)} residual terms)")
    if show_residual and not residual.is_zero():
        print(residual.to_text(), end="")
    values = kn2_value_table(3)
    print(f"quantum value bound: {short_rational(values.quantum)}")
    return EXIT_OK if ok and same_lhs else EXIT_ABSENT


def command_sos_verify_sync(n: int) -> int:
    try:
        lhs, terms = synchronous_sos(n)
    except MatchGamesError as e:
        return fail(e)
    ok = verify_sos(lhs, terms)
    bound = kn2_value_table(n).quantum_synchronous
    print(f"(1/2 + 1/{n}) - value = (1/{2 * n * n}) (a_1 + ... + a_{n})^2: {'verified' if ok else 'FAILED'}")
    print(f"synchronous quantum value bound: {short_rational(bound)}")
    return EXIT_OK if ok else EXIT_ABSENT
