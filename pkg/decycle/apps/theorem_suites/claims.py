"""
    Claims
    ======

    This module registers every claim checked by the theorem suites. A claim pairs a human-readable
    relation with a predicate over the values computed for one instance; that predicate alone
    decides the verdict of a record, which keeps records self-auditing. Derived quantities (forest
    numbers, closed forms, bounds) are recomputed from the primitive values rather than trusted.

"""

from dataclasses import dataclass
from typing import Any, Callable, Dict

from decycle.core.exceptions import UnknownSuiteError


VERDICT_PASS = 'pass'
VERDICT_FAIL = 'fail'
VERDICT_REPORT_ONLY = 'report_only'

VERDICTS = (VERDICT_PASS, VERDICT_FAIL, VERDICT_REPORT_ONLY)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def torus_formula(n: int, n2: int) -> int:
    """ Closed form of the decycling number of ``C_n □ C_n2`` for ``3 <= n <= n2``. """
    if n == 4:
        return ceil_div(3 * n2, 2)
    return ceil_div(n * n2 + 2, 3)


def grid_lower_bound(n: int, n2: int) -> int:
    return ceil_div((n - 1) * (n2 - 1) + 1, 3)


def star_product_forest_number(n: int, n2: int) -> int:
    """ Forest number of ``T □ S_n2`` for a tree ``T`` of order ``n <= n2``. """
    return n * n2 - n + 1


def equality_predicate(n: int, n2: int, first_is_star: bool, second_is_star: bool) -> bool:
    if n == n2:
        return first_is_star or second_is_star
    return second_is_star


def _main_theorem(c: Dict[str, Any]) -> bool:
    n, n2, nabla = c['n'], c['n2'], c['nabla']
    if nabla < n - 1:
        return False
    if c['star_case'] and nabla != n - 1:
        return False
    return n * n2 - nabla <= star_product_forest_number(n, n2)


def _star_formula(c: Dict[str, Any]) -> bool:
    n, n_star, nabla = c['n'], c['n_star'], c['nabla']
    return (
        nabla == n - 1
        and n * n_star - nabla == star_product_forest_number(n, n_star)
        and c['construction_value'] == n - 1
    )


def _equality(c: Dict[str, Any]) -> bool:
    n, n2, nabla = c['n'], c['n2'], c['nabla']
    tight = equality_predicate(n, n2, c['first_is_star'], c['second_is_star'])
    f, f_max = n * n2 - nabla, star_product_forest_number(n, n2)
    return nabla >= n - 1 and (nabla == n - 1) == tight and f <= f_max and (f == f_max) == tight


def _small_star(c: Dict[str, Any]) -> bool:
    return c['n_star'] <= c['nabla'] <= c['n'] - 1


def _star_corollary(c: Dict[str, Any]) -> bool:
    n_star, nabla = c['n_star'], c['nabla']
    return c['n'] == n_star + 1 and nabla == n_star and c['n'] * n_star - nabla == n_star ** 2


def _prism(c: Dict[str, Any]) -> bool:
    return c['nabla'] == c['matching_number'] == c['construction_value']


def _matching_bound(c: Dict[str, Any]) -> bool:
    return c['nabla'] >= c['matching_number_1'] * c['matching_number_2']


def _torus(c: Dict[str, Any]) -> bool:
    return c['nabla'] == torus_formula(c['n'], c['n2'])


def _grid(c: Dict[str, Any]) -> bool:
    lower = grid_lower_bound(c['n'], c['n2'])
    return lower <= c['nabla'] <= lower + 1


def _oracle_agreement(c: Dict[str, Any]) -> bool:
    return c['solver'] == c['oracle']


@dataclass(frozen=True)
class Claim:
    claim_id: str
    relation: str
    predicate: Callable[[Dict[str, Any]], bool]
    report_only: bool = False

    def verdict(self, computed: Dict[str, Any]) -> str:
        if self.report_only:
            return VERDICT_REPORT_ONLY
        return VERDICT_PASS if self.predicate(computed) else VERDICT_FAIL


CLAIMS: Dict[str, Claim] = {claim.claim_id: claim for claim in (
    Claim('thm-main', "∇(T□T') ≥ n−1, with equality when T' is a star of order n' ≥ n; "
                      "f(T□T') ≤ f(S_n□S_n')", _main_theorem),
    Claim('star-formula', "f(T□S_n') = nn'−n+1", _star_formula),
    Claim('equality', "∇(T□T') = n−1 iff T or T' is a star (n = n') or T' is a star (n < n')",
          _equality),
    Claim('small-star', "n' ≤ ∇(T□S_n') ≤ n−1", _small_star),
    Claim('star-corollary', "∇(S_n□T) = n and f(S_n□T) = n² for |T| = n+1, T not a star",
          _star_corollary),
    Claim('prism', "∇(T□P_2) = α'(T)", _prism),
    Claim('matching-bound', "∇(G□H) ≥ α'(G)α'(H)", _matching_bound),
    Claim('torus-formula', "∇(C_n□C_n') = ⌈3n'/2⌉ if n = 4, else ⌈(nn'+2)/3⌉", _torus),
    Claim('grid-bounds', "L ≤ ∇(P_n□P_n') ≤ L+1, L = ⌈((n−1)(n'−1)+1)/3⌉", _grid),
    Claim('oracle-agreement', 'branch-and-reduce value = subset oracle value', _oracle_agreement),
    Claim('open-conjecture', "f(P_n□P_n') ≤ f(T□T')", lambda c: not c['violation'],
          report_only=True),
)}


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownSuiteError('Unknown claim {!r}; known claims: {}'.format(
            claim_id, ', '.join(sorted(CLAIMS))))
