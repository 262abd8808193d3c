"""Shared test helpers: independent oracles, generators, the formula battery.

Every oracle here deliberately recomputes its answer by a different
route than the code under test (exhaustive enumeration, truth tables,
residual tables), so agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random

from dfadist.automata import Dfa
from dfadist.reduction import CnfFormula


def all_words(alphabet: str, max_len: int):
    """Every word over the alphabet up to the given length, shortest first."""
    for length in range(max_len + 1):
        for tup in itertools.product(alphabet, repeat=length):
            yield "".join(tup)


def language_up_to(dfa: Dfa, max_len: int) -> list[str]:
    return [w for w in all_words(dfa.alphabet.symbols, max_len) if dfa.accepts(w)]


def random_dfa(rng: random.Random, states: int, alphabet: str = "ab") -> Dfa:
    delta = [tuple(rng.randrange(states) for _ in alphabet) for _ in range(states)]
    accepting = {q for q in range(states) if rng.random() < 0.5}
    return Dfa(alphabet, delta, rng.randrange(states), accepting)


def permuted_copy(dfa: Dfa, rng: random.Random) -> Dfa:
    """Isomorphic copy under a random state renaming."""
    m = dfa.state_count
    perm = list(range(m))
    rng.shuffle(perm)
    delta = [None] * m
    for q, row in enumerate(dfa.delta):
        delta[perm[q]] = tuple(perm[t] for t in row)
    return Dfa(
        dfa.alphabet,
        delta,
        perm[dfa.initial],
        {perm[q] for q in dfa.accepting},
    )


def nerode_class_count_oracle(dfa: Dfa) -> int:
    """Distinct rows of the residual-language table over all prefixes up
    to the state count; counts the reachable language-equivalence classes.

    Extensions up to the state count decide residual equality, because
    two distinct residuals are separated by a word shorter than the
    number of states.
    """
    m = dfa.state_count
    pos = {c: i for i, c in enumerate(dfa.alphabet.symbols)}

    def walk(state: int, word: str) -> int:
        for ch in word:
            state = dfa.delta[state][pos[ch]]
        return state

    extensions = list(all_words(dfa.alphabet.symbols, m))
    row_of_state: dict[int, tuple[bool, ...]] = {}
    rows = set()
    for prefix in all_words(dfa.alphabet.symbols, m):
        state = walk(dfa.initial, prefix)
        row = row_of_state.get(state)
        if row is None:
            row = tuple(walk(state, z) in dfa.accepting for z in extensions)
            row_of_state[state] = row
        rows.add(row)
    return len(rows)


def states_pairwise_distinguishable(dfa: Dfa) -> bool:
    """Marking-based oracle: every state pair is separated by some word."""
    m = dfa.state_count
    width = len(dfa.alphabet)
    marked = {
        (p, q)
        for p in range(m)
        for q in range(m)
        if (p in dfa.accepting) != (q in dfa.accepting)
    }
    changed = True
    while changed:
        changed = False
        for p in range(m):
            for q in range(m):
                if p != q and (p, q) not in marked:
                    for c in range(width):
                        if (dfa.delta[p][c], dfa.delta[q][c]) in marked:
                            marked.add((p, q))
                            changed = True
                            break
    return all((p, q) in marked for p in range(m) for q in range(m) if p != q)


def truth_table_satisfiable(var_count: int, clauses) -> bool:
    for bits in itertools.product((False, True), repeat=var_count):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in clause) for clause in clauses):
            return True
    return False


def clauses_over(var_count: int) -> list[tuple[int, ...]]:
    """All non-tautological nonempty clauses over the variables, one per
    sign assignment, in base-3 counter order."""
    out = []
    for signs in itertools.product((0, 1, -1), repeat=var_count):
        clause = tuple(s * (i + 1) for i, s in enumerate(signs) if s)
        if clause:
            out.append(clause)
    return out


CURATED_THREE_VAR = [
    CnfFormula(3, [(3,)]),
    CnfFormula(3, [(1, 2, 3)]),
    CnfFormula(3, [(1, -2), (3,)]),
    CnfFormula(3, [(-1,), (-2, 3)]),
    CnfFormula(3, [(1, 2, 3), (-1, -2)]),
]


def battery_formulas() -> list[CnfFormula]:
    """The verification battery: every formula with at most two variables
    and at most two clauses, plus the curated three-variable cases."""
    formulas = []
    for var_count in (1, 2):
        candidates = clauses_over(var_count)
        for clause_count in (1, 2):
            for combo in itertools.product(candidates, repeat=clause_count):
                formulas.append(CnfFormula(var_count, combo))
    formulas.extend(CURATED_THREE_VAR)
    return formulas
