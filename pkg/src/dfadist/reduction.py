"""From CNF formulas to DFA pairs whose distinguishability mirrors satisfiability.

A truth assignment over k variables is a word in {0,1}^k.  For a formula
with n clauses, two languages over the alphabet ``01#`` are built:

- the *lower* language: at most n assignment blocks, each k bits closed
  by ``#`` (the empty word counts as zero blocks);
- the *upper* language: the lower one, plus every word whose first n
  blocks satisfy clause 1..n respectively, followed by anything.

The lower language is always a subset of the upper one.  The formula is
satisfiable exactly when some DFA with at most k+2 states fits inside
the upper language while escaping the lower one; ``verify_lemma`` checks
that correspondence end to end on a concrete formula, and
``witness_dfa`` realizes the constructive half: a satisfying assignment
repeated forever is such a small distinguisher.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automata import Dfa, Word
from .distinguish import SynthOutcome, is_distinguishing, synth_min_distinguishing
from .satsolve import CnfInstance, Model, solve

REDUCTION_ALPHABET = "01#"


class FormulaError(Exception):
    """Invalid formula for the reduction (empty clause, bad literal)."""


@dataclass(frozen=True)
class CnfFormula:
    """CNF input to the reduction: k >= 1 variables, n >= 1 nonempty clauses.

    Empty clauses are rejected up front: they would collapse the upper
    language onto the lower one, leaving nothing to distinguish.
    """

    var_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.var_count < 1:
            raise FormulaError(f"need at least one variable, got {self.var_count}")
        if not self.clauses:
            raise FormulaError("need at least one clause")
        for i, clause in enumerate(self.clauses):
            if not clause:
                raise FormulaError(f"clause {i + 1} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.var_count:
                    raise FormulaError(
                        f"clause {i + 1}: literal {lit} outside 1..{self.var_count}"
                    )

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def as_instance(self) -> CnfInstance:
        return CnfInstance(self.var_count, self.clauses)

    @classmethod
    def from_instance(cls, instance: CnfInstance) -> "CnfFormula":
        return cls(instance.var_count, instance.clauses)


Assignment = Sequence[bool]


def assignment_word(assignment: Assignment) -> Word:
    """The 0/1 word encoding an assignment, i-th symbol for variable i+1."""
    return "".join("1" if bit else "0" for bit in assignment)


def word_assignment(word: Word) -> tuple[bool, ...]:
    """Inverse of assignment_word; the word must be over {0,1}."""
    if any(c not in "01" for c in word):
        raise ValueError(f"not an assignment word: {word!r}")
    return tuple(c == "1" for c in word)


def _clause_satisfied(clause: tuple[int, ...], bits: tuple[bool, ...]) -> bool:
    return any(bits[abs(lit) - 1] == (lit > 0) for lit in clause)


def _split_blocks(word: Word, k: int, count: int) -> list[tuple[bool, ...]] | None:
    """First ``count`` assignment blocks of the word, or None if malformed."""
    span = k + 1
    if len(word) < span * count:
        return None
    blocks = []
    for i in range(count):
        chunk = word[i * span : (i + 1) * span]
        if chunk[k] != "#" or any(c not in "01" for c in chunk[:k]):
            return None
        blocks.append(tuple(c == "1" for c in chunk[:k]))
    return blocks


def in_lower_language(word: Word, k: int, n: int) -> bool:
    """Scan-based membership: j complete assignment blocks for some j in [0, n].

    Reference decision procedure, deliberately independent of the DFA
    construction.
    """
    span = k + 1
    if len(word) % span != 0:
        return False
    j = len(word) // span
    return j <= n and _split_blocks(word, k, j) is not None


def in_upper_language(word: Word, formula: CnfFormula) -> bool:
    """Scan-based membership: lower-language word, or n satisfying blocks
    followed by an arbitrary suffix."""
    k, n = formula.var_count, formula.clause_count
    if in_lower_language(word, k, n):
        return True
    blocks = _split_blocks(word, k, n)
    if blocks is None:
        return False
    return all(
        _clause_satisfied(clause, bits) for clause, bits in zip(formula.clauses, blocks)
    )


def build_lower_dfa(k: int, n: int) -> Dfa:
    """Minimal complete DFA of the lower language over ``01#``.

    Grid construction: (block, position-in-block) states plus one state
    for "all n blocks read" and a rejecting sink; at most n(k+1) + 2
    states, minimized before returning.
    """
    if k < 1 or n < 1:
        raise FormulaError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    span = k + 1
    final = n * span
    sink = final + 1
    delta = []
    for i in range(n):
        for p in range(span):
            base = i * span
            if p < k:
                delta.append((base + p + 1, base + p + 1, sink))
            else:
                after = base + span if i + 1 < n else final
                delta.append((sink, sink, after))
    delta.append((sink, sink, sink))  # final
    delta.append((sink, sink, sink))  # sink
    accepting = {i * span for i in range(n)} | {final}
    return Dfa(REDUCTION_ALPHABET, delta, 0, accepting).minimize()


def build_upper_dfa(formula: CnfFormula) -> Dfa:
    """Minimal complete DFA of the upper language for the formula.

    Tracks (block, position, clause-already-satisfied) while every
    completed block has satisfied its clause, drops to a blocks-only
    layer once one fails, and jumps to an all-accepting absorbing state
    after n satisfying blocks.  Minimized before returning.
    """
    k, n = formula.var_count, formula.clause_count
    span = k + 1

    # state ids: on-track (i, p, sat), off-track (i, p), absorb, final, sink
    def on(i: int, p: int, sat: bool) -> int:
        return (i * span + p) * 2 + (1 if sat else 0)

    off_base = 2 * n * span

    def off(i: int, p: int) -> int:
        return off_base + i * span + p

    absorb = off_base + n * span
    final = absorb + 1
    sink = absorb + 2

    sat_by_one = []  # clause i satisfied by bit value at position p
    sat_by_zero = []
    for clause in formula.clauses:
        sat_by_one.append([(p + 1) in clause for p in range(k)])
        sat_by_zero.append([-(p + 1) in clause for p in range(k)])

    rows: dict[int, tuple[int, int, int]] = {}
    for i in range(n):
        for p in range(span):
            for sat in (False, True):
                state = on(i, p, sat)
                if p < k:
                    on_zero = on(i, p + 1, sat or sat_by_zero[i][p])
                    on_one = on(i, p + 1, sat or sat_by_one[i][p])
                    rows[state] = (on_zero, on_one, sink)
                elif sat:
                    after = on(i + 1, 0, False) if i + 1 < n else absorb
                    rows[state] = (sink, sink, after)
                else:
                    after = off(i + 1, 0) if i + 1 < n else final
                    rows[state] = (sink, sink, after)
            off_state = off(i, p)
            if p < k:
                rows[off_state] = (off(i, p + 1), off(i, p + 1), sink)
            else:
                after = off(i + 1, 0) if i + 1 < n else final
                rows[off_state] = (sink, sink, after)
    rows[absorb] = (absorb, absorb, absorb)
    rows[final] = (sink, sink, sink)
    rows[sink] = (sink, sink, sink)

    accepting = {absorb, final}
    for i in range(n):
        accepting.add(on(i, 0, False))
        accepting.add(on(i, 0, True))
        accepting.add(off(i, 0))
    state_count = absorb + 3
    delta = tuple(rows[q] for q in range(state_count))
    return Dfa(REDUCTION_ALPHABET, delta, 0, accepting).minimize()


def witness_dfa(assignment: Assignment) -> Dfa:
    """Exact (k+2)-state DFA of the words repeating ``assignment#`` any
    number of times: a k+1-state loop spelling the assignment block plus
    a rejecting sink."""
    bits = tuple(bool(b) for b in assignment)
    k = len(bits)
    sink = k + 1
    delta = []
    for p, bit in enumerate(bits):
        nxt = p + 1
        delta.append((sink, nxt, sink) if bit else ((nxt, sink, sink)))
    delta.append((sink, sink, 0))  # block complete: '#' closes the loop
    delta.append((sink, sink, sink))
    return Dfa(REDUCTION_ALPHABET, delta, 0, {0})


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of one end-to-end satisfiability correspondence check."""

    formula: CnfFormula
    satisfiable: bool
    model: Model | None
    synth: SynthOutcome
    bound: int
    witness_distinguishing: bool | None

    @property
    def consistent(self) -> bool:
        return self.satisfiable == self.synth.found

    @property
    def min_distinguishing_k(self) -> int | None:
        return self.synth.bound if self.synth.found else None

    def render(self) -> str:
        lines = [
            f"sat: {'yes' if self.satisfiable else 'no'}",
            f"min_distinguishing_k: {self.min_distinguishing_k if self.synth.found else 'none'}",
            f"bound: k+2 = {self.bound}",
            f"verdict: {'CONSISTENT' if self.consistent else 'INCONSISTENT'}",
        ]
        return "\n".join(lines) + "\n"


def verify_lemma(formula: CnfFormula) -> LemmaReport:
    """Check the satisfiability correspondence for one formula.

    Solves the formula, synthesizes a minimal distinguishing DFA for the
    (upper, lower) pair with budget k+2, and reports CONSISTENT iff both
    answers agree.  For satisfiable formulas the explicit witness built
    from the model is additionally checked to distinguish the pair.
    """
    k, n = formula.var_count, formula.clause_count
    model = solve(formula.as_instance())
    upper = build_upper_dfa(formula)
    lower = build_lower_dfa(k, n)
    bound = k + 2
    synth = synth_min_distinguishing(upper, lower, bound)
    witness_ok = None
    if model is not None:
        witness_ok = is_distinguishing(witness_dfa(model[:k]), upper, lower)
    return LemmaReport(
        formula=formula,
        satisfiable=model is not None,
        model=model,
        synth=synth,
        bound=bound,
        witness_distinguishing=witness_ok,
    )
