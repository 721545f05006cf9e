"""Enumeration of well-jointed factorizations and assembly of complete
sets of Hurwitz representatives.

The search walks states (partial, remainder): partial is a well-jointed
tuple of conjugates of bwb, and prod(partial) * remainder stays equal to
the enumeration target.  Admissible next factors are read off the
remainder's prefix structure; remainders strictly shrink, so the search
stabilizes within len(target) + 1 rounds.

For a target g, the complete family combines the well-jointed
factorizations of g with three all-short suffix families: appending r
copies of the pair (wB, bwb) multiplies the product by b^r, so prefixes
factoring g, g*B and g*b cover the residues r = 0, 1, 2 (mod 3).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .conjugates import SHORTS, Conjugate, joins_well
from .moves import Factorization
from .sl2 import I2, SL2Matrix, lift_factorization, project
from .words import B1, B2, Word, _from_reduced, from_core, to_core


class SearchState(NamedTuple):
    partial: tuple
    remainder: Word


def first_factors(h: Word) -> tuple:
    """All candidates for the first factor of a well-jointed factorization
    of h: the product must begin with the factor's left part.

    Shorts are matched against h's first letters; every interior
    occurrence of the letter pair (b, w) contributes the long conjugate
    built from the prefix ending there.
    """
    s = h.letters
    if s in ("", "b", "B"):
        raise ValueError(f"no first factors for {h}")
    out = []
    first = s[0]
    if first == "w":
        out.append(SHORTS[0])
    elif first == "b":
        out.append(SHORTS[1])
    else:
        out.append(SHORTS[2])
    for j in range(1, len(s) - 1):
        if s[j] == "b" and s[j + 1] == "w":
            p_inv = s[:j]  # ends with 'w' by alternation, so q begins with 'w'
            q = _from_reduced(p_inv).inverse()
            out.append(Conjugate(_from_reduced(p_inv + "bwb" + q.letters), q))
    return tuple(out)


def extend_state(state: SearchState) -> tuple:
    """One search step.  Finished states persist, dead remainders (b, B)
    drop the branch, and otherwise each admissible first factor of the
    remainder spawns a child state."""
    partial, z = state
    if z.is_identity():
        return (state,)
    if z.letters in ("b", "B"):
        return ()
    out = []
    for g in first_factors(z):
        if partial and not joins_well(partial[-1], g):
            continue
        out.append(SearchState(partial + (g,), g.word.inverse() * z))
    return tuple(out)


def _state_key(state: SearchState) -> tuple:
    return (
        tuple(e.word.sort_key() for e in state.partial),
        state.remainder.sort_key(),
    )


def extend_states(states, threads: int = 0) -> list:
    """Union of extend_state over a collection, deduplicated and sorted;
    the result is independent of thread scheduling."""
    states = sorted(states, key=_state_key)
    if threads and threads > 1 and len(states) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(extend_state, states))
    else:
        chunks = [extend_state(s) for s in states]
    merged = {}
    for chunk in chunks:
        for st in chunk:
            merged.setdefault(_state_key(st), st)
    return [merged[k] for k in sorted(merged)]


def _search_rounds(h: Word, threads: int = 0) -> list:
    """Run the state expansion len(h) + 1 times, exiting early once every
    surviving remainder is the identity.  Live remainders shorten each
    round except the single stationary step w -> b, which dies one round
    later, so len(h) + 1 rounds always reach the fixed point."""
    states = [SearchState((), h)]
    for _ in range(len(h) + 1):
        if all(s.remainder.is_identity() for s in states):
            break
        states = extend_states(states, threads)
    assert all(s.remainder.is_identity() for s in states)
    return [s.partial for s in states]


def _search_shared(h: Word) -> list:
    """Same result as :func:`_search_rounds`, but depth first with subtree
    sharing: the completions of a state depend only on (last entry,
    remainder), so they are computed once per such pair."""
    memo: dict = {}

    def suffixes(last, z: Word) -> tuple:
        key = (last.word.letters if last is not None else None, z.letters)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = []
        if z.is_identity():
            out.append(())
        if z.letters not in ("", "b", "B"):
            for g in first_factors(z):
                if last is not None and not joins_well(last, g):
                    continue
                for suf in suffixes(g, g.word.inverse() * z):
                    out.append((g,) + suf)
        res = tuple(out)
        memo[key] = res
        return res

    return list(suffixes(None, h))


def well_jointed_factorizations(h: Word, threads: int = 0) -> tuple:
    """All well-jointed factorizations of h into conjugates of bwb.

    The threaded path explores search states round by round in a worker
    pool; the sequential path shares completion subtrees instead.  Both
    produce the same sorted tuple.
    """
    partials = _search_rounds(h, threads) if threads >= 2 else _search_shared(h)
    out = sorted((Factorization(p) for p in partials), key=Factorization.sort_key)
    for fac in out:
        assert not fac.entries or fac.product.begins_with(fac[0].left_part)
    return tuple(out)


def well_jointed_short_factorizations(h: Word, threads: int = 0) -> tuple:
    """The all-short members of well_jointed_factorizations(h)."""
    return tuple(
        f for f in well_jointed_factorizations(h, threads) if f.all_short()
    )


@dataclass(frozen=True)
class CompleteFamily:
    """Everything needed to materialize, for any entry count, a complete
    set of Hurwitz-move representatives for factorizations of ``target``.

    ``wjs_r<k>`` holds the all-short well-jointed prefixes compatible with
    r = k (mod 3) trailing (wB, bwb) pairs; they factor target, target*B
    and target*b respectively.
    """

    target: Word
    wj: tuple
    wjs_r0: tuple
    wjs_r1: tuple
    wjs_r2: tuple

    def describe(self) -> dict:
        """Finite description of the (infinite) complete set: the
        well-jointed factorizations plus the three parametric suffix
        families, each prefix list paired with its trailing-pair residue."""

        def dump(facs):
            return [[str(w) for w in f.words()] for f in facs]

        return {
            "target": str(self.target),
            "well_jointed": dump(self.wj),
            "suffix_families": [
                {"pair_count": "r = 3k, k >= 1", "prefixes": dump(self.wjs_r0)},
                {"pair_count": "r = 3k+1, k >= 0", "prefixes": dump(self.wjs_r1)},
                {"pair_count": "r = 3k+2, k >= 0", "prefixes": dump(self.wjs_r2)},
            ],
            "suffix_pair": [str(SHORTS[0]), str(SHORTS[1])],
        }


def complete_family(g: Word, threads: int = 0) -> CompleteFamily:
    wj = well_jointed_factorizations(g, threads)
    return CompleteFamily(
        target=g,
        wj=wj,
        wjs_r0=tuple(f for f in wj if f.all_short()),
        wjs_r1=well_jointed_short_factorizations(g * B2, threads),
        wjs_r2=well_jointed_short_factorizations(g * B1, threads),
    )


def materialize(family: CompleteFamily, n: int) -> tuple:
    """All canonical-shape factorizations of the target with n entries:
    well-jointed ones, plus each compatible all-short prefix padded with
    r >= 1 trailing (wB, bwb) pairs."""
    out = [f for f in family.wj if len(f) == n]
    buckets = (family.wjs_r0, family.wjs_r1, family.wjs_r2)
    for r in range(1, n // 2 + 1):
        m = n - 2 * r
        for f in buckets[r % 3]:
            if len(f) == m:
                out.append(Factorization(f.entries + (SHORTS[0], SHORTS[1]) * r))
    dedup = {f.words(): f for f in out}
    return tuple(sorted(dedup.values(), key=Factorization.sort_key))


def trailing_pairs(fac: Factorization) -> int:
    """Number of trailing (wB, bwb) pairs in the realized tuple."""
    ws = fac.words()
    r = 0
    while len(ws) >= 2 and ws[-2].letters == "wB" and ws[-1].letters == "bwb":
        ws = ws[:-2]
        r += 1
    return r


@dataclass(frozen=True)
class LiftedTuple:
    """One factorization of the matrix: entries as words (conjugates of
    wb) and as their trace-2 matrix lifts."""

    words: tuple
    matrices: tuple


@dataclass(frozen=True)
class MatrixCompleteSet:
    matrix: SL2Matrix
    n: int
    pi_word: Word
    results: tuple  # LiftedTuple, in canonical order
    wj_size: int
    candidates: int  # projective candidates before the sign filter
    branches: tuple  # "direct" and/or "pairs r=<k>" branches that contributed


def enumerate_matrix_factorizations(
    m: SL2Matrix, n: int, threads: int = 0
) -> MatrixCompleteSet:
    """Complete set of Hurwitz representatives for the factorizations of
    m into n conjugates of U.

    Pipeline: project m to the modular group, carry the target into the
    bwb conjugacy class, materialize the complete family at n entries,
    carry each tuple back, lift it to SL(2,Z), and keep exactly the
    tuples whose matrix product is m itself (the projective data cannot
    distinguish m from -m).
    """
    if n < 0:
        raise ValueError("factor count must be nonnegative")
    g = project(m)
    family = complete_family(to_core(g), threads)
    tuples = materialize(family, n)
    results = []
    branches = set()
    for fac in tuples:
        u_words = tuple(from_core(e.word) for e in fac.entries)
        lifts = lift_factorization(u_words)
        prod = I2
        for x in lifts:
            prod = prod * x
        if prod == m:
            results.append(LiftedTuple(u_words, lifts))
            r = trailing_pairs(fac)
            branches.add("direct" if r == 0 else f"pairs r={r}")
    return MatrixCompleteSet(
        matrix=m,
        n=n,
        pi_word=g,
        results=tuple(results),
        wj_size=len(family.wj),
        candidates=len(tuples),
        branches=tuple(sorted(branches)),
    )


def complete_set_for_matrix(m: SL2Matrix, n: int, threads: int = 0) -> tuple:
    """Just the matrix tuples of :func:`enumerate_matrix_factorizations`."""
    return tuple(
        r.matrices for r in enumerate_matrix_factorizations(m, n, threads).results
    )
