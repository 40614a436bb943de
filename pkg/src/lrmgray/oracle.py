"""Exhaustive search and independent re-checking, for calibration.

``longest_code`` finds the longest constant-weight path or cycle in the
transition digraph by plain depth-first search over bit masks.  It is
deliberately construction-free so it can arbitrate: the builders must
match it on small n, and existence questions at desk scale get settled
outright.  Rotating every word by one position maps codes to codes, so
cycle searches may fix the start inside each shift orbit; some longest
cycle starts at its orbit's least word.

``reverify`` is a second opinion on a finished code.  It re-derives every
required property from the words' bit strings alone — separate window
arithmetic, recomputed color sums, a rotation matcher for the track
columns — sharing no code with the fast validation path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .colors import color
from .words import (
    GrayCode,
    ValidationReport,
    Word,
    constant_weight_successors,
    necklace_canonical_rep,
    transition_index,
)

__all__ = ["SearchResult", "longest_code", "reverify"]


@dataclass(frozen=True)
class SearchResult:
    n: int
    w: int
    cyclic: bool
    best_length: int
    witness: GrayCode | None
    exhausted: bool
    nodes_expanded: int
    budget: int


def longest_code(
    n: int,
    w: int,
    cyclic: bool = False,
    budget: int = 1_000_000,
    color_pruning: bool = True,
) -> SearchResult:
    """Longest weight-w code of length n, by exhaustive DFS.

    Deterministic: start words ascend, successors are explored in string
    order, and only strictly longer finds replace the witness.  ``budget``
    caps node expansions; ``exhausted`` reports whether the whole space
    was searched.  ``color_pruning`` cuts branches whose color classes
    cannot supply enough further words; it never changes the result.
    """
    if n < 2 or not 1 <= w <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= w <= n-1, got n={n}, w={w}")
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")

    order = sorted(Word.from_positions(n, picks) for picks in combinations(range(n), w))
    index = {word.mask: i for i, word in enumerate(order)}
    by_mask = {word.mask: word for word in order}
    colors = {word.mask: color(word) for word in order}
    succ = {
        word.mask: [u.mask for u in sorted(v for _, v in constant_weight_successors(word))]
        for word in order
    }
    starts = sorted({necklace_canonical_rep(word) for word in order})

    best = 0
    best_masks: tuple[int, ...] | None = None
    nodes = 0
    aborted = False

    for start in starts:
        s0 = start.mask
        i0 = index[s0]
        allowed_total = len(order) - i0 if cyclic else len(order)
        if allowed_total <= best:
            break  # starts ascend, so the allowed pool only shrinks
        if nodes >= budget:
            aborted = True
            break

        rem = [0] * n  # unvisited words still allowed, by color
        pool = order[i0:] if cyclic else order
        for word in pool:
            rem[colors[word.mask]] += 1
        visited = {s0}
        path = [s0]
        rem[colors[s0]] -= 1
        nodes += 1
        if not cyclic and len(path) > best:
            best, best_masks = len(path), tuple(path)
        stack = [iter(succ[s0])]

        while stack:
            if nodes >= budget:
                aborted = True
                break
            pushed = False
            for m in stack[-1]:
                if cyclic and m == s0:
                    if len(path) > best:
                        best, best_masks = len(path), tuple(path)
                    continue
                if m in visited or (cyclic and index[m] < i0):
                    continue
                visited.add(m)
                path.append(m)
                rem[colors[m]] -= 1
                nodes += 1
                if not cyclic and len(path) > best:
                    best, best_masks = len(path), tuple(path)
                if color_pruning:
                    # each future step advances the color by one, so class
                    # (c+1+t) can admit at most rem more words t steps out
                    c = colors[m]
                    cont = min(n * rem[(c + 1 + t) % n] + t for t in range(n))
                    if len(path) + cont <= best:
                        stack.append(iter(()))
                        pushed = True
                        break
                stack.append(iter(succ[m]))
                pushed = True
                break
            if not pushed:
                last = path.pop()
                visited.discard(last)
                rem[colors[last]] += 1
                stack.pop()
        if aborted:
            break

    witness = None
    if best_masks is not None:
        words = tuple(by_mask[m] for m in best_masks)
        count = len(words)
        hops = count if cyclic else count - 1
        transitions = []
        for i in range(hops):
            j = transition_index(words[i], words[(i + 1) % count])
            if j is None:
                raise AssertionError("witness words are not transition-adjacent")
            transitions.append(j)
        witness = GrayCode(n=n, w=w, words=words, transitions=tuple(transitions), cyclic=cyclic)

    return SearchResult(
        n=n,
        w=w,
        cyclic=cyclic,
        best_length=best,
        witness=witness,
        exhausted=not aborted,
        nodes_expanded=nodes,
        budget=budget,
    )


def _is_rotation(a: str, b: str) -> bool:
    """True when b equals a rotated, by explicit index matching."""
    count = len(a)
    if len(b) != count:
        return False
    if count == 0:
        return True
    for r in range(count):
        if a[r] == b[0] and all(b[i] == a[(r + i) % count] for i in range(1, count)):
            return True
    return False


def _single_track_columns(rows: list[str]) -> bool:
    n = len(rows[0])
    cols = ["".join(row[p] for row in rows) for p in range(n)]
    return all(_is_rotation(cols[0], col) for col in cols[1:])


def reverify(code: GrayCode) -> ValidationReport:
    """Re-check a finished code from its bit strings alone.

    Independent of validate_code: windows are rewritten on char lists,
    colors are position sums recomputed per row, and the single-track
    question is settled by rotation-matching the raw columns.  Failures
    are (position, reason) pairs; -1 marks structural problems.
    """
    failures: list[tuple[int, str]] = []
    checked = (
        "shape",
        "distinctness",
        "ambient",
        "weight_uniform",
        "window_rewrites",
        "color_progression",
        "cyclic_divisibility",
        "single_track",
    )
    n = code.n
    rows = [str(word) for word in code.words]
    count = len(rows)
    if count == 0:
        return ValidationReport(False, ((-1, "code has no words"),), checked)

    for i, row in enumerate(rows):
        if len(row) != n or any(ch not in "01" for ch in row):
            failures.append((i, f"row {i} is not a length-{n} bit string"))
    if failures:
        return ValidationReport(False, tuple(failures), checked)

    seen: dict[str, int] = {}
    for i, row in enumerate(rows):
        if row in seen:
            failures.append((i, f"row {i} repeats row {seen[row]}"))
        else:
            seen[row] = i
        ones = row.count("1")
        if ones in (0, n):
            failures.append((i, f"row {i} is constant"))

    weights = {row.count("1") for row in rows}
    if len(weights) != 1:
        failures.append((-1, f"mixed weights {sorted(weights)}"))

    expected_hops = count if code.cyclic else count - 1
    if len(code.transitions) != expected_hops:
        failures.append(
            (-1, f"{len(code.transitions)} transitions for {count} words (expected {expected_hops})")
        )
    else:
        for i, j in enumerate(code.transitions):
            src = rows[i]
            dst = rows[(i + 1) % count]
            if not 0 <= j < n:
                failures.append((i, f"transition index {j} out of range"))
                continue
            nxt = (j + 1) % n
            if src[j] != "1" or src[nxt] != "0":
                failures.append((i, f"window ({j}, {nxt}) of row {i} reads {src[j]}{src[nxt]}, not 10"))
                continue
            cells = list(src)
            cells[j] = "0"
            cells[nxt] = "1"
            if "".join(cells) != dst:
                failures.append((i, f"rewriting window ({j}, {nxt}) of row {i} does not give row {(i + 1) % count}"))
        for i in range(len(code.transitions)):
            a = sum(p for p, ch in enumerate(rows[i]) if ch == "1") % n
            b = sum(p for p, ch in enumerate(rows[(i + 1) % count]) if ch == "1") % n
            if (b - a) % n != 1:
                failures.append((i, f"color does not advance by 1 from row {i} to row {(i + 1) % count}"))

    if code.cyclic and count % n:
        failures.append((-1, f"cyclic size {count} is not a multiple of {n}"))

    details: dict[str, object] = {}
    if not failures:
        details["single_track"] = _single_track_columns(rows)
    return ValidationReport(not failures, tuple(failures), checked, details)
