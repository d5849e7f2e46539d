"""Named verification suites.  Each returns a list of check records
``{"check", "passed", ...}``; ordering is fixed so reports are reproducible."""
from __future__ import annotations

from .antimatroid import (antimatroid_violation, feasible_sets_from_word,
                          is_accessible, supersolvable_violation)
from .arquiver import ar_word_w0, enumerate_preprojectives, knit_preprojectives
from .grassmann import le_counterexamples
from .leftmost import category_of, element_of
from .preproj import (C_of, C_of_quotient, expected_dimension, ideal_contains,
                      preprojective_algebra, verify_duality)
from .quiver import Quiver
from .repkit import (catalogue, complement, is_torsion_class, quotient_closed_sets,
                     subclosed_sets)
from .sortable import (inversion_set, is_torsion_candidate, verify_torsion_pair)
from .weyl import bruhat_leq, enumerate_group, weak_leq_right

SUITES = ("bijection", "ideals", "duality", "bruhat", "sorting", "le", "antimatroid", "subclosed")


def _check(name, passed, **extra):
    return {"check": name, "passed": bool(passed), **extra}


def _skip(name, reason):
    return {"check": name, "passed": True, "skipped": reason}


def _word(w):
    return list(w.reduced_word())


def suite_bijection(q: Quiver, p: int, seed: int):
    if not q.is_dynkin:
        return [_skip("bijection", "needs a Dynkin quiver")]
    group = enumerate_group(q)
    cat = catalogue(q, p, seed)
    qc = set(quotient_closed_sets(cat))
    out = [_check("quotient_closed_count", len(qc) == len(group),
                  count=len(qc), group_order=len(group))]
    bad = [_word(w) for w in group if element_of(category_of(w)) != w]
    out.append(_check("round_trip", not bad, counterexamples=bad[:5]))
    images = {complement(cat, category_of(w).missing) for w in group}
    out.append(_check("images_are_quotient_closed", images == qc,
                      distinct=len(images)))
    table, knit = enumerate_preprojectives(q), knit_preprojectives(q)
    out.append(_check("coxeter_matches_knitting", table.rows == knit.rows))
    return out


def suite_ideals(q: Quiver, p: int, seed: int):
    if not q.is_dynkin:
        return [_skip("ideals", "needs a Dynkin quiver")]
    pi = preprojective_algebra(q, p)
    cat = catalogue(q, p, seed)
    out = [_check("pi_dimension", pi.dim == expected_dimension(q),
                  dim=pi.dim, expected=expected_dimension(q))]
    bad = [_word(w) for w in enumerate_group(q)
           if C_of(pi, w, cat) != complement(cat, category_of(w).missing)]
    out.append(_check("C_of_matches_leftmost", not bad, counterexamples=bad[:5]))
    return out


def suite_duality(q: Quiver, p: int, seed: int):
    if not q.is_dynkin:
        return [_skip("duality", "needs a Dynkin quiver")]
    pi = preprojective_algebra(q, p)
    bad = [_word(w) for w in enumerate_group(q) if not verify_duality(pi, w)]
    return [_check("graded_duality", not bad, counterexamples=bad[:5])]


def suite_bruhat(q: Quiver, p: int, seed: int):
    if not q.is_dynkin:
        return [_skip("bruhat", "needs a Dynkin quiver")]
    pi = preprojective_algebra(q, p)
    group = enumerate_group(q)
    bad = [[_word(v), _word(w)] for v in group for w in group
           if ideal_contains(pi, v, w) != bruhat_leq(v, w)]
    return [_check("containment_is_bruhat", not bad, pairs=len(group) ** 2,
                   counterexamples=bad[:5])]


def suite_sorting(q: Quiver, p: int, seed: int):
    if not q.is_dynkin:
        return [_skip("sorting", "needs a Dynkin quiver")]
    group = enumerate_group(q)
    cat = catalogue(q, p, seed)
    pi = preprojective_algebra(q, p)
    candidates = [w for w in group if is_torsion_candidate(w)]
    bad = [_word(w) for w in group
           if (w in candidates) != is_torsion_class(cat, complement(cat, category_of(w).missing))]
    out = [_check("torsion_criterion", not bad, candidates=len(candidates),
                  counterexamples=bad[:5])]
    bad = [_word(w) for w in candidates if not verify_torsion_pair(w, cat, pi)]
    out.append(_check("torsion_pairs", not bad, counterexamples=bad[:5]))
    inv = {w: inversion_set(w) for w in group}
    bad = [[_word(v), _word(w)] for v in group for w in group
           if (inv[v] <= inv[w]) != weak_leq_right(v, w)]
    out.append(_check("inversion_sets_give_weak_order", not bad, counterexamples=bad[:5]))
    return out


def suite_le(q: Quiver, p: int, seed: int):
    if not (q.dynkin_type or "").startswith("A") or q.arrows != tuple((i, i + 1) for i in range(1, q.n)):
        return [_skip("le", "needs the linear type A quiver")]
    if q.n > 5:
        return [_skip("le", "exhaustive check capped at n <= 5")]
    out = []
    for k in range(1, q.n + 1):
        bad = le_counterexamples(q.n, k, limit=5)
        out.append(_check(f"le_theorem_n{q.n}_k{k}", not bad, counterexamples=bad))
    return out


def suite_antimatroid(q: Quiver, p: int, seed: int):
    if not q.is_dynkin:
        return [_skip("antimatroid", "needs a Dynkin quiver")]
    word = ar_word_w0(q)
    if len(word) > 20:
        return [_skip("antimatroid", "AR word longer than 20 letters")]
    system = feasible_sets_from_word(q, word)
    anti = antimatroid_violation(system)
    sup = supersolvable_violation(system)
    return [_check("accessible", is_accessible(system)),
            _check("antimatroid", anti is None, counterexample=anti),
            _check("supersolvable", sup is None, counterexample=sup, feasible=len(system.feasible))]


def suite_subclosed(q: Quiver, p: int, seed: int):
    if not q.is_dynkin:
        return [_skip("subclosed", "needs a Dynkin quiver")]
    group = enumerate_group(q)
    cat = catalogue(q, p, seed)
    pi = preprojective_algebra(q, p)
    sub = set(subclosed_sets(cat))
    images = [C_of_quotient(pi, w, cat) for w in group]
    return [_check("subclosed_count", len(sub) == len(group), count=len(sub),
                   group_order=len(group)),
            _check("quotient_map_bijective", len(set(images)) == len(group) and set(images) == sub)]


RUNNERS = {name: globals()[f"suite_{name}"] for name in SUITES}


def run_suite(q: Quiver, name: str, p: int = 5, seed: int = 0) -> list[dict]:
    names = SUITES if name == "all" else (name,)
    out = []
    for suite in names:
        for record in RUNNERS[suite](q, p, seed):
            out.append({"suite": suite, **record})
    return out
