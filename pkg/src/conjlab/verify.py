"""Exhaustive verification harness.

Runs every library invariant over complete enumerations: all set
partitions of [n] up to a bound (via restricted growth strings), all
compositions of n up to a second bound, plus fixed small cases that pin
conventions (one-element supports, the n=1 composition exception, sparse
random supports).

Work over partitions of one n can be split into independent shards by
restricted-growth-string prefix; shards are pure functions returning
plain dicts, so they can run in worker processes and merge by
conjunction.  Reports are byte-identical regardless of the job count:
shards are merged in prefix order and the first counterexample in
enumeration order is kept.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import random

from .compositions import (
    Composition,
    conjugate_composition,
    flip_path,
    format_composition,
    mu,
    mu_path,
    nu,
    nu_path,
    sort_rank,
    strip_conjugate,
    to_path,
    to_subset,
)
from .enumeration import (
    bell_number,
    catalan_number,
    iter_compositions,
    iter_set_partitions,
    iter_set_partitions_of,
    random_partition,
    rgs_prefixes,
)
from .errors import DomainError
from .noncrossing import (
    find_crossing,
    is_noncrossing,
    kreweras_complement,
    rotate_partition,
)
from .partition import (
    EMPTY,
    SetPartition,
    adjacency_profile,
    complement,
    format_partition,
    parse_partition,
)
from .phi import conjugate, phi, phi_inverse, phi_trace, reduce_core
from .separate import (
    ROLE_IS,
    ROLE_ST,
    SeparationRecord,
    combine_domain_ok,
    combine_is,
    combine_st,
    separate_is,
    separate_st,
)

# Caps above which individual checks switch off (the costly ones have
# their own exhaustive budgets).
PARSE_CAP = 8  # text round-trip
TRACE_CAP = 9  # record-based trace checks (exactness, record inverse)
IMAGE_CAP = 10  # collecting the full image set of phi
UNION_CAP = 10  # interleaved-union maximality
PALINDROME_CAP = 14
SUBSET_LEX_CAP = 12
N_MAX_HARD = 12
COMP_N_MAX_HARD = 20
SPARSE_TRIALS = 120
SPARSE_SEED = 20240811
_SHARD_DEPTH = 4  # RGS prefix length for parallel shards


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one invariant over its whole scope."""

    invariant: str
    scope: str
    items: int
    ok: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class VerifyReport:
    n_max: int
    comp_n_max: int
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def total_items(self) -> int:
        return sum(r.items for r in self.results)

    def first_failure(self) -> CheckResult | None:
        for r in self.results:
            if not r.ok:
                return r
        return None

    def to_records(self) -> list[dict]:
        return [
            {
                "invariant": r.invariant,
                "scope": r.scope,
                "items": r.items,
                "status": "pass" if r.ok else "fail",
                "counterexample": r.counterexample,
            }
            for r in self.results
        ]

    def render(self) -> str:
        lines = [
            f"verification suite: partitions n <= {self.n_max}, "
            f"compositions n <= {self.comp_n_max}"
        ]
        width = max(len(r.invariant) for r in self.results)
        swidth = max(len(r.scope) for r in self.results)
        for r in self.results:
            mark = "PASS" if r.ok else "FAIL"
            line = f"[{mark}] {r.invariant:<{width}}  {r.scope:<{swidth}}  items={r.items}"
            if r.counterexample:
                line += f"  counterexample: {r.counterexample}"
            lines.append(line)
        verdict = "PASS" if self.ok else "FAIL"
        lines.append(
            f"result: {verdict} ({len(self.results)} invariants, "
            f"{self.total_items} items)"
        )
        return "\n".join(lines)


def _fail(fails: dict, inv: str, ce: str) -> None:
    got = fails.get(inv)
    if got is None:
        fails[inv] = [1, ce]
    else:
        got[0] += 1


def partition_shard(n: int, prefix: tuple[int, ...] = ()) -> dict:
    """Run every per-partition invariant over one RGS-prefix shard of [n].

    Returns a plain dict (picklable) with counts, failures keyed by
    invariant id, the phi image (when n is small enough), and the
    singleton/adjacency distribution tally.
    """
    fails: dict[str, list] = {}
    dist: dict[tuple[int, int], int] = {}
    image: set | None = set() if n <= IMAGE_CAP else None
    count = 0
    nc_count = 0
    trace_on = n <= TRACE_CAP
    parse_on = n <= PARSE_CAP
    union_on = n <= UNION_CAP
    full = tuple(range(1, n + 1))
    for p in iter_set_partitions(n, prefix):
        count += 1
        text = f"n={n} p={format_partition(p)}"
        prof = adjacency_profile(p)
        nsing = len(prof.singletons)
        dist_key = (nsing, prof.adjacency_count)
        dist[dist_key] = dist.get(dist_key, 0) + 1
        if len(prof.initiators) != len(prof.terminators):
            _fail(fails, "balance", text)
        if parse_on and parse_partition(format_partition(p)) != p:
            _fail(fails, "parse-format-roundtrip", text)
        cp = complement(p, n)
        if complement(cp, n) != p:
            _fail(fails, "complement-involution", text)
        cprof = adjacency_profile(cp)
        m = n + 1
        if (
            cprof.initiators != frozenset(m - t for t in prof.terminators)
            or cprof.terminators != frozenset(m - i for i in prof.initiators)
            or cprof.singletons != frozenset(m - s for s in prof.singletons)
        ):
            _fail(fails, "complement-role-swap", text)
        rec_is = separate_is(p)
        rec_st = separate_st(p)
        if not (combine_domain_ok(rec_is) and combine_domain_ok(rec_st)):
            _fail(fails, "separate-records-in-domain", text)
        else:
            if combine_is(rec_is) != p or combine_st(rec_st) != p:
                _fail(fails, "separate-combine-roundtrip", text)
        retagged = SeparationRecord(rec_is.rho, rec_is.a_set, rec_is.b_set, ROLE_ST)
        if combine_domain_ok(retagged) != combine_domain_ok(rec_is):
            _fail(fails, "combine-domain-role-symmetry", text)
        q = phi(p)
        if q.support != full:
            _fail(fails, "phi-support-preserved", text)
        qprof = adjacency_profile(q)
        interchange_ok = (
            qprof.singletons == prof.initiators
            and qprof.terminators == prof.singletons
        )
        if not interchange_ok:
            _fail(fails, "phi-statistic-interchange", f"{text} phi(p)={format_partition(q)}")
        if phi_inverse(q) != p:
            _fail(fails, "phi-inverse-identity", text)
        if image is not None:
            image.add(q.blocks)
        cq = complement(q, n)  # conjugate of p
        involution_ok = conjugate(cq, n) == p
        if not involution_ok:
            _fail(fails, "conjugate-involution", f"{text} conj(p)={format_partition(cq)}")
        cqprof = adjacency_profile(cq)
        conj_interchange_ok = (
            len(cqprof.singletons) == prof.adjacency_count
            and cqprof.adjacency_count == nsing
        )
        if not conj_interchange_ok:
            _fail(fails, "conjugate-interchange", text)
        if trace_on:
            trace = phi_trace(p)
            if trace.result != q:
                _fail(fails, "phi-trace-agreement", text)
            rows = trace.reverse_rows  # j = k .. 0
            fwd = trace.forward_rows
            for row in fwd:
                rec = SeparationRecord(row.rho, row.initiators, row.singletons, ROLE_IS)
                back = separate_is(combine_is(rec))
                if (back.rho, back.a_set, back.b_set) != (rec.rho, rec.a_set, rec.b_set):
                    _fail(fails, "trace-record-inverse", f"{text} j={row.j}")
            for idx in range(len(rows) - 1):
                tau_j = rows[idx].tau  # j = k - idx
                tau_prev = rows[idx + 1].tau  # j - 1
                j = rows[idx].j
                back = separate_st(tau_prev)
                frow = fwd[j - 1]
                if (
                    back.rho != tau_j
                    or back.a_set != frow.initiators
                    or back.b_set != frow.singletons
                ):
                    _fail(fails, "reverse-phase-exactness", f"{text} j={j}")
        nc = is_noncrossing(p)
        core = reduce_core(p)
        if nc != (core == EMPTY):
            _fail(fails, "nc-core-characterization", f"{text} core={format_partition(core)}")
        if nc:
            nc_count += 1
            if not (is_noncrossing(q) and is_noncrossing(cq)):
                _fail(fails, "nc-closure", text)
            gp = kreweras_complement(p)
            if gp != q:
                _fail(fails, "nc-graphical-phi", f"{text} gaps={format_partition(gp)}")
            if complement(gp, n) != cq:
                _fail(fails, "nc-graphical-conjugate", text)
            if not (involution_ok and conj_interchange_ok):
                _fail(fails, "nc-conjugation-involution", text)
            if kreweras_complement(gp) != rotate_partition(p, -1):
                _fail(fails, "kreweras-double-rotation", text)
            if union_on:
                ok, why = _union_maximal(p, gp)
                if not ok:
                    _fail(fails, "kreweras-union-maximal", f"{text} {why}")
    out = {
        "count": count,
        "nc": nc_count,
        "fails": fails,
        "dist": dist,
        "image": sorted(image) if image is not None else None,
    }
    return out


def _union_maximal(p: SetPartition, gaps: SetPartition) -> tuple[bool, str]:
    """p on odd points 2i-1, its gap partition on even points 2i.

    The union must be noncrossing on the interleaved cycle, and merging
    any two gap blocks must create a crossing (the complement is the
    largest disjoint completion).
    """
    base = [tuple(2 * x - 1 for x in blk) for blk in p.blocks]
    kblocks = [tuple(2 * g for g in blk) for blk in gaps.blocks]
    union = SetPartition(tuple(sorted(base + kblocks)))
    if find_crossing(union) is not None:
        return False, "union crosses"
    for i in range(len(kblocks)):
        for j in range(i + 1, len(kblocks)):
            merged = tuple(sorted(kblocks[i] + kblocks[j]))
            rest = [b for t, b in enumerate(kblocks) if t != i and t != j]
            cand = SetPartition(tuple(sorted(base + rest + [merged])))
            if find_crossing(cand) is None:
                return False, (
                    f"gap blocks {kblocks[i]} and {kblocks[j]} merge without crossing"
                )
    return True, ""


def theorem_sweep(n: int, prefix: tuple[int, ...] = ()) -> dict:
    """Lean shard: only the headline theorems, for big opt-in runs.

    Per partition: statistic interchange under phi, conjugate involution
    (which certifies bijectivity), support preservation.  Returns counts
    and failures like partition_shard but skips everything else.
    """
    fails: dict[str, list] = {}
    count = 0
    full = tuple(range(1, n + 1))
    for p in iter_set_partitions(n, prefix):
        count += 1
        prof = adjacency_profile(p)
        q = phi(p)
        if q.support != full:
            _fail(fails, "phi-support-preserved", f"n={n} p={format_partition(p)}")
        qprof = adjacency_profile(q)
        if (
            qprof.singletons != prof.initiators
            or qprof.terminators != prof.singletons
        ):
            _fail(fails, "phi-statistic-interchange", f"n={n} p={format_partition(p)}")
        cq = complement(q, n)
        if complement(phi(cq), n) != p:
            _fail(fails, "conjugate-involution", f"n={n} p={format_partition(p)}")
    return {"count": count, "fails": fails}


def composition_sweep(n: int) -> dict:
    """All composition invariants for one n (fast; never sharded)."""
    fails: dict[str, list] = {}
    dist: dict[tuple[int, int], int] = {}
    count = 0
    comps = []
    keep = n <= max(PALINDROME_CAP, SUBSET_LEX_CAP)
    for c in iter_compositions(n):
        count += 1
        text = f"n={n} c={format_composition(c)}"
        cc = conjugate_composition(c)
        if conjugate_composition(cc) != c:
            _fail(fails, "comp-conjugate-involution", text)
        if len(c.parts) + len(cc.parts) != n + 1:
            _fail(fails, "comp-length-law", text)
        if strip_conjugate(c) != cc:
            _fail(
                fails,
                "comp-strip-agreement",
                f"{text} strip={format_composition(strip_conjugate(c))} "
                f"flip={format_composition(cc)}",
            )
        mu_c, nu_c = mu(c), nu(c)
        dist_key = (mu_c, nu_c)
        dist[dist_key] = dist.get(dist_key, 0) + 1
        if n >= 2:
            if mu(cc) != nu_c or nu(cc) != mu_c:
                _fail(fails, "comp-mu-nu-interchange", text)
            path = to_path(c)
            if mu_path(path) != mu_c or nu_path(path) != nu_c:
                _fail(fails, "comp-path-agreement", text)
            if mu_path(flip_path(path)) != nu_path(path):
                _fail(fails, "comp-path-flip-duality", text)
        if keep:
            comps.append(c)
    if count != 2 ** (n - 1):
        _fail(fails, "enum-composition-count", f"n={n} count={count}")
    if n >= 2 and any(dist.get((t, s), 0) != v for (s, t), v in dist.items()):
        _fail(fails, "mu-nu-distribution-symmetric", f"n={n}")
    if n <= PALINDROME_CAP:
        ordered = sorted(comps, key=sort_rank)
        for i, c in enumerate(ordered):
            if conjugate_composition(c) != ordered[len(ordered) - 1 - i]:
                _fail(
                    fails,
                    "comp-sorted-palindrome",
                    f"n={n} position={i} c={format_composition(c)}",
                )
                break
    if n <= SUBSET_LEX_CAP:
        by_len: dict[int, list[Composition]] = {}
        for c in comps:
            by_len.setdefault(len(c.parts), []).append(c)
        for length, group in sorted(by_len.items()):
            in_lex = sorted(group, key=lambda c: c.parts)
            subsets = sorted(tuple(sorted(to_subset(c))) for c in group)
            for c, subset in zip(in_lex, subsets):
                if tuple(sorted(to_subset(c))) != subset:
                    _fail(
                        fails,
                        "comp-subset-lex-order",
                        f"n={n} length={length} c={format_composition(c)}",
                    )
                    break
    return {"count": count, "fails": fails, "dist": dist}


def _fixed_checks() -> list[CheckResult]:
    """Small pinned cases that do not scale with the sweep bounds."""
    results = []

    # Round trips over every partition of every small sparse support.
    items = 0
    bad = None
    supports = [()]
    for x in range(1, 9):
        supports += [s + (x,) for s in supports if len(s) < 6]
    for supp in sorted(supports, key=lambda s: (len(s), s)):
        for p in iter_set_partitions_of(supp):
            items += 1
            ok = (
                combine_is(separate_is(p)) == p
                and combine_st(separate_st(p)) == p
                and phi_inverse(phi(p)) == p
                and phi(p).support == p.support
            )
            if not ok and bad is None:
                bad = f"support={supp} p={format_partition(p)}"
    results.append(
        CheckResult(
            "subset-support-roundtrip",
            "partitions of every support within [8], size <= 6",
            items,
            bad is None,
            bad,
        )
    )

    # Randomized sparse supports, deterministic seed.
    rng = random.Random(SPARSE_SEED)
    bad = None
    for _ in range(SPARSE_TRIALS):
        size = rng.randint(1, 60)
        supp = tuple(sorted(rng.sample(range(1, 61), size)))
        p = random_partition(supp, rng)
        prof = adjacency_profile(p)
        q = phi(p)
        qprof = adjacency_profile(q)
        ok = (
            len(prof.initiators) == len(prof.terminators)
            and qprof.singletons == prof.initiators
            and qprof.terminators == prof.singletons
            and q.support == p.support
            and phi_inverse(q) == p
        )
        if not ok and bad is None:
            bad = f"support={supp} p={format_partition(p)}"
    results.append(
        CheckResult(
            "sparse-random-spot",
            f"{SPARSE_TRIALS} random partitions, supports within [60]",
            SPARSE_TRIALS,
            bad is None,
            bad,
        )
    )

    # One-element support: the element is initiator, terminator and
    # singleton at once, and counts one adjacency.
    bad = None
    for a in (1, 7, 60):
        p = SetPartition(((a,),))
        prof = adjacency_profile(p)
        one = frozenset({a})
        ok = (
            prof.initiators == one
            and prof.terminators == one
            and prof.singletons == one
            and prof.adjacency_count == 1
            and phi(p) == p
        )
        if a == 1:
            ok = ok and conjugate(p, 1) == p
        if not ok and bad is None:
            bad = f"a={a}"
    results.append(
        CheckResult(
            "one-element-convention",
            "supports {1}, {7}, {60}",
            3,
            bad is None,
            bad,
        )
    )

    # n=1 composition: (mu, nu) = (0, 1) and conjugation does NOT swap.
    c1 = Composition((1,))
    stats = (mu(c1), nu(c1))
    conj_stats = (mu(conjugate_composition(c1)), nu(conjugate_composition(c1)))
    ok = (
        stats == (0, 1)
        and conjugate_composition(c1) == c1
        and conj_stats == (0, 1)
        and conj_stats != (stats[1], stats[0])
        and (mu_path(to_path(c1)), nu_path(to_path(c1))) == (0, 0)
    )
    results.append(
        CheckResult(
            "mu-nu-n1-exception",
            "the single composition of 1",
            1,
            ok,
            None if ok else f"stats={stats} conj_stats={conj_stats}",
        )
    )

    # Empty partition is a fixed point everywhere it is legal.
    prof = adjacency_profile(EMPTY)
    ok = (
        phi(EMPTY) == EMPTY
        and phi_inverse(EMPTY) == EMPTY
        and reduce_core(EMPTY) == EMPTY
        and kreweras_complement(EMPTY) == EMPTY
        and not prof.initiators
        and not prof.singletons
        and prof.adjacency_count == 0
        and format_partition(EMPTY) == ""
        and parse_partition("") == EMPTY
    )
    results.append(
        CheckResult(
            "empty-partition-fixed-point",
            "the empty partition",
            1,
            ok,
            None,
        )
    )
    return results


# (invariant id, scope kind) in report order.  Kinds pick the scope
# string and the examined-item count at merge time.
_PARTITION_REGISTRY: tuple[tuple[str, str], ...] = (
    ("balance", "all"),
    ("parse-format-roundtrip", "parse"),
    ("complement-involution", "all"),
    ("complement-role-swap", "all"),
    ("separate-records-in-domain", "all"),
    ("separate-combine-roundtrip", "all"),
    ("combine-domain-role-symmetry", "all"),
    ("phi-support-preserved", "all"),
    ("phi-statistic-interchange", "all"),
    ("phi-inverse-identity", "all"),
    ("phi-injective-image", "image"),
    ("phi-trace-agreement", "trace"),
    ("reverse-phase-exactness", "trace"),
    ("trace-record-inverse", "trace"),
    ("conjugate-involution", "all"),
    ("conjugate-interchange", "all"),
    ("nc-core-characterization", "all"),
    ("nc-closure", "nc"),
    ("nc-graphical-phi", "nc"),
    ("nc-graphical-conjugate", "nc"),
    ("nc-conjugation-involution", "nc"),
    ("kreweras-double-rotation", "nc"),
    ("kreweras-union-maximal", "nc-union"),
    ("sing-adj-distribution-symmetric", "per-n"),
    ("enum-bell-count", "per-n"),
    ("enum-catalan-count", "per-n"),
)

_COMPOSITION_REGISTRY: tuple[tuple[str, str], ...] = (
    ("comp-conjugate-involution", "all"),
    ("comp-length-law", "all"),
    ("comp-strip-agreement", "all"),
    ("comp-mu-nu-interchange", "n2"),
    ("comp-path-agreement", "n2"),
    ("comp-path-flip-duality", "n2"),
    ("comp-sorted-palindrome", "palindrome"),
    ("comp-subset-lex-order", "subset-lex"),
    ("mu-nu-distribution-symmetric", "per-n2"),
    ("enum-composition-count", "per-n"),
)


def _shards_for(n: int, jobs: int) -> list[tuple[int, ...]]:
    if jobs <= 1 or n <= _SHARD_DEPTH:
        return [()]
    return rgs_prefixes(n, _SHARD_DEPTH)


def verify_suite(n_max: int = 10, comp_n_max: int = 16, jobs: int = 1) -> VerifyReport:
    """Run every invariant for all n <= n_max (partitions) and all
    n <= comp_n_max (compositions), plus the fixed cases.

    jobs > 1 spreads partition shards over worker processes; the merged
    report is byte-identical to a single-job run.
    """
    if n_max < 1 or n_max > N_MAX_HARD:
        raise DomainError(f"n_max must be between 1 and {N_MAX_HARD}, got {n_max}")
    if comp_n_max < 1 or comp_n_max > COMP_N_MAX_HARD:
        raise DomainError(
            f"comp_n_max must be between 1 and {COMP_N_MAX_HARD}, got {comp_n_max}"
        )

    tasks = [(n, prefix) for n in range(1, n_max + 1) for prefix in _shards_for(n, jobs)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shard_outs = list(pool.map(_shard_entry, tasks, chunksize=1))
    else:
        shard_outs = [partition_shard(n, prefix) for n, prefix in tasks]

    # Merge shards per n, in task order (= RGS prefix order).
    fails: dict[str, list] = {}
    per_n: dict[int, dict] = {}
    for (n, _prefix), out in zip(tasks, shard_outs):
        agg = per_n.setdefault(
            n, {"count": 0, "nc": 0, "dist": {}, "image": set() if out["image"] is not None else None}
        )
        agg["count"] += out["count"]
        agg["nc"] += out["nc"]
        for key, v in out["dist"].items():
            agg["dist"][key] = agg["dist"].get(key, 0) + v
        if agg["image"] is not None:
            agg["image"].update(out["image"])
        for inv, (cnt, ce) in out["fails"].items():
            _merge_fail(fails, inv, cnt, ce)

    total = sum(agg["count"] for agg in per_n.values())
    total_nc = sum(agg["nc"] for agg in per_n.values())
    for n in range(1, n_max + 1):
        agg = per_n[n]
        if agg["count"] != bell_number(n):
            _merge_fail(
                fails, "enum-bell-count", 1, f"n={n} count={agg['count']} expected={bell_number(n)}"
            )
        if agg["nc"] != catalan_number(n):
            _merge_fail(
                fails,
                "enum-catalan-count",
                1,
                f"n={n} count={agg['nc']} expected={catalan_number(n)}",
            )
        if agg["image"] is not None and len(agg["image"]) != agg["count"]:
            _merge_fail(
                fails,
                "phi-injective-image",
                1,
                f"n={n} image={len(agg['image'])} of {agg['count']}",
            )
        asym = next(
            (
                (s, t)
                for (s, t), v in sorted(agg["dist"].items())
                if agg["dist"].get((t, s), 0) != v
            ),
            None,
        )
        if asym is not None:
            _merge_fail(
                fails,
                "sing-adj-distribution-symmetric",
                1,
                f"n={n} pair {asym}: {agg['dist'].get(asym)} vs "
                f"{agg['dist'].get((asym[1], asym[0]), 0)}",
            )

    comp_outs = [composition_sweep(n) for n in range(1, comp_n_max + 1)]
    comp_total = sum(out["count"] for out in comp_outs)
    for out in comp_outs:
        for inv, (cnt, ce) in out["fails"].items():
            _merge_fail(fails, inv, cnt, ce)

    parse_items = sum(per_n[n]["count"] for n in per_n if n <= PARSE_CAP)
    trace_items = sum(per_n[n]["count"] for n in per_n if n <= TRACE_CAP)
    image_items = sum(per_n[n]["count"] for n in per_n if n <= IMAGE_CAP)
    union_items = sum(per_n[n]["nc"] for n in per_n if n <= UNION_CAP)
    comp_n2 = comp_total - 1  # all but the single composition of 1

    def scope_items(kind: str) -> tuple[str, int]:
        if kind == "all":
            return f"partitions of [n], n <= {n_max}", total
        if kind == "parse":
            hi = min(n_max, PARSE_CAP)
            return f"partitions of [n], n <= {hi}", parse_items
        if kind == "trace":
            hi = min(n_max, TRACE_CAP)
            return f"partitions of [n], n <= {hi}", trace_items
        if kind == "image":
            hi = min(n_max, IMAGE_CAP)
            return f"partitions of [n], n <= {hi}", image_items
        if kind == "nc":
            return f"noncrossing partitions, n <= {n_max}", total_nc
        if kind == "nc-union":
            hi = min(n_max, UNION_CAP)
            return f"noncrossing partitions, n <= {hi}", union_items
        if kind == "per-n":
            return f"each n <= {n_max}", n_max
        raise AssertionError(kind)

    def comp_scope_items(kind: str) -> tuple[str, int]:
        if kind == "all":
            return f"compositions of n <= {comp_n_max}", comp_total
        if kind == "n2":
            return f"compositions of 2 <= n <= {comp_n_max}", comp_n2
        if kind == "palindrome":
            hi = min(comp_n_max, PALINDROME_CAP)
            return f"compositions of n <= {hi}", sum(
                out["count"] for n, out in enumerate(comp_outs, start=1) if n <= hi
            )
        if kind == "subset-lex":
            hi = min(comp_n_max, SUBSET_LEX_CAP)
            return f"compositions of n <= {hi}", sum(
                out["count"] for n, out in enumerate(comp_outs, start=1) if n <= hi
            )
        if kind == "per-n":
            return f"each n <= {comp_n_max}", comp_n_max
        if kind == "per-n2":
            return f"each 2 <= n <= {comp_n_max}", comp_n_max - 1
        raise AssertionError(kind)

    results = []
    for inv, kind in _PARTITION_REGISTRY:
        scope, items = scope_items(kind)
        got = fails.get(inv)
        results.append(
            CheckResult(inv, scope, items, got is None, got[1] if got else None)
        )
    for inv, kind in _COMPOSITION_REGISTRY:
        scope, items = comp_scope_items(kind)
        got = fails.get(inv)
        results.append(
            CheckResult(inv, scope, items, got is None, got[1] if got else None)
        )
    results.extend(_fixed_checks())
    return VerifyReport(n_max, comp_n_max, tuple(results))


def _merge_fail(fails: dict, inv: str, cnt: int, ce: str) -> None:
    got = fails.get(inv)
    if got is None:
        fails[inv] = [cnt, ce]
    else:
        got[0] += cnt


def _shard_entry(task: tuple[int, tuple[int, ...]]) -> dict:
    return partition_shard(*task)
