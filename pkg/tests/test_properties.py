"""Randomized property tests over wider inputs than the exhaustive sweeps."""

import hypothesis.strategies as st
from hypothesis import given, settings

from conjlab import (
    Composition,
    adjacency_profile,
    canonicalize,
    combine_is,
    combine_st,
    complement,
    conjugate,
    conjugate_composition,
    flip_path,
    is_noncrossing,
    kreweras_complement,
    mu,
    nu,
    parse_partition,
    path_to_composition,
    phi,
    phi_inverse,
    phi_trace,
    rotate_partition,
    separate_is,
    separate_st,
    strip_conjugate,
    to_path,
)


@st.composite
def partitions(draw, max_element=60, max_size=16):
    support = draw(
        st.sets(st.integers(1, max_element), min_size=0, max_size=max_size)
    )
    if not support:
        return parse_partition("")
    labels = draw(
        st.lists(
            st.integers(0, len(support) - 1),
            min_size=len(support),
            max_size=len(support),
        )
    )
    groups: dict[int, list[int]] = {}
    for x, g in zip(sorted(support), labels):
        groups.setdefault(g, []).append(x)
    return canonicalize(groups.values())


@st.composite
def full_partitions(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    groups: dict[int, list[int]] = {}
    for x, g in zip(range(1, n + 1), labels):
        groups.setdefault(g, []).append(x)
    return n, canonicalize(groups.values())


compositions = st.lists(st.integers(1, 9), min_size=1, max_size=14).map(
    lambda parts: Composition(tuple(parts))
)


@settings(max_examples=300, deadline=None)
@given(partitions())
def test_phi_is_invertible_and_support_preserving(p):
    q = phi(p)
    assert q.support == p.support
    assert phi_inverse(q) == p


@settings(max_examples=300, deadline=None)
@given(partitions())
def test_phi_interchanges_the_statistics(p):
    prof = adjacency_profile(p)
    qprof = adjacency_profile(phi(p))
    assert qprof.singletons == prof.initiators
    assert qprof.terminators == prof.singletons


@settings(max_examples=200, deadline=None)
@given(partitions())
def test_fast_phi_agrees_with_step_recorder(p):
    assert phi(p) == phi_trace(p).result


@settings(max_examples=300, deadline=None)
@given(partitions())
def test_separation_roundtrips(p):
    assert combine_is(separate_is(p)) == p
    assert combine_st(separate_st(p)) == p


@settings(max_examples=200, deadline=None)
@given(full_partitions())
def test_complement_is_an_involution(np):
    n, p = np
    assert complement(complement(p, n), n) == p


@settings(max_examples=200, deadline=None)
@given(full_partitions())
def test_conjugate_is_an_involution_interchanging_counts(np):
    n, p = np
    cq = conjugate(p, n)
    assert conjugate(cq, n) == p
    prof, cprof = adjacency_profile(p), adjacency_profile(cq)
    assert len(cprof.singletons) == prof.adjacency_count
    assert cprof.adjacency_count == len(prof.singletons)


@settings(max_examples=200, deadline=None)
@given(full_partitions(max_n=10))
def test_kreweras_squares_to_rotation(np):
    n, p = np
    if is_noncrossing(p):
        k = kreweras_complement(p)
        assert is_noncrossing(k)
        assert kreweras_complement(k) == rotate_partition(p, -1)


@settings(max_examples=300, deadline=None)
@given(compositions)
def test_composition_conjugation_properties(c):
    d = conjugate_composition(c)
    assert conjugate_composition(d) == c
    assert d.n == c.n
    assert len(d.parts) == c.n + 1 - len(c.parts)
    assert strip_conjugate(c) == d
    if c.n >= 2:
        assert (mu(d), nu(d)) == (nu(c), mu(c))


@settings(max_examples=300, deadline=None)
@given(compositions)
def test_path_encoding_roundtrips(c):
    path = to_path(c)
    assert path_to_composition(path) == c
    assert path_to_composition(flip_path(path)) == conjugate_composition(c)
